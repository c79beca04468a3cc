#include "dorder/context.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace dorder {

Context::Context(std::vector<std::string> vars, std::size_t ngens, std::size_t base)
    : vars_(std::move(vars)), ngens_(ngens), base_(base) {}

ContextPtr Context::make(std::vector<std::string> generators, std::size_t base_cutoff,
                         std::vector<std::string> indeterminates) {
    if (base_cutoff > generators.size())
        throw std::invalid_argument("base ring cutoff exceeds generator count");
    std::vector<std::string> vars = std::move(generators);
    std::size_t ngens = vars.size();
    vars.insert(vars.end(), std::make_move_iterator(indeterminates.begin()),
                std::make_move_iterator(indeterminates.end()));
    std::unordered_set<std::string_view> seen;
    for (const auto& v : vars) {
        if (v.empty()) throw std::invalid_argument("empty variable name");
        if (!seen.insert(v).second)
            throw std::invalid_argument("duplicate variable name: " + v);
    }
    return ContextPtr(new Context(std::move(vars), ngens, base_cutoff));
}

std::optional<std::size_t> Context::index_of(std::string_view name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - vars_.begin());
}

bool Context::same_as(const Context& o) const {
    return ngens_ == o.ngens_ && base_ == o.base_ && vars_ == o.vars_;
}

ContextPtr Context::field_only() const {
    if (pure_field()) {
        return make(vars_, base_);
    }
    std::vector<std::string> gens(vars_.begin(), vars_.begin() + ngens_);
    return make(std::move(gens), base_);
}

ContextPtr Context::with_indeterminates(std::vector<std::string> indets) const {
    std::vector<std::string> gens(vars_.begin(), vars_.begin() + ngens_);
    return make(std::move(gens), base_, std::move(indets));
}

} // namespace dorder
