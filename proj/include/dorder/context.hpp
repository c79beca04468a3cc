#ifndef DORDER_CONTEXT_HPP
#define DORDER_CONTEXT_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dorder {

class Context;
using ContextPtr = std::shared_ptr<const Context>;

// Variable universe for polynomials and fractions.
//
// Variables come in two blocks: field generators g_1..g_d first (dominance
// order left to right, the rightmost largest), then indeterminates
// X_1..X_n (and T_1..T_n where the operator tower needs them). The first
// `base_cutoff` generators span the discretely ordered base ring
// M = Z[g_1..g_e]; base_cutoff == 0 means M = Z.
class Context {
public:
    static ContextPtr make(std::vector<std::string> generators,
                           std::size_t base_cutoff,
                           std::vector<std::string> indeterminates = {});

    std::size_t nvars() const { return vars_.size(); }
    std::size_t ngens() const { return ngens_; }
    std::size_t nindets() const { return vars_.size() - ngens_; }
    std::size_t base_cutoff() const { return base_; }

    const std::string& var_name(std::size_t i) const { return vars_[i]; }
    const std::vector<std::string>& var_names() const { return vars_; }
    std::optional<std::size_t> index_of(std::string_view name) const;

    bool is_generator(std::size_t i) const { return i < ngens_; }
    bool is_base_var(std::size_t i) const { return i < base_; }
    bool pure_field() const { return nindets() == 0; }

    bool same_as(const Context& o) const;

    // The generator block alone (coordinates and fractions live here).
    ContextPtr field_only() const;
    // Same generators and base ring, different indeterminate block.
    ContextPtr with_indeterminates(std::vector<std::string> indets) const;

private:
    Context(std::vector<std::string> vars, std::size_t ngens, std::size_t base);

    std::vector<std::string> vars_;
    std::size_t ngens_ = 0;
    std::size_t base_ = 0;
};

inline bool same_context(const ContextPtr& a, const ContextPtr& b) {
    return a == b || (a && b && a->same_as(*b));
}

} // namespace dorder

#endif
