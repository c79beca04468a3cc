#include "dorder/exponents.hpp"

#include <limits>
#include <stdexcept>

namespace dorder {

Exponents Exponents::unit(std::size_t n, std::size_t i, std::uint32_t power) {
    Exponents e(n);
    e.e_.at(i) = power;
    return e;
}

bool Exponents::is_zero() const {
    for (auto v : e_)
        if (v != 0) return false;
    return true;
}

Exponents Exponents::plus(const Exponents& o) const {
    if (e_.size() != o.e_.size()) throw std::invalid_argument("exponent arity mismatch");
    Exponents r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) {
        std::uint64_t s = std::uint64_t(e_[i]) + o.e_[i];
        if (s > std::numeric_limits<std::uint32_t>::max())
            throw std::overflow_error("exponent overflow");
        r.e_[i] = static_cast<std::uint32_t>(s);
    }
    return r;
}

std::uint64_t Exponents::degree_span(std::size_t first, std::size_t count) const {
    std::uint64_t s = 0;
    for (std::size_t i = first; i < first + count && i < e_.size(); ++i) s += e_[i];
    return s;
}

bool dominance_less(const Exponents& a, const Exponents& b) {
    std::size_t n = a.size();
    for (std::size_t i = n; i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

} // namespace dorder
