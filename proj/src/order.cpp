#include "dorder/order.hpp"

#include <stdexcept>

namespace dorder {

std::string_view to_string(Magnitude m) {
    switch (m) {
        case Magnitude::Zero: return "zero";
        case Magnitude::Infinitesimal: return "infinitesimal";
        case Magnitude::Finite: return "finite";
        case Magnitude::Infinite: return "infinite";
    }
    return "?";
}

std::string_view to_string(Ordering o) {
    switch (o) {
        case Ordering::Less: return "lt";
        case Ordering::Equal: return "eq";
        case Ordering::Greater: return "gt";
    }
    return "?";
}

int sign_of(const Poly& p) {
    if (p.is_zero()) return 0;
    return sign(p.lex_leading().second);
}

int sign_of(const Fraction& x) {
    if (x.is_zero()) return 0;
    return sign_of(x.num()) * sign_of(x.den());
}

Ordering compare(const Fraction& x, const Fraction& y) {
    if (!same_context(x.context(), y.context()))
        throw std::invalid_argument("comparison across different contexts");
    switch (sign_of(x - y)) {
        case -1: return Ordering::Less;
        case 1: return Ordering::Greater;
        default: return Ordering::Equal;
    }
}

Magnitude classify(const Fraction& x) {
    if (x.is_zero()) return Magnitude::Zero;
    const Exponents en = x.num().lex_leading().first;
    const Exponents ed = x.den().lex_leading().first;
    if (dominance_less(ed, en)) return Magnitude::Infinite;
    if (dominance_less(en, ed)) return Magnitude::Infinitesimal;
    return Magnitude::Finite;
}

Fraction abs(const Fraction& x) { return sign_of(x) < 0 ? -x : x; }

DiscretenessWitness check_positive_geq_one(const Poly& p) {
    if (!p.in_base_ring())
        throw std::invalid_argument("element is not in the base ring M");
    if (sign_of(p) != 1)
        throw std::invalid_argument("element is not positive");
    if (p.is_constant()) {
        // Positive integer, so >= 1.
        return {DiscretenessWitness::Case::Constant};
    }
    // Nonconstant positive element of M: its leading monomial carries a
    // generator, so the element is infinite, in particular > 1.
    return {DiscretenessWitness::Case::Nonconstant};
}

} // namespace dorder
