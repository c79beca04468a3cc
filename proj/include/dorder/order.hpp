#ifndef DORDER_ORDER_HPP
#define DORDER_ORDER_HPP

#include "dorder/fraction.hpp"

#include <string_view>

namespace dorder {

// Magnitude class of a field element relative to the integers: |x| < 1/n
// for all n (infinitesimal), |x| < n for some n (finite), |x| > n for all
// n (infinite). Zero is its own class.
enum class Magnitude {
    Zero,
    Infinitesimal,
    Finite, // finite and non-infinitesimal
    Infinite,
};

std::string_view to_string(Magnitude m);

enum class Ordering { Less, Equal, Greater };

std::string_view to_string(Ordering o);

// Sign under the dominance order: the sign of the lex-leading coefficient.
int sign_of(const Poly& p);

// Sign of numerator's leading coefficient times sign of denominator's;
// 0 iff the numerator is zero.
int sign_of(const Fraction& x);

// Order comparison of two field elements via sign_of(x - y).
Ordering compare(const Fraction& x, const Fraction& y);

// Magnitude by comparing the lex-leading exponent vectors of numerator
// and denominator: greater -> Infinite, equal -> Finite, less ->
// Infinitesimal. This is the definition of the classes for this field;
// agreement with the integer-threshold characterization is enforced by
// the property suite rather than assumed.
Magnitude classify(const Fraction& x);

Fraction abs(const Fraction& x);

// Structural discreteness of M: a positive element of M = Z[g_1..g_e] is
// either a constant integer >= 1 or nonconstant, hence infinite, hence
// > 1. There is nothing in M strictly between 0 and 1.
struct DiscretenessWitness {
    enum class Case { Constant, Nonconstant };
    Case tag;
};

// Requires p in M with sign_of(p) == +1; throws std::invalid_argument
// otherwise.
DiscretenessWitness check_positive_geq_one(const Poly& p);

} // namespace dorder

#endif
