#ifndef DORDER_RATIONAL_HPP
#define DORDER_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace dorder {

// Exact scalar arithmetic. All coefficient math in the library runs on
// arbitrary-precision rationals; there is no floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline int sign(const Rational& x) { return x.sign(); }
inline int sign(const Int& x) { return x.sign(); }

// x^e for non-negative e.
Rational pow(const Rational& x, std::uint64_t e);

// Height of a reduced fraction: max(|numerator|, denominator).
Int height(const Rational& x);

// "p" or "p/q", q > 0, reduced.
std::string to_string(const Rational& x);

// Accepts "p", "-p", "p/q". Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

} // namespace dorder

#endif
