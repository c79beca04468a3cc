#ifndef DORDER_FRACTION_HPP
#define DORDER_FRACTION_HPP

#include "dorder/poly.hpp"

namespace dorder {

// Element of the desk-scale non-archimedean ordered field Q(g_1..g_d),
// stored as a ratio of polynomials over a pure-field context. Stored forms
// are not gcd-reduced; equality is by cross-multiplication. Construction
// strips integer content and normalizes the denominator's leading sign,
// which keeps coefficient growth in check without multivariate gcd.
class Fraction {
public:
    Fraction() = default;
    explicit Fraction(Poly numerator);
    Fraction(Poly numerator, Poly denominator);

    static Fraction zero(ContextPtr ctx);
    static Fraction one(ContextPtr ctx);
    static Fraction rational(ContextPtr ctx, const Rational& value);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    const ContextPtr& context() const { return num_.context(); }

    bool is_zero() const { return num_.is_zero(); }

    Fraction operator-() const;
    Fraction operator+(const Fraction& o) const;
    Fraction operator-(const Fraction& o) const;
    Fraction operator*(const Fraction& o) const;
    // Throws std::domain_error when dividing by zero.
    Fraction operator/(const Fraction& o) const;
    Fraction pow(std::uint32_t e) const;

    // Value equality: p/q == p'/q'  iff  p·q' == p'·q.
    bool operator==(const Fraction& o) const;

private:
    void normalize();

    Poly num_, den_;
};

} // namespace dorder

#endif
