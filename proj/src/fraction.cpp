#include "dorder/fraction.hpp"

#include <stdexcept>

namespace dorder {

Fraction::Fraction(Poly numerator) : num_(std::move(numerator)) {
    den_ = Poly::constant(num_.context(), 1);
    normalize();
}

Fraction::Fraction(Poly numerator, Poly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (!same_context(num_.context(), den_.context()))
        throw std::invalid_argument("fraction context mismatch");
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    normalize();
}

Fraction Fraction::zero(ContextPtr ctx) { return Fraction(Poly(std::move(ctx))); }

Fraction Fraction::one(ContextPtr ctx) {
    return Fraction(Poly::constant(std::move(ctx), 1));
}

Fraction Fraction::rational(ContextPtr ctx, const Rational& value) {
    return Fraction(Poly::constant(std::move(ctx), value));
}

void Fraction::normalize() {
    if (!num_.context()->pure_field())
        throw std::invalid_argument("fractions live over pure field contexts");
    if (num_.is_zero()) {
        den_ = Poly::constant(num_.context(), 1);
        return;
    }
    // p/q = (a/b)·(p/cp)/(q/cq) with a/b = cp/cq reduced; both stored parts
    // end up with integer coefficients and no common integer content.
    Rational cp = num_.content();
    Rational cq = den_.content();
    Rational ratio = cp / cq;
    num_ = num_.scaled(Rational(numerator(ratio)) / cp);
    den_ = den_.scaled(Rational(denominator(ratio)) / cq);
    if (den_.lex_leading().second < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

Fraction Fraction::operator-() const {
    Fraction r = *this;
    r.num_ = -r.num_;
    return r;
}

Fraction Fraction::operator+(const Fraction& o) const {
    return Fraction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Fraction Fraction::operator-(const Fraction& o) const {
    return Fraction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Fraction Fraction::operator*(const Fraction& o) const {
    return Fraction(num_ * o.num_, den_ * o.den_);
}

Fraction Fraction::operator/(const Fraction& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero");
    return Fraction(num_ * o.den_, den_ * o.num_);
}

Fraction Fraction::pow(std::uint32_t e) const {
    return Fraction(num_.pow(e), den_.pow(e));
}

bool Fraction::operator==(const Fraction& o) const {
    if (!same_context(context(), o.context())) return false;
    return num_ * o.den_ == o.num_ * den_;
}

} // namespace dorder
