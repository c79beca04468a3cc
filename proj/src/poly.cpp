#include "dorder/poly.hpp"

#include "dorder/fraction.hpp"

#include <stdexcept>

namespace dorder {

Poly Poly::constant(ContextPtr ctx, Rational value) {
    Poly p(std::move(ctx));
    if (value != 0) p.terms_.emplace(Exponents(p.ctx_->nvars()), std::move(value));
    return p;
}

Poly Poly::variable(ContextPtr ctx, std::size_t var, std::uint32_t power) {
    if (var >= ctx->nvars()) throw std::out_of_range("variable index out of range");
    if (power == 0) return constant(std::move(ctx), 1);
    std::size_t n = ctx->nvars();
    return monomial(std::move(ctx), Exponents::unit(n, var, power), 1);
}

Poly Poly::monomial(ContextPtr ctx, Exponents e, Rational coeff) {
    if (e.size() != ctx->nvars()) throw std::invalid_argument("exponent arity mismatch");
    Poly p(std::move(ctx));
    if (coeff != 0) p.terms_.emplace(std::move(e), std::move(coeff));
    return p;
}

bool Poly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first.is_zero();
}

Rational Poly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw std::domain_error("polynomial is not constant");
    return terms_.begin()->second;
}

void Poly::add_term(const Exponents& e, const Rational& c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (c != 0) terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

void Poly::check_same_context(const Poly& o) const {
    if (!same_context(ctx_, o.ctx_))
        throw std::invalid_argument("polynomial context mismatch");
}

Poly Poly::operator-() const {
    Poly r(ctx_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    check_same_context(o);
    Poly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    check_same_context(o);
    Poly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    check_same_context(o);
    Poly r(ctx_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) r.add_term(ea.plus(eb), ca * cb);
    return r;
}

Poly Poly::scaled(const Rational& c) const {
    Poly r(ctx_);
    if (c == 0) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
    return r;
}

Poly Poly::pow(std::uint32_t e) const {
    Poly r = constant(ctx_, 1);
    Poly base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        if (e >>= 1) base = base * base;
    }
    return r;
}

bool Poly::operator==(const Poly& o) const {
    return same_context(ctx_, o.ctx_) && terms_ == o.terms_;
}

Poly Poly::derivative(std::size_t var) const {
    if (var >= ctx_->nvars()) throw std::out_of_range("variable index out of range");
    Poly r(ctx_);
    for (const auto& [e, c] : terms_) {
        std::uint32_t k = e[var];
        if (k == 0) continue;
        Exponents d = e;
        d[var] = k - 1;
        r.add_term(d, c * k);
    }
    return r;
}

std::pair<Exponents, Rational> Poly::lex_leading() const {
    if (terms_.empty()) throw std::domain_error("lex_leading of the zero polynomial");
    auto it = terms_.rbegin();
    return {it->first, it->second};
}

std::uint64_t Poly::degree_span(std::size_t first, std::size_t count) const {
    std::uint64_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.degree_span(first, count));
    return d;
}

std::uint64_t Poly::indet_degree() const {
    return degree_span(ctx_->ngens(), ctx_->nindets());
}

bool Poly::uses_var(std::size_t var) const {
    for (const auto& [e, c] : terms_)
        if (e[var] != 0) return true;
    return false;
}

bool Poly::uses_only_first(std::size_t count) const {
    for (const auto& [e, c] : terms_)
        for (std::size_t i = count; i < e.size(); ++i)
            if (e[i] != 0) return false;
    return true;
}

bool Poly::integer_coefficients() const {
    for (const auto& [e, c] : terms_)
        if (denominator(c) != 1) return false;
    return true;
}

bool Poly::in_base_ring() const {
    return uses_only_first(ctx_->base_cutoff()) && integer_coefficients();
}

Poly Poly::transport(const ContextPtr& target) const {
    if (same_context(ctx_, target)) {
        Poly r = *this;
        return r;
    }
    std::size_t n = ctx_->nvars();
    std::vector<std::optional<std::size_t>> where(n);
    for (std::size_t i = 0; i < n; ++i) where[i] = target->index_of(ctx_->var_name(i));
    Poly r(target);
    for (const auto& [e, c] : terms_) {
        Exponents te(target->nvars());
        for (std::size_t i = 0; i < n; ++i) {
            if (e[i] == 0) continue;
            if (!where[i])
                throw std::invalid_argument("variable '" + ctx_->var_name(i) +
                                            "' does not exist in the target context");
            te[*where[i]] = e[i];
        }
        r.add_term(te, c);
    }
    return r;
}

Fraction Poly::eval(std::span<const Fraction> values) const {
    std::size_t ng = ctx_->ngens();
    std::size_t ni = ctx_->nindets();
    if (values.size() != ni)
        throw std::invalid_argument("evaluation point arity mismatch");
    ContextPtr field = ctx_->field_only();
    for (const auto& v : values)
        if (!same_context(v.context(), field))
            throw std::invalid_argument("evaluation point context mismatch");

    // Per-indeterminate power tables, grown on demand.
    std::vector<std::vector<Fraction>> powers(ni);
    auto power = [&](std::size_t i, std::uint32_t k) -> const Fraction& {
        auto& table = powers[i];
        if (table.empty()) table.push_back(Fraction::one(field));
        while (table.size() <= k) table.push_back(table.back() * values[i]);
        return table[k];
    };

    Fraction acc = Fraction::zero(field);
    for (const auto& [e, c] : terms_) {
        Exponents ge(ng);
        for (std::size_t i = 0; i < ng; ++i) ge[i] = e[i];
        Fraction term(Poly::monomial(field, ge, c));
        for (std::size_t i = 0; i < ni; ++i)
            if (e[ng + i] != 0) term = term * power(i, e[ng + i]);
        acc = acc + term;
    }
    return acc;
}

Poly Poly::substitute_indets(std::size_t first_indet,
                             std::span<const Rational> values) const {
    std::size_t ng = ctx_->ngens();
    if (first_indet + values.size() > ctx_->nindets())
        throw std::invalid_argument("substitution range out of bounds");
    Poly r(ctx_);
    for (const auto& [e, c] : terms_) {
        Rational coeff = c;
        Exponents re = e;
        for (std::size_t i = 0; i < values.size(); ++i) {
            std::size_t var = ng + first_indet + i;
            if (re[var] == 0) continue;
            coeff *= dorder::pow(values[i], re[var]);
            re[var] = 0;
        }
        r.add_term(re, coeff);
    }
    return r;
}

std::map<Exponents, Poly, DominanceLess> Poly::split_by_indets() const {
    std::size_t ng = ctx_->ngens();
    std::size_t ni = ctx_->nindets();
    std::map<Exponents, Poly, DominanceLess> groups;
    for (const auto& [e, c] : terms_) {
        Exponents key(ni);
        Exponents gen_part(ctx_->nvars());
        for (std::size_t i = 0; i < ni; ++i) key[i] = e[ng + i];
        for (std::size_t i = 0; i < ng; ++i) gen_part[i] = e[i];
        auto [it, fresh] = groups.try_emplace(key, Poly(ctx_));
        it->second.add_term(gen_part, c);
    }
    return groups;
}

Rational Poly::content() const {
    if (terms_.empty()) return Rational(0);
    Int num_gcd = 0, den_lcm = 1;
    for (const auto& [e, c] : terms_) {
        num_gcd = boost::multiprecision::gcd(num_gcd, Int(boost::multiprecision::abs(numerator(c))));
        den_lcm = boost::multiprecision::lcm(den_lcm, Int(denominator(c)));
    }
    return Rational(num_gcd, den_lcm);
}

} // namespace dorder
