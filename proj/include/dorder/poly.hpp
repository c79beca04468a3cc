#ifndef DORDER_POLY_HPP
#define DORDER_POLY_HPP

#include "dorder/context.hpp"
#include "dorder/exponents.hpp"
#include "dorder/rational.hpp"

#include <map>
#include <span>
#include <utility>

namespace dorder {

class Fraction;

// Sparse multivariate polynomial with exact rational coefficients over a
// declared variable context. Canonical form: no zero coefficient is ever
// stored, and the term map iterates in dominance order, so equal values
// have equal representations and serialization is bit-stable.
class Poly {
public:
    using TermMap = std::map<Exponents, Rational, DominanceLess>;

    Poly() = default; // zero over no context; only useful as a placeholder
    explicit Poly(ContextPtr ctx) : ctx_(std::move(ctx)) {}

    static Poly constant(ContextPtr ctx, Rational value);
    static Poly variable(ContextPtr ctx, std::size_t var, std::uint32_t power = 1);
    static Poly monomial(ContextPtr ctx, Exponents e, Rational coeff);

    const ContextPtr& context() const { return ctx_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Value of a constant polynomial; 0 for the zero polynomial.
    Rational constant_value() const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly scaled(const Rational& c) const;
    Poly pow(std::uint32_t e) const;
    bool operator==(const Poly& o) const;

    // Formal partial derivative with respect to variable `var`.
    Poly derivative(std::size_t var) const;

    // The term whose exponent vector is dominance-greatest. Throws
    // std::domain_error on the zero polynomial.
    std::pair<Exponents, Rational> lex_leading() const;

    // Max over terms of the exponent sum across vars [first, first+count).
    std::uint64_t degree_span(std::size_t first, std::size_t count) const;
    // Total degree in the indeterminate block.
    std::uint64_t indet_degree() const;

    bool uses_var(std::size_t var) const;
    // True iff every used variable lies in [0, count).
    bool uses_only_first(std::size_t count) const;
    // True iff the polynomial lies in M = Z[g_1..g_e]: only base-ring
    // variables occur and every coefficient is an integer.
    bool in_base_ring() const;
    bool integer_coefficients() const;

    // Re-express over `target`, matching variables by name. Throws if a
    // variable with a nonzero exponent has no counterpart in the target.
    Poly transport(const ContextPtr& target) const;

    // Full substitution of the indeterminate block by field elements.
    // `values` has one entry per indeterminate, all over field_only().
    Fraction eval(std::span<const Fraction> values) const;

    // Substitute rational constants for the indeterminates
    // [first_indet, first_indet + values.size()); other variables stay.
    Poly substitute_indets(std::size_t first_indet,
                           std::span<const Rational> values) const;

    // Group terms by the exponents of the indeterminate block: for each
    // occurring indeterminate pattern, the generator-only coefficient
    // polynomial (over the same context).
    std::map<Exponents, Poly, DominanceLess> split_by_indets() const;

    // Positive rational c such that (1/c)·p has coprime integer
    // coefficients; 0 for the zero polynomial.
    Rational content() const;

private:
    void add_term(const Exponents& e, const Rational& c);
    void check_same_context(const Poly& o) const;

    ContextPtr ctx_;
    TermMap terms_;
};

} // namespace dorder

#endif
