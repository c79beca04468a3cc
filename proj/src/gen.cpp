#include "dorder/gen.hpp"

#include <stdexcept>

namespace dorder {

long long Gen::range(long long lo, long long hi) {
    if (lo > hi) throw std::invalid_argument("empty range");
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

long long Gen::nonzero_int(long long bound) {
    long long v = range(1, bound);
    return chance(50) ? v : -v;
}

Rational Gen::rational(long long num_bound, long long den_bound) {
    return Rational(range(-num_bound, num_bound), range(1, den_bound));
}

Rational Gen::nonzero_rational(long long num_bound, long long den_bound) {
    return Rational(nonzero_int(num_bound), range(1, den_bound));
}

Poly Gen::poly(const ContextPtr& ctx, std::size_t var_first, std::size_t var_count,
               std::uint32_t max_exp, std::size_t max_terms, long long coeff_bound) {
    Poly p(ctx);
    std::size_t terms = 1 + below(max_terms);
    for (std::size_t t = 0; t < terms; ++t) {
        Exponents e(ctx->nvars());
        for (std::size_t i = 0; i < var_count; ++i)
            e[var_first + i] = static_cast<std::uint32_t>(below(max_exp + 1));
        p = p + Poly::monomial(ctx, std::move(e), Rational(nonzero_int(coeff_bound)));
    }
    return p;
}

Poly Gen::nonzero_poly(const ContextPtr& ctx, std::size_t var_first,
                       std::size_t var_count, std::uint32_t max_exp,
                       std::size_t max_terms, long long coeff_bound) {
    for (;;) {
        Poly p = poly(ctx, var_first, var_count, max_exp, max_terms, coeff_bound);
        if (!p.is_zero()) return p;
    }
}

Fraction Gen::fraction(const ContextPtr& ctx, std::uint32_t max_exp,
                       std::size_t max_terms, long long coeff_bound) {
    Poly num = poly(ctx, 0, ctx->ngens(), max_exp, max_terms, coeff_bound);
    Poly den = nonzero_poly(ctx, 0, ctx->ngens(), max_exp, max_terms, coeff_bound);
    return Fraction(std::move(num), std::move(den));
}

} // namespace dorder
