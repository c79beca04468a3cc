#ifndef DORDER_GEN_HPP
#define DORDER_GEN_HPP

#include "dorder/fraction.hpp"
#include "dorder/poly.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace dorder {

// Seeded value generator. mt19937_64 is bit-specified by the standard and
// all draws below avoid std::uniform_int_distribution, so identical seeds
// give identical streams on every platform.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    std::uint64_t raw() { return rng_(); }
    // Uniform in [0, bound); bound > 0.
    std::uint64_t below(std::uint64_t bound) { return rng_() % bound; }
    long long range(long long lo, long long hi); // inclusive
    bool chance(std::uint32_t percent) { return below(100) < percent; }

    // Nonzero integer in [-bound, bound].
    long long nonzero_int(long long bound);
    Rational rational(long long num_bound, long long den_bound);
    Rational nonzero_rational(long long num_bound, long long den_bound);

    // Random polynomial using variables [var_first, var_first + var_count),
    // per-variable exponents up to max_exp, up to max_terms monomials, and
    // nonzero integer coefficients within coeff_bound. May be zero if all
    // terms collide and cancel (rare).
    Poly poly(const ContextPtr& ctx, std::size_t var_first, std::size_t var_count,
              std::uint32_t max_exp, std::size_t max_terms, long long coeff_bound);
    Poly nonzero_poly(const ContextPtr& ctx, std::size_t var_first,
                      std::size_t var_count, std::uint32_t max_exp,
                      std::size_t max_terms, long long coeff_bound);

    // Random field element over a pure-field context.
    Fraction fraction(const ContextPtr& ctx, std::uint32_t max_exp,
                      std::size_t max_terms, long long coeff_bound);

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[below(i)]);
    }

private:
    std::mt19937_64 rng_;
};

} // namespace dorder

#endif
