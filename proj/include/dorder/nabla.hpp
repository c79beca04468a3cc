#ifndef DORDER_NABLA_HPP
#define DORDER_NABLA_HPP

#include "dorder/poly.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace dorder {

// A rational direction vector q in Q^n.
struct Direction {
    std::vector<Rational> q;

    bool is_zero() const {
        for (const auto& v : q)
            if (v != 0) return false;
        return true;
    }
};

// One application of the directional operator: (nabla_X . T)(H) =
// sum_i dH/dX_i * T_i. H lives over a context whose indeterminate block is
// X_1..X_n followed by T_1..T_n.
Poly nabla_dot(const Poly& h);

// The operator tower G_k = (nabla_X^k . T)(F) for a polynomial F of
// X-degree m+1, together with its coefficient table and the linear
// representation of the last level.
//
// The tower is computed twice: by iterating nabla_dot on F, and by the
// closed form that differentiates each monomial of F separately and
// assembles G_k = sum over w of P_{k,w}(T) * X^w. The two routes must
// agree term for term or construction aborts. The w = 0 column is stored
// so reassembly is exact, but direction tests only constrain the nonzero
// columns.
//
// A polynomial of X-degree 1 is accepted as the degenerate linear stage:
// the tower is empty and the linear representation is read off F itself.
class NablaExpansion {
public:
    // Coefficient column keyed by the X-exponent pattern w (length n).
    using CoeffTable = std::map<Exponents, Poly, DominanceLess>;

    static NablaExpansion build(const Poly& f);

    const Poly& source() const { return source_; }
    const ContextPtr& tower_context() const { return tower_ctx_; }
    std::size_t arity() const { return n_; }
    std::size_t m() const { return m_; }

    // G_1..G_m over the tower context (empty for a linear source).
    const std::vector<Poly>& tower() const { return tower_; }
    // Coefficient table of level k, 1 <= k <= m.
    const CoeffTable& coeff_table(std::size_t k) const;
    // P_0, P_1, .., P_n with G_m = P_0 + sum_i P_i X_i; polynomials in
    // the T block (constants in M for a linear source).
    const std::vector<Poly>& linear_rep() const { return linear_rep_; }

    // q avoids the vanishing locus of every nonzero coefficient column.
    bool member_u1(const Direction& q) const;
    // sum_i q_i P_i(q) != 0.
    bool member_u2(const Direction& q) const;
    bool member(const Direction& q) const { return member_u1(q) && member_u2(q); }

    // The linear stage evaluated at q: p_0..p_n over the field context.
    std::vector<Poly> linear_rep_at(const Direction& q) const;

private:
    NablaExpansion() = default;

    Poly source_;
    ContextPtr tower_ctx_;
    std::size_t n_ = 0;
    std::size_t m_ = 0;
    std::vector<Poly> tower_;
    std::vector<CoeffTable> tables_; // index k-1
    std::vector<Poly> linear_rep_;
};

// Deterministic rational direction in the intersection of all U_F:
// enumerates Q^n by increasing coordinate height, shuffling each shell
// with the seeded generator, and returns the first member passing every
// expansion's U^1 and U^2 tests. Throws std::runtime_error if 10^6
// candidates fail (the complement is a proper Zariski-closed set, so this
// signals a bug rather than bad luck).
Direction sample_direction(std::span<const NablaExpansion> expansions,
                           std::uint64_t seed);

} // namespace dorder

#endif
