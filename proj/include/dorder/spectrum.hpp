#ifndef DORDER_SPECTRUM_HPP
#define DORDER_SPECTRUM_HPP

#include "dorder/order.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dorder {

// A prime cone of R[X1..Xn] represented by evaluation: the coordinates
// X_1(alpha)..X_n(alpha) as elements of the dominance field. The induced
// map f -> f(coords) is a ring homomorphism, and supp(alpha) is realized
// corpus-relatively as the set of vanishing corpus members.
struct SpecPoint {
    SpecPoint() = default; // empty placeholder
    SpecPoint(ContextPtr ctx, std::vector<Fraction> coords);

    std::size_t arity() const { return coords.size(); }

    ContextPtr context; // pure field
    std::vector<Fraction> coords;
};

struct PolyWitness {
    std::size_t index;
    int sign;
    Magnitude magnitude;
    Fraction value;
};

// Outcome of a corpus-relative prime-cone predicate. On failure the
// offending corpus member and its evaluated value are attached.
struct ConeVerdict {
    std::string predicate;
    bool pass = false;
    std::vector<PolyWitness> witnesses; // corpus order
    std::optional<std::size_t> failing;
    std::vector<std::string> notes;
};

// True iff f lies in M[X1..Xn]: integer coefficients and no generator
// beyond the base-ring cutoff.
bool in_m_poly_ring(const Poly& f);

// Indices of the corpus members vanishing at the point (exact test).
std::vector<std::size_t> supp_corpus(const SpecPoint& p, std::span<const Poly> corpus);

// f > 0 at the point implies f - 1 >= 0, for every corpus member.
ConeVerdict is_discrete_cone(const SpecPoint& p, std::span<const Poly> corpus);

// Adds the M-relative conditions: a deterministic sample of M embeds with
// positive elements staying positive and nonzero elements staying nonzero
// (automatic for evaluation points, but checked), on top of discreteness.
ConeVerdict is_m_discrete_cone(const SpecPoint& p, std::span<const Poly> corpus);

// The corpus must lie in M[X1..Xn]; passes iff the evaluated ring
// M[coords] is corpus-discretely ordered.
ConeVerdict is_arithmetical(const SpecPoint& p, std::span<const Poly> corpus);

// Arithmetical and lying on no corpus hypersurface.
ConeVerdict is_transcendental(const SpecPoint& p, std::span<const Poly> corpus);

// Witness check for the diophantine correspondence: f vanishes at the
// point and the point is arithmetical for the corpus.
ConeVerdict diophantine_witness(const Poly& f, const SpecPoint& p,
                                std::span<const Poly> corpus);

// Coordinate Robson distance, squared to stay inside the field.
Fraction distance_squared(const SpecPoint& p, const SpecPoint& q);

// distance_squared(center, p) <= r^2; r must be positive.
bool ball_contains(const SpecPoint& center, const Rational& r, const SpecPoint& p);

// Deterministic sample of base-ring elements used by the M-relative
// predicate conditions.
std::vector<Poly> base_ring_sample(const ContextPtr& field);

struct HyperplaneVerdict {
    bool pass = false;
    Fraction value;
    Magnitude magnitude = Magnitude::Zero;
};

// The point clears the hyperplane sum a_i x_i = 0 iff the combination is
// infinite; with coefficients from M this is equivalent to infinite
// Robson distance from the hyperplane. a must be nonzero, entries in M.
HyperplaneVerdict hyperplane_clearance(const SpecPoint& p, std::span<const Poly> a);

struct BatchClearanceVerdict {
    bool pass = false;
    std::size_t vectors_checked = 0;
    std::vector<std::vector<long long>> failures;
};

// All integer vectors with |a_i| <= bound, up to sign and scaling.
BatchClearanceVerdict hyperplane_clearance_batch(const SpecPoint& p, long long bound);

} // namespace dorder

#endif
