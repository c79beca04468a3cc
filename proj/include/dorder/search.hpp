#ifndef DORDER_SEARCH_HPP
#define DORDER_SEARCH_HPP

#include "dorder/nabla.hpp"
#include "dorder/spectrum.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace dorder {

struct SearchConfig {
    SpecPoint alpha;
    std::vector<Poly> corpus; // nonconstant members of M[X1..Xn]
    Rational radius;          // positive rational
    std::uint64_t seed = 0;
    std::optional<Direction> direction = std::nullopt;      // else sampled
    std::optional<Rational> lambda_override = std::nullopt; // test hook; skips the plan's step
};

struct SearchPlan {
    std::size_t count;
    Rational lambda;
};

// A found point at which every corpus polynomial is infinite.
struct SearchReport {
    SpecPoint gamma;
    std::size_t index = 0; // 1-based position on the segment
    std::vector<Magnitude> per_poly;
    std::size_t points_generated = 0;
    Direction direction;
    Rational lambda;
    bool lambda_overridden = false;
    bool in_ball = false;
    bool clearance_advisory_ok = false;
    std::size_t planned_count = 0;
};

// Similar-triangle witness that the hyperplane hypothesis fails: a vector
// d over M and a point C on the corresponding (affine) hyperplane at
// non-infinite distance from alpha. check_value is sum d_i c_i + d0 and
// is exactly zero; d0 is recorded because the affine offset of the linear
// stage need not vanish.
struct RefutationCertificate {
    std::vector<Poly> d; // d_1..d_n over the field context, entries in M
    Poly d0;
    SpecPoint c;
    Fraction check_value;
    Magnitude clearance = Magnitude::Zero;
    Direction direction;
    std::size_t poly_index = 0; // refuting linear corpus member
    std::pair<std::size_t, std::size_t> sample_indices{0, 0};
};

// Neither a success nor a certificate: under the theorem's hypothesis
// this cannot happen, so it signals a violated hypothesis that left no
// linear trace, or a bug.
struct Exhaustion {
    std::size_t points_generated = 0;
    std::string reason;
};

using SearchOutcome = std::variant<SearchReport, RefutationCertificate, Exhaustion>;

// Minimal N whose halving chain N_1 = floor((N-1)/2), N_{i+1} =
// floor((N_i-1)/2) reaches N_m >= 2 for degree m+1 >= 2; N = 2 for
// degree 1. Equals 3*2^m - 1.
std::size_t required_points(std::uint64_t degree);

// Conservative joint budget: the product of per-polynomial counts, with a
// step small enough that the whole segment stays inside the radius-r ball
// and every gap is a positive rational.
SearchPlan plan_points(std::span<const Poly> corpus, const Direction& q,
                       const Rational& radius);

// Walk the segment alpha + (i-1)*lambda*q, i = 1..count, and return the
// first point at which every corpus polynomial is infinite; on total
// failure fall back to the linear refuter if some linear corpus member
// took two finite values, else report exhaustion.
SearchOutcome find_infinite_point(const SearchConfig& config);

// The last reduction stage made geometric: given the linear data
// p_0..p_n (the linear stage evaluated at the chosen direction) and two
// collinear points with distinct finite values, intersect the value graph
// with the axis plane and certify the hyperplane hit.
RefutationCertificate refute_linear(std::span<const Poly> linear_coeffs,
                                    const SpecPoint& a_pt, const SpecPoint& b_pt,
                                    const SpecPoint& alpha);

} // namespace dorder

#endif
