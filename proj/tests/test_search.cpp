#include "dorder/gen.hpp"
#include "dorder/io.hpp"
#include "dorder/search.hpp"

#include "doctest.h"

using namespace dorder;

namespace {

const ContextPtr ut = Context::make({"u", "t"}, 0);
const ContextPtr ut_ring = Context::make({"u", "t"}, 0, {"X1", "X2"});

Poly P(const ContextPtr& ctx, const char* text) { return parse_poly(text, ctx); }
Fraction F(const ContextPtr& ctx, const char* text) { return parse_fraction(text, ctx); }

SpecPoint point(const char* a, const char* b) {
    return SpecPoint(ut, {F(ut, a), F(ut, b)});
}

// Independent oracle: literally run the halving recursion for growing N.
std::size_t brute_force_required(std::uint64_t degree) {
    if (degree == 1) return 2;
    std::uint64_t m = degree - 1;
    for (std::size_t n = 2;; ++n) {
        long long level = static_cast<long long>(n);
        for (std::uint64_t i = 0; i < m; ++i)
            level = level >= 1 ? (level - 1) / 2 : -1;
        if (level >= 2) return n;
    }
}

} // namespace

TEST_CASE("point budget follows the halving recursion") {
    CHECK(required_points(2) == 5);
    CHECK(required_points(3) == 11);
    CHECK(required_points(4) == 23);
    CHECK(required_points(1) == 2);
    for (std::uint64_t deg = 1; deg <= 10; ++deg)
        CHECK(required_points(deg) == brute_force_required(deg));
    CHECK_THROWS_AS(required_points(0), std::invalid_argument);
}

TEST_CASE("plan: count and step") {
    Direction q{{1, 1}};
    std::vector<Poly> one_quad{P(ut_ring, "X2 - X1^2")};
    SearchPlan plan = plan_points(one_quad, q, Rational(1));
    CHECK(plan.count == 5);
    CHECK(plan.lambda == Rational(1, 15));

    std::vector<Poly> two_quads{P(ut_ring, "X2 - X1^2"), P(ut_ring, "X1*X2 - 7")};
    CHECK(plan_points(two_quads, q, Rational(1)).count == 25);

    std::vector<Poly> linear{P(ut_ring, "3*X1")};
    CHECK(plan_points(linear, q, Rational(1)).count == 2);

    CHECK_THROWS_AS(plan_points(linear, q, Rational(0)), std::invalid_argument);
    CHECK_THROWS_AS(plan_points(std::vector<Poly>{P(ut_ring, "7")}, q, Rational(1)),
                    std::invalid_argument);
}

TEST_CASE("worked search: parabola with step override") {
    SearchConfig config{
        .alpha = point("t", "(t^3 + 1)/(t)"), // (t, t^2 + 1/t)
        .corpus = {P(ut_ring, "X2 - X1^2")},
        .radius = Rational(1),
        .seed = 0,
        .direction = Direction{{1, 1}},
        .lambda_override = Rational(1),
    };
    SearchOutcome outcome = find_infinite_point(config);
    auto* report = std::get_if<SearchReport>(&outcome);
    REQUIRE(report != nullptr);
    CHECK(report->index == 2);
    CHECK(report->planned_count == 5);
    CHECK(report->per_poly == std::vector<Magnitude>{Magnitude::Infinite});
    // F at the found point is 1/t - 2t.
    Fraction value = config.corpus[0].eval(report->gamma.coords);
    CHECK(value == F(ut, "(-2*t^2 + 1)/(t)"));
    CHECK(classify(value) == Magnitude::Infinite);
    CHECK(is_transcendental(report->gamma, config.corpus).pass);
    CHECK(report->lambda_overridden);
}

TEST_CASE("immediate success when alpha is already infinite everywhere") {
    SearchConfig config{
        .alpha = point("t", "u*t"),
        .corpus = {P(ut_ring, "X2 - X1"), P(ut_ring, "X1*X2 - 7")},
        .radius = Rational(1),
        .seed = 3,
    };
    SearchOutcome outcome = find_infinite_point(config);
    auto* report = std::get_if<SearchReport>(&outcome);
    REQUIRE(report != nullptr);
    CHECK(report->index == 1);
    CHECK(report->in_ball);
    CHECK_FALSE(report->lambda_overridden);
    CHECK(ball_contains(config.alpha, config.radius, report->gamma));
}

TEST_CASE("linear corpus member with finite values yields a certificate") {
    SearchConfig config{
        .alpha = point("t", "(u*t + 1)/(u)"), // (t, t + 1/u)
        .corpus = {P(ut_ring, "X2 - X1")},
        .radius = Rational(1),
        .seed = 0,
    };
    SearchOutcome outcome = find_infinite_point(config);
    auto* cert = std::get_if<RefutationCertificate>(&outcome);
    REQUIRE(cert != nullptr);
    CHECK(cert->check_value.is_zero());
    CHECK(cert->clearance != Magnitude::Infinite);
    REQUIRE(cert->d.size() == 2);
    // d is (-1, 1) up to a positive integer scale.
    Rational d1 = cert->d[0].constant_value();
    Rational d2 = cert->d[1].constant_value();
    CHECK(d1 == -d2);
    CHECK(d1 != 0);
    CHECK(cert->d0.is_zero());
    // Feeding d back shows the violated hyperplane.
    CHECK_FALSE(hyperplane_clearance(config.alpha, cert->d).pass);
    // C lies on the diagonal: c2 - c1 = 0.
    CHECK(cert->c.coords[1] == cert->c.coords[0]);
}

TEST_CASE("refuter geometry from the linear stage") {
    // G = X2 - X1: p0 = 0, p1 = -1, p2 = 1; a = alpha, b = alpha + (1, 2).
    SpecPoint alpha = point("t", "(u*t + 1)/(u)");
    SpecPoint b_pt(ut, {alpha.coords[0] + Fraction::one(ut),
                        alpha.coords[1] + Fraction::rational(ut, 2)});
    std::vector<Poly> coeffs{Poly(ut), Poly::constant(ut, -1), Poly::constant(ut, 1)};
    RefutationCertificate cert = refute_linear(coeffs, alpha, b_pt, alpha);
    // s = (1/u) / ((1/u) - (1/u + 1)) = -1/u, so C = alpha - (1/u)*(1, 2).
    CHECK(cert.c.coords[0] == F(ut, "(u*t - 1)/(u)"));
    CHECK(cert.c.coords[1] == cert.c.coords[0]);
    CHECK(cert.check_value.is_zero());
    CHECK(cert.clearance != Magnitude::Infinite);

    // Doubling the linear data scales d but keeps the check value zero.
    std::vector<Poly> doubled{Poly(ut), Poly::constant(ut, -2), Poly::constant(ut, 2)};
    RefutationCertificate cert2 = refute_linear(doubled, alpha, b_pt, alpha);
    CHECK(cert2.d[0].constant_value() == 2 * cert.d[0].constant_value());
    CHECK(cert2.check_value.is_zero());

    // Equal values are degenerate by Fact 3.
    CHECK_THROWS_AS(refute_linear(coeffs, alpha, alpha, alpha), std::logic_error);
}

TEST_CASE("affine linear stage records its offset") {
    // X2 - X1 - 5 misses alpha = (t, t + 1/u) by a finite amount; the
    // certificate lands on the affine hyperplane and keeps d0 = -5, while
    // the parallel homogeneous hyperplane is still violated.
    SearchConfig config{
        .alpha = point("t", "(u*t + 1)/(u)"),
        .corpus = {P(ut_ring, "X2 - X1 - 5")},
        .radius = Rational(1),
        .seed = 0,
    };
    SearchOutcome outcome = find_infinite_point(config);
    auto* cert = std::get_if<RefutationCertificate>(&outcome);
    REQUIRE(cert != nullptr);
    CHECK(cert->check_value.is_zero());
    Rational scale = -cert->d[0].constant_value();
    CHECK(cert->d0.constant_value() == Rational(-5) * scale);
    CHECK_FALSE(hyperplane_clearance(config.alpha, cert->d).pass);
}

TEST_CASE("supplied direction must lie in every U_F") {
    SearchConfig config{
        .alpha = point("t", "u*t"),
        .corpus = {P(ut_ring, "X2 - X1^2")},
        .radius = Rational(1),
        .seed = 0,
        .direction = Direction{{0, 1}},
    };
    CHECK_THROWS_AS(find_infinite_point(config), std::invalid_argument);
}

TEST_CASE("exhaustion when the failure leaves no linear trace") {
    // (X2 - X1)^2 evaluates to a rational constant along the diagonal, so
    // no point is infinite and no linear member exists to refute with.
    SearchConfig config{
        .alpha = point("t", "t"),
        .corpus = {P(ut_ring, "X2^2 - 2*X1*X2 + X1^2")},
        .radius = Rational(1),
        .seed = 0,
    };
    SearchOutcome outcome = find_infinite_point(config);
    auto* ex = std::get_if<Exhaustion>(&outcome);
    REQUIRE(ex != nullptr);
    CHECK(ex->points_generated == 5);
}

TEST_CASE("theorem conformance on a few seeded configurations") {
    Gen gen(71);
    for (int trial = 0; trial < 8; ++trial) {
        // Clearance by construction: distinct leading monomials plus
        // small perturbations keep every integer combination infinite.
        std::vector<const char*> leads{"t", "u*t", "t^2", "u*t^2", "t^3"};
        gen.shuffle(leads);
        std::vector<const char*> perts{"0", "3", "(1)/(t)", "(-2)/(u)", "1/2"};
        std::vector<Fraction> coords;
        for (int j = 0; j < 2; ++j)
            coords.push_back(F(ut, leads[j]) + F(ut, perts[gen.below(perts.size())]));
        SearchConfig config{
            .alpha = SpecPoint(ut, coords),
            .corpus = {},
            .radius = Rational(1 + gen.below(3)),
            .seed = gen.raw(),
        };
        std::size_t npolys = 1 + gen.below(3);
        for (std::size_t j = 0; j < npolys; ++j) {
            Poly f = gen.nonzero_poly(ut_ring, 2, 2, 2, 3, 5);
            if (f.indet_degree() < 1) f = f + P(ut_ring, "X1");
            config.corpus.push_back(f);
        }
        SearchOutcome outcome = find_infinite_point(config);
        auto* report = std::get_if<SearchReport>(&outcome);
        REQUIRE(report != nullptr);
        CHECK(report->index <= report->planned_count);
        for (Magnitude m : report->per_poly) CHECK(m == Magnitude::Infinite);
        CHECK(ball_contains(config.alpha, config.radius, report->gamma));
        CHECK(is_transcendental(report->gamma, config.corpus).pass);
    }
}
