#include "dorder/gen.hpp"
#include "dorder/io.hpp"
#include "dorder/spectrum.hpp"

#include "doctest.h"

using namespace dorder;

namespace {

const ContextPtr ut = Context::make({"u", "t"}, 0);
const ContextPtr ut_ring = Context::make({"u", "t"}, 0, {"X1", "X2"});
const ContextPtr zu = Context::make({"u", "t"}, 1);             // M = Z[u]
const ContextPtr zu_ring = Context::make({"u", "t"}, 1, {"X1", "X2"});

Poly P(const ContextPtr& ctx, const char* text) { return parse_poly(text, ctx); }
Fraction F(const ContextPtr& ctx, const char* text) { return parse_fraction(text, ctx); }

SpecPoint point(const ContextPtr& ctx, const char* a, const char* b) {
    return SpecPoint(ctx, {F(ctx, a), F(ctx, b)});
}

std::vector<Poly> polys(const ContextPtr& ctx, std::initializer_list<const char*> texts) {
    std::vector<Poly> out;
    for (const char* s : texts) out.push_back(P(ctx, s));
    return out;
}

} // namespace

TEST_CASE("corpus-relative support") {
    SpecPoint on_curve = point(ut, "t", "t^2");
    auto corpus = polys(ut_ring, {"X2 - X1^2", "X1"});
    CHECK(supp_corpus(on_curve, corpus) == std::vector<std::size_t>{0});

    SpecPoint off_curve = point(ut, "t", "(t^3 + 1)/(t)");
    CHECK(supp_corpus(off_curve, corpus).empty());

    CHECK(supp_corpus(on_curve, std::vector<Poly>{}).empty());
}

TEST_CASE("support respects ideal combinations present in the corpus") {
    SpecPoint p = point(ut, "t", "t^2");
    Poly f = P(ut_ring, "X2 - X1^2");
    Poly g = P(ut_ring, "X1*X2 - X1^3");
    Poly h = P(ut_ring, "X1 + 7");
    std::vector<Poly> corpus{f, g, f + g, h * f, h};
    auto supp = supp_corpus(p, corpus);
    CHECK(supp == std::vector<std::size_t>{0, 1, 2, 3});
}

TEST_CASE("discrete prime cone predicate") {
    auto corpus = polys(ut_ring, {"X1", "X2 - X1^2", "2"});
    ConeVerdict good = is_discrete_cone(point(ut, "t", "t^2"), corpus);
    CHECK(good.pass);
    REQUIRE(good.witnesses.size() == 3);
    CHECK(good.witnesses[0].magnitude == Magnitude::Infinite);
    CHECK(good.witnesses[1].magnitude == Magnitude::Zero);
    CHECK(good.witnesses[2].magnitude == Magnitude::Finite);

    ConeVerdict bad = is_discrete_cone(point(ut, "t", "(t^3 + 1)/(t)"),
                                       polys(ut_ring, {"X2 - X1^2"}));
    CHECK_FALSE(bad.pass);
    REQUIRE(bad.failing.has_value());
    CHECK(*bad.failing == 0);
    CHECK(bad.witnesses[0].value == F(ut, "(1)/(t)"));

    ContextPtr plain = Context::make({}, 0);
    ContextPtr plain_ring = Context::make({}, 0, {"X1", "X2"});
    SpecPoint rational_pt(plain, {Fraction::rational(plain, 3), Fraction::rational(plain, 4)});
    CHECK(is_discrete_cone(rational_pt, polys(plain_ring, {"X1 - 2"})).pass);
}

TEST_CASE("M-discrete prime cone predicate") {
    auto corpus = polys(ut_ring, {"X1", "X2 - X1^2", "2"});
    CHECK(is_m_discrete_cone(point(ut, "t", "t^2"), corpus).pass);

    // M = Z[u]: the sample includes u - 5, which stays nonzero.
    ConeVerdict v = is_m_discrete_cone(point(zu, "u", "t"),
                                       polys(zu_ring, {"X2 - X1"}));
    CHECK(v.pass);
    CHECK_FALSE(v.notes.empty());
}

TEST_CASE("arithmetical points") {
    CHECK_FALSE(is_arithmetical(point(ut, "t", "(t^3 + 1)/(t)"),
                                polys(ut_ring, {"X2 - X1^2"}))
                    .pass);
    CHECK(is_arithmetical(point(ut, "t + 1", "(t^3 + t + 1)/(t)"),
                          polys(ut_ring, {"X2 - X1^2"}))
              .pass);
    CHECK(is_arithmetical(point(ut, "t", "u*t"),
                          polys(ut_ring, {"X1*X2 - 7", "X2 - X1"}))
              .pass);
    // Precondition: corpus must lie in M[X1..Xn].
    CHECK_THROWS_AS(is_arithmetical(point(zu, "t", "u*t"),
                                    polys(zu_ring, {"X1 - t"})),
                    std::invalid_argument);
    CHECK_THROWS_AS(is_arithmetical(point(ut, "t", "u*t"),
                                    polys(ut_ring, {"1/2*X1"})),
                    std::invalid_argument);
}

TEST_CASE("transcendental points") {
    CHECK_FALSE(is_transcendental(point(ut, "t", "t^2"),
                                  polys(ut_ring, {"X2 - X1^2"}))
                    .pass);
    CHECK(is_transcendental(point(ut, "t", "u*t"),
                            polys(ut_ring, {"X2 - X1^2", "X2 - X1", "X1*X2 - 7"}))
              .pass);
    CHECK(is_transcendental(point(ut, "t", "t^2"), std::vector<Poly>{}).pass);
}

TEST_CASE("diophantine witness checking") {
    ConeVerdict yes = diophantine_witness(P(ut_ring, "X2 - X1^2"), point(ut, "t", "t^2"),
                                          polys(ut_ring, {"X1", "X1 + X2"}));
    CHECK(yes.pass);

    // x1^2 + x2^2 = u has no rational-function solution we can express;
    // the checker reports failure on any candidate point.
    Poly circle = P(zu_ring, "X1^2 + X2^2 - u");
    for (const auto& p : {point(zu, "t", "t"), point(zu, "u", "0"), point(zu, "0", "u")})
        CHECK_FALSE(diophantine_witness(circle, p, std::vector<Poly>{}).pass);

    CHECK(diophantine_witness(P(ut_ring, "X1 - X2"), point(ut, "t", "t"),
                              polys(ut_ring, {"X1"}))
              .pass);
}

TEST_CASE("predicate nesting chain") {
    Gen gen(61);
    for (int i = 0; i < 120; ++i) {
        std::vector<Fraction> coords{gen.fraction(ut, 2, 2, 5), gen.fraction(ut, 2, 2, 5)};
        SpecPoint p(ut, coords);
        std::vector<Poly> corpus;
        std::size_t len = 1 + gen.below(4);
        for (std::size_t j = 0; j < len; ++j)
            corpus.push_back(gen.poly(ut_ring, 2, 2, 2, 3, 5));
        bool tr = is_transcendental(p, corpus).pass;
        bool ar = is_arithmetical(p, corpus).pass;
        bool md = is_m_discrete_cone(p, corpus).pass;
        bool dc = is_discrete_cone(p, corpus).pass;
        if (tr) CHECK(ar);
        if (ar) CHECK(md);
        if (md) CHECK(dc);
    }
}

TEST_CASE("coordinate distance") {
    SpecPoint a = point(ut, "t", "u*t");
    SpecPoint b = point(ut, "t + 3", "u*t + 4");
    CHECK(distance_squared(a, b) == Fraction::rational(ut, 25));
    CHECK(distance_squared(a, a).is_zero());

    SpecPoint c = point(ut, "t", "0");
    SpecPoint origin = point(ut, "0", "0");
    CHECK(distance_squared(c, origin) == F(ut, "t^2"));

    // Symmetry and separation.
    CHECK(distance_squared(a, b) == distance_squared(b, a));
    ContextPtr other = Context::make({"v"}, 0);
    SpecPoint w(other, {Fraction::one(other)});
    CHECK_THROWS_AS(distance_squared(a, w), std::invalid_argument);
}

TEST_CASE("squared triangle inequality on random points") {
    Gen gen(67);
    for (int i = 0; i < 40; ++i) {
        auto rnd = [&] {
            return SpecPoint(ut, {gen.fraction(ut, 2, 2, 4), gen.fraction(ut, 2, 2, 4)});
        };
        SpecPoint p = rnd(), q = rnd(), s = rnd();
        Fraction A = distance_squared(p, q);
        Fraction B = distance_squared(q, s);
        Fraction C = distance_squared(p, s);
        // C <= A + B + 2*sqrt(A*B), checked without roots:
        // either C - A - B <= 0, or (C - A - B)^2 <= 4*A*B.
        Fraction gap = C - A - B;
        if (sign_of(gap) > 0) {
            Fraction lhs = gap * gap;
            Fraction rhs = Fraction::rational(ut, 4) * A * B;
            CHECK(compare(lhs, rhs) != Ordering::Greater);
        }
    }
}

TEST_CASE("ball membership") {
    SpecPoint center = point(ut, "t", "u*t");
    SpecPoint p = point(ut, "t + 1", "u*t + 1");
    CHECK(ball_contains(center, Rational(2), p));
    CHECK_FALSE(ball_contains(center, Rational(1), p));
    CHECK(ball_contains(center, Rational(1, 1000), center));
    CHECK_THROWS_AS(ball_contains(center, Rational(0), p), std::invalid_argument);
}

TEST_CASE("hyperplane clearance") {
    SpecPoint good = point(ut, "t", "u*t");
    std::vector<Poly> a{Poly::constant(ut, 1), Poly::constant(ut, -1)};
    CHECK(hyperplane_clearance(good, a).pass);

    SpecPoint bad = point(ut, "t", "(u*t + 1)/(u)"); // t + 1/u
    HyperplaneVerdict v = hyperplane_clearance(bad, a);
    CHECK_FALSE(v.pass);
    CHECK(v.magnitude == Magnitude::Infinitesimal);

    // Scaling invariance.
    std::vector<Poly> a7{Poly::constant(ut, 7), Poly::constant(ut, -7)};
    CHECK(hyperplane_clearance(good, a7).pass == hyperplane_clearance(good, a).pass);
    CHECK(hyperplane_clearance(bad, a7).pass == hyperplane_clearance(bad, a).pass);

    std::vector<Poly> zero{Poly(ut), Poly(ut)};
    CHECK_THROWS_AS(hyperplane_clearance(good, zero), std::invalid_argument);

    // Coefficients from M beyond the integers.
    SpecPoint mp = point(zu, "t", "t^2");
    std::vector<Poly> mu{P(zu, "u"), P(zu, "-1")};
    CHECK(hyperplane_clearance(mp, mu).pass); // u*t - t^2 is infinite
    SpecPoint cancels = point(zu, "t", "u*t");
    CHECK_FALSE(hyperplane_clearance(cancels, mu).pass); // u*t - u*t = 0
}

TEST_CASE("batch clearance") {
    BatchClearanceVerdict all = hyperplane_clearance_batch(
        point(ut, "t", "(t^3 + 1)/(t)"), 5);
    CHECK(all.pass);
    CHECK(all.vectors_checked == 60); // canonical half of 11*11 - 1

    BatchClearanceVerdict broken =
        hyperplane_clearance_batch(point(ut, "t", "(u*t + 1)/(u)"), 2);
    CHECK_FALSE(broken.pass);
    REQUIRE_FALSE(broken.failures.empty());
    // Enumeration is row-major from (-2,-2); the first canonical failure
    // is 2*x1 - 2*x2, an integer multiple of x1 - x2.
    CHECK(broken.failures.front() == std::vector<long long>{2, -2});
}
