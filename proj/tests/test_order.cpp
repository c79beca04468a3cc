#include "dorder/gen.hpp"
#include "dorder/io.hpp"
#include "dorder/order.hpp"

#include "doctest.h"

using namespace dorder;

namespace {

const ContextPtr ut = Context::make({"u", "t"}, 0);
const ContextPtr ys = Context::make({"Y1", "Y2"}, 2); // M = Z[Y1, Y2]

Fraction F(const ContextPtr& ctx, const char* text) { return parse_fraction(text, ctx); }

} // namespace

TEST_CASE("sign under the dominance order") {
    CHECK(sign_of(F(ut, "t - 1000000")) == 1);
    CHECK(sign_of(F(ut, "t - u^5 - 1000")) == 1);
    CHECK(sign_of(F(ut, "(-1)/(t)")) == -1);
    CHECK(sign_of(Fraction::zero(ut)) == 0);
}

TEST_CASE("comparison") {
    CHECK(compare(F(ut, "u^100"), F(ut, "t")) == Ordering::Less);
    Fraction x = F(ut, "(u*t + 3)/(t - 1)");
    CHECK(compare(x, x) == Ordering::Equal);
    CHECK(compare(F(ut, "(1)/(t)"), F(ut, "(1)/(u)")) == Ordering::Less);
    CHECK_THROWS_AS(compare(x, Fraction::zero(ys)), std::invalid_argument);
}

TEST_CASE("magnitude classification") {
    CHECK(classify(F(ut, "t")) == Magnitude::Infinite);
    CHECK(classify(F(ut, "(1)/(t)")) == Magnitude::Infinitesimal);
    CHECK(classify(F(ut, "(t + 1)/(t)")) == Magnitude::Finite);
    CHECK(classify(Fraction::zero(ut)) == Magnitude::Zero);
    CHECK(classify(F(ut, "(1)/(u)")) == Magnitude::Infinitesimal);
    CHECK(classify(F(ut, "(u^9)/(t)")) == Magnitude::Infinitesimal);
}

TEST_CASE("positive elements of M are at least one") {
    CHECK(check_positive_geq_one(parse_poly("3", ys)).tag ==
          DiscretenessWitness::Case::Constant);
    CHECK(check_positive_geq_one(parse_poly("Y1 - 7", ys)).tag ==
          DiscretenessWitness::Case::Nonconstant);
    CHECK(check_positive_geq_one(parse_poly("Y2 - Y1^9", ys)).tag ==
          DiscretenessWitness::Case::Nonconstant);
    CHECK_THROWS_AS(check_positive_geq_one(parse_poly("-2", ys)), std::invalid_argument);
    CHECK_THROWS_AS(check_positive_geq_one(Poly(ys)), std::invalid_argument);
    // Not in M: rational coefficient, or a non-base generator.
    CHECK_THROWS_AS(check_positive_geq_one(parse_poly("1/2", ys)), std::invalid_argument);
    ContextPtr part = Context::make({"Y1", "Y2"}, 1);
    CHECK_THROWS_AS(check_positive_geq_one(parse_poly("Y2", part)), std::invalid_argument);
}

TEST_CASE("total order laws") {
    Gen gen(31);
    for (int i = 0; i < 250; ++i) {
        Fraction a = gen.fraction(ut, 3, 3, 7);
        Fraction b = gen.fraction(ut, 3, 3, 7);
        Fraction c = gen.fraction(ut, 3, 3, 7);
        // trichotomy
        int lt = compare(a, b) == Ordering::Less;
        int eq = compare(a, b) == Ordering::Equal;
        int gt = compare(a, b) == Ordering::Greater;
        CHECK(lt + eq + gt == 1);
        // antisymmetry
        if (eq) CHECK(compare(b, a) == Ordering::Equal);
        if (lt) CHECK(compare(b, a) == Ordering::Greater);
        // transitivity
        if (compare(a, b) != Ordering::Greater && compare(b, c) != Ordering::Greater)
            CHECK(compare(a, c) != Ordering::Greater);
    }
}

TEST_CASE("order is compatible with ring operations") {
    Gen gen(37);
    Fraction zero = Fraction::zero(ut);
    for (int i = 0; i < 250; ++i) {
        Fraction a = abs(gen.fraction(ut, 3, 3, 7));
        Fraction b = abs(gen.fraction(ut, 3, 3, 7));
        if (a.is_zero() || b.is_zero()) continue;
        CHECK(compare(a + b, zero) == Ordering::Greater);
        CHECK(compare(a * b, zero) == Ordering::Greater);
    }
}

TEST_CASE("classification agrees with integer thresholds") {
    Gen gen(41);
    int seen_inf = 0, seen_small = 0;
    for (int i = 0; i < 120; ++i) {
        Fraction x = gen.fraction(ut, 3, 3, 7);
        Magnitude m = classify(x);
        Fraction ax = abs(x);
        if (m == Magnitude::Infinite) {
            ++seen_inf;
            for (int n = 1; n <= 50; ++n)
                CHECK(compare(ax, Fraction::rational(ut, n)) == Ordering::Greater);
        } else if (m == Magnitude::Infinitesimal) {
            ++seen_small;
            for (int n = 1; n <= 50; ++n)
                CHECK(compare(ax, Fraction::rational(ut, Rational(1, n))) ==
                      Ordering::Less);
        } else if (m == Magnitude::Finite) {
            // Bounded on both sides by some integer once the leading parts agree.
            CHECK(classify(ax) == Magnitude::Finite);
        }
    }
    CHECK(seen_inf > 0);
    CHECK(seen_small > 0);
}

TEST_CASE("M is discretely ordered") {
    Gen gen(43);
    ContextPtr y1 = Context::make({"Y1"}, 1);
    Fraction one = Fraction::one(y1);
    int checked = 0;
    for (int i = 0; i < 600; ++i) {
        Poly p = gen.nonzero_poly(y1, 0, 1, 5, 4, 20);
        if (sign_of(p) < 0) p = -p;
        Fraction v(p);
        CHECK(compare(v, one) != Ordering::Less);
        ++checked;
    }
    CHECK(checked >= 500);
}

TEST_CASE("every generator is infinite") {
    ContextPtr big = Context::make({"a", "b", "c", "d"}, 2);
    for (std::size_t j = 0; j < big->ngens(); ++j)
        CHECK(classify(Fraction(Poly::variable(big, j))) == Magnitude::Infinite);
}
