#include "dorder/properties.hpp"

#include "dorder/io.hpp"
#include "dorder/nabla.hpp"
#include "dorder/search.hpp"

#include <functional>
#include <stdexcept>

namespace dorder {

SpecPoint clearance_alpha(Gen& gen, const ContextPtr& field, std::size_t arity) {
    if (!field->pure_field() || field->ngens() == 0)
        throw std::invalid_argument("clearance alpha needs a field with generators");
    if (field->base_cutoff() >= field->ngens())
        throw std::invalid_argument("top generator must lie outside M");
    if (arity > 5) throw std::invalid_argument("arity too large for the lead pool");

    std::size_t d = field->ngens() - 1; // dominant generator index
    Poly top = Poly::variable(field, d);

    // Distinct powers of the dominant generator, optionally decorated with
    // a smaller generator; every nonzero M-combination keeps the highest
    // occurring power alive, hence stays infinite.
    std::vector<Fraction> perturbations{
        Fraction::zero(field),
        Fraction::rational(field, gen.rational(5, 3)),
        Fraction::one(field) / Fraction(top),
        -(Fraction::one(field) / Fraction(top)),
    };
    if (d > 0) {
        Poly low = Poly::variable(field, 0);
        perturbations.push_back(Fraction::one(field) / Fraction(low));
        perturbations.push_back(Fraction(low) / Fraction(top));
    }

    std::vector<Fraction> coords;
    for (std::size_t i = 0; i < arity; ++i) {
        Fraction lead(top.pow(static_cast<std::uint32_t>(i + 1)));
        if (d > field->base_cutoff() && gen.chance(40)) {
            // A non-base decoration below the dominant generator keeps the
            // lead outside M and the powers distinct.
            Poly mid = Poly::variable(field, d - 1);
            lead = lead * Fraction(mid);
        }
        coords.push_back(lead + perturbations[gen.below(perturbations.size())]);
    }
    return SpecPoint(field, std::move(coords));
}

Poly random_m_corpus_poly(Gen& gen, const ContextPtr& ring, std::uint32_t max_deg,
                          long long coeff_bound) {
    std::size_t e = ring->base_cutoff();
    std::size_t ng = ring->ngens();
    std::size_t n = ring->nindets();
    for (;;) {
        Poly f(ring);
        std::size_t terms = 1 + gen.below(4);
        for (std::size_t tix = 0; tix < terms; ++tix) {
            Exponents ex(ring->nvars());
            std::uint64_t total = 0;
            for (std::size_t i = 0; i < n; ++i) {
                std::uint32_t p = static_cast<std::uint32_t>(gen.below(max_deg + 1));
                if (total + p > max_deg) p = 0;
                ex[ng + i] = p;
                total += p;
            }
            Poly coeff = Poly::constant(ring, gen.nonzero_int(coeff_bound));
            if (e > 0 && gen.chance(50))
                coeff = coeff * gen.nonzero_poly(ring, 0, e, 2, 2, coeff_bound);
            f = f + coeff * Poly::monomial(ring, std::move(ex), 1);
        }
        if (!f.is_zero() && f.indet_degree() >= 1) return f;
    }
}

namespace {

using Comparator = std::function<Ordering(const Fraction&, const Fraction&)>;

struct Suite {
    Gen gen;
    std::size_t trials;
    Mutation mutation;
    std::vector<FamilyResult> results;

    ContextPtr ut = Context::make({"u", "t"}, 0);
    ContextPtr ut_ring = Context::make({"u", "t"}, 0, {"X1", "X2"});
    ContextPtr zu = Context::make({"u", "t"}, 1);
    ContextPtr zu_ring = Context::make({"u", "t"}, 1, {"X1", "X2"});
    ContextPtr y1 = Context::make({"Y1"}, 1);

    Suite(std::uint64_t seed, std::size_t trials, Mutation mutation)
        : gen(seed), trials(trials), mutation(mutation) {}

    void family(const std::string& name, std::size_t count,
                const std::function<bool()>& once, const std::string& note = "") {
        FamilyResult r{name, count, 0, note};
        for (std::size_t i = 0; i < count; ++i) {
            try {
                if (!once()) ++r.failures;
            } catch (const std::exception& e) {
                ++r.failures;
                if (r.note.empty()) r.note = std::string("threw: ") + e.what();
            }
        }
        results.push_back(std::move(r));
    }

    Fraction frac() { return gen.fraction(ut, 3, 3, 7); }

    void run() {
        family("ring-laws", trials, [&] {
            Poly a = gen.poly(ut_ring, 0, 4, 2, 4, 9);
            Poly b = gen.poly(ut_ring, 0, 4, 2, 4, 9);
            Poly c = gen.poly(ut_ring, 0, 4, 2, 4, 9);
            return (a + b) + c == a + (b + c) && a + b == b + a &&
                   (a * b) * c == a * (b * c) && a * b == b * a &&
                   a * (b + c) == a * b + a * c && (a - b) + b == a;
        });

        family("lex-leading-multiplicative", trials, [&] {
            Poly a = gen.nonzero_poly(ut, 0, 2, 4, 5, 9);
            Poly b = gen.nonzero_poly(ut, 0, 2, 4, 5, 9);
            auto [ea, ca] = a.lex_leading();
            auto [eb, cb] = b.lex_leading();
            auto [ep, cp] = (a * b).lex_leading();
            return ep == ea.plus(eb) && cp == ca * cb;
        });

        family("derivative-rules", trials, [&] {
            Poly a = gen.poly(ut_ring, 0, 4, 2, 4, 9);
            Poly b = gen.poly(ut_ring, 0, 4, 2, 4, 9);
            std::size_t var = gen.below(4);
            return (a + b).derivative(var) == a.derivative(var) + b.derivative(var) &&
                   (a * b).derivative(var) ==
                       a.derivative(var) * b + a * b.derivative(var);
        });

        family("eval-homomorphism", std::max<std::size_t>(1, trials / 4), [&] {
            Poly a = gen.poly(ut_ring, 0, 4, 2, 3, 5);
            Poly b = gen.poly(ut_ring, 0, 4, 2, 3, 5);
            std::vector<Fraction> pt{gen.fraction(ut, 2, 2, 5),
                                     gen.fraction(ut, 2, 2, 5)};
            return (a + b).eval(pt) == a.eval(pt) + b.eval(pt) &&
                   (a * b).eval(pt) == a.eval(pt) * b.eval(pt);
        });

        Comparator cmp = [&](const Fraction& x, const Fraction& y) {
            // The sign bug under test adds instead of subtracting.
            return mutation == Mutation::FlipCompareSign ? compare(x, -y)
                                                         : compare(x, y);
        };
        family("total-order", trials, [&] {
            Fraction a = frac(), b = frac(), c = frac();
            int classes = (cmp(a, b) == Ordering::Less) +
                          (cmp(a, b) == Ordering::Equal) +
                          (cmp(a, b) == Ordering::Greater);
            if (classes != 1) return false;
            if (cmp(a, a) != Ordering::Equal) return false;
            if (cmp(a, b) == Ordering::Less && cmp(b, a) != Ordering::Greater)
                return false;
            if (cmp(a, b) == Ordering::Greater && cmp(b, a) != Ordering::Less)
                return false;
            if (cmp(a, b) == Ordering::Equal && cmp(b, a) != Ordering::Equal)
                return false;
            if (cmp(a, b) != Ordering::Greater && cmp(b, c) != Ordering::Greater &&
                cmp(a, c) == Ordering::Greater)
                return false;
            return true;
        });

        family("order-ring-compatibility", trials, [&] {
            Fraction a = abs(frac());
            Fraction b = abs(frac());
            if (a.is_zero() || b.is_zero()) return true;
            Fraction zero = Fraction::zero(ut);
            return compare(a + b, zero) == Ordering::Greater &&
                   compare(a * b, zero) == Ordering::Greater;
        });

        family("classify-thresholds", std::max<std::size_t>(1, trials / 4), [&] {
            Fraction x = frac();
            Fraction ax = abs(x);
            switch (classify(x)) {
                case Magnitude::Infinite:
                    for (int n = 1; n <= 50; ++n)
                        if (compare(ax, Fraction::rational(ut, n)) != Ordering::Greater)
                            return false;
                    return true;
                case Magnitude::Infinitesimal:
                    for (int n = 1; n <= 50; ++n)
                        if (compare(ax, Fraction::rational(ut, Rational(1, n))) !=
                            Ordering::Less)
                            return false;
                    return true;
                case Magnitude::Zero:
                    return x.is_zero();
                case Magnitude::Finite:
                    return !x.is_zero();
            }
            return false;
        });

        family("base-ring-discreteness", std::max<std::size_t>(trials, 500), [&] {
            Poly p = gen.nonzero_poly(y1, 0, 1, 5, 4, 20);
            if (sign_of(p) < 0) p = -p;
            if (compare(Fraction(p), Fraction::one(y1)) == Ordering::Less) return false;
            check_positive_geq_one(p); // throws on any element in (0, 1)
            return true;
        });

        family("generators-infinite", 1, [&] {
            for (std::size_t j = 0; j < ut->ngens(); ++j)
                if (classify(Fraction(Poly::variable(ut, j))) != Magnitude::Infinite)
                    return false;
            return true;
        });

        family("tower-closed-form", std::max<std::size_t>(1, trials / 2), [&] {
            // Construction runs both routes and throws on mismatch.
            ContextPtr ring = gen.chance(25) ? zu_ring : ut_ring;
            Poly f = random_m_corpus_poly(gen, ring, 4, 9);
            NablaExpansion e = NablaExpansion::build(f);
            for (std::size_t k = 1; k <= e.m(); ++k) {
                if (e.tower()[k - 1].is_zero()) return false;
                if (e.tower()[k - 1].degree_span(ring->ngens(), e.arity()) !=
                    e.m() - k + 1)
                    return false;
            }
            return true;
        });

        family("monomial-sign-persistence", trials, [&] {
            Exponents v(ut_ring->nvars());
            v[2] = static_cast<std::uint32_t>(gen.below(4));
            v[3] = static_cast<std::uint32_t>(gen.below(4));
            if (v.is_zero()) return true;
            Rational a(gen.nonzero_int(9));
            NablaExpansion e = NablaExpansion::build(Poly::monomial(ut_ring, v, a));
            for (const auto& g : e.tower())
                for (const auto& [ex, c] : g.terms())
                    if (sign(c) != sign(a)) return false;
            return true;
        });

        family("direction-membership", std::max<std::size_t>(1, trials / 10), [&] {
            std::vector<NablaExpansion> es;
            std::size_t count = 1 + gen.below(3);
            for (std::size_t i = 0; i < count; ++i)
                es.push_back(NablaExpansion::build(
                    random_m_corpus_poly(gen, ut_ring, 3, 7)));
            Direction q = sample_direction(es, gen.raw());
            for (const auto& e : es)
                if (!e.member_u1(q) || !e.member_u2(q)) return false;
            return true;
        });

        family("predicate-nesting", std::max<std::size_t>(1, trials / 2), [&] {
            bool with_base = gen.chance(30);
            const ContextPtr& field = with_base ? zu : ut;
            const ContextPtr& ring = with_base ? zu_ring : ut_ring;
            SpecPoint p(field, {gen.fraction(field, 2, 2, 5),
                                gen.fraction(field, 2, 2, 5)});
            std::vector<Poly> corpus;
            std::size_t len = 1 + gen.below(4);
            for (std::size_t j = 0; j < len; ++j)
                corpus.push_back(random_m_corpus_poly(gen, ring, 2, 5));
            bool tr = is_transcendental(p, corpus).pass;
            bool ar = is_arithmetical(p, corpus).pass;
            bool md = is_m_discrete_cone(p, corpus).pass;
            bool dc = is_discrete_cone(p, corpus).pass;
            return (!tr || ar) && (!ar || md) && (!md || dc);
        });

        family("support-ideal-closure", std::max<std::size_t>(1, trials / 4), [&] {
            SpecPoint p(ut, {gen.fraction(ut, 2, 2, 5), gen.fraction(ut, 2, 2, 5)});
            Poly f = gen.poly(ut_ring, 0, 4, 2, 3, 5);
            Poly g = gen.poly(ut_ring, 0, 4, 2, 3, 5);
            Poly h = gen.poly(ut_ring, 0, 4, 2, 3, 5);
            std::vector<Poly> corpus{f, g, f + g, h * f};
            auto supp = supp_corpus(p, corpus);
            auto in_supp = [&](std::size_t i) {
                for (auto s : supp)
                    if (s == i) return true;
                return false;
            };
            if (in_supp(0) && in_supp(1) && !in_supp(2)) return false;
            if (in_supp(0) && !in_supp(3)) return false;
            return true;
        });

        family("distance-form", std::max<std::size_t>(1, trials / 4), [&] {
            auto rnd = [&] {
                return SpecPoint(ut, {gen.fraction(ut, 2, 2, 4),
                                      gen.fraction(ut, 2, 2, 4)});
            };
            SpecPoint p = rnd(), q = rnd(), s = rnd();
            Fraction A = distance_squared(p, q);
            if (!(A == distance_squared(q, p))) return false;
            if (!distance_squared(p, p).is_zero()) return false;
            Fraction B = distance_squared(q, s);
            Fraction C = distance_squared(p, s);
            Fraction gap = C - A - B;
            if (sign_of(gap) > 0) {
                // (C - A - B)^2 <= 4AB replaces the rooted triangle bound.
                if (compare(gap * gap, Fraction::rational(ut, 4) * A * B) ==
                    Ordering::Greater)
                    return false;
            }
            return true;
        });

        family("clearance-scaling", std::max<std::size_t>(1, trials / 4), [&] {
            SpecPoint p(ut, {gen.fraction(ut, 2, 2, 5), gen.fraction(ut, 2, 2, 5)});
            long long a1 = gen.nonzero_int(5), a2 = gen.nonzero_int(5);
            long long k = gen.nonzero_int(4);
            std::vector<Poly> a{Poly::constant(ut, a1), Poly::constant(ut, a2)};
            std::vector<Poly> ka{Poly::constant(ut, k * a1), Poly::constant(ut, k * a2)};
            return hyperplane_clearance(p, a).pass == hyperplane_clearance(p, ka).pass;
        });

        family("search-soundness", std::max<std::size_t>(1, trials / 10), [&] {
            bool with_base = gen.chance(25);
            const ContextPtr& field = with_base ? zu : ut;
            const ContextPtr& ring = with_base ? zu_ring : ut_ring;
            SearchConfig config{
                .alpha = clearance_alpha(gen, field, 2),
                .corpus = {},
                .radius = Rational(1 + gen.below(3), 1 + gen.below(2)),
                .seed = gen.raw(),
                .direction = std::nullopt,
                .lambda_override = std::nullopt,
            };
            std::size_t npolys = 1 + gen.below(4);
            for (std::size_t j = 0; j < npolys; ++j)
                config.corpus.push_back(random_m_corpus_poly(gen, ring, 3, 7));
            if (gen.chance(50)) config.corpus.push_back(parse_poly("X2 - X1^2", ring));
            SearchOutcome outcome = find_infinite_point(config);
            auto* report = std::get_if<SearchReport>(&outcome);
            if (!report) return false;
            if (report->index > report->planned_count) return false;
            // Independent re-verification through the spectrum module.
            for (const auto& f : config.corpus)
                if (classify(f.eval(report->gamma.coords)) != Magnitude::Infinite)
                    return false;
            return ball_contains(config.alpha, config.radius, report->gamma) &&
                   is_transcendental(report->gamma, config.corpus).pass;
        });
    }
};

} // namespace

SuiteResult run_property_suite(std::uint64_t seed, std::size_t trials,
                               Mutation mutation) {
    SuiteResult out;
    out.seed = seed;
    out.trials = trials;
    if (trials == 0) {
        out.warning = "trials = 0: every family passes vacuously";
        return out;
    }
    Suite suite(seed, trials, mutation);
    suite.run();
    out.families = std::move(suite.results);
    return out;
}

} // namespace dorder
