#include "dorder/spectrum.hpp"

#include <stdexcept>

namespace dorder {

SpecPoint::SpecPoint(ContextPtr ctx, std::vector<Fraction> cs)
    : context(std::move(ctx)), coords(std::move(cs)) {
    if (!context->pure_field())
        throw std::invalid_argument("spectrum points live over pure field contexts");
    for (const auto& c : coords)
        if (!same_context(c.context(), context))
            throw std::invalid_argument("coordinate context mismatch");
}

bool in_m_poly_ring(const Poly& f) {
    if (!f.integer_coefficients()) return false;
    const Context& ctx = *f.context();
    for (const auto& [e, c] : f.terms()) {
        for (std::size_t i = ctx.base_cutoff(); i < ctx.ngens(); ++i)
            if (e[i] != 0) return false;
    }
    return true;
}

namespace {

void check_corpus_point(const SpecPoint& p, std::span<const Poly> corpus) {
    for (const auto& f : corpus) {
        if (f.context()->nindets() != p.arity())
            throw std::invalid_argument("corpus arity does not match the point");
        if (!same_context(f.context()->field_only(), p.context))
            throw std::invalid_argument("corpus field context does not match the point");
    }
}

std::vector<Fraction> eval_corpus(const SpecPoint& p, std::span<const Poly> corpus) {
    check_corpus_point(p, corpus);
    std::vector<Fraction> values;
    values.reserve(corpus.size());
    for (const auto& f : corpus) values.push_back(f.eval(p.coords));
    return values;
}

std::vector<PolyWitness> make_witnesses(const std::vector<Fraction>& values) {
    std::vector<PolyWitness> ws;
    ws.reserve(values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
        ws.push_back({i, sign_of(values[i]), classify(values[i]), values[i]});
    return ws;
}

// Core test shared by the discreteness predicates: every positive value
// must be >= 1.
ConeVerdict discreteness_core(const char* predicate, const SpecPoint& p,
                              std::span<const Poly> corpus) {
    ConeVerdict v;
    v.predicate = predicate;
    std::vector<Fraction> values = eval_corpus(p, corpus);
    v.witnesses = make_witnesses(values);
    v.pass = true;
    Fraction one = Fraction::one(p.context);
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (sign_of(values[i]) <= 0) continue;
        if (compare(values[i], one) == Ordering::Less) {
            v.pass = false;
            v.failing = i;
            break;
        }
    }
    return v;
}

void require_m_corpus(std::span<const Poly> corpus) {
    for (const auto& f : corpus)
        if (!in_m_poly_ring(f))
            throw std::invalid_argument("corpus polynomial is not in M[X1..Xn]");
}

} // namespace

std::vector<std::size_t> supp_corpus(const SpecPoint& p, std::span<const Poly> corpus) {
    std::vector<std::size_t> out;
    std::vector<Fraction> values = eval_corpus(p, corpus);
    for (std::size_t i = 0; i < values.size(); ++i)
        if (values[i].is_zero()) out.push_back(i);
    return out;
}

ConeVerdict is_discrete_cone(const SpecPoint& p, std::span<const Poly> corpus) {
    return discreteness_core("discrete", p, corpus);
}

ConeVerdict is_m_discrete_cone(const SpecPoint& p, std::span<const Poly> corpus) {
    ConeVerdict v = discreteness_core("m-discrete", p, corpus);
    v.predicate = "m-discrete";

    // Conditions (i) and (ii): the base ring embeds with positives staying
    // positive and nonzero elements staying nonzero. For evaluation points
    // the inclusion is the identity on generators; the sample check keeps
    // the contract honest.
    std::vector<Poly> sample = base_ring_sample(p.context);
    std::size_t positives = 0;
    for (const auto& s : sample) {
        Fraction value(s);
        if (sign_of(s) > 0) {
            ++positives;
            if (sign_of(value) <= 0) {
                v.pass = false;
                v.notes.push_back("M-sample element lost positivity");
            }
        }
        if (!s.is_zero() && value.is_zero()) {
            v.pass = false;
            v.notes.push_back("nonzero M-sample element vanished");
        }
    }
    v.notes.push_back("m-sample: " + std::to_string(sample.size()) + " elements, " +
                      std::to_string(positives) + " positive");
    return v;
}

ConeVerdict is_arithmetical(const SpecPoint& p, std::span<const Poly> corpus) {
    require_m_corpus(corpus);
    return discreteness_core("arithmetical", p, corpus);
}

ConeVerdict is_transcendental(const SpecPoint& p, std::span<const Poly> corpus) {
    require_m_corpus(corpus);
    for (const auto& f : corpus)
        if (f.is_zero())
            throw std::invalid_argument("transcendence corpus must be nonzero polynomials");
    ConeVerdict v = discreteness_core("transcendental", p, corpus);
    if (!v.pass) return v;
    std::vector<std::size_t> supp = supp_corpus(p, corpus);
    if (!supp.empty()) {
        v.pass = false;
        v.failing = supp.front();
        v.notes.push_back("point lies on corpus hypersurface " +
                          std::to_string(supp.front() + 1));
    }
    return v;
}

ConeVerdict diophantine_witness(const Poly& f, const SpecPoint& p,
                                std::span<const Poly> corpus) {
    if (!in_m_poly_ring(f))
        throw std::invalid_argument("witness polynomial is not in M[X1..Xn]");
    ConeVerdict v = is_arithmetical(p, corpus);
    v.predicate = "diophantine-witness";
    Fraction value = f.eval(p.coords);
    if (!value.is_zero()) {
        v.pass = false;
        v.notes.push_back("equation does not vanish at the point");
    } else {
        v.notes.push_back("equation vanishes at the point");
    }
    return v;
}

Fraction distance_squared(const SpecPoint& p, const SpecPoint& q) {
    if (!same_context(p.context, q.context))
        throw std::invalid_argument("distance across different contexts");
    if (p.arity() != q.arity())
        throw std::invalid_argument("distance across different arities");
    Fraction acc = Fraction::zero(p.context);
    for (std::size_t i = 0; i < p.arity(); ++i) {
        Fraction d = p.coords[i] - q.coords[i];
        acc = acc + d * d;
    }
    return acc;
}

bool ball_contains(const SpecPoint& center, const Rational& r, const SpecPoint& p) {
    if (r <= 0) throw std::invalid_argument("ball radius must be positive");
    Fraction rr = Fraction::rational(center.context, r * r);
    return compare(distance_squared(center, p), rr) != Ordering::Greater;
}

std::vector<Poly> base_ring_sample(const ContextPtr& field) {
    std::vector<Poly> sample;
    for (long long c : {1, 2, 5}) sample.push_back(Poly::constant(field, c));
    std::size_t e = field->base_cutoff();
    for (std::size_t i = 0; i < e; ++i) {
        Poly g = Poly::variable(field, i);
        sample.push_back(g);
        sample.push_back(g + Poly::constant(field, 3));
        sample.push_back(g - Poly::constant(field, 5));
        sample.push_back(g * g - Poly::constant(field, 1));
        for (std::size_t j = i + 1; j < e; ++j)
            sample.push_back(g * Poly::variable(field, j));
    }
    return sample;
}

HyperplaneVerdict hyperplane_clearance(const SpecPoint& p, std::span<const Poly> a) {
    if (a.size() != p.arity())
        throw std::invalid_argument("hyperplane arity mismatch");
    bool all_zero = true;
    for (const auto& ai : a) {
        if (!same_context(ai.context(), p.context))
            throw std::invalid_argument("hyperplane coefficient context mismatch");
        if (!ai.in_base_ring())
            throw std::invalid_argument("hyperplane coefficients must lie in M");
        all_zero = all_zero && ai.is_zero();
    }
    if (all_zero) throw std::invalid_argument("hyperplane vector must be nonzero");
    HyperplaneVerdict v;
    Fraction acc = Fraction::zero(p.context);
    for (std::size_t i = 0; i < a.size(); ++i)
        acc = acc + Fraction(a[i]) * p.coords[i];
    v.value = acc;
    v.magnitude = classify(acc);
    v.pass = v.magnitude == Magnitude::Infinite;
    return v;
}

BatchClearanceVerdict hyperplane_clearance_batch(const SpecPoint& p, long long bound) {
    if (bound < 1) throw std::invalid_argument("clearance bound must be positive");
    std::size_t n = p.arity();
    BatchClearanceVerdict out;
    out.pass = true;
    std::vector<long long> a(n, -bound);
    for (;;) {
        // Canonical representative: first nonzero entry positive.
        bool zero = true;
        long long first = 0;
        for (auto v : a) {
            if (v != 0) {
                first = v;
                zero = false;
                break;
            }
        }
        if (!zero && first > 0) {
            ++out.vectors_checked;
            std::vector<Poly> coeffs;
            coeffs.reserve(n);
            for (auto v : a) coeffs.push_back(Poly::constant(p.context, v));
            if (!hyperplane_clearance(p, coeffs).pass) {
                out.pass = false;
                out.failures.push_back(a);
            }
        }
        std::size_t pos = 0;
        while (pos < n && ++a[pos] > bound) a[pos++] = -bound;
        if (pos == n) break;
    }
    return out;
}

} // namespace dorder
