#include "dorder/search.hpp"

#include <stdexcept>

namespace dorder {

std::size_t required_points(std::uint64_t degree) {
    if (degree < 1) throw std::invalid_argument("degree must be at least 1");
    if (degree == 1) return 2;
    std::uint64_t m = degree - 1;
    if (m >= 60) throw std::overflow_error("point budget overflows");
    // Minimal N with N_m >= 2: halving N needs N >= 2*target + 1 per level.
    return static_cast<std::size_t>((std::uint64_t(3) << m) - 1);
}

SearchPlan plan_points(std::span<const Poly> corpus, const Direction& q,
                       const Rational& radius) {
    if (radius <= 0) throw std::invalid_argument("radius must be positive");
    SearchPlan plan;
    plan.count = 1;
    for (const auto& f : corpus) {
        std::uint64_t deg = f.indet_degree();
        if (deg < 1) throw std::invalid_argument("corpus polynomial is constant");
        plan.count *= required_points(deg);
        if (plan.count > (std::size_t(1) << 40))
            throw std::overflow_error("point budget too large for this corpus");
    }
    Rational q_mass(1);
    for (const auto& qi : q.q) q_mass += boost::multiprecision::abs(qi);
    plan.lambda = radius / (Rational(plan.count) * q_mass);
    return plan;
}

namespace {

SpecPoint segment_point(const SpecPoint& alpha, const Direction& q,
                        const Rational& lambda, std::size_t index) {
    std::vector<Fraction> coords;
    coords.reserve(alpha.arity());
    Rational step = Rational(index - 1) * lambda;
    for (std::size_t j = 0; j < alpha.arity(); ++j)
        coords.push_back(alpha.coords[j] +
                         Fraction::rational(alpha.context, step * q.q[j]));
    return SpecPoint(alpha.context, std::move(coords));
}

} // namespace

RefutationCertificate refute_linear(std::span<const Poly> linear_coeffs,
                                    const SpecPoint& a_pt, const SpecPoint& b_pt,
                                    const SpecPoint& alpha) {
    std::size_t n = alpha.arity();
    if (linear_coeffs.size() != n + 1)
        throw std::invalid_argument("linear stage needs n + 1 coefficients");
    if (a_pt.arity() != n || b_pt.arity() != n)
        throw std::invalid_argument("sample point arity mismatch");
    bool any_x_coeff = false;
    for (std::size_t i = 1; i <= n; ++i)
        any_x_coeff = any_x_coeff || !linear_coeffs[i].is_zero();
    if (!any_x_coeff)
        throw std::invalid_argument("linear stage has no X coefficients");

    auto value_at = [&](const SpecPoint& p) {
        Fraction acc(linear_coeffs[0]);
        for (std::size_t i = 1; i <= n; ++i)
            acc = acc + Fraction(linear_coeffs[i]) * p.coords[i - 1];
        return acc;
    };
    Fraction ga = value_at(a_pt);
    Fraction gb = value_at(b_pt);
    if (classify(ga) == Magnitude::Infinite || classify(gb) == Magnitude::Infinite)
        throw std::invalid_argument("refuter expects finite linear-stage values");
    if (ga == gb)
        throw std::logic_error("degenerate refutation: equal linear-stage values");

    // C = a + s*(b - a) kills the affine form: G(C) = G(a) - s*(G(a)-G(b)) = 0.
    Fraction s = ga / (ga - gb);
    std::vector<Fraction> c_coords;
    c_coords.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        c_coords.push_back(a_pt.coords[i] +
                           s * (b_pt.coords[i] - a_pt.coords[i]));

    RefutationCertificate cert;
    cert.c = SpecPoint(alpha.context, std::move(c_coords));

    // Clear denominators with one integer so every d_i lands in M.
    Int m(1);
    for (const auto& p : linear_coeffs)
        for (const auto& [e, c] : p.terms())
            m = boost::multiprecision::lcm(m, Int(denominator(c)));
    cert.d0 = linear_coeffs[0].scaled(Rational(m));
    for (std::size_t i = 1; i <= n; ++i) {
        cert.d.push_back(linear_coeffs[i].scaled(Rational(m)));
        if (!cert.d.back().in_base_ring())
            throw std::logic_error("refuter coefficients failed to land in M");
    }
    if (!cert.d0.in_base_ring())
        throw std::logic_error("refuter offset failed to land in M");

    Fraction check(cert.d0);
    for (std::size_t i = 0; i < n; ++i)
        check = check + Fraction(cert.d[i]) * cert.c.coords[i];
    cert.check_value = check;
    if (!check.is_zero())
        throw std::logic_error("refuter check value is nonzero");

    cert.clearance = classify(distance_squared(alpha, cert.c));
    if (cert.clearance == Magnitude::Infinite)
        throw std::logic_error("refuter landed at infinite distance");
    return cert;
}

SearchOutcome find_infinite_point(const SearchConfig& config) {
    const SpecPoint& alpha = config.alpha;
    std::size_t n = alpha.arity();
    if (config.corpus.empty()) throw std::invalid_argument("empty search corpus");
    for (const auto& f : config.corpus) {
        if (!in_m_poly_ring(f))
            throw std::invalid_argument("corpus polynomial is not in M[X1..Xn]");
        if (f.context()->nindets() != n)
            throw std::invalid_argument("corpus arity does not match alpha");
        if (!same_context(f.context()->field_only(), alpha.context))
            throw std::invalid_argument("corpus field context does not match alpha");
        if (f.indet_degree() < 1)
            throw std::invalid_argument("corpus polynomial is constant");
    }

    std::vector<NablaExpansion> expansions;
    expansions.reserve(config.corpus.size());
    for (const auto& f : config.corpus) expansions.push_back(NablaExpansion::build(f));

    Direction q;
    if (config.direction) {
        q = *config.direction;
        if (q.q.size() != n) throw std::invalid_argument("direction arity mismatch");
        for (std::size_t j = 0; j < expansions.size(); ++j)
            if (!expansions[j].member(q))
                throw std::invalid_argument(
                    "supplied direction leaves U_F of corpus polynomial " +
                    std::to_string(j + 1));
    } else {
        q = sample_direction(expansions, config.seed);
    }

    SearchPlan plan = plan_points(config.corpus, q, config.radius);
    Rational lambda = config.lambda_override.value_or(plan.lambda);
    if (lambda <= 0) throw std::invalid_argument("step must be positive");

    bool advisory_ok = hyperplane_clearance_batch(alpha, 2).pass;

    // Two finite samples per linear corpus member feed the refuter.
    std::vector<std::vector<std::pair<std::size_t, Fraction>>> finite_samples(
        config.corpus.size());

    for (std::size_t i = 1; i <= plan.count; ++i) {
        SpecPoint p = segment_point(alpha, q, lambda, i);
        std::vector<Magnitude> mags;
        mags.reserve(config.corpus.size());
        bool all_infinite = true;
        for (std::size_t j = 0; j < config.corpus.size(); ++j) {
            Fraction value = config.corpus[j].eval(p.coords);
            Magnitude mag = classify(value);
            mags.push_back(mag);
            if (mag != Magnitude::Infinite) {
                all_infinite = false;
                if (expansions[j].m() == 0 && finite_samples[j].size() < 2)
                    finite_samples[j].emplace_back(i, value);
            }
        }
        if (all_infinite) {
            SearchReport report{
                .gamma = p,
                .index = i,
                .per_poly = std::move(mags),
                .points_generated = i,
                .direction = q,
                .lambda = lambda,
                .lambda_overridden = config.lambda_override.has_value(),
                .in_ball = ball_contains(alpha, config.radius, p),
                .clearance_advisory_ok = advisory_ok,
                .planned_count = plan.count,
            };
            if (!report.lambda_overridden && !report.in_ball)
                throw std::logic_error("planned step left the search ball");
            return report;
        }
    }

    for (std::size_t j = 0; j < config.corpus.size(); ++j) {
        if (finite_samples[j].size() < 2) continue;
        auto [i1, v1] = finite_samples[j][0];
        auto [i2, v2] = finite_samples[j][1];
        SpecPoint a_pt = segment_point(alpha, q, lambda, i1);
        SpecPoint b_pt = segment_point(alpha, q, lambda, i2);
        RefutationCertificate cert = refute_linear(
            expansions[j].linear_rep_at(q), a_pt, b_pt, alpha);
        cert.direction = q;
        cert.poly_index = j;
        cert.sample_indices = {i1, i2};
        return cert;
    }

    return Exhaustion{
        plan.count,
        "no all-infinite point among " + std::to_string(plan.count) +
            " and no linear corpus member produced two finite values"};
}

} // namespace dorder
