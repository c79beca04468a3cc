#include "dorder/nabla.hpp"

#include "dorder/gen.hpp"

#include <numeric>
#include <stdexcept>

namespace dorder {

Poly nabla_dot(const Poly& h) {
    const ContextPtr& ctx = h.context();
    std::size_t ni = ctx->nindets();
    if (ni % 2 != 0)
        throw std::invalid_argument("nabla_dot needs an X block followed by a T block");
    std::size_t n = ni / 2;
    std::size_t ng = ctx->ngens();
    Poly acc(ctx);
    for (std::size_t i = 0; i < n; ++i) {
        Poly d = h.derivative(ng + i);
        if (d.is_zero()) continue;
        acc = acc + d * Poly::variable(ctx, ng + n + i);
    }
    return acc;
}

namespace {

// X-part and T-part of a tower-context exponent vector.
Exponents x_part(const Exponents& e, std::size_t ng, std::size_t n) {
    Exponents w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = e[ng + i];
    return w;
}

Exponents t_part(const Exponents& e, std::size_t ng, std::size_t n) {
    Exponents l(n);
    for (std::size_t i = 0; i < n; ++i) l[i] = e[ng + n + i];
    return l;
}

} // namespace

NablaExpansion NablaExpansion::build(const Poly& f) {
    const ContextPtr& src_ctx = f.context();
    std::size_t n = src_ctx->nindets();
    if (n == 0) throw std::invalid_argument("source polynomial has no indeterminates");
    std::uint64_t deg = f.indet_degree();
    if (deg < 1) throw std::invalid_argument("source polynomial is constant");

    NablaExpansion e;
    e.source_ = f;
    e.n_ = n;
    e.m_ = static_cast<std::size_t>(deg - 1);

    std::vector<std::string> indets(src_ctx->var_names().begin() + src_ctx->ngens(),
                                    src_ctx->var_names().end());
    for (std::size_t i = 1; i <= n; ++i) {
        std::string name = "T" + std::to_string(i);
        if (src_ctx->index_of(name))
            throw std::invalid_argument("variable name '" + name +
                                        "' is reserved for the operator tower");
        indets.push_back(std::move(name));
    }
    e.tower_ctx_ = src_ctx->with_indeterminates(std::move(indets));
    std::size_t ng = e.tower_ctx_->ngens();

    Poly lifted = f.transport(e.tower_ctx_);

    // Route A: iterate the operator on F itself.
    Poly g = lifted;
    for (std::size_t k = 1; k <= e.m_; ++k) {
        g = nabla_dot(g);
        e.tower_.push_back(g);
    }

    // Route B: differentiate each monomial a_v * X^v separately, collect
    // the b-coefficients, and assemble the coefficient columns.
    e.tables_.assign(e.m_, CoeffTable());
    for (const auto& [v_full, a_v] : lifted.split_by_indets()) {
        Exponents v = x_part(v_full, 0, n); // keys of split are indet-only
        if (v.is_zero()) continue;          // constants vanish under the operator
        Poly monic = Poly::monomial(
            e.tower_ctx_,
            [&] {
                Exponents full(e.tower_ctx_->nvars());
                for (std::size_t i = 0; i < n; ++i) full[ng + i] = v[i];
                return full;
            }(),
            1);
        Poly w_poly = monic;
        for (std::size_t k = 1; k <= e.m_; ++k) {
            w_poly = nabla_dot(w_poly);
            for (const auto& [ex, b] : w_poly.terms()) {
                Exponents w = x_part(ex, ng, n);
                Exponents l = t_part(ex, ng, n);
                if (!(w.plus(l) == v) || denominator(b) != 1)
                    throw std::logic_error("operator tower: malformed monomial image");
                Exponents t_mono(e.tower_ctx_->nvars());
                for (std::size_t i = 0; i < n; ++i) t_mono[ng + n + i] = l[i];
                auto [it, fresh] = e.tables_[k - 1].try_emplace(w, Poly(e.tower_ctx_));
                it->second =
                    it->second + a_v * Poly::monomial(e.tower_ctx_, t_mono, b);
            }
        }
    }

    // The two routes must agree term for term, the degrees must fall by
    // exactly one per level, and every nonzero column must be nonzero.
    for (std::size_t k = 1; k <= e.m_; ++k) {
        Poly assembled(e.tower_ctx_);
        for (const auto& [w, p] : e.tables_[k - 1]) {
            Exponents x_mono(e.tower_ctx_->nvars());
            for (std::size_t i = 0; i < n; ++i) x_mono[ng + i] = w[i];
            assembled = assembled + p * Poly::monomial(e.tower_ctx_, x_mono, 1);
            if (!w.is_zero() && p.is_zero())
                throw std::logic_error("operator tower: vanishing coefficient column");
        }
        if (!(assembled == e.tower_[k - 1]))
            throw std::logic_error(
                "operator tower: closed form disagrees with the iterated operator");
        if (e.tower_[k - 1].is_zero() ||
            e.tower_[k - 1].degree_span(ng, n) != e.m_ - k + 1)
            throw std::logic_error("operator tower: degree law violated");
    }

    // Linear representation of the last level (or of F itself when m = 0).
    e.linear_rep_.assign(n + 1, Poly(e.tower_ctx_));
    if (e.m_ == 0) {
        for (const auto& [v_full, a_v] : lifted.split_by_indets()) {
            Exponents v = x_part(v_full, 0, n);
            if (v.is_zero()) {
                e.linear_rep_[0] = a_v;
                continue;
            }
            for (std::size_t i = 0; i < n; ++i) {
                if (v == Exponents::unit(n, i)) e.linear_rep_[i + 1] = a_v;
            }
        }
    } else {
        for (const auto& [w, p] : e.tables_[e.m_ - 1]) {
            if (w.is_zero()) {
                e.linear_rep_[0] = p;
                continue;
            }
            for (std::size_t i = 0; i < n; ++i)
                if (w == Exponents::unit(n, i)) e.linear_rep_[i + 1] = p;
        }
    }
    bool any = false;
    for (std::size_t i = 1; i <= n; ++i) any = any || !e.linear_rep_[i].is_zero();
    if (!any) throw std::logic_error("operator tower: linear stage has no X terms");
    return e;
}

const NablaExpansion::CoeffTable& NablaExpansion::coeff_table(std::size_t k) const {
    if (k < 1 || k > m_) throw std::out_of_range("tower level out of range");
    return tables_[k - 1];
}

bool NablaExpansion::member_u1(const Direction& q) const {
    if (q.q.size() != n_) throw std::invalid_argument("direction arity mismatch");
    for (std::size_t k = 1; k <= m_; ++k) {
        for (const auto& [w, p] : tables_[k - 1]) {
            if (w.is_zero()) continue;
            if (p.substitute_indets(n_, q.q).is_zero()) return false;
        }
    }
    return true;
}

bool NablaExpansion::member_u2(const Direction& q) const {
    if (q.q.size() != n_) throw std::invalid_argument("direction arity mismatch");
    Poly acc(tower_ctx_);
    for (std::size_t i = 1; i <= n_; ++i) {
        Poly p = linear_rep_[i].substitute_indets(n_, q.q);
        acc = acc + p.scaled(q.q[i - 1]);
    }
    return !acc.is_zero();
}

std::vector<Poly> NablaExpansion::linear_rep_at(const Direction& q) const {
    if (q.q.size() != n_) throw std::invalid_argument("direction arity mismatch");
    ContextPtr field = tower_ctx_->field_only();
    std::vector<Poly> out;
    out.reserve(n_ + 1);
    for (const auto& p : linear_rep_)
        out.push_back(p.substitute_indets(n_, q.q).transport(field));
    return out;
}

namespace {

// Rationals whose reduced height max(|num|, den) is exactly h.
std::vector<Rational> rationals_of_height(long long h) {
    std::vector<Rational> out;
    if (h == 1) {
        out.emplace_back(0);
        out.emplace_back(1);
        out.emplace_back(-1);
        return out;
    }
    for (long long k = 1; k <= h; ++k) {
        if (std::gcd(h, k) != 1) continue;
        out.emplace_back(Rational(h, k));
        out.emplace_back(Rational(-h, k));
        if (k < h) {
            out.emplace_back(Rational(k, h));
            out.emplace_back(Rational(-k, h));
        }
    }
    return out;
}

} // namespace

Direction sample_direction(std::span<const NablaExpansion> expansions,
                           std::uint64_t seed) {
    if (expansions.empty())
        throw std::invalid_argument("no expansions to sample a direction for");
    std::size_t n = expansions.front().arity();
    for (const auto& e : expansions)
        if (e.arity() != n) throw std::invalid_argument("mixed expansion arities");

    Gen gen(seed);
    std::vector<Rational> pool; // all rationals of height <= current level
    std::size_t tested = 0;
    constexpr std::size_t kBudget = 1000000;
    for (long long h = 1; tested < kBudget; ++h) {
        std::size_t old_size = pool.size();
        auto shell = rationals_of_height(h);
        pool.insert(pool.end(), shell.begin(), shell.end());

        // Tuples over the enlarged pool that use at least one new entry.
        std::vector<std::vector<std::size_t>> fresh;
        std::vector<std::size_t> idx(n, 0);
        for (;;) {
            bool uses_new = false;
            for (auto i : idx) uses_new = uses_new || i >= old_size;
            if (uses_new || old_size == 0) fresh.push_back(idx);
            std::size_t pos = 0;
            while (pos < n && ++idx[pos] == pool.size()) idx[pos++] = 0;
            if (pos == n) break;
        }
        gen.shuffle(fresh);

        for (const auto& tuple : fresh) {
            if (++tested > kBudget) break;
            Direction q;
            q.q.reserve(n);
            for (auto i : tuple) q.q.push_back(pool[i]);
            if (q.is_zero()) continue;
            bool ok = true;
            for (const auto& e : expansions)
                if (!(ok = ok && e.member(q))) break;
            if (ok) return q;
        }
    }
    throw std::runtime_error("direction sampling exhausted its retry budget");
}

} // namespace dorder
