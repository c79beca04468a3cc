#include "dorder/cli.hpp"

#include "dorder/io.hpp"
#include "dorder/properties.hpp"
#include "dorder/search.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <ostream>
#include <sstream>

namespace dorder {

namespace {

using OJson = nlohmann::ordered_json;

// ---------------------------------------------------------------------
// Canonical text rendering of a report tree: objects as "key: value"
// lines, nested blocks indented by two, object arrays as "-" items.

bool is_scalar_array(const OJson& a) {
    for (const auto& el : a)
        if (el.is_object() || el.is_array()) return false;
    return true;
}

void render_object(std::ostream& out, const OJson& obj, int indent);

void render_value(std::ostream& out, const std::string& key, const OJson& v,
                  int indent) {
    std::string pad(indent, ' ');
    if (v.is_object()) {
        out << pad << key << ":\n";
        render_object(out, v, indent + 2);
    } else if (v.is_array()) {
        if (is_scalar_array(v)) {
            out << pad << key << ": " << v.dump() << "\n";
        } else {
            out << pad << key << ":\n";
            for (const auto& el : v) {
                if (el.is_object()) {
                    out << pad << "  -\n";
                    render_object(out, el, indent + 4);
                } else {
                    out << pad << "  - " << el.dump() << "\n";
                }
            }
        }
    } else if (v.is_string()) {
        out << pad << key << ": " << v.get<std::string>() << "\n";
    } else {
        out << pad << key << ": " << v.dump() << "\n";
    }
}

void render_object(std::ostream& out, const OJson& obj, int indent) {
    for (const auto& [key, value] : obj.items()) render_value(out, key, value, indent);
}

void emit(const OJson& report, const std::string& format, std::ostream& out) {
    if (format == "machine") {
        out << report.dump(2) << "\n";
    } else {
        render_object(out, report, 0);
    }
}

// ---------------------------------------------------------------------
// Report pieces

OJson context_json(const Context& ctx) {
    OJson j;
    std::string gens;
    for (std::size_t i = 0; i < ctx.ngens(); ++i)
        gens += (i ? ", " : "") + ctx.var_name(i);
    j["generators"] = gens;
    j["base_ring"] = base_ring_line(ctx).substr(std::string("base_ring: ").size());
    if (ctx.nindets() > 0) {
        std::string vars;
        for (std::size_t i = ctx.ngens(); i < ctx.nvars(); ++i)
            vars += (i > ctx.ngens() ? ", " : "") + ctx.var_name(i);
        j["vars"] = vars;
    }
    return j;
}

OJson exponents_json(const Exponents& e) {
    OJson arr = OJson::array();
    for (std::size_t i = 0; i < e.size(); ++i) arr.push_back(e[i]);
    return arr;
}

OJson rationals_json(const std::vector<Rational>& qs) {
    OJson arr = OJson::array();
    for (const auto& q : qs) arr.push_back(to_string(q));
    return arr;
}

OJson verdict_json(const ConeVerdict& v) {
    OJson j;
    j["predicate"] = v.predicate;
    j["verdict"] = v.pass ? "pass" : "fail";
    OJson ws = OJson::array();
    for (const auto& w : v.witnesses) {
        OJson wj;
        wj["index"] = w.index + 1;
        wj["sign"] = w.sign;
        wj["magnitude"] = std::string(to_string(w.magnitude));
        wj["value"] = to_string(w.value);
        ws.push_back(std::move(wj));
    }
    j["corpus"] = std::move(ws);
    if (v.failing) j["failing"] = *v.failing + 1;
    if (!v.notes.empty()) {
        OJson notes = OJson::array();
        for (const auto& n : v.notes) notes.push_back(n);
        j["notes"] = std::move(notes);
    }
    return j;
}

void check_matching_contexts(const ContextPtr& point_ctx, const ContextPtr& ring_ctx) {
    if (!same_context(point_ctx, ring_ctx->field_only()))
        throw std::invalid_argument(
            "point and corpus files declare different generators or base rings");
}

SpecPoint load_point(const std::string& path) {
    PointFile pf = load_point_file(path);
    return SpecPoint(pf.ctx, std::move(pf.coords));
}

// ---------------------------------------------------------------------
// Command options

struct GlobalOptions {
    std::uint64_t seed = 0;
    std::string format = "text";
};

struct Outcome {
    OJson report;
    int exit = kOk;
};

Outcome cmd_nabla_expand(const std::string& poly_path, int only_k) {
    PolyFile pf = load_poly_file(poly_path);
    if (pf.ctx->nindets() == 0)
        throw std::invalid_argument("polynomial file declares no 'vars'");
    if (pf.polys.empty()) throw std::invalid_argument("polynomial file has no 'poly'");
    OJson j;
    j["command"] = "nabla expand";
    j["context"] = context_json(*pf.ctx);
    OJson entries = OJson::array();
    for (const auto& f : pf.polys) {
        NablaExpansion e = NablaExpansion::build(f);
        OJson ej;
        ej["poly"] = to_string(f);
        ej["x_degree"] = static_cast<std::uint64_t>(f.indet_degree());
        ej["m"] = e.m();
        if (only_k > static_cast<int>(e.m()))
            throw std::invalid_argument("--k exceeds the tower height");
        OJson tower = OJson::array();
        OJson tables = OJson::array();
        for (std::size_t k = 1; k <= e.m(); ++k) {
            if (only_k > 0 && static_cast<std::size_t>(only_k) != k) continue;
            OJson tj;
            tj["k"] = k;
            tj["G"] = to_string(e.tower()[k - 1]);
            tower.push_back(std::move(tj));
            OJson cj;
            cj["k"] = k;
            OJson cols = OJson::array();
            for (const auto& [w, p] : e.coeff_table(k)) {
                OJson col;
                col["w"] = exponents_json(w);
                col["P"] = to_string(p);
                cols.push_back(std::move(col));
            }
            cj["columns"] = std::move(cols);
            tables.push_back(std::move(cj));
        }
        ej["tower"] = std::move(tower);
        ej["coeff_table"] = std::move(tables);
        OJson rep = OJson::array();
        for (const auto& p : e.linear_rep()) rep.push_back(to_string(p));
        ej["linear_rep"] = std::move(rep);
        entries.push_back(std::move(ej));
    }
    j["expansions"] = std::move(entries);
    return {std::move(j), kOk};
}

Outcome cmd_nabla_check_direction(const std::string& poly_path, const std::string& q_text) {
    PolyFile pf = load_poly_file(poly_path);
    if (pf.polys.empty()) throw std::invalid_argument("polynomial file has no 'poly'");
    Direction q{parse_rational_csv(q_text)};
    OJson j;
    j["command"] = "nabla check-direction";
    j["q"] = rationals_json(q.q);
    bool all_ok = true;
    OJson entries = OJson::array();
    for (const auto& f : pf.polys) {
        NablaExpansion e = NablaExpansion::build(f);
        OJson ej;
        ej["poly"] = to_string(f);
        OJson u1 = OJson::array();
        bool u1_ok = true;
        for (std::size_t k = 1; k <= e.m(); ++k) {
            for (const auto& [w, p] : e.coeff_table(k)) {
                if (w.is_zero()) continue;
                Poly at_q = p.substitute_indets(e.arity(), q.q);
                bool ok = !at_q.is_zero();
                u1_ok = u1_ok && ok;
                OJson cond;
                cond["k"] = k;
                cond["w"] = exponents_json(w);
                cond["value"] = to_string(at_q);
                cond["result"] = ok ? "pass" : "fail";
                u1.push_back(std::move(cond));
            }
        }
        ej["u1"] = std::move(u1);
        bool u2_ok = e.member_u2(q);
        ej["u2"] = u2_ok ? "pass" : "fail";
        bool member = u1_ok && u2_ok;
        ej["member"] = member ? "pass" : "fail";
        all_ok = all_ok && member;
        entries.push_back(std::move(ej));
    }
    j["polys"] = std::move(entries);
    j["verdict"] = all_ok ? "pass" : "fail";
    return {std::move(j), all_ok ? kOk : kFail};
}

Outcome cmd_order_compare(const ContextPtr& ctx, const std::string& x_text,
                          const std::string& y_text) {
    Fraction x = parse_fraction(x_text, ctx);
    Fraction y = parse_fraction(y_text, ctx);
    OJson j;
    j["command"] = "order compare";
    j["context"] = context_json(*ctx);
    j["x"] = to_string(x);
    j["y"] = to_string(y);
    j["result"] = std::string(to_string(compare(x, y)));
    return {std::move(j), kOk};
}

Outcome cmd_order_classify(const ContextPtr& ctx, const std::string& x_text) {
    Fraction x = parse_fraction(x_text, ctx);
    OJson j;
    j["command"] = "order classify";
    j["context"] = context_json(*ctx);
    j["x"] = to_string(x);
    j["sign"] = sign_of(x);
    j["magnitude"] = std::string(to_string(classify(x)));
    return {std::move(j), kOk};
}

Outcome cmd_spec_check(const std::string& point_path, const std::string& corpus_path,
                       const std::string& mode) {
    SpecPoint p = load_point(point_path);
    PolyFile corpus = load_poly_file(corpus_path);
    check_matching_contexts(p.context, corpus.ctx);
    ConeVerdict v;
    if (mode == "discrete") v = is_discrete_cone(p, corpus.polys);
    else if (mode == "m-discrete") v = is_m_discrete_cone(p, corpus.polys);
    else if (mode == "arithmetical") v = is_arithmetical(p, corpus.polys);
    else if (mode == "transcendental") v = is_transcendental(p, corpus.polys);
    else throw std::invalid_argument("unknown mode '" + mode + "'");
    OJson j;
    j["command"] = "spec check";
    j["context"] = context_json(*p.context);
    j["mode"] = mode;
    j.update(verdict_json(v));
    return {std::move(j), v.pass ? kOk : kFail};
}

Outcome cmd_spec_clearance(const std::string& point_path, long long bound,
                           const std::string& a_text) {
    SpecPoint p = load_point(point_path);
    OJson j;
    j["command"] = "spec clearance";
    j["context"] = context_json(*p.context);
    if (!a_text.empty()) {
        std::vector<Rational> entries = parse_rational_csv(a_text);
        std::vector<Poly> a;
        for (const auto& v : entries) a.push_back(Poly::constant(p.context, v));
        HyperplaneVerdict hv = hyperplane_clearance(p, a);
        j["a"] = rationals_json(entries);
        j["value"] = to_string(hv.value);
        j["magnitude"] = std::string(to_string(hv.magnitude));
        j["verdict"] = hv.pass ? "pass" : "fail";
        return {std::move(j), hv.pass ? kOk : kFail};
    }
    BatchClearanceVerdict bv = hyperplane_clearance_batch(p, bound);
    j["bound"] = bound;
    j["vectors_checked"] = bv.vectors_checked;
    OJson fails = OJson::array();
    for (const auto& f : bv.failures) {
        OJson arr = OJson::array();
        for (auto v : f) arr.push_back(v);
        fails.push_back(std::move(arr));
    }
    j["failures"] = std::move(fails);
    j["verdict"] = bv.pass ? "pass" : "fail";
    return {std::move(j), bv.pass ? kOk : kFail};
}

Outcome cmd_spec_dist(const std::string& p_path, const std::string& q_path) {
    SpecPoint p = load_point(p_path);
    SpecPoint q = load_point(q_path);
    Fraction d2 = distance_squared(p, q);
    OJson j;
    j["command"] = "spec dist";
    j["context"] = context_json(*p.context);
    j["distance_squared"] = to_string(d2);
    j["magnitude"] = std::string(to_string(classify(d2)));
    return {std::move(j), kOk};
}

struct SearchInputs {
    std::string corpus_path;
    std::string alpha_path;
    std::string r_text = "1";
    std::string q_text;
    std::string lambda_text;
};

Direction search_direction(const PolyFile& corpus, const SearchInputs& in,
                           std::uint64_t seed, bool* sampled) {
    if (!in.q_text.empty()) {
        *sampled = false;
        return Direction{parse_rational_csv(in.q_text)};
    }
    std::vector<NablaExpansion> es;
    es.reserve(corpus.polys.size());
    for (const auto& f : corpus.polys) es.push_back(NablaExpansion::build(f));
    *sampled = true;
    return sample_direction(es, seed);
}

Outcome cmd_search_plan(const SearchInputs& in, const GlobalOptions& global) {
    PolyFile corpus = load_poly_file(in.corpus_path);
    if (corpus.polys.empty()) throw std::invalid_argument("corpus file has no 'poly'");
    bool sampled = false;
    Direction q = search_direction(corpus, in, global.seed, &sampled);
    SearchPlan plan = plan_points(corpus.polys, q, parse_rational(in.r_text));
    OJson j;
    j["command"] = "search plan";
    j["context"] = context_json(*corpus.ctx);
    j["r"] = in.r_text;
    j["q"] = rationals_json(q.q);
    j["q_sampled"] = sampled;
    if (sampled) j["seed"] = global.seed;
    j["count"] = plan.count;
    j["lambda"] = to_string(plan.lambda);
    return {std::move(j), kOk};
}

Outcome cmd_search_run(const SearchInputs& in, const GlobalOptions& global) {
    PolyFile corpus = load_poly_file(in.corpus_path);
    SpecPoint alpha = load_point(in.alpha_path);
    check_matching_contexts(alpha.context, corpus.ctx);
    SearchConfig config{
        .alpha = std::move(alpha),
        .corpus = corpus.polys,
        .radius = parse_rational(in.r_text),
        .seed = global.seed,
        .direction = std::nullopt,
        .lambda_override = std::nullopt,
    };
    if (!in.q_text.empty()) config.direction = Direction{parse_rational_csv(in.q_text)};
    if (!in.lambda_text.empty()) config.lambda_override = parse_rational(in.lambda_text);

    SearchOutcome outcome = find_infinite_point(config);

    OJson j;
    j["command"] = "search run";
    j["context"] = context_json(*corpus.ctx);
    j["r"] = in.r_text;
    j["seed"] = global.seed;

    if (const auto* report = std::get_if<SearchReport>(&outcome)) {
        j["outcome"] = "report";
        j["q"] = rationals_json(report->direction.q);
        j["lambda"] = to_string(report->lambda);
        j["lambda_overridden"] = report->lambda_overridden;
        j["planned_count"] = report->planned_count;
        j["index"] = report->index;
        j["points_generated"] = report->points_generated;
        OJson coords = OJson::array();
        for (const auto& c : report->gamma.coords) coords.push_back(to_string(c));
        j["gamma"] = std::move(coords);
        OJson mags = OJson::array();
        for (Magnitude mg : report->per_poly) mags.push_back(std::string(to_string(mg)));
        j["per_poly"] = std::move(mags);
        j["in_ball"] = report->in_ball;
        j["clearance_advisory_ok"] = report->clearance_advisory_ok;
        return {std::move(j), kOk};
    }
    if (const auto* cert = std::get_if<RefutationCertificate>(&outcome)) {
        j["outcome"] = "certificate";
        j["q"] = rationals_json(cert->direction.q);
        j["poly_index"] = cert->poly_index + 1;
        OJson d = OJson::array();
        for (const auto& di : cert->d) d.push_back(to_string(di));
        j["d"] = std::move(d);
        j["d0"] = to_string(cert->d0);
        OJson coords = OJson::array();
        for (const auto& c : cert->c.coords) coords.push_back(to_string(c));
        j["C"] = std::move(coords);
        j["check_value"] = to_string(cert->check_value);
        j["clearance"] = std::string(to_string(cert->clearance));
        j["sample_indices"] =
            OJson::array({cert->sample_indices.first, cert->sample_indices.second});
        return {std::move(j), kCertificate};
    }
    const auto& ex = std::get<Exhaustion>(outcome);
    j["outcome"] = "exhaustion";
    j["points_generated"] = ex.points_generated;
    j["reason"] = ex.reason;
    return {std::move(j), kExhaustion};
}

Outcome cmd_verify_suite(std::size_t trials, const GlobalOptions& global,
                         bool mutate_compare) {
    SuiteResult result = run_property_suite(
        global.seed, trials,
        mutate_compare ? Mutation::FlipCompareSign : Mutation::None);
    OJson j;
    j["command"] = "verify suite";
    j["seed"] = result.seed;
    j["trials"] = result.trials;
    if (mutate_compare) j["mutation"] = "flip-compare-sign";
    OJson families = OJson::array();
    for (const auto& f : result.families) {
        OJson fj;
        fj["family"] = f.name;
        fj["trials"] = f.trials;
        fj["failures"] = f.failures;
        fj["result"] = f.failures == 0 ? "pass" : "fail";
        if (!f.note.empty()) fj["note"] = f.note;
        families.push_back(std::move(fj));
    }
    j["families"] = std::move(families);
    if (!result.warning.empty()) j["warning"] = result.warning;
    j["verdict"] = result.all_pass() ? "pass" : "fail";
    return {std::move(j), result.all_pass() ? kOk : kFail};
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    GlobalOptions global;

    CLI::App app{"dominance-ordered fields, prime-cone predicates, and the "
                 "infinite-point search"};
    app.require_subcommand(1);
    app.add_option("--seed", global.seed, "seed for randomized commands");
    app.add_option("--format", global.format, "report format")
        ->check(CLI::IsMember({"text", "machine"}));

    auto* nabla = app.add_subcommand("nabla", "operator tower and directions");
    nabla->require_subcommand(1);
    nabla->fallthrough();
    auto* expand = nabla->add_subcommand("expand", "print the tower and coefficient table");
    expand->fallthrough();
    std::string expand_poly;
    int expand_k = 0;
    expand->add_option("--poly", expand_poly, "polynomial file")->required();
    expand->add_option("--k", expand_k, "restrict to one tower level");
    auto* checkdir = nabla->add_subcommand("check-direction", "test a direction");
    checkdir->fallthrough();
    std::string checkdir_polys, checkdir_q;
    checkdir->add_option("--polys", checkdir_polys, "polynomial file")->required();
    checkdir->add_option("--q", checkdir_q, "direction, e.g. \"1,1\"")->required();

    auto* order = app.add_subcommand("order", "dominance order queries");
    order->require_subcommand(1);
    order->fallthrough();
    std::string order_gens, order_base = "Z", order_x, order_y;
    auto* ord_cmp = order->add_subcommand("compare", "compare two field elements");
    ord_cmp->fallthrough();
    ord_cmp->add_option("--generators", order_gens, "generator list, e.g. \"u, t\"")
        ->required();
    ord_cmp->add_option("--base-ring", order_base, "Z or Z[g1, ...]");
    ord_cmp->add_option("--x", order_x, "left element")->required();
    ord_cmp->add_option("--y", order_y, "right element")->required();
    auto* ord_cls = order->add_subcommand("classify", "magnitude of a field element");
    ord_cls->fallthrough();
    ord_cls->add_option("--generators", order_gens, "generator list")->required();
    ord_cls->add_option("--base-ring", order_base, "Z or Z[g1, ...]");
    ord_cls->add_option("--x", order_x, "element")->required();

    auto* spec = app.add_subcommand("spec", "prime-cone predicates");
    spec->require_subcommand(1);
    spec->fallthrough();
    auto* check = spec->add_subcommand("check", "run a predicate");
    check->fallthrough();
    std::string check_point, check_corpus, check_mode;
    check->add_option("--point", check_point, "point file")->required();
    check->add_option("--corpus", check_corpus, "polynomial file")->required();
    check->add_option("--mode", check_mode, "predicate")
        ->required()
        ->check(CLI::IsMember({"discrete", "m-discrete", "arithmetical",
                               "transcendental"}));
    auto* clearance = spec->add_subcommand("clearance", "hyperplane clearance");
    clearance->fallthrough();
    std::string clr_point, clr_a;
    long long clr_bound = 3;
    clearance->add_option("--point", clr_point, "point file")->required();
    clearance->add_option("--bound", clr_bound, "check all |a_i| <= bound");
    clearance->add_option("--a", clr_a, "single integer vector, e.g. \"1,-1\"");
    auto* dist = spec->add_subcommand("dist", "squared coordinate distance");
    dist->fallthrough();
    std::string dist_p, dist_q;
    dist->add_option("--p", dist_p, "point file")->required();
    dist->add_option("--q", dist_q, "point file")->required();

    auto* search = app.add_subcommand("search", "infinite-point search");
    search->require_subcommand(1);
    search->fallthrough();
    SearchInputs sin;
    auto* plan = search->add_subcommand("plan", "point count and step only");
    plan->fallthrough();
    plan->add_option("--corpus", sin.corpus_path, "polynomial file")->required();
    plan->add_option("--r", sin.r_text, "radius (positive rational)")->required();
    plan->add_option("--q", sin.q_text, "direction override");
    auto* run = search->add_subcommand("run", "walk the segment");
    run->fallthrough();
    run->add_option("--alpha", sin.alpha_path, "point file")->required();
    run->add_option("--corpus", sin.corpus_path, "polynomial file")->required();
    run->add_option("--r", sin.r_text, "radius (positive rational)")->required();
    run->add_option("--q", sin.q_text, "direction override");
    run->add_option("--lambda", sin.lambda_text, "step override");

    auto* verify = app.add_subcommand("verify", "property suites");
    verify->require_subcommand(1);
    verify->fallthrough();
    auto* suite = verify->add_subcommand("suite", "run every invariant family");
    suite->fallthrough();
    std::size_t suite_trials = 200;
    bool mutate_compare = false;
    suite->add_option("--trials", suite_trials, "per-family effort");
    suite->add_flag("--mutate-compare", mutate_compare,
                    "negative control: inject a comparison sign bug");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        Outcome outcome;
        if (expand->parsed()) outcome = cmd_nabla_expand(expand_poly, expand_k);
        else if (checkdir->parsed())
            outcome = cmd_nabla_check_direction(checkdir_polys, checkdir_q);
        else if (ord_cmp->parsed())
            outcome = cmd_order_compare(make_cli_context(order_gens, order_base),
                                        order_x, order_y);
        else if (ord_cls->parsed())
            outcome = cmd_order_classify(make_cli_context(order_gens, order_base), order_x);
        else if (check->parsed()) outcome = cmd_spec_check(check_point, check_corpus, check_mode);
        else if (clearance->parsed()) outcome = cmd_spec_clearance(clr_point, clr_bound, clr_a);
        else if (dist->parsed()) outcome = cmd_spec_dist(dist_p, dist_q);
        else if (plan->parsed()) outcome = cmd_search_plan(sin, global);
        else if (run->parsed()) outcome = cmd_search_run(sin, global);
        else if (suite->parsed())
            outcome = cmd_verify_suite(suite_trials, global, mutate_compare);
        else {
            err << "error: no command\n";
            return kUsage;
        }
        outcome.report["exit"] = outcome.exit;
        emit(outcome.report, global.format, out);
        return outcome.exit;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kUsage;
    }
}

} // namespace dorder
