#include "mvtop/cli/cli.hpp"

#include "mvtop/battery/battery.hpp"
#include "mvtop/cli/scenario.hpp"
#include "mvtop/error.hpp"
#include "mvtop/transfers/bruteforce.hpp"
#include "mvtop/transfers/lift.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <ostream>

namespace mvtop {

using nlohmann::json;

namespace {

// ---- encoders: pairs and maps come out in scenario syntax so a report can be
// fed back in.

json pair_json(const ModulusPair& m) {
    json comps = json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
        json c{{"divisor", m.divisor(i).to_string()}};
        json del = json::array();
        for (const Place& p : m.deleted(i)) {
            del.push_back(p.to_string());
        }
        if (!del.empty()) {
            c["deleted"] = del;
        }
        if (!m.ambient.components[i].label.empty()) {
            c["label"] = m.ambient.components[i].label;
        }
        comps.push_back(c);
    }
    return {{"components", comps}};
}

json map_json(const RationalMap& f) {
    json out = json::array();
    for (const auto& part : f.parts) {
        if (part.is_constant()) {
            out.push_back({{"target", part.target()}, {"constant", part.constant().to_string()}});
        } else {
            out.push_back({{"target", part.target()}, {"map", part.function().to_string()}});
        }
    }
    return out;
}

json morph_json(const AdmissibleMorphism& f) {
    return {{"source", pair_json(f.source)},
            {"target", pair_json(f.target)},
            {"components", map_json(f.map)},
            {"admissible", f.admissible()},
            {"minimal", f.minimal()}};
}

json square_json(const MSquare& t) {
    return {{"u", morph_json(t.u)}, {"p", morph_json(t.p)}, {"v", morph_json(t.v)}, {"q", morph_json(t.q)}};
}

json witness_json(const WitnessData& w) {
    return {{"square", square_json(w.s)},
            {"c00", morph_json(w.c00)},
            {"c01", morph_json(w.c01)},
            {"c10", morph_json(w.c10)},
            {"c11", morph_json(w.c11)}};
}

json corr_json(const Corr& c) {
    json terms = json::array();
    for (const auto& [v, n] : c.terms) {
        terms.push_back({{"F", v.f.to_string()}, {"from_component", v.source}, {"to_component", v.target}, {"mult", n}});
    }
    return {{"text", c.to_string()}, {"terms", terms}};
}

json mv_json(const MvReport& r) {
    json out{{"cond1", to_string(r.cond1)},     {"cond2", to_string(r.cond2)},     {"cond3", to_string(r.cond3)},
             {"verdict", to_string(r.verdict)}, {"detail1", r.detail1},           {"detail2", r.detail2},
             {"detail3", r.detail3}};
    if (r.comparison) {
        out["comparison"] = morph_json(*r.comparison);
    }
    if (r.od_map) {
        out["od_map"] = morph_json(*r.od_map);
    }
    return out;
}

// ---- runner

struct Outcome {
    bool failed = false;
    bool unsupported = false;
};

struct Context {
    const Scenario* s = nullptr;
    BatteryOptions options;
    Outcome outcome;
    std::vector<std::string> lines; // human summary
};

using Check = std::function<std::pair<bool, json>()>;

// Runs one check, folding library errors into the item and the outcome.
json item(Context& ctx, const std::string& label, const Check& fn) {
    json out;
    try {
        auto [pass, body] = fn();
        out = std::move(body);
        out["pass"] = pass;
        ctx.outcome.failed |= !pass;
        std::string line = label + ": " + (pass ? "pass" : "FAIL");
        if (out.contains("verdict")) {
            line += " (verdict " + out["verdict"].get<std::string>() + "; cond1 " + out["cond1"].get<std::string>() +
                    ", cond2 " + out["cond2"].get<std::string>() + ", cond3 " + out["cond3"].get<std::string>() + ")";
        }
        ctx.lines.push_back(line);
    } catch (const Error& e) {
        bool unsupported = e.is_unsupported();
        out = {{"pass", false}, {"error", {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}}}};
        if (unsupported) {
            out["unsupported"] = true;
            ctx.outcome.unsupported = true;
        } else {
            ctx.outcome.failed = true;
        }
        ctx.lines.push_back(label + ": " + (unsupported ? "UNSUPPORTED " : "FAIL ") + e.what());
    }
    return out;
}

json check_admissible_cmd(Context& ctx) {
    json morphisms = json::object();
    for (const auto& [name, f] : ctx.s->morphisms) {
        morphisms[name] = item(ctx, "morphism " + name, [&] {
            json body = morph_json(f);
            body["pullback"] = to_string(f.flags.pullback);
            body["detail"] = f.flags.detail;
            return std::make_pair(f.admissible(), body);
        });
    }
    json corrs = json::object();
    for (const auto& [name, c] : ctx.s->correspondences) {
        if (!c.from) {
            continue;
        }
        corrs[name] = item(ctx, "correspondence " + name, [&] {
            ElemAdmissibility a = elem_admissibility(c.v, *c.from, *c.to);
            json checks = json::array();
            for (const auto& b : a.checks) {
                checks.push_back({{"source_place", b.source_place.to_string()},
                                  {"target_place", b.target_place.to_string()},
                                  {"slope", b.slope.get_str()},
                                  {"source_mult", b.source_mult},
                                  {"target_mult", b.target_mult},
                                  {"route", b.puiseux ? "puiseux" : "polygon"}});
            }
            json body{{"F", c.v.f.to_string()}, {"from", c.from_ref}, {"to", c.to_ref}, {"admissible", a.admissible},
                      {"checks", checks},       {"detail", a.detail}};
            return std::make_pair(a.admissible, body);
        });
    }
    return {{"morphisms", morphisms}, {"correspondences", corrs}};
}

json fiber_product_cmd(Context& ctx) {
    json out = json::array();
    for (const auto& t : ctx.s->fiber_products) {
        out.push_back(item(ctx, "fiber product " + t.left + " x " + t.right, [&] {
            const auto& f1 = ctx.s->morphism(t.left);
            const auto& f2 = ctx.s->morphism(t.right);
            FiberProduct fp = canonical_fiber_product(f1, f2);
            json comps = json::array();
            for (const auto& c : fp.components) {
                comps.push_back({{"left", c.left}, {"right", c.right}, {"equation", c.equation.to_string()}});
            }
            bool proper_inputs = f1.source.is_proper() && f2.source.is_proper();
            bool commutes = f1.after(fp.p1).map == f2.after(fp.p2).map;
            bool pass = commutes && fp.p1.admissible() && fp.p2.admissible() && (!proper_inputs || fp.pair.is_proper());
            json body{{"left", t.left},
                      {"right", t.right},
                      {"pair", pair_json(fp.pair)},
                      {"p1", morph_json(fp.p1)},
                      {"p2", morph_json(fp.p2)},
                      {"components", comps},
                      {"commutes", commutes},
                      {"proper_inputs", proper_inputs},
                      {"proper", fp.pair.is_proper()}};
            return std::make_pair(pass, body);
        }));
    }
    return out;
}

json off_diagonal_cmd(Context& ctx) {
    json out = json::array();
    for (const auto& name : ctx.s->off_diagonals) {
        out.push_back(item(ctx, "off-diagonal " + name, [&] {
            OffDiagonal od = off_diagonal(ctx.s->morphism(name));
            const auto& d = od.decomposition;
            bool iso = is_isomorphism(d.map, d.source, d.target);
            json body{{"morphism", name},
                      {"od", pair_json(od.pair)},
                      {"empty", od.pair.is_empty()},
                      {"pr1", morph_json(od.pr1)},
                      {"pr2", morph_json(od.pr2)},
                      {"decomposition", morph_json(d)},
                      {"decomposition_is_iso", iso}};
            return std::make_pair(iso, body);
        }));
    }
    return out;
}

json verify_square_cmd(Context& ctx) {
    json out = json::object();
    for (const auto& [name, b] : ctx.s->squares) {
        out[name] = item(ctx, "square " + name, [&] {
            MvReport r = is_mv_square(b.t, b.w ? &*b.w : nullptr);
            json body = mv_json(r);
            body["square"] = square_json(b.t);
            if (b.w) {
                body["witness"] = witness_json(*b.w);
            }
            return std::make_pair(r.verdict == Verdict::True, body);
        });
    }
    return out;
}

json derived_square_cmd(Context& ctx) {
    json out = json::object();
    for (const auto& [name, b] : ctx.s->squares) {
        out[name] = item(ctx, "derived square of " + name, [&] {
            BuiltSquare d = derived_square(b.t);
            MvReport r = is_mv_square(d.t, d.w ? &*d.w : nullptr);
            json body = mv_json(r);
            body["square"] = square_json(d.t);
            if (d.w) {
                body["witness"] = witness_json(*d.w);
            }
            return std::make_pair(r.verdict == Verdict::True, body);
        });
    }
    return out;
}

json base_change_cmd(Context& ctx) {
    json out = json::array();
    for (const auto& t : ctx.s->base_changes) {
        if (!t.square.empty()) {
            out.push_back(item(ctx, "base change of " + t.square + " along " + t.along, [&] {
                const BuiltSquare& b = ctx.s->square(t.square);
                BuiltSquare bc = base_change_square(b.t, ctx.s->morphism(t.along), b.w ? &*b.w : nullptr);
                MvReport r = is_mv_square(bc.t, bc.w ? &*bc.w : nullptr);
                json body = mv_json(r);
                body["square_name"] = t.square;
                body["along"] = t.along;
                body["square"] = square_json(bc.t);
                if (bc.w) {
                    body["witness"] = witness_json(*bc.w);
                }
                return std::make_pair(r.verdict == Verdict::True, body);
            }));
        } else {
            out.push_back(item(ctx, "off-diagonal of " + t.cover + " along " + t.along, [&] {
                BaseChangeReport r = od_base_change_check(ctx.s->morphism(t.cover), ctx.s->morphism(t.along));
                json body{{"cover", t.cover},
                          {"along", t.along},
                          {"od_of_pullback", pair_json(r.od_of_pullback)},
                          {"pullback_of_od", pair_json(r.pullback_of_od)},
                          {"iso_status", to_string(r.iso.status)},
                          {"detail", r.detail}};
                if (r.iso.found()) {
                    body["iso"] = map_json(r.iso.map);
                }
                return std::make_pair(r.holds, body);
            }));
        }
    }
    return out;
}

json cocartesian_cmd(Context& ctx) {
    json out = json::array();
    for (const auto& t : ctx.s->glues) {
        out.push_back(item(ctx, "glue " + t.f + ", " + t.g + " over " + t.square, [&] {
            AdmissibleMorphism h = glue_cocartesian(ctx.s->square(t.square).t, ctx.s->morphism(t.f), ctx.s->morphism(t.g));
            json body{{"square", t.square}, {"f", t.f}, {"g", t.g}, {"glued", morph_json(h)}};
            return std::make_pair(h.admissible(), body);
        }));
    }
    return out;
}

json lift_cmd(Context& ctx) {
    json out = json::array();
    for (const auto& t : ctx.s->lifts) {
        out.push_back(item(ctx, "lift over " + t.square, [&] {
            const MSquare& sq = ctx.s->square(t.square).t;
            const ModulusPair& m = ctx.s->pair(t.source);
            Corr alpha = ctx.s->corr(t.alpha);
            Corr beta = ctx.s->corr(t.beta);
            MvLift l = mv_lift(alpha, beta, sq, m);
            bool round = push_forward_linear(sq.v, l.gamma, m) == alpha && push_forward_linear(sq.q, l.gamma, m) == beta;
            json body{{"square", t.square},         {"source", t.source},   {"alpha", corr_json(alpha)},
                      {"beta", corr_json(beta)},    {"gamma", corr_json(l.gamma)}, {"unique", l.unique},
                      {"via_rho", l.via_rho},       {"via_od", l.via_od},   {"round_trip", round}};
            return std::make_pair(round, body);
        }));
    }
    return out;
}

json oracle_cmd(Context& ctx) {
    json out = json::array();
    EnumerationBounds b{ctx.options.bound_degree, ctx.options.bound_height};
    for (const auto& t : ctx.s->oracles) {
        out.push_back(item(ctx, "oracle over " + t.square, [&] {
            const MSquare& sq = ctx.s->square(t.square).t;
            const ModulusPair& m = ctx.s->pair(t.source);
            BruteForceReport r = mv_cartesian_bruteforce(m, sq, b);
            // independent route: the constructive lift on every enumerated pair
            std::size_t agree = 0;
            json pairs = json::array();
            std::optional<MvLiftContext> lc;
            try {
                lc.emplace(sq, m);
            } catch (const Error&) {
            }
            for (const auto& p : r.pairs) {
                bool lifted = false;
                if (lc) {
                    try {
                        (void)mv_lift(p.alpha, p.beta, *lc);
                        lifted = true;
                    } catch (const Error& e) {
                        if (e.is_unsupported()) {
                            throw;
                        }
                    }
                }
                agree += lifted == p.liftable ? 1 : 0;
                pairs.push_back({{"alpha", p.alpha.to_string()},
                                 {"beta", p.beta.to_string()},
                                 {"kind", p.kind},
                                 {"liftable", p.liftable},
                                 {"constructive_lift", lifted}});
            }
            bool agrees = agree == r.pairs.size();
            json body{{"square", t.square},
                      {"source", t.source},
                      {"bound_degree", b.bidegree},
                      {"bound_height", b.height},
                      {"cartesian", r.cartesian},
                      {"enumerated", {{"00", r.e00}, {"01", r.e01}, {"10", r.e10}}},
                      {"pairs", pairs},
                      {"routes_agree", agrees},
                      {"detail", r.detail}};
            return std::make_pair(r.cartesian && agrees, body);
        }));
    }
    return out;
}

json suite_cmd(Context& ctx) {
    json out = json::array();
    for (const auto& r : run_battery(ctx.options)) {
        out.push_back({{"id", r.id},
                       {"title", r.title},
                       {"pass", r.pass},
                       {"cases", r.cases},
                       {"failures", r.failures},
                       {"seconds", r.seconds},
                       {"limit_seconds", r.limit_seconds},
                       {"notes", r.notes}});
        ctx.outcome.failed |= !r.pass;
        ctx.lines.push_back(summary_line(r));
    }
    return out;
}

const std::vector<std::pair<std::string, std::string>> kCommands = {
    {"check-admissible", "modulus condition for every morphism and correspondence"},
    {"fiber-product", "canonical fiber products of the listed morphism pairs"},
    {"off-diagonal", "off-diagonal of each listed morphism and its decomposition"},
    {"verify-square", "MV-square verdict with certificates for every square"},
    {"derived-square", "derived square of every square, re-verified"},
    {"base-change", "base change of squares and of off-diagonals"},
    {"cocartesian", "glue morphisms out of the two corners"},
    {"lift", "lift compatible correspondence pairs through the square"},
    {"oracle", "bounded brute-force cartesian check against the constructive lift"},
    {"suite", "the built-in verification battery"},
};

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"modulus-pair MV-square toolkit", "mvtop"};
    app.require_subcommand(1);
    std::string scenario_path;
    bool as_json = false;
    BatteryOptions options;
    for (const auto& [name, help] : kCommands) {
        CLI::App* sub = app.add_subcommand(name, help);
        if (name != "suite") {
            sub->add_option("--scenario", scenario_path, "scenario file (JSON)")->required();
        }
        sub->add_flag("--json", as_json, "print the JSON report");
        sub->add_option("--bound-degree", options.bound_degree, "brute-force bidegree bound")->check(CLI::Range(0, 6));
        sub->add_option("--bound-height", options.bound_height, "brute-force coefficient bound")->check(CLI::Range(0, 50));
        sub->add_option("--jobs", options.jobs, "parallel jobs")->check(CLI::Range(1, 64));
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::Error& e) {
        // help and usage errors; CLI11 prints them
        return app.exit(e, out, err) == 0 ? ExitPass : ExitMalformed;
    }
    std::string command = app.get_subcommands().front()->get_name();

    Scenario scenario;
    Context ctx;
    ctx.options = options;
    if (command != "suite") {
        try {
            scenario = load_scenario(scenario_path);
        } catch (const Error& e) {
            err << "mvtop: " << e.what() << "\n";
            if (e.kind() == ErrorKind::ParseError || e.kind() == ErrorKind::InvalidArgument ||
                e.kind() == ErrorKind::MalformedTable) {
                return ExitMalformed;
            }
            return e.is_unsupported() ? ExitUnsupported : ExitCheckFailed;
        }
        ctx.s = &scenario;
    }

    static const std::map<std::string, json (*)(Context&)> handlers = {
        {"check-admissible", check_admissible_cmd}, {"fiber-product", fiber_product_cmd},
        {"off-diagonal", off_diagonal_cmd},         {"verify-square", verify_square_cmd},
        {"derived-square", derived_square_cmd},     {"base-change", base_change_cmd},
        {"cocartesian", cocartesian_cmd},           {"lift", lift_cmd},
        {"oracle", oracle_cmd},                     {"suite", suite_cmd},
    };
    json results = handlers.at(command)(ctx);
    int code = ctx.outcome.failed ? ExitCheckFailed : ctx.outcome.unsupported ? ExitUnsupported : ExitPass;

    if (as_json) {
        json report{{"schema", kScenarioSchema}, {"command", command}, {"pass", code == ExitPass}, {"results", results}};
        if (command != "suite") {
            report["scenario"] = scenario_path;
        }
        out << report.dump(2) << "\n";
    } else {
        for (const auto& l : ctx.lines) {
            out << l << "\n";
        }
        if (ctx.lines.empty()) {
            out << "nothing to check\n";
        }
    }
    return code;
}

} // namespace mvtop
