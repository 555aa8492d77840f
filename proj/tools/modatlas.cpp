// modatlas: command-line front end. Evaluation, mapping, critical-point
// atlas, verification suites, locus tracing, tessellation export.
//
// Exit codes: 0 success, 1 verification failure, 2 invalid input,
// 3 numerical non-convergence.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "modatlas/critical.hpp"
#include "modatlas/errors.hpp"
#include "modatlas/geometry.hpp"
#include "modatlas/locus.hpp"
#include "modatlas/modular.hpp"
#include "modatlas/ode.hpp"
#include "modatlas/polymorphic.hpp"
#include "modatlas/qseries.hpp"
#include "modatlas/verify.hpp"
#include "modatlas/xcomplex.hpp"

using nlohmann::json;
using namespace modatlas;

namespace {

constexpr const char* kVersion = "modatlas 0.1.0";

json jc(const cplx& z) {
    if (is_inf(z)) return nullptr;
    return json::array({z.real(), z.imag()});
}

cplx parse_tau(const std::string& s) {
    std::istringstream in(s);
    double re, im;
    char comma = 0;
    if (!(in >> re >> comma >> im) || comma != ',' || !(in >> std::ws).eof())
        throw InvalidInput("expected RE,IM: " + s);
    if (!(im > 0.0))
        throw InvalidInput("tau must lie in the upper half-plane");
    return {re, im};
}

int thread_cap() {
    const char* env = std::getenv("MODATLAS_THREADS");
    if (env) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

void emit(const json& doc, const std::string& out) {
    if (out.empty()) {
        std::cout << doc.dump(2) << "\n";
    } else {
        std::ofstream f(out);
        if (!f) throw InvalidInput("cannot open output file: " + out);
        f << doc.dump(2) << "\n";
    }
}

json envelope(const std::string& command, json inputs, json results,
              std::chrono::steady_clock::time_point t0) {
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return json{{"command", command},
                {"inputs", std::move(inputs)},
                {"results", std::move(results)},
                {"version", kVersion},
                {"threads", thread_cap()},
                {"timing_seconds", dt}};
}

const char* status_word(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        default: return "skipped";
    }
}

json report_json(const CheckReport& r) {
    json entries = json::array();
    for (const CheckEntry& e : r.entries)
        entries.push_back(json{{"id", e.id},
                               {"status", status_word(e.status)},
                               {"worst", e.worst},
                               {"tol", e.tol},
                               {"samples", e.samples}});
    return json{{"suite", r.suite}, {"overall", r.overall}, {"entries", entries}};
}

json record_json(const CriticalRecord& rec) {
    return json{{"tile", rec.tile_word},
                {"location", jc(rec.location)},
                {"residual", rec.residual},
                {"simplicity_witness", rec.simplicity_witness},
                {"grid", rec.grid},
                {"newton_iterations", rec.newton_iterations}};
}

FnId parse_form5(const std::string& s) {
    if (s == "E2") return FnId::E2;
    if (s == "E4") return FnId::E4;
    if (s == "E6") return FnId::E6;
    if (s == "DELTA") return FnId::Delta;
    if (s == "J") return FnId::J;
    throw InvalidInput("unknown form: " + s);
}

TargetForm parse_form3(const std::string& s) {
    if (s == "E2") return TargetForm::E2;
    if (s == "E4") return TargetForm::E4;
    if (s == "E6") return TargetForm::E6;
    throw InvalidInput("unknown form: " + s);
}

SMap parse_fn(const std::string& s) {
    if (s == "s4") return SMap::S4;
    if (s == "s6") return SMap::S6;
    if (s == "s2+") return SMap::S2plus;
    if (s == "s2-") return SMap::S2minus;
    throw InvalidInput("unknown map: " + s);
}

LocusInterval parse_interval(const std::string& s) {
    if (s == "neg") return LocusInterval::Neg;
    if (s == "unit") return LocusInterval::Unit;
    if (s == "pos") return LocusInterval::Pos;
    throw InvalidInput("unknown interval: " + s);
}

// those identity_suite entries that exercise the ODE representations
bool ode_entry(const std::string& id) {
    return id == "ode_systems" || id == "hypergeometric_in_J" ||
           id == "fuchsian_in_u" || id == "schwarzians_in_variables";
}

struct Args {
    std::string form, fn, tau, suite = "all", interval, start, tile, out;
    bool tile_given = false;
    std::string family;
    double tol = 1e-12, truncate = 3.0, step = 0.01;
    int grid = 40, depth = -1, max_points = 4000;
    unsigned seed = 0;
    bool strict = false;
};

int run_eval(const Args& a) {
    auto t0 = std::chrono::steady_clock::now();
    cplx tau = parse_tau(a.tau);
    FormValue v = eval_form(parse_form5(a.form), tau, a.tol);
    json res{{"value", jc(v.value)}, {"error_estimate", v.error_estimate}};
    emit(envelope("eval",
                  json{{"form", a.form}, {"tau", jc(tau)}, {"tol", a.tol}},
                  res, t0),
         a.out);
    return 0;
}

int run_map(const Args& a) {
    auto t0 = std::chrono::steady_clock::now();
    cplx tau = parse_tau(a.tau);
    json res;
    if (a.fn == "s2pair") {
        auto p = s2_pair(tau, a.tol);
        res["values"] = json::array({jc(p.first), jc(p.second)});
    } else {
        res["value"] = jc(s_map(parse_fn(a.fn), tau, a.tol));
    }
    emit(envelope("map",
                  json{{"fn", a.fn}, {"tau", jc(tau)}, {"tol", a.tol}},
                  res, t0),
         a.out);
    return 0;
}

int run_critical(const Args& a) {
    auto t0 = std::chrono::steady_clock::now();
    TargetForm form = parse_form3(a.form);
    std::vector<Tile> tiles;
    json inputs{{"form", a.form}, {"truncate", a.truncate}, {"grid", a.grid}};
    if (a.tile_given && a.depth >= 0)
        throw InvalidInput("--tile and --depth are mutually exclusive");
    if (a.tile_given) {
        tiles.push_back(tile_from_element('V', word_element(a.tile), a.tile));
        inputs["tile"] = a.tile;
    } else if (a.depth >= 0) {
        tiles = tessellate('V', a.depth);
        inputs["depth"] = a.depth;
    } else {
        throw InvalidInput("critical needs --tile WORD or --depth D");
    }
    json records = json::array();
    for (const Tile& t : tiles)
        for (const CriticalRecord& rec : locate(form, t, a.grid, 1e-12, a.truncate))
            records.push_back(record_json(rec));
    emit(envelope("critical", inputs, json{{"records", records}}, t0), a.out);
    return 0;
}

int run_verify(const Args& a) {
    auto t0 = std::chrono::steady_clock::now();
    TolProfile profile = a.strict ? TolProfile::Strict : TolProfile::Default;
    std::vector<CheckReport> reports;
    if (a.suite == "all" || a.suite == "identities")
        reports.push_back(identity_suite(a.seed, profile));
    if (a.suite == "ode") {
        CheckReport full = identity_suite(a.seed, profile);
        CheckReport r;
        r.suite = "ode";
        r.overall = true;
        for (const CheckEntry& e : full.entries)
            if (ode_entry(e.id)) {
                r.entries.push_back(e);
                if (e.status == CheckStatus::Fail) r.overall = false;
            }
        reports.push_back(r);
    }
    if (a.suite == "all" || a.suite == "mapping") {
        const std::pair<MapTheorem, const char*> thms[] = {
            {MapTheorem::S4, "s4"},
            {MapTheorem::S6, "s6"},
            {MapTheorem::S2plus, "s2+"},
            {MapTheorem::S2minus, "s2-"}};
        for (auto [th, name] : thms) {
            CheckReport r = mapping_check(th, 100, 1e-8);
            r.suite = std::string("mapping:") + name;
            reports.push_back(r);
        }
    }
    if (a.suite == "all" || a.suite == "counts")
        reports.push_back(count_suite(2));
    if (reports.empty())
        throw InvalidInput("unknown suite: " + a.suite);

    bool overall = true;
    json jrep = json::array();
    for (const CheckReport& r : reports) {
        overall = overall && r.overall;
        jrep.push_back(report_json(r));
    }
    emit(envelope("verify",
                  json{{"suite", a.suite},
                       {"seed", a.seed},
                       {"strict", a.strict}},
                  json{{"overall", overall}, {"reports", jrep}}, t0),
         a.out);
    return overall ? 0 : 1;
}

int run_locus(const Args& a) {
    auto t0 = std::chrono::steady_clock::now();
    if (a.fn == "s2-" || a.fn == "s2pair")
        throw InvalidInput("locus supports s4, s6 and s2+");
    SMap fn = parse_fn(a.fn);
    LocusInterval iv = parse_interval(a.interval);
    cplx start = parse_tau(a.start);
    if (a.out.empty()) throw InvalidInput("locus needs --out FILE.csv");
    LocusCurve curve = trace(fn, iv, start, a.step, a.max_points);
    {
        std::ofstream f(a.out);
        if (!f) throw InvalidInput("cannot open output file: " + a.out);
        export_csv(curve, f);
    }
    double worst = 0.0;
    for (double r : curve.residuals) worst = std::max(worst, r);
    json res{{"points", curve.points.size()},
             {"first", jc(curve.points.front())},
             {"last", jc(curve.points.back())},
             {"max_residual", worst},
             {"csv", a.out}};
    emit(envelope("locus",
                  json{{"fn", a.fn},
                       {"interval", a.interval},
                       {"start", jc(start)},
                       {"step", a.step},
                       {"max", a.max_points}},
                  res, t0),
         "");
    return 0;
}

int run_tessellate(const Args& a) {
    auto t0 = std::chrono::steady_clock::now();
    if (a.family != "T" && a.family != "V")
        throw InvalidInput("family must be T or V");
    if (a.depth < 0) throw InvalidInput("tessellate needs --depth D");
    std::vector<Tile> tiles = tessellate(a.family[0], a.depth);
    json jt = json::array();
    for (const Tile& t : tiles) {
        json verts = json::array();
        for (const cplx& v : t.triangle.vertices) verts.push_back(jc(v));
        jt.push_back(json{{"word", t.word},
                          {"element", json::array({t.g.a, t.g.b, t.g.c, t.g.d})},
                          {"conjugate_first", t.g.conjugate_first},
                          {"vertices", verts},
                          {"cusp_infinity", tile_has_cusp_infinity(t)}});
    }
    json doc{{"family", a.family}, {"depth", a.depth}, {"tiles", jt}};
    emit(doc, a.out);
    if (!a.out.empty())
        emit(envelope("tessellate",
                      json{{"family", a.family}, {"depth", a.depth}},
                      json{{"tiles", tiles.size()}, {"file", a.out}}, t0),
             "");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"modatlas: Eisenstein series, polymorphic maps and their critical-point atlas"};
    app.require_subcommand(1);
    Args a;

    auto* eval = app.add_subcommand("eval", "evaluate E2/E4/E6/Delta/J at tau");
    eval->add_option("--form", a.form)->required()
        ->check(CLI::IsMember({"E2", "E4", "E6", "DELTA", "J"}));
    eval->add_option("--tau", a.tau)->required();
    eval->add_option("--tol", a.tol);
    eval->add_option("--out", a.out);

    auto* map = app.add_subcommand("map", "evaluate a polymorphic map at tau");
    map->add_option("--fn", a.fn)->required()
        ->check(CLI::IsMember({"s4", "s6", "s2+", "s2-", "s2pair"}));
    map->add_option("--tau", a.tau)->required();
    map->add_option("--tol", a.tol);
    map->add_option("--out", a.out);

    auto* crit = app.add_subcommand("critical", "locate critical points tile by tile");
    crit->add_option("--form", a.form)->required()
        ->check(CLI::IsMember({"E2", "E4", "E6"}));
    crit->add_option("--tile", a.tile);
    crit->add_option("--depth", a.depth);
    crit->add_option("--truncate", a.truncate);
    crit->add_option("--grid", a.grid);
    crit->add_option("--out", a.out);

    auto* ver = app.add_subcommand("verify", "run a verification suite");
    ver->add_option("--suite", a.suite)
        ->check(CLI::IsMember({"all", "identities", "mapping", "counts", "ode"}));
    ver->add_option("--seed", a.seed);
    ver->add_flag("--strict", a.strict);
    ver->add_option("--out", a.out);

    auto* loc = app.add_subcommand("locus", "trace a real-locus curve to CSV");
    loc->add_option("--fn", a.fn)->required()
        ->check(CLI::IsMember({"s4", "s6", "s2+"}));
    loc->add_option("--interval", a.interval)->required()
        ->check(CLI::IsMember({"neg", "unit", "pos"}));
    loc->add_option("--start", a.start)->required();
    loc->add_option("--step", a.step);
    loc->add_option("--max", a.max_points);
    loc->add_option("--out", a.out)->required();

    auto* tes = app.add_subcommand("tessellate", "export tessellation tiles to JSON");
    tes->add_option("--family", a.family)->required()
        ->check(CLI::IsMember({"T", "V"}));
    tes->add_option("--depth", a.depth)->required();
    tes->add_option("--out", a.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        a.tile_given = crit->count("--tile") > 0;
        if (eval->parsed()) return run_eval(a);
        if (map->parsed()) return run_map(a);
        if (crit->parsed()) return run_critical(a);
        if (ver->parsed()) return run_verify(a);
        if (loc->parsed()) return run_locus(a);
        if (tes->parsed()) return run_tessellate(a);
    } catch (const InvalidInput& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const DepthExceeded& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const OutsideW& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
