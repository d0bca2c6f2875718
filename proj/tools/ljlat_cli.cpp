// Command-line surface for the lattice-energy classifier: evaluation,
// reduction, thresholds, classification, phase-diagram sweeps, the
// rectangular-branch reference table, and the verification battery.
//
// Exit codes: 0 ok, 1 verification failure, 2 usage/domain error,
// 3 solver failure, 4 I/O failure.

#include "CLI11.hpp"
#include "json.hpp"

#include "ljlat/epstein.hpp"
#include "ljlat/minimizer.hpp"
#include "ljlat/modular.hpp"
#include "ljlat/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

using nlohmann::ordered_json;
using namespace ljlat;

namespace {

struct CommonOpts {
    double series_tol = 1e-10;
    double solver_tol = 1e-9;
    std::string out;
    std::string format;  // resolved per command in emit()
    std::uint64_t seed = 12345;
};

std::string fmt12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

SeriesControl series_ctl(const CommonOpts& o) {
    SeriesControl ctl;
    ctl.tol = o.series_tol;
    ctl.direct_cutoff = 256;
    return ctl;
}

class Timer {
  public:
    long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

  private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

ordered_json make_record(const std::string& command, ordered_json inputs, ordered_json outputs,
                         ordered_json tolerances, long long runtime_ms) {
    ordered_json rec;
    rec["command"] = command;
    rec["inputs"] = std::move(inputs);
    rec["outputs"] = std::move(outputs);
    rec["tolerances"] = std::move(tolerances);
    rec["runtime_ms"] = runtime_ms;
    return rec;
}

int emit(const CommonOpts& o, const ordered_json& rec, const std::string& csv = {}) {
    // Commands that produce flat rows default to CSV; everything else JSON.
    std::string format = o.format;
    if (format.empty()) format = csv.empty() ? "json" : "csv";
    std::string text = (format == "csv" && !csv.empty()) ? csv : rec.dump(2) + "\n";
    if (o.out.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream f(o.out);
    if (!f) {
        std::cerr << "error: cannot open output file: " << o.out << "\n";
        return 4;
    }
    f << text;
    if (!f.good()) {
        std::cerr << "error: write failed: " << o.out << "\n";
        return 4;
    }
    return 0;
}

void apply_config(const std::string& path, bool tol_explicit, CommonOpts& o) {
    if (path.empty()) return;
    std::ifstream f(path);
    if (!f) throw std::runtime_error("config file not readable: " + path);
    std::string line;
    while (std::getline(f, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            const auto a = s.find_first_not_of(" \t");
            const auto b = s.find_last_not_of(" \t");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key == "series_tol" && !tol_explicit) o.series_tol = std::stod(val);
        if (key == "solver_tol" && !tol_explicit) o.solver_tol = std::stod(val);
    }
}

ordered_json phase_to_json(const PhasePoint& p) {
    ordered_json j;
    j["phase"] = phase_name(p.tag);
    if (p.theta) j["theta"] = *p.theta;
    if (p.y) j["y"] = *p.y;
    ordered_json mins = ordered_json::array();
    for (const auto& m : p.minimizers) mins.push_back({{"x", m.x}, {"y", m.y}});
    j["minimizers"] = mins;
    return j;
}

// Expected rectangular-branch ordinates y_b at reference b values, used only
// for reporting deviations; never consumed by the solvers.
struct ReferenceRow {
    double b;
    const char* y_ref;
};
const ReferenceRow kRectangularBranchReference[] = {
    {5, "1.249803800"},    {6, "1.372027647"},    {7, "1.467520869"},
    {8, "1.548848505"},    {9, "1.620862121"},    {10, "1.686088356"},
    {100, "3.703484053"},  {200, "4.667323033"},  {300, "5.343067509"},
    {400, "5.880944029"},  {500, "6.335129562"},  {600, "6.732125854"},
    {1e3, "7.981906081"},  {1e4, "17.196633949"}, {1e5, "37.04903113"},
    {1e6, "79.81971820"},  {1e7, "171.9663699"},  {1e8, "370.4903128"},
    {1e9, "798.1971821"},  {1e10, "1719.663699"},
};

int cmd_eval(const CommonOpts& o, double s, double x, double y, const std::string& method) {
    Timer t;
    SeriesControl ctl = series_ctl(o);
    UpperHalfPoint z{x, y};
    ordered_json outputs;
    if (method == "cs" || method == "both") outputs["zeta_cs"] = zeta_cs(s, z, ctl);
    if (method == "direct" || method == "both") {
        DirectSumResult r = zeta_direct_sum(s, z, ctl);
        outputs["zeta_direct"] = r.value;
        outputs["direct_tail_bound"] = r.tail_bound;
    }
    if (method == "both")
        outputs["abs_discrepancy"] = std::abs(outputs["zeta_cs"].get<double>() -
                                              outputs["zeta_direct"].get<double>());
    ordered_json rec = make_record(
        "eval", {{"s", s}, {"x", x}, {"y", y}, {"method", method}}, outputs,
        {{"series_tol", o.series_tol}, {"direct_cutoff", ctl.direct_cutoff}}, t.ms());
    return emit(o, rec);
}

int cmd_reduce(const CommonOpts& o, double x, double y) {
    Timer t;
    ReduceResult r = reduce({x, y});
    const char* region = "";
    switch (r.position.region_tag) {
        case Region::Interior: region = "interior"; break;
        case Region::GammaA: region = "gamma_a"; break;
        case Region::GammaB: region = "gamma_b"; break;
        case Region::CornerI: region = "corner_i"; break;
        case Region::CornerHex: region = "corner_hex"; break;
        case Region::OtherBoundary: region = "other_boundary"; break;
    }
    std::string word;
    for (GeneratorOp op : r.word) {
        switch (op) {
            case GeneratorOp::T: word += "T"; break;
            case GeneratorOp::Tinv: word += "t"; break;
            case GeneratorOp::S: word += "S"; break;
            case GeneratorOp::R: word += "R"; break;
        }
    }
    ordered_json rec = make_record(
        "reduce", {{"x", x}, {"y", y}},
        {{"x", r.position.point.x},
         {"y", r.position.point.y},
         {"region", region},
         {"word", word}},
        ordered_json::object(), t.ms());
    return emit(o, rec);
}

int cmd_thresholds(const CommonOpts& o) {
    Timer t;
    Thresholds th = compute_thresholds(o.solver_tol);
    ordered_json outputs = {{"b0", th.b0},     {"b1", th.b1},           {"b1_5", th.b1_5},
                            {"b2", th.b2},     {"b_arc", th.b_arc},     {"b3", th.b3},
                            {"theta_b1", th.theta_b1}, {"y_b1", th.y_b1}, {"y0", th.y0}};
    ordered_json rec =
        make_record("thresholds", ordered_json::object(), outputs,
                    {{"solver_tol", o.solver_tol}, {"series_tol", o.series_tol}}, t.ms());
    return emit(o, rec);
}

int cmd_classify(const CommonOpts& o, std::optional<double> b_opt,
                 std::optional<double> eps_opt, std::optional<double> sigma_opt,
                 std::optional<double> A_opt, bool physical) {
    Timer t;
    const int forms = (b_opt ? 1 : 0) + ((eps_opt || sigma_opt) ? 1 : 0) + (A_opt ? 1 : 0);
    if (forms != 1)
        throw std::domain_error("classify: provide exactly one of --b, --epsilon/--sigma, --A");

    double b;
    std::optional<LJParams> params;
    ordered_json inputs;
    if (b_opt) {
        b = *b_opt;
        inputs["b"] = b;
    } else if (A_opt) {
        b = betermin_A_to_b(*A_opt);
        inputs["A"] = *A_opt;
        inputs["b"] = b;
    } else {
        if (!eps_opt || !sigma_opt)
            throw std::domain_error("classify: --epsilon and --sigma must be given together");
        params = LJParams::from_epsilon_sigma(*eps_opt, *sigma_opt);
        b = params->b;
        inputs["epsilon"] = *eps_opt;
        inputs["sigma"] = *sigma_opt;
        inputs["b"] = b;
    }

    Thresholds th = compute_thresholds(o.solver_tol);
    PhasePoint p = classify(b, th, o.solver_tol);
    ordered_json outputs = phase_to_json(p);
    SeriesControl ctl = series_ctl(o);
    const double w = w_b(6.0, 3.0, b, p.minimizers.front(), ctl);
    outputs["min_value"] = w;
    if (physical && params) outputs["lj_energy"] = lj_energy(*params, p.minimizers.front(), ctl);
    ordered_json rec = make_record(physical ? "lj" : "classify", inputs, outputs,
                                   {{"solver_tol", o.solver_tol}}, t.ms());
    return emit(o, rec);
}

int cmd_phase_diagram(const CommonOpts& o, double b_min, double b_max, int steps) {
    Timer t;
    if (!(b_min < b_max) || steps < 2)
        throw std::domain_error("phase-diagram: requires b_min < b_max and steps >= 2");
    Thresholds th = compute_thresholds(o.solver_tol);
    SeriesControl ctl = series_ctl(o);

    struct Row {
        double b, theta, y, energy;
        const char* phase;
    };
    std::vector<Row> rows(steps);
    auto work = [&](int lo, int hi) {
        for (int i = lo; i < hi; ++i) {
            const double b = b_min + (b_max - b_min) * i / static_cast<double>(steps - 1);
            PhasePoint p = classify(b, th, o.solver_tol);
            Row& r = rows[i];
            r.b = b;
            r.phase = phase_name(p.tag);
            r.theta = p.theta.value_or(std::nan(""));
            r.y = p.y.value_or(std::nan(""));
            r.energy = w_b(6.0, 3.0, b, p.minimizers.front(), ctl);
        }
    };
    const int hw = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    std::vector<std::thread> pool;
    const int chunk = (steps + hw - 1) / hw;
    for (int c = 0; c < hw; ++c) {
        const int lo = c * chunk, hi = std::min(steps, lo + chunk);
        if (lo < hi) pool.emplace_back(work, lo, hi);
    }
    for (auto& th_ : pool) th_.join();

    std::string csv = "b,phase_tag,theta,y,energy\n";
    ordered_json jrows = ordered_json::array();
    for (const Row& r : rows) {
        csv += fmt12(r.b);
        csv += ",";
        csv += r.phase;
        csv += ",";
        csv += std::isnan(r.theta) ? "" : fmt12(r.theta);
        csv += ",";
        csv += std::isnan(r.y) ? "" : fmt12(r.y);
        csv += ",";
        csv += fmt12(r.energy);
        csv += "\n";
        ordered_json jr = {{"b", r.b}, {"phase_tag", r.phase}, {"energy", r.energy}};
        if (!std::isnan(r.theta)) jr["theta"] = r.theta;
        if (!std::isnan(r.y)) jr["y"] = r.y;
        jrows.push_back(jr);
    }
    ordered_json rec = make_record("phase-diagram",
                                   {{"b_min", b_min}, {"b_max", b_max}, {"steps", steps}},
                                   {{"rows", jrows}}, {{"solver_tol", o.solver_tol}}, t.ms());
    return emit(o, rec, csv);
}

int cmd_table1(const CommonOpts& o) {
    Timer t;
    Thresholds th = compute_thresholds(o.solver_tol);
    std::string csv = "b,y_ref,y_computed,rel_deviation\n";
    ordered_json jrows = ordered_json::array();
    // Boundary row: at b = b3 the branch degenerates to y = 1.
    csv += fmt12(th.b3) + ",1,1,0\n";
    jrows.push_back({{"b", th.b3}, {"y_ref", 1.0}, {"y_computed", 1.0}, {"rel_deviation", 0.0}});
    for (const ReferenceRow& row : kRectangularBranchReference) {
        const double computed = solve_y_b(row.b, 1e-13).solution;
        const double ref = std::stod(row.y_ref);
        const double dev = std::abs(computed / ref - 1.0);
        csv += fmt12(row.b);
        csv += ",";
        csv += row.y_ref;
        csv += ",";
        csv += fmt12(computed);
        csv += ",";
        csv += fmt12(dev);
        csv += "\n";
        jrows.push_back({{"b", row.b},
                         {"y_ref", row.y_ref},
                         {"y_computed", computed},
                         {"rel_deviation", dev}});
    }
    ordered_json rec = make_record("table1", ordered_json::object(), {{"rows", jrows}},
                                   {{"solver_tol", 1e-13}}, t.ms());
    return emit(o, rec, csv);
}

int cmd_verify(const CommonOpts& o, int samples, const std::string& only) {
    Timer t;
    std::vector<LemmaCheck> checks = run_all_checks(samples, o.seed);
    if (!only.empty()) {
        std::vector<LemmaCheck> filtered;
        for (auto& c : checks)
            if (c.lemma_id.find(only) != std::string::npos) filtered.push_back(std::move(c));
        checks = std::move(filtered);
        if (checks.empty()) throw std::domain_error("verify: no check matches --only " + only);
    }
    bool all = true;
    std::vector<std::string> failing;
    ordered_json jchecks = ordered_json::array();
    for (const auto& c : checks) {
        if (!c.passed) {
            all = false;
            failing.push_back(c.lemma_id);
        }
        ordered_json jc = {{"lemma_id", c.lemma_id},
                           {"bound", c.bound},
                           {"worst_margin", c.worst_margin},
                           {"worst_point", {c.worst_x, c.worst_y}},
                           {"samples", c.sample_count},
                           {"passed", c.passed}};
        jc["domain"] = c.domain_description;
        if (!c.note.empty()) jc["note"] = c.note;
        jchecks.push_back(jc);
    }
    ordered_json rec = make_record("verify", {{"samples", samples}, {"seed", o.seed}},
                                   {{"all_passed", all}, {"checks", jchecks}},
                                   {{"margin_floor", -1e-12}}, t.ms());
    int rc = emit(o, rec);
    if (rc != 0) return rc;
    if (!all) {
        std::cerr << "verification failed:";
        for (const auto& id : failing) std::cerr << " " << id;
        std::cerr << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lennard-Jones lattice-energy minimizers via lattice zeta functions"};
    app.require_subcommand(1);

    CommonOpts o;
    std::string config_path;
    double tol_flag = 0.0;
    app.add_option("--config", config_path, "key=value file with series_tol / solver_tol");

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--tol", tol_flag, "override both series and solver tolerances");
        sub->add_option("--out", o.out, "write the result to this path instead of stdout");
        sub->add_option("--format", o.format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--seed", o.seed, "seed for sampling commands");
    };

    double s = 3.0, x = 0.0, y = 1.0;
    std::string method = "cs";
    auto* eval = app.add_subcommand("eval", "evaluate zeta(s, x+iy)");
    eval->add_option("--s", s)->required();
    eval->add_option("--x", x)->required();
    eval->add_option("--y", y)->required();
    eval->add_option("--method", method)->check(CLI::IsMember({"cs", "direct", "both"}));
    add_common(eval);

    double rx = 0.0, ry = 1.0;
    auto* red = app.add_subcommand("reduce", "reduce x+iy to the fundamental domain");
    red->add_option("--x", rx)->required();
    red->add_option("--y", ry)->required();
    add_common(red);

    auto* thr = app.add_subcommand("thresholds", "compute all transition parameters");
    add_common(thr);

    std::optional<double> b_opt, eps_opt, sigma_opt, A_opt;
    auto* cls = app.add_subcommand("classify", "classify the minimizer for a parameter");
    cls->add_option("--b", b_opt, "competition parameter");
    cls->add_option("--epsilon", eps_opt, "well depth");
    cls->add_option("--sigma", sigma_opt, "interaction diameter");
    cls->add_option("--A", A_opt, "density-style parameter, b = 2A^3");
    add_common(cls);

    std::optional<double> lj_eps, lj_sigma;
    auto* lj = app.add_subcommand("lj", "physical-units classification");
    lj->add_option("--epsilon", lj_eps)->required();
    lj->add_option("--sigma", lj_sigma)->required();
    add_common(lj);

    double b_min = 2.9, b_max = 4.2;
    int steps = 100;
    auto* pd = app.add_subcommand("phase-diagram", "sweep b and classify each point");
    pd->add_option("--b-min", b_min)->required();
    pd->add_option("--b-max", b_max)->required();
    pd->add_option("--steps", steps)->required();
    add_common(pd);

    auto* tab = app.add_subcommand("table1", "rectangular-branch reference table");
    add_common(tab);

    int samples = 500;
    std::string only;
    auto* ver = app.add_subcommand("verify", "run the inequality verification battery");
    ver->add_option("--samples", samples, "samples per interval/region");
    ver->add_option("--only", only, "run only checks whose id contains this substring");
    add_common(ver);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        bool tol_explicit = false;
        for (auto* sub : app.get_subcommands())
            if (sub->count("--tol") > 0) tol_explicit = true;
        apply_config(config_path, tol_explicit, o);
        if (tol_explicit) {
            o.series_tol = tol_flag;
            o.solver_tol = tol_flag;
        }

        if (eval->parsed()) return cmd_eval(o, s, x, y, method);
        if (red->parsed()) return cmd_reduce(o, rx, ry);
        if (thr->parsed()) return cmd_thresholds(o);
        if (cls->parsed()) return cmd_classify(o, b_opt, eps_opt, sigma_opt, A_opt, false);
        if (lj->parsed()) return cmd_classify(o, std::nullopt, lj_eps, lj_sigma, std::nullopt, true);
        if (pd->parsed()) return cmd_phase_diagram(o, b_min, b_max, steps);
        if (tab->parsed()) return cmd_table1(o);
        if (ver->parsed()) return cmd_verify(o, samples, only);
        std::cerr << "error: no subcommand\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        std::cerr << "solver error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
}
