#include "gelfand/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "gelfand/asymptotics.hpp"
#include "gelfand/constants.hpp"
#include "gelfand/explicit_solution.hpp"
#include "gelfand/hr_verify.hpp"
#include "gelfand/json_format.hpp"
#include "gelfand/shooting.hpp"
#include "gelfand/spectrum.hpp"
#include "gelfand/stability.hpp"
#include "gelfand/sweep.hpp"
#include "gelfand/trajectory_io.hpp"

namespace gelfand {

using nlohmann::json;

namespace {

const char* const kSubcommands[] = {"integrate", "shoot",    "scan-phi", "asymptotics", "constants",
                                    "spectrum",  "stability", "explicit", "sweep"};

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<double> parse_doubles(const std::string& s) {
    std::vector<double> v;
    if (trim(s).empty()) return v;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            v.push_back(std::stod(trim(item), &pos));
            if (pos != trim(item).size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw DomainError("cannot parse number '" + item + "'");
        }
    }
    return v;
}

int parse_int(const std::string& s) {
    try {
        std::size_t pos = 0;
        const int v = std::stoi(trim(s), &pos);
        if (pos == trim(s).size()) return v;
    } catch (const std::exception&) {
    }
    throw DomainError("cannot parse integer '" + s + "'");
}

// "3,5,7" or "5..30" or a mix
std::vector<int> parse_ints(const std::string& s) {
    std::vector<int> v;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto dots = item.find("..");
        if (dots == std::string::npos) {
            v.push_back(parse_int(item));
            continue;
        }
        const int a = parse_int(item.substr(0, dots));
        const int b = parse_int(item.substr(dots + 2));
        if (b < a) throw DomainError("empty range '" + item + "'");
        for (int i = a; i <= b; ++i) v.push_back(i);
    }
    if (v.empty()) throw DomainError("empty integer list");
    return v;
}

// "r1..r2:steps"
std::vector<double> parse_table_range(const std::string& s) {
    const auto dots = s.find("..");
    const auto colon = s.find(':');
    if (dots == std::string::npos || colon == std::string::npos || colon < dots)
        throw DomainError("table range must look like r1..r2:steps");
    const double a = parse_doubles(s.substr(0, dots)).at(0);
    const double b = parse_doubles(s.substr(dots + 2, colon - dots - 2)).at(0);
    const int steps = parse_int(s.substr(colon + 1));
    if (steps < 1 || !(b >= a)) throw DomainError("table range needs r1 <= r2 and steps >= 1");
    std::vector<double> r;
    for (int i = 0; i <= steps; ++i) r.push_back(a + (b - a) * i / steps);
    return r;
}

struct IntegratorFlags {
    IntegratorConfig config;

    void add(CLI::App* app) {
        app->add_option("--rtol", config.rtol, "relative tolerance");
        app->add_option("--atol", config.atol, "absolute tolerance");
        app->add_option("--r0", config.r0, "singular-start offset");
        app->add_option("--rmax", config.r_max, "integration horizon");
        app->add_option("--u-overflow", config.u_overflow, "overflow cap on w_0");
        app->add_option("--ppd", config.points_per_decade, "samples per decade");
    }
};

json state_json(const RadialState& s) { return {{"r", s.r}, {"w", s.w}, {"dw", s.dw}}; }

json problem_json(const ProblemSpec& p) { return {{"m", p.m}, {"n", p.n}}; }

json envelope(const std::string& command) { return {{"schema", 1}, {"command", command}}; }

void emit(std::ostream& out, const std::string& path, const std::string& text) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw DomainError("cannot open '" + path + "' for writing");
    f << text;
}

void emit_json(std::ostream& out, const std::string& path, const json& j) { emit(out, path, dump_json(j) + "\n"); }

void check_format(const std::string& f) {
    if (f != "json" && f != "csv") throw DomainError("format must be json or csv");
}

json outcome_json(const Outcome& o) {
    return {{"tag", to_string(o.tag)}, {"source", to_string(o.source)}, {"r_event", o.r_event}, {"tail", state_json(o.tail)}};
}

json report_json(const AsymptoticReport& r) {
    json j{{"regime", to_string(r.regime)},
           {"regime_order", r.regime_order},
           {"fitted_leading_coeff", r.fitted_leading_coeff},
           {"predicted_coeff", r.predicted_coeff},
           {"log_slope", r.log_slope},
           {"notes", r.notes}};
    j["ell"] = r.has_ell ? json{{"value", r.ell.ell}, {"uncertainty", r.ell.uncertainty}} : json(nullptr);
    return j;
}

json stability_json(const StabilityReport& r) {
    json values = json::array();
    for (const auto& [p, f] : r.form_values)
        values.push_back({{"parameter", p},
                          {"value", f.value},
                          {"derivative_term", f.derivative_term},
                          {"potential_term", f.potential_term},
                          {"extended", f.extended}});
    json j{{"verdict", to_string(r.verdict)}, {"form_values", values}, {"extended", r.extended}, {"notes", r.notes}};
    j["witness"] = r.witness ? json(*r.witness) : json(nullptr);
    j["certificate_radius"] = r.verdict == Verdict::CertifiedOutsideCompact ? json(r.certificate_radius) : json(nullptr);
    return j;
}

json spectrum_json(const SpectrumReport& s) {
    json roots = json::array();
    for (const auto& r : s.roots)
        roots.push_back({{"re", r.z.real()}, {"im", r.z.imag()}, {"residual_bound", r.residual_bound}});
    return {{"m", s.m},
            {"n", s.n},
            {"lambda_S", s.lambda_S},
            {"q_coeffs", s.q_coeffs},
            {"p_coeffs", s.p_coeffs},
            {"roots", roots},
            {"has_nonreal", s.has_nonreal},
            {"tol", s.tol},
            {"roundtrip_error", s.roundtrip_error}};
}

// evaluates f, recording a DomainError as null plus a note
template <class F>
json guarded(F f, json& notes, const std::string& name) {
    try {
        return f();
    } catch (const DomainError& e) {
        notes.push_back(name + ": " + e.what());
        return nullptr;
    }
}

json constants_table(int m, int n, int k, double alpha, double beta) {
    if (m < 1 || n < 1 || k < 0) throw DomainError("constants need m >= 1, n >= 1, k >= 0");
    json notes = json::array();
    json t;
    t["query"] = {{"m", m}, {"n", n}, {"k", k}, {"alpha", alpha}, {"beta", beta}};
    t["A"] = {{"value", A_const(n, k)}, {"valid", A_valid(n, k)}};
    t["B"] = {{"value", B_const(n, k)}, {"valid", B_valid(n, k)}};
    t["gamma"] = guarded([&] { return json(hr_gamma(n, alpha)); }, notes, "gamma");
    t["gamma_bar"] = guarded([&] { return json(hr_gamma_bar(n, alpha)); }, notes, "gamma_bar");
    t["mu"] = guarded(
        [&] {
            const auto mu = hr_mu(n, alpha);
            return json{{"value", mu.value}, {"argmin", mu.argmin}};
        },
        notes, "mu");
    t["lambda_S"] = guarded([&] { return json(lambda_S(m, n)); }, notes, "lambda_S");
    const auto product = [&](HRVariant v) {
        return guarded(
            [&] {
                const auto p = hr_product(n, k, v);
                return json{{"value", p.value}, {"log_branch", p.log_branch}};
            },
            notes, v == HRVariant::Laplacian ? "product_laplacian" : "product_gradient");
    };
    t["product_laplacian"] = product(HRVariant::Laplacian);
    t["product_gradient"] = product(HRVariant::Gradient);
    t["log_laplacian"] = guarded([&] { return json(hr_log_laplacian_constant(n, k)); }, notes, "log_laplacian");
    t["log_gradient"] = guarded([&] { return json(hr_log_gradient_constant(n, k)); }, notes, "log_gradient");
    t["oned"] = guarded([&] { return json(oned_constant(k)); }, notes, "oned");
    t["supersolution"] = guarded(
        [&] {
            const auto s = supersolution_constants(m, n);
            return json{{"C", s.C}, {"r_min", s.r_min}, {"lambda", s.lambda}};
        },
        notes, "supersolution");
    t["notes"] = notes;
    return t;
}

json constants_verify(int n, int k, double alpha, double beta, double R, int count, std::uint64_t seed) {
    json out = json::array();
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    for (auto v : {HRInequality::Rellich, HRInequality::RellichGradient, HRInequality::LogSecondOrder,
                   HRInequality::LogRellich, HRInequality::LogRellichGradient, HRInequality::OneDimensional}) {
        const bool log_form = v == HRInequality::LogSecondOrder || v == HRInequality::LogRellich ||
                              v == HRInequality::LogRellichGradient;
        const double a_min = log_form ? std::max(R, 1.0) : 0.0;
        json entry{{"variant", to_string(v)}};
        try {
            double worst = INFINITY;
            double constant = 0.0;
            int passed = 0;
            for (int i = 0; i < count; ++i) {
                const double a = a_min + 0.01 + 5.0 * U(rng);
                const double b = a * (1.05 + 20.0 * U(rng));
                const auto c = verify_hr_inequality(v, HRQuery{n, k, alpha, beta}, RadialTestFunction::bump(a, b), R);
                constant = c.constant;
                const double rel = c.rhs > 0.0 ? c.margin / c.rhs : 0.0;
                worst = std::min(worst, rel);
                if (c.margin >= -1e-10 * c.rhs) ++passed;
            }
            entry["constant"] = constant;
            entry["checks"] = count;
            entry["passed"] = passed;
            entry["min_relative_margin"] = worst;
        } catch (const DomainError& e) {
            entry["skipped"] = e.what();
        }
        out.push_back(entry);
    }
    return out;
}

}  // namespace

std::vector<std::string> expand_config(const std::vector<std::string>& args) {
    std::vector<std::string> rest;
    std::string path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config") {
            if (i + 1 >= args.size()) throw CLI::ArgumentMismatch("--config needs a file");
            path = args[++i];
        } else if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
        } else {
            rest.push_back(args[i]);
        }
    }
    if (path.empty()) return rest;

    std::ifstream f(path);
    if (!f) throw DomainError("cannot read config file '" + path + "'");
    std::vector<std::string> injected;
    std::string line;
    int lineno = 0;
    while (std::getline(f, line)) {
        ++lineno;
        line = trim(line.substr(0, line.find('#')));
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw DomainError(path + ":" + std::to_string(lineno) + ": expected key=value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (value == "false") continue;
        injected.push_back("--" + key);
        if (value != "true") injected.push_back(value);
    }
    // after the subcommand name, before any explicit flag
    std::size_t at = std::min<std::size_t>(1, rest.size());
    for (std::size_t i = 1; i < rest.size() && at == 1; ++i)
        for (const char* s : kSubcommands)
            if (rest[i] == s) at = i + 1;
    rest.insert(rest.begin() + static_cast<std::ptrdiff_t>(at), injected.begin(), injected.end());
    return rest;
}

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Radial solutions of (-Delta)^m u = e^u: integration, shooting, constants, spectra, stability."};
    app.name(argc > 0 ? argv[0] : "gelfand");
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    app.require_subcommand(1);

    int m = 2;
    int n = 3;
    std::string output;
    std::string format = "json";
    IntegratorFlags integ;

    // integrate
    auto* c_int = app.add_subcommand("integrate", "integrate one radial Cauchy problem");
    std::string alpha_list;
    c_int->add_option("--m", m)->required();
    c_int->add_option("--n", n)->required();
    c_int->add_option("--alpha", alpha_list, "comma list alpha_0..alpha_{m-1}")->required();
    c_int->add_option("--output", output, "trajectory CSV path (a .json sidecar is written next to it)");
    c_int->add_option("--format", format, "stdout format: json summary or csv samples");
    integ.add(c_int);

    // shoot
    auto* c_shoot = app.add_subcommand("shoot", "bisect for the boundary value phi_alpha");
    double alpha0 = 0.0;
    std::string beta_prime;
    double tol = 1e-6;
    c_shoot->add_option("--m", m)->required();
    c_shoot->add_option("--n", n)->required();
    c_shoot->add_option("--alpha", alpha0)->required();
    c_shoot->add_option("--beta-prime", beta_prime, "comma list beta_1..beta_{m-2}");
    c_shoot->add_option("--tol", tol);
    c_shoot->add_option("--output", output);
    integ.add(c_shoot);

    // scan-phi
    auto* c_scan = app.add_subcommand("scan-phi", "phi_alpha along one axis of beta'");
    int axis = 1;
    std::string grid;
    unsigned workers = default_workers();
    c_scan->add_option("--m", m)->required();
    c_scan->add_option("--n", n)->required();
    c_scan->add_option("--alpha", alpha0);
    c_scan->add_option("--axis", axis, "1-based coordinate of beta'");
    c_scan->add_option("--grid", grid, "comma list of t values")->required();
    c_scan->add_option("--tol", tol);
    c_scan->add_option("--workers", workers);
    c_scan->add_option("--output", output);
    integ.add(c_scan);

    // asymptotics
    auto* c_asy = app.add_subcommand("asymptotics", "tail regime of a saved trajectory");
    std::string trajectory_path;
    c_asy->add_option("--trajectory", trajectory_path, "trajectory CSV with its .json sidecar")->required();
    c_asy->add_option("--output", output);

    // constants
    auto* c_const = app.add_subcommand("constants", "Hardy-Rellich and related constants");
    int k = 1;
    double alpha_w = 0.0;
    double beta_w = 0.0;
    bool verify = false;
    int count = 50;
    std::uint64_t seed = 1;
    double R = std::exp(2.0);
    c_const->add_option("--m", m);
    c_const->add_option("--n", n)->required();
    c_const->add_option("--k", k);
    c_const->add_option("--alpha", alpha_w, "power weight exponent");
    c_const->add_option("--beta", beta_w, "log weight exponent");
    c_const->add_flag("--verify", verify, "check the inequalities on random bumps");
    c_const->add_option("--count", count, "bumps per inequality for --verify");
    c_const->add_option("--seed", seed);
    c_const->add_option("--R", R, "inner radius for the log-weighted forms");
    c_const->add_option("--output", output);

    // spectrum
    auto* c_spec = app.add_subcommand("spectrum", "roots of the linearized polynomial");
    std::string scan;
    std::string plot_data;
    double t_lo = -10.0;
    double t_hi = 10.0;
    int plot_samples = 401;
    double spec_tol = 1e-8;
    c_spec->add_option("--m", m)->required();
    c_spec->add_option("--n", n);
    c_spec->add_option("--scan", scan, "dimension range n1..n2");
    c_spec->add_option("--plot-data", plot_data, "write (t, P_m(t)) samples as CSV to this path");
    c_spec->add_option("--t-lo", t_lo);
    c_spec->add_option("--t-hi", t_hi);
    c_spec->add_option("--samples", plot_samples);
    c_spec->add_option("--tol", spec_tol);
    c_spec->add_option("--output", output);

    // stability
    auto* c_stab = app.add_subcommand("stability", "instability witnesses and outside-compact certificates");
    std::string family = "scaled";
    bool certify = false;
    FamilyRange range;
    c_stab->add_option("--trajectory", trajectory_path)->required();
    c_stab->add_option("--family", family, "scaled or dyadic");
    c_stab->add_flag("--certify", certify, "also run the outside-compact certificate");
    c_stab->add_option("--r-lo", range.R_lo);
    c_stab->add_option("--r-hi", range.R_hi);
    c_stab->add_option("--r-count", range.R_count);
    c_stab->add_option("--K", range.K);
    c_stab->add_option("--output", output);

    // explicit
    auto* c_exp = app.add_subcommand("explicit", "closed-form solutions in dimension 2m");
    double lambda = 1.0;
    bool emit_ic = false;
    bool residual = false;
    std::string table;
    c_exp->add_option("--m", m)->required();
    c_exp->add_option("--lambda", lambda);
    auto* o_ic = c_exp->add_flag("--emit-ic", emit_ic, "Cauchy data at the origin");
    auto* o_res = c_exp->add_flag("--residual", residual, "equation residual on [0.1, 10]");
    auto* o_tab = c_exp->add_option("--table", table, "r1..r2:steps");
    o_ic->excludes(o_res)->excludes(o_tab);
    o_res->excludes(o_tab);
    c_exp->add_option("--format", format);
    c_exp->add_option("--output", output);

    // sweep
    auto* c_sweep = app.add_subcommand("sweep", "classify random initial data over an (m, n) grid");
    std::string m_list = "2";
    std::string n_list = "3..5";
    SweepSpec sweep;
    c_sweep->add_option("--m", m_list, "list or range, e.g. 2,4 or 1..3");
    c_sweep->add_option("--n", n_list);
    c_sweep->add_option("--samples", sweep.samples, "initial data per (m, n)");
    c_sweep->add_option("--alpha-range", sweep.alpha_range, "alpha_k uniform in [-a, a]");
    c_sweep->add_flag("--shoot", sweep.shoot, "also compute phi_alpha(alpha_0) where defined");
    c_sweep->add_option("--tol", sweep.tol);
    c_sweep->add_option("--seed", sweep.seed);
    c_sweep->add_option("--workers", workers);
    c_sweep->add_option("--format", format);
    c_sweep->add_option("--output", output);
    integ.add(c_sweep);

    try {
        std::vector<std::string> args(argv, argv + argc);
        args = expand_config(args);
        std::vector<std::string> reversed(args.rbegin(), args.rend() - 1);
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n";
        const auto subs = app.get_subcommands();
        err << (subs.empty() ? app.help() : subs.front()->help());
        return 64;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        const auto* sub = app.get_subcommands().front();
        const std::string name = sub->get_name();
        json j = envelope(name);

        if (name == "integrate") {
            check_format(format);
            const auto problem = ProblemSpec::make(m, n);
            const InitialConditions ic{parse_doubles(alpha_list)};
            Trajectory t;
            try {
                t = integrate(problem, ic, integ.config);
            } catch (const IntegrationFailure& f) {
                if (!output.empty()) save_trajectory(output, f.partial());
                throw;
            }
            if (!output.empty()) save_trajectory(output, t);
            if (format == "csv") {
                write_trajectory_csv(out, t);
                return 0;
            }
            j["problem"] = problem_json(problem);
            j["ic"] = ic.alpha;
            j["config"] = to_json(integ.config);
            j["terminal_event"] = to_string(t.terminal_event);
            j["r_event"] = t.r_event;
            j["samples"] = t.samples.size();
            j["terminal"] = state_json(t.terminal());
            j["outcome"] = outcome_json(classify(t));
            j["stats"] = {{"accepted_steps", t.stats.accepted_steps},
                          {"rejected_steps", t.stats.rejected_steps},
                          {"evaluations", t.stats.evaluations}};
            if (!output.empty()) j["trajectory"] = output;
            emit_json(out, "", j);
        } else if (name == "shoot") {
            const auto problem = ProblemSpec::make(m, n);
            const auto r = phi_alpha(problem, alpha0, parse_doubles(beta_prime), tol, integ.config);
            j["problem"] = problem_json(problem);
            j["alpha"] = r.alpha;
            j["beta_prime"] = r.beta_prime;
            j["phi"] = r.phi_estimate;
            j["bracket"] = {r.b_global, r.b_blowup};
            j["evaluations"] = r.evaluations;
            j["tolerance_achieved"] = r.tolerance_achieved;
            j["warnings"] = r.warnings;
            emit_json(out, output, j);
        } else if (name == "scan-phi") {
            const auto problem = ProblemSpec::make(m, n);
            const auto values = scan_phi_monotonicity(problem, alpha0, axis, parse_doubles(grid), tol, integ.config,
                                                      std::max(1u, workers));
            json pts = json::array();
            bool decreasing = true;
            for (std::size_t i = 0; i < values.size(); ++i) {
                pts.push_back({{"t", values[i].first}, {"phi", values[i].second}});
                if (i > 0 && !(values[i].second < values[i - 1].second - 2 * tol)) decreasing = false;
            }
            j["problem"] = problem_json(problem);
            j["alpha"] = alpha0;
            j["axis"] = axis;
            j["values"] = pts;
            j["strictly_decreasing"] = decreasing;
            emit_json(out, output, j);
        } else if (name == "asymptotics") {
            const auto t = load_trajectory(trajectory_path);
            j["problem"] = problem_json(t.problem);
            j["report"] = report_json(analyze(t));
            emit_json(out, output, j);
        } else if (name == "constants") {
            j["table"] = constants_table(m, n, k, alpha_w, beta_w);
            if (verify) {
                if (count < 1) throw DomainError("--count must be >= 1");
                j["verify"] = constants_verify(n, k, alpha_w, beta_w, R, count, seed);
            }
            emit_json(out, output, j);
        } else if (name == "spectrum") {
            if (!plot_data.empty()) {
                std::ostringstream csv;
                csv << "t,p\n";
                char buf[64];
                for (const auto& p : Pm_plot_data(m, n, t_lo, t_hi, plot_samples)) {
                    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", p.t, p.p);
                    csv << buf;
                }
                emit(out, plot_data, csv.str());
                j["plot_data"] = plot_data;
            }
            if (!scan.empty()) {
                json list = json::array();
                for (int nn : parse_ints(scan)) list.push_back(spectrum_json(Pm_roots(m, nn, spec_tol)));
                j["reports"] = list;
            } else {
                if (sub->count("--n") == 0) throw DomainError("spectrum needs --n or --scan");
                j["report"] = spectrum_json(Pm_roots(m, n, spec_tol));
            }
            emit_json(out, output, j);
        } else if (name == "stability") {
            const auto t = load_trajectory(trajectory_path);
            const auto rep = instability_search(RadialProfile::from_trajectory(t), t.problem, family_from_string(family), range);
            j["problem"] = problem_json(t.problem);
            j["family"] = family;
            j["search"] = stability_json(rep);
            if (certify) {
                const auto cert = socs_certificate(t);
                j["certificate"] = stability_json(cert);
            }
            emit_json(out, output, j);
        } else if (name == "explicit") {
            check_format(format);
            const auto sol = ExplicitSolution::make(m, lambda);
            j["m"] = sol.m;
            j["n"] = sol.n();
            j["lambda"] = sol.lambda;
            j["c"] = sol.c;
            if (emit_ic) {
                j["alpha"] = explicit_initial_values(m, lambda).alpha;
            } else if (residual) {
                std::vector<double> rs;
                for (int i = 0; i <= 200; ++i) rs.push_back(0.1 * std::pow(100.0, i / 200.0));
                j["residual"] = explicit_residual(sol, rs);
                j["range"] = {0.1, 10.0};
            } else if (!table.empty()) {
                const auto rs = parse_table_range(table);
                if (format == "csv") {
                    std::ostringstream csv;
                    csv << "r,u\n";
                    char buf[64];
                    for (double r : rs) {
                        std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", r, eval_explicit(sol, r));
                        csv << buf;
                    }
                    emit(out, output, csv.str());
                    return 0;
                }
                json rows = json::array();
                for (double r : rs) rows.push_back({{"r", r}, {"u", eval_explicit(sol, r)}});
                j["table"] = rows;
            } else {
                j["mass"] = explicit_mass(sol);
                j["alpha"] = explicit_initial_values(m, lambda).alpha;
            }
            emit_json(out, output, j);
        } else if (name == "sweep") {
            check_format(format);
            sweep.m_values = parse_ints(m_list);
            sweep.n_values = parse_ints(n_list);
            sweep.config = integ.config;
            const auto recs = run_sweep(sweep, std::max(1u, workers));
            if (format == "csv") {
                std::ostringstream csv;
                csv << "m,n,index,alpha,outcome,terminal_event,r_event,phi,error\n";
                char buf[64];
                for (const auto& r : recs) {
                    csv << r.m << ',' << r.n << ',' << r.index << ',';
                    for (std::size_t i = 0; i < r.alpha.size(); ++i) {
                        std::snprintf(buf, sizeof buf, "%.17g", r.alpha[i]);
                        csv << (i ? ";" : "") << buf;
                    }
                    std::snprintf(buf, sizeof buf, "%.17g", r.r_event);
                    csv << ',' << to_string(r.outcome) << ',' << to_string(r.terminal_event) << ',' << buf << ',';
                    if (r.phi) {
                        std::snprintf(buf, sizeof buf, "%.17g", *r.phi);
                        csv << buf;
                    }
                    csv << ',' << '"' << r.error << '"' << '\n';
                }
                emit(out, output, csv.str());
                return 0;
            }
            json list = json::array();
            for (const auto& r : recs) {
                json e{{"m", r.m},
                       {"n", r.n},
                       {"index", r.index},
                       {"alpha", r.alpha},
                       {"outcome", to_string(r.outcome)},
                       {"terminal_event", to_string(r.terminal_event)},
                       {"r_event", r.r_event}};
                e["phi"] = r.phi ? json(*r.phi) : json(nullptr);
                if (!r.error.empty()) e["error"] = r.error;
                list.push_back(e);
            }
            j["seed"] = sweep.seed;
            j["config"] = to_json(sweep.config);
            j["results"] = list;
            emit_json(out, output, j);
        }
        return 0;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const NumericalError& e) {
        err << "numerical failure: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "numerical failure: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace gelfand
