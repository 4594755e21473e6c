#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include <CLI11.hpp>

#include "cesolve/cesolve.hpp"

namespace cesolve::cli {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

const char* scheme_name(Scheme s) { return s == Scheme::Numerov ? "numerov" : "central3"; }

const char* choice_name(RootChoice c) {
    switch (c) {
    case RootChoice::middle: return "middle";
    case RootChoice::leftmost: return "leftmost";
    case RootChoice::rightmost: return "rightmost";
    }
    return "middle";
}

json grid_json(const GridConfig& g) { return {{"x_min", g.x_min}, {"x_max", g.x_max}, {"h", g.h}}; }

std::string timestamp() {
    const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

json number_or_null(double v) {
    if (std::isfinite(v))
        return v;
    return nullptr;
}

double tol_of(const RunConfig& cfg, double specific) {
    return cfg.tol_override ? *cfg.tol_override : specific;
}

} // namespace

json spectrum_report(const RunConfig& cfg) {
    const DkvParams p(cfg.A, cfg.B);
    const LevelList list = enumerate_levels(p, cfg.n_max);
    json levels = json::array();
    for (const BoundState& s : list.levels) {
        const CubicTriple tr = make_triple(p, s.n);
        json roots = json::array();
        for (const auto& r : tr.roots)
            roots.push_back({{"re", r.real()}, {"im", r.imag()}});
        levels.push_back({{"n", s.n},
                          {"roots", roots},
                          {"selected_root", s.c},
                          {"window", {s.n + 0.5, std::sqrt(p.b())}},
                          {"a", s.a},
                          {"E", s.E},
                          {"alpha", s.alpha},
                          {"beta", s.beta}});
    }
    json scan = json::array();
    for (const LevelScan& sc : list.scan)
        scan.push_back({{"n", sc.n}, {"precondition", sc.precondition}, {"admissible", sc.admissible}});
    json rep = {{"command", "spectrum"},
                {"params", {{"A", p.A()}, {"B", p.B()}, {"b", p.b()}, {"n_max", cfg.n_max}}},
                {"continuum_edge", std::min(0.0, p.A() - p.B() - 0.75)},
                {"levels", levels},
                {"scan", scan}};
    if (cfg.stamp)
        rep["stamp"] = timestamp();
    return rep;
}

namespace {

struct CheckList {
    json items = json::array();
    bool passed = true;

    void add(const std::string& name, double value, double tolerance) {
        const bool ok = value < tolerance;
        items.push_back({{"name", name},
                         {"value", number_or_null(value)},
                         {"tolerance", tolerance},
                         {"passed", ok}});
        passed = passed && ok;
    }
    void add_bool(const std::string& name, bool ok) {
        items.push_back({{"name", name}, {"value", ok ? 0.0 : 1.0}, {"tolerance", 0.5}, {"passed", ok}});
        passed = passed && ok;
    }
    void fail(const std::string& name, double tolerance, const std::string& why) {
        items.push_back({{"name", name},
                         {"value", nullptr},
                         {"tolerance", tolerance},
                         {"passed", false},
                         {"error", why}});
        passed = false;
    }

    template <class F>
    void guarded(const std::string& name, double tolerance, F&& f) {
        try {
            add(name, f(), tolerance);
        } catch (const std::exception& e) {
            fail(name, tolerance, e.what());
        }
    }
};

std::vector<BoundState> chosen_levels(const DkvParams& p, const RunConfig& cfg) {
    const LevelList list = enumerate_levels(p, cfg.n_max);
    if (cfg.select == RootChoice::middle)
        return list.levels;
    std::vector<BoundState> out;
    for (const BoundState& s : list.levels) {
        const CubicTriple tr = make_triple(p, s.n);
        const double t = (cfg.select == RootChoice::leftmost ? tr.roots[0] : tr.roots[2]).real();
        out.push_back(make_state(p, s.n, t));
    }
    return out;
}

} // namespace

json verify_report(const RunConfig& cfg) {
    const DkvParams p(cfg.A, cfg.B);
    const Grid grid(cfg.grid.x_min, cfg.grid.x_max, cfg.grid.h);
    const std::vector<BoundState> levels = chosen_levels(p, cfg);

    OracleTolerances otol{tol_of(cfg, cfg.tol.energy), tol_of(cfg, cfg.tol.overlap)};
    const SpectrumReport rep = verify_spectrum(p, levels, grid, otol, cfg.scheme);

    CheckList checks;
    checks.add("oracle.count", std::abs(static_cast<double>(rep.oracle_count) -
                                        static_cast<double>(rep.analytic_count)),
               cfg.tol_override ? *cfg.tol_override : 0.5);

    json level_json = json::array();
    for (const LevelCheck& lc : rep.levels) {
        const std::string tag = "level[" + std::to_string(lc.n) + "]";
        checks.add_bool(tag + ".normalizable", lc.normalizable);
        checks.add(tag + ".delta_E", lc.delta_E, otol.energy);
        checks.add(tag + ".overlap_defect", 1.0 - lc.overlap, otol.overlap);
        checks.add_bool(tag + ".nodes", lc.nodes_analytic == lc.n);
        level_json.push_back({{"n", lc.n},
                              {"E_analytic", lc.E_analytic},
                              {"E_oracle", number_or_null(lc.E_oracle)},
                              {"delta_E", number_or_null(lc.delta_E)},
                              {"overlap", lc.overlap},
                              {"nodes", lc.nodes_analytic},
                              {"normalizable", lc.normalizable},
                              {"passed", lc.passed}});
    }

    const Grid susy_grid(-15.0, 40.0, 1e-2);
    const Grid r_grid(1e-2, 10.0, 1e-2);
    const Grid master_grid(-10.0, 6.0, 1e-2);
    for (const BoundState& s : levels) {
        const std::string n = std::to_string(s.n);
        if (s.n == 0) {
            checks.guarded("susy.ground", tol_of(cfg, cfg.tol.susy_ground), [&] {
                return susy_residual(ground_superpotential(p, s), p, s.E, susy_grid);
            });
        } else {
            checks.guarded("susy.excited[" + n + "]", tol_of(cfg, cfg.tol.susy_excited), [&] {
                const auto roots = polynomial_roots(jacobi_parameters(s));
                return susy_residual(excited_superpotential(p, s, roots), p, s.E, susy_grid);
            });
        }
        checks.guarded("susy.B1_relation[" + n + "]", tol_of(cfg, cfg.tol.b1_relation), [&] {
            const double B1 = 0.5 * (s.alpha - s.beta);
            const double C0 = s.n - (0.5 * (s.alpha + s.beta + 1.0) + s.n);
            return std::abs(B1 * (1.0 + 2.0 * C0) - p.B()) / std::max(1.0, p.B());
        });
        checks.guarded("liouville[" + n + "]", tol_of(cfg, cfg.tol.liouville),
                       [&] { return liouville_residual(p, s, r_grid); });
        checks.guarded("master[" + n + "]", tol_of(cfg, cfg.tol.master), [&] {
            return master_residual(dkv_map(), jacobi_coeffs(s.alpha, s.beta, s.n), s.E,
                                   [&](double x) { return eval_dkv(p, DkvForm::V1, x); },
                                   master_grid);
        });
    }
    checks.guarded("piv.class_ode", tol_of(cfg, cfg.tol.class_ode), [&] {
        const TransformClass piv{TransformKind::PIV, 1.0, 0.0, -1.0};
        return class_ode_residual(piv, class_map(piv), Grid(-3.0, 3.0, 1e-2));
    });

    json out = {{"command", "verify"},
                {"params",
                 {{"A", p.A()},
                  {"B", p.B()},
                  {"select", choice_name(cfg.select)},
                  {"scheme", scheme_name(cfg.scheme)},
                  {"grid", grid_json(cfg.grid)}}},
                {"passed", checks.passed},
                {"continuum_edge", rep.continuum_edge},
                {"oracle_count", rep.oracle_count},
                {"analytic_count", rep.analytic_count},
                {"levels", level_json},
                {"checks", checks.items}};
    if (cfg.stamp)
        out["stamp"] = timestamp();
    return out;
}

json natanzon_report(const RunConfig& cfg) {
    const NatanzonParams& np = cfg.natanzon;
    check_positive_R(np);
    const Grid grid(cfg.grid.x_min, cfg.grid.x_max, cfg.grid.h);
    const auto levels = natanzon_energies(np, cfg.n_max);
    const SampledZ map = natanzon_z(np, grid);
    const std::vector<double> V = natanzon_potential(np, map);
    const DiscreteHamiltonian H = build_hamiltonian(V, grid, cfg.scheme);
    const double thr = natanzon_threshold(np);
    const std::size_t oracle_count = H.count_below(thr);

    std::vector<double> oracle;
    if (!levels.empty())
        oracle = lowest_eigenvalues(H, std::min(levels.size(), H.dimension()));

    bool passed = oracle_count == levels.size() && map.residual < tol_of(cfg, cfg.tol.z_ode);
    json lv = json::array();
    for (std::size_t i = 0; i < levels.size(); ++i) {
        const auto& l = levels[i];
        const double dE = i < oracle.size() ? std::abs(oracle[i] - l.E)
                                            : std::numeric_limits<double>::infinity();
        passed = passed && dE < tol_of(cfg, cfg.tol.energy) && l.residual < tol_of(cfg, cfg.tol.energy_condition);
        lv.push_back({{"n", l.n},
                      {"E", l.E},
                      {"alpha", l.exps.alpha},
                      {"beta", l.exps.beta},
                      {"delta", l.exps.delta},
                      {"energy_condition_residual", l.residual},
                      {"E_oracle", number_or_null(i < oracle.size() ? oracle[i] : NAN)},
                      {"delta_E", number_or_null(dE)}});
    }

    if (cfg.csv_out) {
        std::ofstream os(*cfg.csv_out, std::ios::binary);
        if (!os)
            throw InvalidParameter("cannot open " + *cfg.csv_out);
        os << "x,z,V";
        for (const auto& l : levels)
            os << ",psi_" << l.n;
        os << '\n';
        for (std::size_t i = 0; i < grid.size(); ++i) {
            os << format_double(map.x[i]) << ',' << format_double(map.z[i]) << ','
               << format_double(V[i]);
            for (const auto& l : levels)
                os << ',' << format_double(natanzon_psi_z(np, l, map.z[i]));
            os << '\n';
        }
    }

    json out = {{"command", "natanzon"},
                {"params",
                 {{"f", np.f},
                  {"h0", np.h0},
                  {"h1", np.h1},
                  {"a", np.a},
                  {"c0", np.c0},
                  {"c1", np.c1},
                  {"n_max", cfg.n_max},
                  {"scheme", scheme_name(cfg.scheme)},
                  {"grid", grid_json(cfg.grid)}}},
                {"passed", passed},
                {"threshold", thr},
                {"z_ode_residual", map.residual},
                {"oracle_count", oracle_count},
                {"levels", lv}};
    if (cfg.stamp)
        out["stamp"] = timestamp();
    return out;
}

void write_wavefunction_csv(const RunConfig& cfg, std::ostream& os) {
    const DkvParams p(cfg.A, cfg.B);
    const LevelList list = enumerate_levels(p, std::max(cfg.level, 0));
    if (cfg.level < 0 || cfg.level >= static_cast<int>(list.levels.size()))
        throw MissingLevel("level " + std::to_string(cfg.level) + " does not exist");
    const Grid grid(cfg.grid.x_min, cfg.grid.x_max, cfg.grid.h);
    const WavefunctionEval psi(list.levels[static_cast<std::size_t>(cfg.level)], grid);
    const std::vector<double> xs = grid.points();
    os << "x,psi_" << cfg.level << '\n';
    for (std::size_t i = 0; i < xs.size(); ++i)
        os << format_double(xs[i]) << ',' << format_double(psi.samples()[i]) << '\n';
}

namespace {

void print_spectrum_table(const json& r, std::ostream& os) {
    char line[512];
    std::snprintf(line, sizeof line, "A = %g  B = %g  b = %g  continuum edge = %.10g\n",
                  r["params"]["A"].get<double>(), r["params"]["B"].get<double>(),
                  r["params"]["b"].get<double>(), r["continuum_edge"].get<double>());
    os << line;
    os << " n          root_1          root_2          root_3        selected          window"
          "                 E_n         alpha_n          beta_n\n";
    for (const auto& l : r["levels"]) {
        const auto& rt = l["roots"];
        std::snprintf(line, sizeof line,
                      "%2d %15.10f %15.10f %15.10f %15.10f  (%6.3f, %8.5f) %15.10f %15.10f %15.10f\n",
                      l["n"].get<int>(), rt[0]["re"].get<double>(), rt[1]["re"].get<double>(),
                      rt[2]["re"].get<double>(), l["selected_root"].get<double>(),
                      l["window"][0].get<double>(), l["window"][1].get<double>(),
                      l["E"].get<double>(), l["alpha"].get<double>(), l["beta"].get<double>());
        os << line;
    }
    if (r["levels"].empty())
        os << "(no bound levels)\n";
}

void print_spectrum_csv(const json& r, std::ostream& os) {
    os << "n,root_1,root_2,root_3,selected_root,window_lo,window_hi,a,E,alpha,beta\n";
    for (const auto& l : r["levels"]) {
        os << l["n"].get<int>();
        for (const auto& rt : l["roots"])
            os << ',' << format_double(rt["re"].get<double>());
        os << ',' << format_double(l["selected_root"].get<double>()) << ','
           << format_double(l["window"][0].get<double>()) << ','
           << format_double(l["window"][1].get<double>()) << ','
           << format_double(l["a"].get<double>()) << ',' << format_double(l["E"].get<double>())
           << ',' << format_double(l["alpha"].get<double>()) << ','
           << format_double(l["beta"].get<double>()) << '\n';
    }
}

std::string value_text(const json& v) {
    if (v.is_null())
        return "n/a";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3e", v.get<double>());
    return buf;
}

void print_checks_table(const json& r, std::ostream& os) {
    char line[256];
    for (const auto& c : r["checks"]) {
        std::snprintf(line, sizeof line, "%-28s %12s  < %-10.3e %s\n",
                      c["name"].get<std::string>().c_str(), value_text(c["value"]).c_str(),
                      c["tolerance"].get<double>(), c["passed"].get<bool>() ? "PASS" : "FAIL");
        os << line;
        if (c.contains("error"))
            os << "    error: " << c["error"].get<std::string>() << '\n';
    }
    os << (r["passed"].get<bool>() ? "verify: PASS\n" : "verify: FAIL\n");
}

void print_natanzon_table(const json& r, std::ostream& os) {
    char line[256];
    std::snprintf(line, sizeof line, "threshold = %.10g  z-ODE residual = %.3e  oracle count = %d\n",
                  r["threshold"].get<double>(), r["z_ode_residual"].get<double>(),
                  r["oracle_count"].get<int>());
    os << line;
    os << " n             E_n      cond_residual       E_oracle        |dE|\n";
    for (const auto& l : r["levels"]) {
        std::snprintf(line, sizeof line, "%2d %15.10f %16.3e %15s %11s\n", l["n"].get<int>(),
                      l["E"].get<double>(), l["energy_condition_residual"].get<double>(),
                      l["E_oracle"].is_null() ? "n/a"
                                              : format_double(l["E_oracle"].get<double>()).substr(0, 15).c_str(),
                      value_text(l["delta_E"]).c_str());
        os << line;
    }
    os << (r["passed"].get<bool>() ? "natanzon: PASS\n" : "natanzon: FAIL\n");
}

std::filesystem::path resolve_output(const std::string& path) {
    std::filesystem::path p(path);
    if (p.is_relative()) {
        if (const char* dir = std::getenv("CESOLVE_OUTPUT_DIR"); dir && *dir)
            return std::filesystem::path(dir) / p;
    }
    return p;
}

void add_grid_options(CLI::App* sub, GridConfig& g) {
    sub->add_option("--x-min", g.x_min, "left end of the grid")->capture_default_str();
    sub->add_option("--x-max", g.x_max, "right end of the grid")->capture_default_str();
    sub->add_option("--step", g.h, "grid step h")->capture_default_str();
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bound-state spectra of the Dutt-Khare-Varshni potential, SUSY and "
                 "Natanzon cross-checks, and a finite-difference oracle"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string output_name = "table", scheme_name_arg = "numerov", select_name = "middle";
    GridConfig dkv_grid, nat_grid{-40.0, 40.0, 1e-2};
    const std::map<std::string, Scheme> schemes{{"numerov", Scheme::Numerov},
                                                {"central3", Scheme::Central3}};
    const std::map<std::string, OutputFormat> formats{
        {"table", OutputFormat::table}, {"csv", OutputFormat::csv}, {"json", OutputFormat::json}};
    const std::map<std::string, RootChoice> choices{{"middle", RootChoice::middle},
                                                    {"leftmost", RootChoice::leftmost},
                                                    {"rightmost", RootChoice::rightmost}};

    auto add_dkv = [&](CLI::App* sub) {
        sub->add_option("--A", cfg.A, "coupling of the z^-2 term")->capture_default_str();
        sub->add_option("--B", cfg.B, "coupling of the -z^-1 term (b = B/2 > 1/4)")->capture_default_str();
        sub->add_option("--n-max", cfg.n_max, "largest level index scanned")->capture_default_str();
    };
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--output", output_name, "table, csv or json")
            ->check(CLI::IsMember(formats))
            ->capture_default_str();
        sub->add_option("--out", cfg.out_path, "write the report to a file (relative paths honour CESOLVE_OUTPUT_DIR)");
        sub->add_flag("--stamp", cfg.stamp, "add a generation timestamp to the report");
    };
    auto add_scheme = [&](CLI::App* sub) {
        sub->add_option("--scheme", scheme_name_arg, "oracle discretization: numerov or central3")
            ->check(CLI::IsMember(schemes))
            ->capture_default_str();
    };

    CLI::App* spectrum = app.add_subcommand("spectrum", "cubic roots, selected root and energies per level");
    add_dkv(spectrum);
    add_common(spectrum);

    CLI::App* wave = app.add_subcommand("wavefunction", "normalized psi_n(x) as CSV");
    add_dkv(wave);
    add_grid_options(wave, dkv_grid);
    wave->add_option("--n", cfg.level, "level index")->capture_default_str();
    wave->add_option("--out", cfg.out_path, "write CSV to a file (relative paths honour CESOLVE_OUTPUT_DIR)");

    CLI::App* verify = app.add_subcommand("verify", "oracle, SUSY, Liouville and transformation checks");
    add_dkv(verify);
    add_common(verify);
    add_grid_options(verify, dkv_grid);
    add_scheme(verify);
    verify->add_option("--select", select_name, "cubic root used per level: middle, leftmost or rightmost")
        ->check(CLI::IsMember(choices))
        ->capture_default_str();
    verify->add_option("--tol", cfg.tol_override, "override every tolerance");
    verify->add_option("--tol-energy", cfg.tol.energy, "oracle energy tolerance")->capture_default_str();
    verify->add_option("--tol-overlap", cfg.tol.overlap, "1 - overlap tolerance")->capture_default_str();

    CLI::App* nat = app.add_subcommand("natanzon", "energies of a six-parameter Natanzon potential");
    nat->add_option("--f", cfg.natanzon.f)->capture_default_str();
    nat->add_option("--h0", cfg.natanzon.h0)->capture_default_str();
    nat->add_option("--h1", cfg.natanzon.h1)->capture_default_str();
    nat->add_option("--a", cfg.natanzon.a)->capture_default_str();
    nat->add_option("--c0", cfg.natanzon.c0)->capture_default_str();
    nat->add_option("--c1", cfg.natanzon.c1)->capture_default_str();
    nat->add_option("--n-max", cfg.n_max, "largest level index scanned")->capture_default_str();
    nat->add_option("--csv-out", cfg.csv_out, "write x, z, V, psi_n samples as CSV");
    add_common(nat);
    add_grid_options(nat, nat_grid);
    add_scheme(nat);
    nat->add_option("--tol", cfg.tol_override, "override every tolerance");
    nat->add_option("--tol-energy", cfg.tol.energy, "oracle energy tolerance")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, er;
        const int code = app.exit(e, o, er);
        out << o.str();
        err << er.str();
        return code == 0 ? ok : invalid_parameters;
    }

    cfg.output = formats.at(output_name);
    cfg.scheme = schemes.at(scheme_name_arg);
    cfg.select = choices.at(select_name);
    cfg.grid = nat->parsed() ? nat_grid : dkv_grid;
    if (cfg.csv_out)
        cfg.csv_out = resolve_output(*cfg.csv_out).string();

    std::ofstream file;
    std::ostream* sink = &out;
    if (cfg.out_path) {
        file.open(resolve_output(*cfg.out_path), std::ios::binary);
        if (!file) {
            err << "cannot open output file " << *cfg.out_path << '\n';
            return invalid_parameters;
        }
        sink = &file;
    }

    try {
        if (wave->parsed()) {
            cfg.command = "wavefunction";
            write_wavefunction_csv(cfg, *sink);
            return ok;
        }
        json rep;
        if (spectrum->parsed())
            rep = spectrum_report(cfg);
        else if (verify->parsed())
            rep = verify_report(cfg);
        else
            rep = natanzon_report(cfg);

        if (cfg.output == OutputFormat::json) {
            *sink << rep.dump(2) << '\n';
        } else if (spectrum->parsed()) {
            if (cfg.output == OutputFormat::csv)
                print_spectrum_csv(rep, *sink);
            else
                print_spectrum_table(rep, *sink);
        } else if (verify->parsed()) {
            print_checks_table(rep, *sink);
        } else {
            print_natanzon_table(rep, *sink);
        }
        if (rep.contains("passed") && !rep["passed"].get<bool>())
            return verification_failed;
        return ok;
    } catch (const MissingLevel& e) {
        err << "error: " << e.what() << '\n';
        return missing_level;
    } catch (const InvalidParameter& e) {
        err << "error: " << e.what() << '\n';
        return invalid_parameters;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return verification_failed;
    }
}

} // namespace cesolve::cli
