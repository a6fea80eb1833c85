// cbih: command-line front end for the c-biharmonic verification toolkit.
//
// Exit codes: 0 pass, 1 check failure, 2 usage error, 3 I/O error. Every
// error path prints one line "error: <code>: <message>" on stderr.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cbih/ctension.hpp"
#include "cbih/errors.hpp"
#include "cbih/poly_roots.hpp"
#include "cbih/rotational_ode.hpp"
#include "cbih/sphere_families.hpp"
#include "cbih/verify.hpp"
#include "cbih/version.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

class IoError : public cbih::Error {
public:
    explicit IoError(const std::string& message) : Error("io", message) {}
};

std::string fmt15(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.15e", v);
    return buf;
}

// Writes to --out PATH, or to stdout when no path was given.
void emit(const std::string& path, const std::string& payload) {
    if (path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << payload;
    if (!out) throw IoError("write to '" + path + "' failed");
}

// Optional key=value configuration file; '#' starts a comment line.
std::map<std::string, std::string> read_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read config file '" + path + "'");
    std::map<std::string, std::string> kv;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw cbih::DomainError("config line is not key=value: '" + line + "'");
        }
        kv[line.substr(0, eq)] = line.substr(eq + 1);
    }
    return kv;
}

struct Settings {
    double tol = 1e-12;
    int samples = 1000;
    int grid = 4096;
};

// Config overrides defaults; explicit command-line flags win over config.
void apply_config(const std::map<std::string, std::string>& kv, Settings& s,
                  bool tol_set, bool samples_set, bool grid_set) {
    const auto get = [&](const char* key) -> std::optional<std::string> {
        const auto it = kv.find(key);
        if (it == kv.end()) return std::nullopt;
        return it->second;
    };
    try {
        if (const auto v = get("tol"); v && !tol_set) s.tol = std::stod(*v);
        if (const auto v = get("samples"); v && !samples_set) s.samples = std::stoi(*v);
        if (const auto v = get("grid"); v && !grid_set) s.grid = std::stoi(*v);
    } catch (const std::exception&) {
        throw cbih::DomainError("config file holds a malformed numeric value");
    }
}

cbih::IsoparametricFamily make_family(int degree, int m1, int m2) {
    if (m2 <= 0) return cbih::IsoparametricFamily(degree, m1);
    return cbih::IsoparametricFamily(degree, m1, m2);
}

int cmd_scan(int degree, int m1, int m2, int samples, const std::string& out_path) {
    const cbih::IsoparametricFamily fam = make_family(degree, m1, m2);
    if (samples < 2) throw cbih::DomainError("scan needs at least 2 samples");
    const double lo = 1e-6;
    const double hi = fam.scan_max() - 1e-6;
    std::string csv = "s,residual\n";
    for (int i = 0; i < samples; ++i) {
        const double s = lo + (hi - lo) * i / (samples - 1);
        csv += fmt15(s);
        csv += ',';
        csv += fmt15(cbih::residual(fam, s));
        csv += '\n';
    }
    emit(out_path, csv);
    return kExitPass;
}

int cmd_solve(int degree, int m1, int m2, double tol, int grid, const std::string& out_path) {
    const cbih::IsoparametricFamily fam = make_family(degree, m1, m2);
    const cbih::SolveReport report = cbih::solve_cbih(fam, tol, grid);

    nlohmann::ordered_json j;
    j["degree"] = fam.degree();
    j["m1"] = fam.m1();
    j["m2"] = fam.m2();
    j["dimension"] = fam.dimension();
    j["residual_tolerance"] = report.residual_tolerance;
    j["roots"] = nlohmann::ordered_json::array();
    for (const auto& r : report.roots) {
        nlohmann::ordered_json jr;
        jr["s"] = r.s;
        jr["mean_curvature"] = r.mean_curvature;
        jr["norm_A_squared"] = r.norm_A_squared;
        jr["trace_A_cubed"] = r.trace_A_cubed;
        jr["scalar_curvature"] = r.scalar_curvature;
        jr["is_minimal"] = r.is_minimal;
        j["roots"].push_back(std::move(jr));
    }
    emit(out_path, j.dump(2) + "\n");
    return kExitPass;
}

int cmd_verify(const std::string& suite, const std::string& out_path, bool stamp,
               bool inject_fault) {
    cbih::verify::Options opts;
    opts.inject_fault = inject_fault;
    const cbih::verify::Report report = cbih::verify::run(suite, opts);
    emit(out_path, cbih::verify::to_json(report, stamp));
    if (!report.overall) {
        for (const auto& c : report.checks) {
            if (!c.pass) std::cerr << "error: check-failed: " << c.id << "\n";
        }
        return kExitCheckFailure;
    }
    return kExitPass;
}

struct TableRow {
    std::string label;
    double solver = 0.0;
    double closed_form = 0.0;
};

int cmd_table(const std::string& theorem, const std::string& out_path) {
    using cbih::IsoparametricFamily;
    using cbih::Rational;

    const auto l1_sin = [](int m) {
        const auto rep = cbih::solve_cbih(IsoparametricFamily(1, m));
        return rep.roots.empty() ? std::nan("") : std::sin(rep.roots[0].s);
    };
    const auto certified_root = [](long long c0, long long c1, long long c2, long long c3) {
        const auto certs = cbih::isolate_and_refine(
            cbih::CubicPoly::from_integers(c0, c1, c2, c3), Rational(0), Rational(10), 1e-12);
        return certs.empty() ? std::nan("") : certs[0].refined_value;
    };

    std::vector<TableRow> rows;
    std::string title;
    if (theorem == "thm2") {
        title = "c-biharmonic surfaces with constant Scal in the 3-sphere";
        rows.push_back({"small hypersphere: sin s*", l1_sin(2), 1.0 / std::sqrt(3.0)});
        const auto rep = cbih::solve_cbih(IsoparametricFamily(2, 1, 1));
        const double r1 = rep.roots.empty() ? std::nan("") : std::sin(rep.roots[0].s);
        rows.push_back({"Clifford torus: r1", r1, 1.0 / std::sqrt(2.0)});
        rows.push_back({"Clifford torus: r2", rep.roots.empty() ? std::nan("") :
                                              std::cos(rep.roots[0].s),
                        1.0 / std::sqrt(2.0)});
    } else if (theorem == "thm3") {
        title = "c-biharmonic hypersurfaces with constant Scal in the 4-sphere";
        rows.push_back({"small hypersphere: sin s*", l1_sin(3), 1.0 / std::sqrt(2.0)});
        const double t_star = certified_root(-3, 11, -32, 8);
        const auto rep = cbih::solve_cbih(IsoparametricFamily(2, 1, 2));
        const auto radii = rep.roots.empty()
                               ? std::pair<double, double>{std::nan(""), std::nan("")}
                               : cbih::torus_radii(IsoparametricFamily(2, 1, 2), rep.roots[0].s);
        rows.push_back({"S1 x S2: r1^2", radii.first, t_star / (1.0 + t_star)});
        rows.push_back({"S1 x S2: r2^2", radii.second, 1.0 / (1.0 + t_star)});
        const auto rep3 = cbih::solve_cbih(IsoparametricFamily(3, 1));
        rows.push_back({"degree-3 minimal: s*",
                        rep3.roots.empty() ? std::nan("") : rep3.roots[0].s,
                        std::numbers::pi / 6.0});
    } else if (theorem == "thm4") {
        title = "c-biharmonic hypersurfaces with constant Scal in the 5-sphere";
        rows.push_back({"small hypersphere: sin s*", l1_sin(4), std::sqrt(3.0) / 2.0});
        rows.push_back({"S2 x S2 minimal: r1^2",
                        cbih::torus_radii(IsoparametricFamily(2, 2, 2),
                                          cbih::minimal_parameter(IsoparametricFamily(2, 2, 2)))
                            .first,
                        0.5});
        const auto rep22 = cbih::solve_cbih(IsoparametricFamily(2, 2, 2));
        const double r1sq = rep22.roots.empty()
                                ? std::nan("")
                                : cbih::torus_radii(IsoparametricFamily(2, 2, 2),
                                                    rep22.roots[0].s).first;
        rows.push_back({"S2 x S2 CMC: r1^2", r1sq, 0.5 * (1.0 - 1.0 / std::sqrt(3.0))});
        const double p3_root = certified_root(-1, 3, -19, 9);
        const auto rep13 = cbih::solve_cbih(IsoparametricFamily(2, 1, 3));
        const auto radii13 = rep13.roots.empty()
                                 ? std::pair<double, double>{std::nan(""), std::nan("")}
                                 : cbih::torus_radii(IsoparametricFamily(2, 1, 3),
                                                     rep13.roots[0].s);
        rows.push_back({"S1 x S3: r1^2", radii13.first, p3_root / (1.0 + p3_root)});
        rows.push_back({"S1 x S3: r2^2", radii13.second, 1.0 / (1.0 + p3_root)});
    } else if (theorem == "thm5-scal") {
        title = "scalar curvature of the compact S^5 classification";
        const auto scal_of = [](const cbih::PrincipalSpectrum& sp) {
            return cbih::scalar_curvature_spaceform(sp, cbih::Epsilon::spherical);
        };
        rows.push_back({"totally geodesic S4",
                        scal_of(cbih::PrincipalSpectrum({{0.0, 4}}, 4)), 12.0});
        rows.push_back({"small hypersphere S4(sqrt3/2)",
                        scal_of(cbih::spectrum_at(IsoparametricFamily(1, 4),
                                                  std::numbers::pi / 3.0)),
                        16.0});
        rows.push_back({"S2 x S2 minimal",
                        scal_of(cbih::spectrum_at(IsoparametricFamily(2, 2, 2),
                                                  std::numbers::pi / 4.0)),
                        8.0});
        const auto rep22 = cbih::solve_cbih(IsoparametricFamily(2, 2, 2));
        rows.push_back({"S2 x S2 CMC",
                        rep22.roots.empty() ? std::nan("") : rep22.roots[0].scalar_curvature,
                        12.0});
        const double p3_root = certified_root(-1, 3, -19, 9);
        const auto rep13 = cbih::solve_cbih(IsoparametricFamily(2, 1, 3));
        rows.push_back({"S1 x S3 (>= 5 + 16 H^2)",
                        rep13.roots.empty() ? std::nan("") : rep13.roots[0].scalar_curvature,
                        6.0 * (1.0 + p3_root)});
        rows.push_back({"degree-4 minimal",
                        scal_of(cbih::spectrum_at(IsoparametricFamily(4, 1),
                                                  std::numbers::pi / 8.0)),
                        0.0});
    } else {
        throw cbih::DomainError("unknown theorem id '" + theorem +
                                "' (expected thm2, thm3, thm4 or thm5-scal)");
    }

    std::string text = title + "\n";
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%-34s %-24s %-24s %s\n", "row", "solver", "closed-form",
                  "|diff|");
    text += buf;
    nlohmann::ordered_json j;
    j["theorem"] = theorem;
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        const double diff = std::abs(r.solver - r.closed_form);
        std::snprintf(buf, sizeof(buf), "%-34s %.15e %.15e %.3e\n", r.label.c_str(), r.solver,
                      r.closed_form, diff);
        text += buf;
        nlohmann::ordered_json jr;
        jr["label"] = r.label;
        jr["solver"] = r.solver;
        jr["closed_form"] = r.closed_form;
        jr["abs_diff"] = diff;
        j["rows"].push_back(std::move(jr));
    }
    std::cout << text;
    if (!out_path.empty()) emit(out_path, j.dump(2) + "\n");
    return kExitPass;
}

int cmd_ode(double C, double s_max, double step, const std::string& out_path) {
    const cbih::Trajectory traj = cbih::integrate(C, s_max, step);
    std::ostringstream csv;
    cbih::write_trajectory_csv(traj, csv);
    emit(out_path, csv.str());
    return kExitPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cbih-lab: numeric and exact verification of c-biharmonic hypersurface computations"};
    app.set_version_flag("--version", cbih::kVersion);
    app.require_subcommand(1);

    std::string config_path;
    app.add_option("--config", config_path, "key=value file overriding default tol/samples/grid");

    Settings settings;
    std::string out_path;

    // scan
    auto* scan = app.add_subcommand("scan", "CSV of (s, residual) over a family's parameter interval");
    int degree = 0, m1 = 1, m2 = 0;
    scan->add_option("--degree", degree, "isoparametric degree (1,2,3,4,6)")->required();
    scan->add_option("--m1", m1, "first multiplicity")->required();
    scan->add_option("--m2", m2, "second multiplicity (defaults to m1)");
    auto* scan_samples = scan->add_option("--samples", settings.samples, "number of grid samples");
    scan->add_option("--out", out_path, "output path (default stdout)");

    // solve
    auto* solve = app.add_subcommand("solve", "solve the c-biharmonicity equation for a family");
    solve->add_option("--degree", degree, "isoparametric degree (1,2,3,4,6)")->required();
    solve->add_option("--m1", m1, "first multiplicity")->required();
    solve->add_option("--m2", m2, "second multiplicity (defaults to m1)");
    auto* solve_tol = solve->add_option("--tol", settings.tol, "bisection tolerance");
    auto* solve_grid = solve->add_option("--grid", settings.grid, "sign-scan grid size");
    solve->add_option("--out", out_path, "output path (default stdout)");

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification suite and emit a JSON report");
    std::string suite = "all";
    verify->add_option("--suite", suite, "spectra|ctension|sphere|poly|ode|umbilical|all");
    bool stamp = false;
    verify->add_flag("--stamp", stamp, "include a UTC timestamp in the report");
    bool inject_fault = false;
    verify->add_flag("--inject-fault", inject_fault)->group(""); // test hook, hidden
    verify->add_option("--out", out_path, "output path (default stdout)");

    // table
    auto* table = app.add_subcommand("table", "reproduce a classification table");
    std::string theorem;
    table->add_option("theorem", theorem, "thm2|thm3|thm4|thm5-scal")->required();
    table->add_option("--out", out_path, "also write the table as JSON to this path");

    // ode
    auto* ode = app.add_subcommand("ode", "integrate the rotational profile ODE to CSV");
    double C = 0.0, s_max = 20.0, step = 1e-3;
    ode->add_option("--C", C, "prime-integral constant in (-1/4, 0)")->required();
    ode->add_option("--s-max", s_max, "integration span");
    ode->add_option("--step", step, "integration step");
    ode->add_option("--out", out_path, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help / --version
        std::cerr << "error: usage: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (!config_path.empty()) {
            apply_config(read_config(config_path), settings, solve_tol->count() > 0,
                         scan_samples->count() > 0, solve_grid->count() > 0);
        }
        if (scan->parsed()) return cmd_scan(degree, m1, m2, settings.samples, out_path);
        if (solve->parsed()) return cmd_solve(degree, m1, m2, settings.tol, settings.grid, out_path);
        if (verify->parsed()) return cmd_verify(suite, out_path, stamp, inject_fault);
        if (table->parsed()) return cmd_table(theorem, out_path);
        if (ode->parsed()) return cmd_ode(C, s_max, step, out_path);
        std::cerr << "error: usage: no subcommand given\n";
        return kExitUsage;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.code() << ": " << e.what() << "\n";
        return kExitIo;
    } catch (const cbih::Error& e) {
        std::cerr << "error: " << e.code() << ": " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: internal: " << e.what() << "\n";
        return kExitUsage;
    }
}
