#include "steklov/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <numbers>
#include <sstream>

#include "steklov/crossing_solver.hpp"
#include "steklov/dtn_oracle.hpp"
#include "steklov/extremal_analysis.hpp"
#include "steklov/mesh_export.hpp"
#include "steklov/spectral_core.hpp"
#include "steklov/surface_factory.hpp"
#include "steklov/verify.hpp"

namespace steklov::cli {

using json = nlohmann::ordered_json;

std::string format_number(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace {

constexpr double kPi = std::numbers::pi;

// Same layout as json::dump(2), but floats are written with 17 significant
// digits instead of the shortest round-trip form.
void write_json(const json& j, std::string& s, int depth) {
    const auto pad = [&](int d) { s.append(static_cast<std::size_t>(2 * d), ' '); };
    if (j.is_object() || j.is_array()) {
        const bool obj = j.is_object();
        if (j.empty()) {
            s += obj ? "{}" : "[]";
            return;
        }
        s += obj ? "{\n" : "[\n";
        bool first = true;
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (!first) s += ",\n";
            first = false;
            pad(depth + 1);
            if (obj) s += json(it.key()).dump() + ": ";
            write_json(*it, s, depth + 1);
        }
        s += '\n';
        pad(depth);
        s += obj ? '}' : ']';
    } else if (j.is_number_float() && std::isfinite(j.get<double>())) {
        std::string x = format_number(j.get<double>());
        if (x.find_first_of(".e") == std::string::npos) x += ".0";
        s += x;
    } else {
        s += j.dump();
    }
}

std::string dump(const json& j) {
    std::string s;
    write_json(j, s, 0);
    return s;
}

enum class Format { human, json, csv };

struct Common {
    std::string kind = "mobius";
    bool json = false;
    bool csv = false;
    std::string out_path;

    Format format() const { return json ? Format::json : csv ? Format::csv : Format::human; }
};

void add_common(CLI::App* sub, Common& c, bool with_kind = true) {
    if (with_kind) sub->add_option("--kind", c.kind, "annulus or mobius")->capture_default_str();
    auto* j = sub->add_flag("--json", c.json, "JSON output");
    auto* v = sub->add_flag("--csv", c.csv, "CSV output");
    j->excludes(v);
    sub->add_option("--out", c.out_path, "write output to PATH instead of stdout");
}

// Writes the rendered text to --out or to `out`.
void emit(const Common& c, std::ostream& out, const std::function<void(std::ostream&)>& body) {
    if (c.out_path.empty()) {
        body(out);
        return;
    }
    std::ofstream f(c.out_path);
    if (!f) throw std::invalid_argument("cannot open '" + c.out_path + "' for writing");
    body(f);
    if (!f) throw std::runtime_error("failed writing '" + c.out_path + "'");
}

json number_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

std::string branch_list(const std::vector<Branch>& bs) {
    std::string s;
    for (const auto& b : bs) s += (s.empty() ? "" : "+") + to_string(b);
    return s;
}

std::string human(double x, int digits = 12) {
    std::ostringstream os;
    os << std::setprecision(digits) << x;
    return os.str();
}

// ---------------------------------------------------------------- spectrum

struct SpectrumArgs {
    Common c;
    double T = 1.0;
    int count = 10;
};

void cmd_spectrum(const SpectrumArgs& a, std::ostream& out) {
    const SurfaceKind kind = surface_kind_from_string(a.c.kind);
    const auto entries = spectrum(kind, Modulus(a.T), a.count);
    emit(a.c, out, [&](std::ostream& o) {
        switch (a.c.format()) {
            case Format::json: {
                json arr = json::array();
                for (const auto& e : entries) {
                    json bs = json::array();
                    for (const auto& b : e.branches) bs.push_back({{"kind", to_string(b.kind)}, {"mode", b.mode}});
                    arr.push_back({{"value", e.value},
                                   {"first_index", e.first_index},
                                   {"last_index", e.last_index},
                                   {"multiplicity", e.multiplicity()},
                                   {"branches", bs}});
                }
                o << dump(json{{"kind", to_string(kind)}, {"T", a.T}, {"eigenvalues", arr}}) << '\n';
                break;
            }
            case Format::csv:
                o << "index,value,branch,mode,multiplicity\n";
                for (const auto& e : entries) {
                    int index = e.first_index;
                    for (const auto& b : e.branches) {
                        o << index << ',' << format_number(e.value) << ',' << to_string(b.kind) << ',' << b.mode << ','
                          << e.multiplicity() << '\n';
                        index += b.multiplicity();
                    }
                }
                break;
            case Format::human:
                o << to_string(kind) << ", T = " << human(a.T) << '\n';
                for (const auto& e : entries) {
                    o << "  sigma_" << e.first_index;
                    if (e.last_index != e.first_index) o << ".." << e.last_index;
                    o << " = " << human(e.value) << "  [" << branch_list(e.branches) << "]\n";
                }
                break;
        }
    });
}

// ---------------------------------------------------------------- sweep

struct SweepArgs {
    Common c;
    std::vector<int> j{1};
    double t_min = 0.05;
    double t_max = 5.0;
    int steps = 400;
    bool linear = false;
};

void cmd_sweep(const SweepArgs& a, std::ostream& out) {
    const SurfaceKind kind = surface_kind_from_string(a.c.kind);
    if (!(a.t_min > 0.0) || !(a.t_max > a.t_min) || !std::isfinite(a.t_max))
        throw std::invalid_argument("sweep needs 0 < T-min < T-max < inf");
    if (a.steps < 2) throw std::invalid_argument("sweep needs at least 2 steps");
    for (int j : a.j)
        if (j < 1) throw std::invalid_argument("eigenvalue indices start at 1");

    struct Row {
        double T;
        std::vector<double> value;
        std::vector<std::string> branch;
    };
    std::vector<Row> rows;
    for (int i = 0; i < a.steps; ++i) {
        const double s = static_cast<double>(i) / (a.steps - 1);
        const double T = a.linear ? a.t_min + s * (a.t_max - a.t_min) : a.t_min * std::pow(a.t_max / a.t_min, s);
        Row r{T, {}, {}};
        for (int j : a.j) {
            const auto e = sigma_entry(kind, j, Modulus(T));
            r.value.push_back(e.value);
            r.branch.push_back(branch_list(e.branches));
        }
        rows.push_back(std::move(r));
    }

    emit(a.c, out, [&](std::ostream& o) {
        if (a.c.format() == Format::json) {
            json arr = json::array();
            for (const auto& r : rows) {
                json row{{"T", r.T}};
                for (std::size_t k = 0; k < a.j.size(); ++k) {
                    row["sigma_bar_" + std::to_string(a.j[k])] = r.value[k];
                    row["branch_" + std::to_string(a.j[k])] = r.branch[k];
                }
                arr.push_back(row);
            }
            o << dump(json{{"kind", to_string(kind)}, {"rows", arr}}) << '\n';
            return;
        }
        o << 'T';
        for (int j : a.j) o << ",sigma_bar_" << j;
        for (int j : a.j) o << ",branch_" << j;
        o << '\n';
        for (const auto& r : rows) {
            o << format_number(r.T);
            for (double v : r.value) o << ',' << format_number(v);
            for (const auto& b : r.branch) o << ',' << b;
            o << '\n';
        }
    });
}

// ---------------------------------------------------------------- crossings

struct CrossingsArgs {
    Common c;
    int max_mode = 5;
};

void cmd_crossings(const CrossingsArgs& a, std::ostream& out) {
    const SurfaceKind kind = surface_kind_from_string(a.c.kind);
    if (a.max_mode < 1) throw std::invalid_argument("max-mode must be positive");

    struct Row {
        std::string label;
        int i, j;
        CrossingPoint p;
    };
    std::vector<Row> rows;
    if (kind == SurfaceKind::mobius_band) {
        for (int k = 1; k <= a.max_mode; ++k)
            for (int l = 1; l <= k; ++l) rows.push_back({"T", k, l, solve_crossing(2 * k, 2 * l - 1)});
    } else {
        const double t10 = solve_t10();
        rows.push_back({"t", 1, 0, CrossingPoint{1, 0, t10, std::tanh(t10), std::abs(std::tanh(t10) - 1.0 / t10)}});
        for (int m = 2; m <= a.max_mode; ++m)
            for (int n = 1; n < m; ++n) rows.push_back({"t", m, n, solve_crossing(m, n)});
    }

    emit(a.c, out, [&](std::ostream& o) {
        switch (a.c.format()) {
            case Format::json: {
                json arr = json::array();
                for (const auto& r : rows)
                    arr.push_back({{"name", r.label + "_{" + std::to_string(r.i) + "," + std::to_string(r.j) + "}"},
                                   {"a", r.p.a},
                                   {"b", r.p.b},
                                   {"x", r.p.x},
                                   {"height", r.p.height},
                                   {"residual", r.p.residual}});
                o << dump(json{{"kind", to_string(kind)}, {"crossings", arr}}) << '\n';
                break;
            }
            case Format::csv:
                o << "i,j,a,b,x,height,residual\n";
                for (const auto& r : rows)
                    o << r.i << ',' << r.j << ',' << format_number(r.p.a) << ',' << format_number(r.p.b) << ','
                      << format_number(r.p.x) << ',' << format_number(r.p.height) << ',' << format_number(r.p.residual) << '\n';
                break;
            case Format::human:
                for (const auto& r : rows)
                    o << r.label << "_{" << r.i << ',' << r.j << "} = " << human(r.p.x, 17) << "  height "
                      << human(r.p.height, 17) << "  residual " << human(r.p.residual, 3) << '\n';
                break;
        }
    });
}

// ---------------------------------------------------------------- suprema

struct SupremaArgs {
    Common c;
    int j = 0;
    int max_j = 10;
};

json supremum_json(const SupremumResult& s) {
    json r{{"kind", to_string(s.kind)}, {"j", s.j}, {"value", s.value}, {"attained", s.attained}};
    r["modulus"] = s.modulus ? json(*s.modulus) : json(nullptr);
    if (s.half_cylinder_value) r["half_cylinder_value"] = *s.half_cylinder_value;
    return r;
}

void cmd_suprema(const SupremaArgs& a, std::ostream& out) {
    const SurfaceKind kind = surface_kind_from_string(a.c.kind);
    std::vector<SupremumResult> rs;
    if (a.j != 0) {
        rs.push_back(sup_sigma(kind, a.j));
    } else {
        if (a.max_j < 1) throw std::invalid_argument("max-j must be positive");
        for (int j = 1; j <= a.max_j; ++j) rs.push_back(sup_sigma(kind, j));
    }
    emit(a.c, out, [&](std::ostream& o) {
        switch (a.c.format()) {
            case Format::json:
                if (rs.size() == 1) {
                    o << dump(supremum_json(rs.front())) << '\n';
                } else {
                    json arr = json::array();
                    for (const auto& s : rs) arr.push_back(supremum_json(s));
                    o << dump(arr) << '\n';
                }
                break;
            case Format::csv:
                o << "j,value,attained,modulus\n";
                for (const auto& s : rs)
                    o << s.j << ',' << format_number(s.value) << ',' << (s.attained ? "true" : "false") << ','
                      << (s.modulus ? format_number(*s.modulus) : "inf") << '\n';
                break;
            case Format::human:
                for (const auto& s : rs) {
                    o << "sup sigma_" << s.j << " = " << human(s.value, 17);
                    if (s.attained) o << "  attained at T = " << human(*s.modulus, 17) << '\n';
                    else o << "  not attained (T -> inf)\n";
                }
                break;
        }
    });
}

// ---------------------------------------------------------------- critical-set

struct CriticalArgs {
    Common c;
    int max_mode = 4;
};

void cmd_critical(const CriticalArgs& a, std::ostream& out) {
    const SurfaceKind kind = surface_kind_from_string(a.c.kind);
    if (a.max_mode < 1) throw std::invalid_argument("max-mode must be positive");
    const auto set = critical_set(kind, a.max_mode);
    const auto roles_text = [](const CriticalMetric& m) {
        std::string s;
        for (const auto& r : m.roles)
            s += (s.empty() ? "" : " ") + std::to_string(r.j) + (r.character == Character::local_max ? ":max" : ":min");
        return s;
    };
    emit(a.c, out, [&](std::ostream& o) {
        switch (a.c.format()) {
            case Format::json: {
                json arr = json::array();
                for (const auto& m : set) {
                    json roles = json::array();
                    for (const auto& r : m.roles) roles.push_back({{"j", r.j}, {"character", to_string(r.character)}});
                    arr.push_back({{"modulus", m.modulus},
                                   {"increasing", to_string(m.increasing)},
                                   {"decreasing", to_string(m.decreasing)},
                                   {"value", m.value},
                                   {"multiplicity", m.eigen_multiplicity},
                                   {"roles", roles},
                                   {"table_agrees", m.table_agrees},
                                   {"eigenspace", m.eigenspace}});
                }
                o << dump(json{{"kind", to_string(kind)}, {"critical", arr}}) << '\n';
                break;
            }
            case Format::csv:
                o << "modulus,value,increasing,decreasing,multiplicity,roles,table_agrees\n";
                for (const auto& m : set)
                    o << format_number(m.modulus) << ',' << format_number(m.value) << ',' << to_string(m.increasing) << ','
                      << to_string(m.decreasing) << ',' << m.eigen_multiplicity << ',' << roles_text(m) << ','
                      << (m.table_agrees ? "true" : "false") << '\n';
                break;
            case Format::human:
                for (const auto& m : set)
                    o << "T = " << human(m.modulus) << "  value " << human(m.value) << "  " << to_string(m.increasing)
                      << " x " << to_string(m.decreasing) << "  mult " << m.eigen_multiplicity << "  " << roles_text(m)
                      << (m.table_agrees ? "" : "  (table mismatch)") << '\n';
                break;
        }
    });
}

// ---------------------------------------------------------------- surface

struct SurfaceArgs {
    Common c;
    std::string family = "mobius";
    int m = 2;
    int n = 1;
    std::string grid = "64x128";
    std::string mesh_path;
    std::string mesh_format = "obj";
    std::vector<int> projection{0, 1, 2};
};

void cmd_surface(const SurfaceArgs& a, std::ostream& out) {
    FamilySpec spec{family_kind_from_string(a.family), a.m, a.n};
    const auto fam = make_family(spec);
    const Grid grid = parse_grid(a.grid);
    const auto id = verify_identities(fam, grid);
    const auto inj = injectivity_scan(fam, Grid{std::min(grid.n_t, 32), std::min(grid.n_theta, 64)});

    if (!a.mesh_path.empty()) {
        if (a.projection.size() != 3) throw std::invalid_argument("projection needs three coordinate indices");
        Projection proj{a.projection[0], a.projection[1], a.projection[2]};
        for (int p : proj)
            if (p < 0 || p >= fam.ambient_dim) throw std::invalid_argument("projection index out of range");
        export_mesh(fam, grid, mesh_format_from_string(a.mesh_format), a.mesh_path, proj);
    }

    const json report{{"family", fam.label()},
                      {"topology", to_string(fam.topology())},
                      {"t_star", fam.t_star},
                      {"radius", fam.radius},
                      {"conformal_residual", id.conformal_residual},
                      {"stress_energy_residual", id.stress_energy_residual},
                      {"boundary_norm_residual", id.boundary_norm_residual},
                      {"free_boundary_angle", id.free_boundary_angle},
                      {"harmonic_residual", id.harmonic_residual},
                      {"harmonic_order", id.harmonic_order},
                      {"steklov_ratio", id.steklov_ratio},
                      {"normalized_eigenvalue", id.normalized_eigenvalue},
                      {"injective", inj.injective},
                      {"covering_degree", inj.covering_degree},
                      {"core_multiplicity", inj.core_multiplicity},
                      {"min_separation", inj.min_separation}};
    emit(a.c, out, [&](std::ostream& o) {
        switch (a.c.format()) {
            case Format::json: o << dump(report) << '\n'; break;
            case Format::csv:
                o << "key,value\n";
                for (const auto& [k, v] : report.items()) {
                    o << k << ',';
                    if (v.is_number_float()) o << format_number(v.get<double>());
                    else if (v.is_string()) o << v.get<std::string>();
                    else o << v.dump();
                    o << '\n';
                }
                break;
            case Format::human:
                for (const auto& [k, v] : report.items()) {
                    o << std::left << std::setw(24) << k << ' ';
                    if (v.is_number_float()) o << human(v.get<double>());
                    else if (v.is_string()) o << v.get<std::string>();
                    else o << v.dump();
                    o << '\n';
                }
                break;
        }
    });
}

// ---------------------------------------------------------------- oracle

struct OracleArgs {
    Common c;
    double T = 1.0;
    double weight = 1.0;
    std::string grid = "40x40";
    int count = 6;
    std::vector<std::string> levels;
};

void cmd_oracle(const OracleArgs& a, std::ostream& out) {
    OracleProblem p{surface_kind_from_string(a.c.kind), a.T, a.weight, parse_grid(a.grid)};
    if (a.count < 1) throw std::invalid_argument("count must be positive");
    const double length = (p.kind == SurfaceKind::annulus ? 4.0 : 2.0) * kPi * p.boundary_weight;

    if (!a.levels.empty()) {
        std::vector<Grid> grids;
        for (const auto& g : a.levels) grids.push_back(parse_grid(g));
        const auto rep = convergence_study(p, grids, a.count);
        emit(a.c, out, [&](std::ostream& o) {
            if (a.c.format() == Format::json) {
                json lv = json::array();
                for (const auto& l : rep.levels)
                    lv.push_back({{"grid", std::to_string(l.grid.n_t) + "x" + std::to_string(l.grid.n_theta)},
                                  {"h", l.h},
                                  {"normalized", l.normalized},
                                  {"max_error", l.max_error}});
                json eo = json::array();
                for (const auto& v : rep.eigen_orders) {
                    json row = json::array();
                    for (double x : v) row.push_back(number_or_null(x));
                    eo.push_back(row);
                }
                o << dump(json{{"kind", to_string(p.kind)}, {"T", p.T}, {"exact", rep.exact}, {"levels", lv},
                          {"pair_orders", rep.pair_orders}, {"observed_order", rep.observed_order},
                          {"self_order", rep.self_order}, {"eigen_orders", eo}})
                  << '\n';
                return;
            }
            o << "level,h,max_error\n";
            for (const auto& l : rep.levels)
                o << l.grid.n_t << 'x' << l.grid.n_theta << ',' << format_number(l.h) << ',' << format_number(l.max_error) << '\n';
            if (a.c.format() == Format::human)
                o << "observed order " << human(rep.observed_order, 6) << ", self-convergence order "
                  << human(rep.self_order, 6) << '\n';
        });
        return;
    }

    const auto d = assemble_dtn(p);
    const auto ev = oracle_spectrum(d, a.count);
    const auto exact = closed_form_normalized(p.kind, p.T, a.count - 1);
    std::vector<double> normalized;
    for (double v : ev) normalized.push_back(v * length);
    emit(a.c, out, [&](std::ostream& o) {
        switch (a.c.format()) {
            case Format::json:
                o << dump(json{{"kind", to_string(p.kind)},
                          {"T", p.T},
                          {"boundary_weight", p.boundary_weight},
                          {"grid", a.grid},
                          {"size", d.size},
                          {"weighted_asymmetry", weighted_asymmetry(d)},
                          {"max_row_sum", max_row_sum(d)},
                          {"solve_residual", d.solve_residual},
                          {"eigenvalues", ev},
                          {"normalized", normalized},
                          {"closed_form", exact}})
                  << '\n';
                break;
            case Format::csv:
                o << "index,sigma,normalized,closed_form\n";
                for (std::size_t i = 0; i < ev.size(); ++i)
                    o << i << ',' << format_number(ev[i]) << ',' << format_number(normalized[i]) << ','
                      << (i < exact.size() ? format_number(exact[i]) : "") << '\n';
                break;
            case Format::human:
                o << to_string(p.kind) << ", T = " << human(p.T) << ", grid " << a.grid << ", " << d.size
                  << " boundary nodes\n";
                for (std::size_t i = 0; i < ev.size(); ++i)
                    o << "  " << i << "  sigma " << human(ev[i]) << "  normalized " << human(normalized[i])
                      << "  closed form " << (i < exact.size() ? human(exact[i]) : "-") << '\n';
                break;
        }
    });
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
    Common c;
    std::string suite = "all";
    int max_mode = 8;
    int oracle_base = 40;
    bool verbose = false;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
    const auto reports = run_suites(a.suite, VerifyOptions{a.max_mode, a.oracle_base});
    bool all = true;
    for (const auto& r : reports) all = all && r.passed();
    emit(a.c, out, [&](std::ostream& o) {
        switch (a.c.format()) {
            case Format::json: {
                json arr = json::array();
                for (const auto& r : reports) {
                    json checks = json::array();
                    for (const auto& c : r.checks)
                        checks.push_back({{"name", c.name},
                                          {"passed", c.passed},
                                          {"measured", number_or_null(c.measured)},
                                          {"tolerance", number_or_null(c.tolerance)},
                                          {"detail", c.detail}});
                    arr.push_back({{"suite", r.name}, {"passed", r.passed()}, {"seconds", r.seconds}, {"checks", checks}});
                }
                o << dump(json{{"passed", all}, {"suites", arr}}) << '\n';
                break;
            }
            case Format::csv:
                o << "suite,check,passed,measured,tolerance\n";
                for (const auto& r : reports)
                    for (const auto& c : r.checks)
                        o << r.name << ",\"" << c.name << "\"," << (c.passed ? "true" : "false") << ','
                          << format_number(c.measured) << ',' << format_number(c.tolerance) << '\n';
                break;
            case Format::human:
                o << std::left << std::setw(12) << "suite" << std::right << std::setw(8) << "checks" << std::setw(8)
                  << "failed" << std::setw(10) << "seconds" << '\n';
                for (const auto& r : reports) {
                    int failed = 0;
                    for (const auto& c : r.checks) failed += c.passed ? 0 : 1;
                    o << std::left << std::setw(12) << r.name << std::right << std::setw(8) << r.checks.size()
                      << std::setw(8) << failed << std::setw(10) << std::fixed << std::setprecision(2) << r.seconds
                      << std::defaultfloat << '\n';
                }
                for (const auto& r : reports)
                    for (const auto& c : r.checks)
                        if (a.verbose || !c.passed)
                            o << (c.passed ? "  ok    " : "  FAIL  ") << r.name << ": " << c.name << "  measured "
                              << human(c.measured, 4) << "  bound " << human(c.tolerance, 4)
                              << (c.detail.empty() ? "" : "  (" + c.detail + ")") << '\n';
                o << (all ? "all checks passed" : "verification FAILED") << '\n';
                break;
        }
    });
    return all ? ok : verification_failed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Steklov spectra of S^1-invariant metrics on the annulus and Möbius band"};
    app.name("steklov");
    app.require_subcommand(1);
    app.fallthrough(false);

    SpectrumArgs spec_a;
    auto* s_spec = app.add_subcommand("spectrum", "normalized Steklov eigenvalues at one modulus");
    add_common(s_spec, spec_a.c);
    s_spec->add_option("--T", spec_a.T, "half-length T of the cylinder")->required();
    s_spec->add_option("--count", spec_a.count, "number of nonzero eigenvalues")->capture_default_str();

    SweepArgs sweep_a;
    auto* s_sweep = app.add_subcommand("sweep", "sigma_bar_j over a range of moduli (CSV)");
    add_common(s_sweep, sweep_a.c);
    s_sweep->add_option("--j", sweep_a.j, "eigenvalue indices, comma separated")->delimiter(',');
    s_sweep->add_option("--T-min", sweep_a.t_min)->capture_default_str();
    s_sweep->add_option("--T-max", sweep_a.t_max)->capture_default_str();
    s_sweep->add_option("--steps", sweep_a.steps)->capture_default_str();
    s_sweep->add_flag("--linear", sweep_a.linear, "uniform instead of log-spaced grid");

    CrossingsArgs cross_a;
    auto* s_cross = app.add_subcommand("crossings", "crossing moduli T_{k,l} (mobius) or t_{m,n} (annulus)");
    add_common(s_cross, cross_a.c);
    s_cross->add_option("--max-mode", cross_a.max_mode)->capture_default_str();

    SupremaArgs sup_a;
    auto* s_sup = app.add_subcommand("suprema", "sup over T of sigma_bar_j");
    add_common(s_sup, sup_a.c);
    auto* j_opt = s_sup->add_option("--j", sup_a.j, "single index");
    s_sup->add_option("--max-j", sup_a.max_j, "all indices up to this one")->excludes(j_opt);

    CriticalArgs crit_a;
    auto* s_crit = app.add_subcommand("critical-set", "critical moduli with local max/min roles");
    add_common(s_crit, crit_a.c);
    s_crit->add_option("--max-mode", crit_a.max_mode)->capture_default_str();

    SurfaceArgs surf_a;
    auto* s_surf = app.add_subcommand("surface", "explicit free boundary minimal surfaces");
    add_common(s_surf, surf_a.c, false);
    s_surf->add_option("--family", surf_a.family, "catenoid, annulus or mobius")->capture_default_str();
    s_surf->add_option("--m", surf_a.m)->capture_default_str();
    s_surf->add_option("--n", surf_a.n)->capture_default_str();
    s_surf->add_option("--grid", surf_a.grid, "NtxNtheta")->capture_default_str();
    s_surf->add_option("--mesh", surf_a.mesh_path, "write a triangulation to PATH");
    s_surf->add_option("--mesh-format", surf_a.mesh_format, "obj, ply or csv")->capture_default_str();
    s_surf->add_option("--projection", surf_a.projection, "three ambient coordinates for obj/ply")->delimiter(',');

    OracleArgs orc_a;
    auto* s_orc = app.add_subcommand("oracle", "finite-difference Dirichlet-to-Neumann spectrum");
    add_common(s_orc, orc_a.c);
    s_orc->add_option("--T", orc_a.T)->required();
    s_orc->add_option("--weight", orc_a.weight, "boundary conformal factor f(T)")->capture_default_str();
    s_orc->add_option("--grid", orc_a.grid, "NtxNtheta, Ntheta even")->capture_default_str();
    s_orc->add_option("--count", orc_a.count, "eigenvalues including the zero one")->capture_default_str();
    s_orc->add_option("--levels", orc_a.levels, "grids for a convergence study, e.g. 40x40,80x80,160x160")
        ->delimiter(',');

    VerifyArgs ver_a;
    auto* s_ver = app.add_subcommand("verify", "run invariant suites");
    add_common(s_ver, ver_a.c, false);
    s_ver->add_option("--suite", ver_a.suite, "all, spectral, crossings, extremal, surfaces or oracle")
        ->capture_default_str();
    s_ver->add_option("--max-mode", ver_a.max_mode)->capture_default_str();
    s_ver->add_option("--oracle-base", ver_a.oracle_base, "coarsest oracle grid")->capture_default_str();
    s_ver->add_flag("--verbose", ver_a.verbose, "list every check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage_error;
    }

    try {
        if (*s_spec) cmd_spectrum(spec_a, out);
        else if (*s_sweep) cmd_sweep(sweep_a, out);
        else if (*s_cross) cmd_crossings(cross_a, out);
        else if (*s_sup) cmd_suprema(sup_a, out);
        else if (*s_crit) cmd_critical(crit_a, out);
        else if (*s_surf) cmd_surface(surf_a, out);
        else if (*s_orc) cmd_oracle(orc_a, out);
        else if (*s_ver) return cmd_verify(ver_a, out);
    } catch (const NumericalError& e) {
        err << "numerical error: " << e.what() << " (residual " << e.residual() << ")\n";
        return usage_error;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    }
    return ok;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"steklov"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace steklov::cli
