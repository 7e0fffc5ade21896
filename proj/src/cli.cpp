#include "qes/cli.hpp"

#include "qes/atom.hpp"
#include "qes/groundstate.hpp"
#include "qes/limits.hpp"
#include "qes/oracle.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fmt/format.h>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <variant>

namespace qes::cli {

namespace {

using Cell = std::variant<double, long long, std::string>;
using Json = nlohmann::ordered_json;

const CLI::Range kPositiveInt(1, std::numeric_limits<int>::max());
const CLI::Range kNonNegativeInt(0, std::numeric_limits<int>::max());

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Table {
    std::vector<std::pair<std::string, Cell>> params;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    std::vector<std::pair<std::string, Cell>> checks;
    std::vector<std::string> notes;  ///< extra comment lines (CSV) / "notes" array (JSON)
};

std::string csv_cell(const Cell& c) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>)
                return std::isnan(v) ? std::string("nan") : fmt::format("{:.12g}", v);
            else if constexpr (std::is_same_v<T, long long>)
                return std::to_string(v);
            else
                return v;
        },
        c);
}

Json json_cell(const Cell& c) {
    return std::visit([](const auto& v) { return Json(v); }, c);
}

std::string render_csv(const Table& t) {
    std::ostringstream os;
    for (const auto& [key, value] : t.params) os << "# " << key << '=' << csv_cell(value) << '\n';
    for (const auto& [key, value] : t.checks) os << "# check " << key << '=' << csv_cell(value) << '\n';
    for (const auto& note : t.notes) os << "# " << note << '\n';
    for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
    os << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_cell(row[i]);
        os << '\n';
    }
    return os.str();
}

std::string render_json(const Table& t) {
    Json doc;
    doc["params"] = Json::object();
    for (const auto& [key, value] : t.params) doc["params"][key] = json_cell(value);
    doc["results"] = Json::array();
    for (const auto& row : t.rows) {
        Json obj = Json::object();
        for (std::size_t i = 0; i < row.size(); ++i) obj[t.columns[i]] = json_cell(row[i]);
        doc["results"].push_back(std::move(obj));
    }
    doc["checks"] = Json::object();
    for (const auto& [key, value] : t.checks) doc["checks"][key] = json_cell(value);
    if (!t.notes.empty()) doc["notes"] = t.notes;
    return doc.dump(2) + "\n";
}

struct CommonOptions {
    double b = 1.0;
    double d_over_b = 1.0;
    std::string mass = "inf";
    std::string format = "csv";
    std::string out_path;
};

void add_common(CLI::App* cmd, CommonOptions& opt) {
    cmd->add_option("--b", opt.b, "confinement length b (outputs scale with it)")->capture_default_str();
    cmd->add_option("--d-over-b", opt.d_over_b, "screening length in units of b")->capture_default_str();
    cmd->add_option("--M", opt.mass, "nucleus mass, a number or \"inf\"")->capture_default_str();
    cmd->add_option("--format", opt.format, "output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    cmd->add_option("--out", opt.out_path, "output file (default: standard output)");
}

NucleusMass parse_mass(const std::string& text) {
    if (text == "inf" || text == "infinity") return NucleusMass::infinite();
    double value = 0.0;
    try {
        std::size_t used = 0;
        value = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
    } catch (const std::exception&) {
        throw CLI::ValidationError("--M", "expected a positive number or \"inf\", got \"" + text + "\"");
    }
    return NucleusMass::finite(value);
}

void base_params(Table& t, const std::string& command, const CommonOptions& opt) {
    t.params.emplace_back("command", command);
    t.params.emplace_back("b", opt.b);
    t.params.emplace_back("d_over_b", opt.d_over_b);
    t.params.emplace_back("M", parse_mass(opt.mass).to_string());
}

void require_positive(double value, const char* name) {
    if (!(value > 0.0)) throw DomainError(fmt::format("{} must be positive, got {}", name, value));
}

// ---------------------------------------------------------------- solve

struct SolveOptions {
    int N = 1;
    int l_r = 0;
};

Table cmd_solve(const SolveOptions& so, const CommonOptions& opt) {
    require_positive(opt.b, "b");
    require_positive(opt.d_over_b, "d/b");
    const double d = opt.d_over_b * opt.b;
    const NucleusMass M = parse_mass(opt.mass);
    Table t;
    base_params(t, "solve", opt);
    t.params.emplace_back("N", static_cast<long long>(so.N));
    t.params.emplace_back("lr", static_cast<long long>(so.l_r));

    t.columns = {"g", "E_r", "n_r"};
    for (int k = 1; k <= so.N; ++k) t.columns.push_back(fmt::format("v_{}", k));
    t.columns.push_back("symmetry");
    t.columns.push_back("E_total");

    const auto roots = atom::solve_g(so.N, so.l_r, opt.b, d);
    for (double g : roots) {
        const auto sol = atom::radial_solution(so.N, so.l_r, opt.b, d, g);
        std::vector<Cell> row{g, sol.energy_r, static_cast<long long>(sol.n_r)};
        for (int k = 1; k <= so.N; ++k) row.emplace_back(sol.coefficients[static_cast<std::size_t>(k)]);
        row.emplace_back(std::string(atom::to_string(atom::classify_symmetry(so.l_r))));
        row.emplace_back(atom::assemble_total_energy(Vec3::Zero(), M, opt.b, 0, 0, sol.energy_r));
        t.rows.push_back(std::move(row));
    }
    t.checks.emplace_back("root_count", static_cast<long long>(roots.size()));
    return t;
}

// ---------------------------------------------------------------- verify

struct VerifyOptions {
    int N = 1;
    int l_r = 0;
    std::size_t grid_points = 4000;
    double r_max = 10.0;
    double tol = 1e-4;
    double perturb_g = 0.0;
};

constexpr double kL2Tolerance = 1e-3;
constexpr double kOdeTolerance = 1e-9;
constexpr double kTerminationTolerance = 1e-10;

Table cmd_verify(const VerifyOptions& vo, const CommonOptions& opt, bool& all_passed) {
    require_positive(opt.b, "b");
    require_positive(opt.d_over_b, "d/b");
    require_positive(vo.r_max, "rmax");
    require_positive(vo.tol, "tol");
    const double b = opt.b;
    const double d = opt.d_over_b * b;
    const oracle::RadialGrid grid{1e-6 * b, vo.r_max * b, vo.grid_points};
    grid.validate();

    Table t;
    base_params(t, "verify", opt);
    t.params.emplace_back("N", static_cast<long long>(vo.N));
    t.params.emplace_back("lr", static_cast<long long>(vo.l_r));
    t.params.emplace_back("grid_points", static_cast<long long>(vo.grid_points));
    t.params.emplace_back("rmax", vo.r_max);
    t.params.emplace_back("tol", vo.tol);
    t.params.emplace_back("perturb_g", vo.perturb_g);
    t.columns = {"g",           "n_r",       "E_exact",      "E_oracle",     "eig_rel_err", "l2_error",
                 "ode_residual", "v_next_rel", "oracle_nodes", "grid_warning", "status"};

    const double energy = atom::quantized_energy(vo.N, vo.l_r, b);
    const double nan = std::nan("");
    all_passed = true;
    long long failures = 0;
    for (double root : atom::solve_g(vo.N, vo.l_r, b, d)) {
        const double g = root + vo.perturb_g;
        const AtomParameters atom{b, d, g, NucleusMass::infinite()};

        const auto coeffs = heun::series_coefficients(atom::heun_parameters(atom, vo.l_r, energy),
                                                      static_cast<std::size_t>(vo.N) + 1);
        double scale = 0.0;
        for (std::size_t k = 0; k + 1 < coeffs.size(); ++k) scale = std::max(scale, std::abs(coeffs[k]));
        const double v_next = std::abs(coeffs[coeffs.size() - 1]) / scale;
        const bool terminated = v_next < kTerminationTolerance;

        double l2 = nan, ode = nan, e_oracle = nan;
        long long n_r = -1, oracle_nodes = -1;
        bool warn = false;
        bool pass = terminated;
        if (terminated) {
            const auto sol = atom::radial_solution(vo.N, vo.l_r, b, d, g);
            n_r = sol.n_r;
            ode = 0.0;
            for (int i = 0; i < 50; ++i) {
                const double r = b * 1e-3 * std::pow(6.0 / 1e-3, i / 49.0);
                ode = std::max(ode, sol.ode_residual(r));
            }
            const auto spectrum = oracle::radial_eigensolve(atom, vo.l_r, grid, static_cast<std::size_t>(sol.n_r) + 1);
            const auto& state = spectrum.states.back();
            warn = spectrum.coarse_grid_warning;
            e_oracle = state.eigenvalue;
            oracle_nodes = static_cast<long long>(state.node_count);
            double sum = 0.0;
            for (std::size_t i = 0; i < grid.n_points; ++i) {
                const double r = grid.radius(i);
                const double diff = state.u_values[i] - r * sol(r);
                sum += diff * diff;
            }
            l2 = std::sqrt(sum * grid.spacing());
            pass = ode < kOdeTolerance && l2 < kL2Tolerance && oracle_nodes == n_r &&
                   std::abs(e_oracle - energy) / energy < vo.tol;
        } else {
            // No polynomial solution exists; report how far the nearest oracle level is.
            const auto spectrum = oracle::radial_eigensolve(atom, vo.l_r, grid, static_cast<std::size_t>(vo.N) + 1);
            warn = spectrum.coarse_grid_warning;
            for (const auto& s : spectrum.states) {
                if (std::isnan(e_oracle) || std::abs(s.eigenvalue - energy) < std::abs(e_oracle - energy)) {
                    e_oracle = s.eigenvalue;
                    oracle_nodes = static_cast<long long>(s.node_count);
                }
            }
        }
        if (!pass) {
            all_passed = false;
            ++failures;
        }
        t.rows.push_back({g, n_r, energy, e_oracle, std::abs(e_oracle - energy) / energy, l2, ode, v_next, oracle_nodes,
                          static_cast<long long>(warn), std::string(pass ? "PASS" : "FAIL")});
    }
    t.checks.emplace_back("failures", failures);
    t.checks.emplace_back("status", std::string(all_passed ? "PASS" : "FAIL"));
    return t;
}

// ---------------------------------------------------------------- figure / density

struct ProfileOptions {
    std::string which;
    int N = 1;
    int l_r = 0;
    int n_r = 0;
    std::size_t grid_points = 400;
    double r_max = 6.0;
};

std::size_t sign_changes(const std::vector<double>& values) {
    std::size_t changes = 0;
    int last = 0;
    for (double v : values) {
        const int s = v > 0.0 ? 1 : (v < 0.0 ? -1 : 0);
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

Table cmd_figure(const ProfileOptions& po, const CommonOptions& opt) {
    require_positive(opt.b, "b");
    require_positive(po.r_max, "rmax");
    if (po.grid_points < 2) throw DomainError("figure needs at least 2 grid points");
    const double b = opt.b;
    Table t;
    t.params.emplace_back("command", "figure");
    t.params.emplace_back("figure", po.which);
    t.params.emplace_back("b", b);
    t.params.emplace_back("d_over_b", 1.0);
    t.params.emplace_back("grid_points", static_cast<long long>(po.grid_points));
    t.params.emplace_back("rmax", po.r_max);
    const double r_max = po.r_max * b;
    const auto radius = [&](std::size_t i) {
        return r_max * static_cast<double>(i) / static_cast<double>(po.grid_points - 1);
    };

    if (po.which == "fig2") {
        const auto roots = atom::solve_g(1, 0, b, b);
        std::vector<atom::PolynomialSolution> by_nodes;
        for (double g : roots) by_nodes.push_back(atom::radial_solution(1, 0, b, b, g));
        std::sort(by_nodes.begin(), by_nodes.end(), [](const auto& x, const auto& y) { return x.n_r < y.n_r; });
        const auto& ground = by_nodes.at(0);
        const auto& excited = by_nodes.at(1);
        t.params.emplace_back("g_ground", ground.g_root);
        t.params.emplace_back("v1_ground", ground.coefficients[1]);
        t.params.emplace_back("g_excited", excited.g_root);
        t.params.emplace_back("v1_excited", excited.coefficients[1]);
        t.params.emplace_back("E_r", ground.energy_r);
        t.columns = {"r", "R_g26", "R_g12"};
        std::vector<double> col_ground, col_excited;
        for (std::size_t i = 0; i < po.grid_points; ++i) {
            const double r = radius(i);
            col_ground.push_back(ground(r));
            col_excited.push_back(excited(r));
            t.rows.push_back({r, col_ground.back(), col_excited.back()});
        }
        t.checks.emplace_back("sign_changes_R_g26", static_cast<long long>(sign_changes(col_ground)));
        t.checks.emplace_back("sign_changes_R_g12", static_cast<long long>(sign_changes(col_excited)));
    } else {
        const auto gs = groundstate::GroundState::build(b, b);
        t.params.emplace_back("g", gs.g_root());
        t.params.emplace_back("v1", gs.v1());
        t.params.emplace_back("normalization", gs.normalization());
        t.params.emplace_back("E_total", gs.energy_total());
        t.columns = {"r1", "rho"};
        std::size_t argmax = 0;
        double best = -1.0;
        for (std::size_t i = 0; i < po.grid_points; ++i) {
            const double r = radius(i);
            const double rho = groundstate::density_closed_form(gs, r);
            if (rho > best) {
                best = rho;
                argmax = i;
            }
            t.rows.push_back({r, rho});
        }
        t.checks.emplace_back("argmax_r1", radius(argmax));
    }
    return t;
}

Table cmd_density(const ProfileOptions& po, const CommonOptions& opt) {
    require_positive(opt.b, "b");
    require_positive(opt.d_over_b, "d/b");
    if (!parse_mass(opt.mass).is_infinite())
        throw DomainError("the two-electron density is available for an infinitely heavy nucleus only (--M inf)");
    const double b = opt.b;
    const double d = opt.d_over_b * b;
    Table t;
    base_params(t, "density", opt);
    t.params.emplace_back("N", static_cast<long long>(po.N));
    t.params.emplace_back("lr", static_cast<long long>(po.l_r));
    t.params.emplace_back("nr", static_cast<long long>(po.n_r));
    t.columns = {"r1", "rho"};

    groundstate::DensityProfile profile;
    if (po.N == 1 && po.l_r == 0 && po.n_r == 0) {
        const auto gs = groundstate::GroundState::build(b, d);
        t.params.emplace_back("g", gs.g_root());
        t.params.emplace_back("v1", gs.v1());
        t.params.emplace_back("E_total", gs.energy_total());
        profile = groundstate::density_profile(gs, po.grid_points, po.r_max * b);
    } else {
        const atom::PolynomialSolution* chosen = nullptr;
        std::vector<atom::PolynomialSolution> sols;
        for (double g : atom::solve_g(po.N, po.l_r, b, d)) sols.push_back(atom::radial_solution(po.N, po.l_r, b, d, g));
        for (const auto& s : sols)
            if (s.n_r == po.n_r) chosen = &s;
        if (!chosen) throw DomainError(fmt::format("no N={}, l_r={} solution with {} nodes", po.N, po.l_r, po.n_r));
        t.params.emplace_back("g", chosen->g_root);
        t.params.emplace_back("E_total",
                              atom::assemble_total_energy(Vec3::Zero(), NucleusMass::infinite(), b, 0, 0, chosen->energy_r));
        profile = groundstate::density_profile_numeric(*chosen, po.grid_points, po.r_max * b);
        if (po.l_r > 0) t.notes.push_back("density averaged over m_r");
    }
    t.params.emplace_back("normalization", profile.normalization);
    t.params.emplace_back("method", std::string(profile.numeric ? "numeric" : "closed-form"));
    for (std::size_t i = 0; i < profile.radii.size(); ++i) t.rows.push_back({profile.radii[i], profile.values[i]});
    return t;
}

// ---------------------------------------------------------------- limits

struct LimitsOptions {
    std::string regime;
    double g = 0.0;
    int levels = 8;
    std::vector<std::string> pairs;
};

std::array<int, 4> parse_pair(const std::string& text) {
    const auto invalid = [&] {
        return CLI::ValidationError("--pair", "expected n_r,l_r,n_r',l_r' integers, got \"" + text + "\"");
    };
    std::vector<int> items;
    std::istringstream is(text);
    std::string item;
    while (std::getline(is, item, ',')) {
        try {
            std::size_t used = 0;
            items.push_back(std::stoi(item, &used));
            if (used != item.size()) throw invalid();
        } catch (const std::logic_error&) {
            throw invalid();
        }
    }
    if (items.size() != 4) throw invalid();
    return {items[0], items[1], items[2], items[3]};
}

Table cmd_limits(const LimitsOptions& lo, const CommonOptions& opt) {
    require_positive(opt.b, "b");
    require_positive(opt.d_over_b, "d/b");
    const bool small = lo.regime == "small-d";
    const AtomParameters atom{opt.b, opt.d_over_b * opt.b, lo.g, NucleusMass::infinite()};
    std::vector<std::array<int, 4>> pairs;
    for (const auto& p : lo.pairs) pairs.push_back(parse_pair(p));

    Table t;
    base_params(t, "limits", opt);
    t.params.emplace_back("regime", lo.regime);
    t.params.emplace_back("g", lo.g);
    t.params.emplace_back("levels", static_cast<long long>(lo.levels));
    const auto spectrum = small ? limits::small_d_spectrum(lo.g, opt.b, lo.levels) : limits::large_d_spectrum(atom, lo.levels);
    if (!small) t.params.emplace_back("gamma_renorm", limits::gamma_renorm(atom));

    t.columns = {"level", "energy", "n_r", "l_r", "degeneracy"};
    long long degenerate_levels = 0;
    for (std::size_t i = 0; i < spectrum.size(); ++i) {
        const auto& level = spectrum[i];
        if (level.states.size() > 1) ++degenerate_levels;
        for (const auto& s : level.states)
            t.rows.push_back({static_cast<long long>(i), level.energy, static_cast<long long>(s.n_r),
                              static_cast<long long>(s.l_r), static_cast<long long>(level.states.size())});
    }
    t.checks.emplace_back("degenerate_levels", degenerate_levels);

    for (const auto& q : pairs) {
        const std::string label = fmt::format("({},{})/({},{})", q[0], q[1], q[2], q[3]);
        if (small) {
            const auto g = limits::small_d_degeneracy_g(q[0], q[1], q[2], q[3]);
            if (g) {
                t.notes.push_back(fmt::format("pair {} degenerate at g={:.12g} E={:.12g}", label, *g,
                                              limits::small_d_energy(q[0], q[1], *g, opt.b)));
            } else {
                t.notes.push_back(fmt::format("pair {} has no degeneracy coupling", label));
            }
        } else {
            t.notes.push_back(fmt::format("pair {} degenerate={}", label,
                                          limits::large_d_degenerate(q[0], q[1], q[2], q[3]) ? "true" : "false"));
        }
    }
    return t;
}

void emit(const Table& t, const CommonOptions& opt, std::ostream& out) {
    const std::string text = opt.format == "json" ? render_json(t) : render_csv(t);
    if (opt.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(opt.out_path, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot open " + opt.out_path + " for writing");
    file << text;
    file.close();
    if (!file) throw IoError("failed writing " + opt.out_path);
}

std::string one_line(std::string s) {
    for (char& c : s)
        if (c == '\n' || c == '\r') c = ' ';
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact solutions of a two-electron atom with a screened, regularized repulsion", "qesatom"};
    app.require_subcommand(1);

    CommonOptions common;
    SolveOptions solve_opt;
    VerifyOptions verify_opt;
    ProfileOptions figure_opt, density_opt;
    LimitsOptions limits_opt;

    auto* solve = app.add_subcommand("solve", "couplings g with polynomial solutions of class N");
    solve->add_option("--N", solve_opt.N, "termination class")->required()->check(kPositiveInt);
    solve->add_option("--lr", solve_opt.l_r, "relative angular momentum")->check(kNonNegativeInt);
    add_common(solve, common);

    auto* verify = app.add_subcommand("verify", "check every root against the finite-difference eigensolver");
    verify->add_option("--N", verify_opt.N, "termination class")->required()->check(kPositiveInt);
    verify->add_option("--lr", verify_opt.l_r, "relative angular momentum")->check(kNonNegativeInt);
    verify->add_option("--grid-points", verify_opt.grid_points, "eigensolver grid points")->capture_default_str();
    verify->add_option("--rmax", verify_opt.r_max, "grid extent in units of b")->capture_default_str();
    verify->add_option("--tol", verify_opt.tol, "relative eigenvalue tolerance")->capture_default_str();
    verify->add_option("--perturb-g", verify_opt.perturb_g, "offset added to every root (negative control)");
    add_common(verify, common);

    auto* figure = app.add_subcommand("figure", "plot data for the radial functions (fig2) or the density (fig3)");
    figure->add_option("which", figure_opt.which)->required()->check(CLI::IsMember({"fig2", "fig3"}));
    figure->add_option("--grid-points", figure_opt.grid_points, "samples")->capture_default_str();
    figure->add_option("--rmax", figure_opt.r_max, "extent in units of b")->capture_default_str();
    add_common(figure, common);

    auto* density = app.add_subcommand("density", "one-body electron density of an exact state");
    density->add_option("--N", density_opt.N, "termination class")->check(kPositiveInt)->capture_default_str();
    density->add_option("--lr", density_opt.l_r, "relative angular momentum")->check(kNonNegativeInt);
    density->add_option("--nr", density_opt.n_r, "node count of the radial solution")->check(kNonNegativeInt);
    density->add_option("--grid-points", density_opt.grid_points, "samples")->capture_default_str();
    density->add_option("--rmax", density_opt.r_max, "extent in units of b")->capture_default_str();
    add_common(density, common);

    auto* lim = app.add_subcommand("limits", "spectra in the small-d and large-d limits");
    lim->add_option("regime", limits_opt.regime)->required()->check(CLI::IsMember({"small-d", "large-d"}));
    lim->add_option("--g", limits_opt.g, "coupling constant")->capture_default_str();
    lim->add_option("--levels", limits_opt.levels, "number of distinct levels")->check(kPositiveInt)->capture_default_str();
    lim->add_option("--pair", limits_opt.pairs, "state pair n_r,l_r,n_r',l_r' to test for degeneracy");
    add_common(lim, common);

    std::vector<const char*> argv{"qesatom"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << one_line(e.what()) << '\n';
        return kUsage;
    }

    try {
        if (solve->parsed()) {
            emit(cmd_solve(solve_opt, common), common, out);
        } else if (verify->parsed()) {
            bool passed = false;
            const Table t = cmd_verify(verify_opt, common, passed);
            emit(t, common, out);
            if (!passed) {
                err << "verification failed: " << csv_cell(t.checks.front().second) << " root(s) outside tolerance\n";
                return kVerification;
            }
        } else if (figure->parsed()) {
            emit(cmd_figure(figure_opt, common), common, out);
        } else if (density->parsed()) {
            emit(cmd_density(density_opt, common), common, out);
        } else if (lim->parsed()) {
            emit(cmd_limits(limits_opt, common), common, out);
        }
    } catch (const CLI::ValidationError& e) {
        err << "usage error: " << one_line(e.what()) << '\n';
        return kUsage;
    } catch (const IoError& e) {
        err << "i/o error: " << one_line(e.what()) << '\n';
        return kIo;
    } catch (const std::exception& e) {
        err << "error: " << one_line(e.what()) << '\n';
        return kDomain;
    }
    return kSuccess;
}

}  // namespace qes::cli
