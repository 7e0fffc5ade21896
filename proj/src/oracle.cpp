#include "qes/oracle.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/numeric/odeint/integrate/integrate_n_steps.hpp>
#include <boost/numeric/odeint/stepper/runge_kutta_fehlberg78.hpp>

#include <lapacke.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <fmt/format.h>
#include <numeric>

namespace qes::oracle {

void RadialGrid::validate() const {
    if (!(r_min > 0.0) || !(r_min < r_max))
        throw DomainError(fmt::format("radial grid needs 0 < r_min < r_max, got [{}, {}]", r_min, r_max));
    if (n_points < 100) throw DomainError(fmt::format("radial grid needs >= 100 points, got {}", n_points));
}

RadialGrid RadialGrid::for_length(double b, std::size_t n_points) { return {1e-6 * b, 10.0 * b, n_points}; }

namespace {

struct TridiagonalResult {
    std::vector<double> eigenvalues;  // k^2, ascending
    std::vector<double> vectors;      // column-major, interior points only
    std::size_t interior = 0;
};

TridiagonalResult solve_fd(const AtomParameters& atom, int l_r, const RadialGrid& grid, std::size_t n_states,
                           bool want_vectors) {
    const std::size_t m = grid.n_points - 2;
    const double h = grid.spacing();
    const double inv_h2 = 1.0 / (h * h);
    const double centrifugal = static_cast<double>(l_r) * (l_r + 1);

    std::vector<double> diag(m), off(m, -inv_h2);
    for (std::size_t i = 0; i < m; ++i) {
        const double r = grid.radius(i + 1);
        // H_r scaled by 2 so the eigenvalue is k^2 = 2 E_r.
        diag[i] = 2.0 * inv_h2 + 2.0 * relative_potential(r, atom) + centrifugal / (r * r);
    }

    TridiagonalResult out;
    out.interior = m;
    out.eigenvalues.resize(m);
    if (want_vectors) out.vectors.resize(m * n_states);
    std::vector<lapack_int> support(2 * n_states);
    lapack_int found = 0;
    const lapack_int info = LAPACKE_dstevr(
        LAPACK_COL_MAJOR, want_vectors ? 'V' : 'N', 'I', static_cast<lapack_int>(m), diag.data(), off.data(), 0.0,
        0.0, 1, static_cast<lapack_int>(n_states), 0.0, &found, out.eigenvalues.data(),
        want_vectors ? out.vectors.data() : nullptr, static_cast<lapack_int>(m), support.data());
    if (info != 0 || static_cast<std::size_t>(found) != n_states)
        throw ConvergenceError(fmt::format("tridiagonal eigensolve failed (info = {})", info));
    out.eigenvalues.resize(n_states);
    return out;
}

std::size_t count_sign_changes(const std::vector<double>& u) {
    double scale = 0.0;
    for (double x : u) scale = std::max(scale, std::abs(x));
    const double floor = 1e-8 * scale;
    std::size_t changes = 0;
    int last_sign = 0;
    for (double x : u) {
        if (std::abs(x) <= floor) continue;
        const int s = x > 0.0 ? 1 : -1;
        if (last_sign != 0 && s != last_sign) ++changes;
        last_sign = s;
    }
    return changes;
}

}  // namespace

RadialSpectrum radial_eigensolve(const AtomParameters& atom, int l_r, const RadialGrid& grid, std::size_t n_states,
                                 double richardson_tol) {
    atom.validate();
    grid.validate();
    if (l_r < 0) throw DomainError("l_r must be nonnegative");
    if (n_states == 0 || n_states > grid.n_points - 2) throw DomainError("invalid number of requested states");

    const auto coarse = solve_fd(atom, l_r, grid, n_states, true);
    const auto fine = solve_fd(atom, l_r, grid.refined(), n_states, false);
    const double h = grid.spacing();

    RadialSpectrum spectrum;
    for (std::size_t s = 0; s < n_states; ++s) {
        OracleEigenpair pair;
        pair.grid = grid;
        pair.eigenvalue_coarse = 0.5 * coarse.eigenvalues[s];
        const double e_fine = 0.5 * fine.eigenvalues[s];
        // Three-point Laplacian error is O(h^2).
        pair.eigenvalue = (4.0 * e_fine - pair.eigenvalue_coarse) / 3.0;
        if (std::abs(pair.eigenvalue - pair.eigenvalue_coarse) > richardson_tol * std::max(1.0, std::abs(pair.eigenvalue)))
            spectrum.coarse_grid_warning = true;

        pair.u_values.assign(grid.n_points, 0.0);
        const double* column = coarse.vectors.data() + s * coarse.interior;
        std::copy(column, column + coarse.interior, pair.u_values.begin() + 1);

        const double norm2 = h * std::inner_product(pair.u_values.begin(), pair.u_values.end(), pair.u_values.begin(), 0.0);
        double scale = 1.0 / std::sqrt(norm2);
        double peak = 0.0;
        for (double x : pair.u_values) peak = std::max(peak, std::abs(x));
        const auto first = std::find_if(pair.u_values.begin(), pair.u_values.end(),
                                        [&](double x) { return std::abs(x) > 1e-3 * peak; });
        if (first != pair.u_values.end() && *first < 0.0) scale = -scale;
        for (double& x : pair.u_values) x *= scale;

        pair.node_count = count_sign_changes(pair.u_values);
        spectrum.states.push_back(std::move(pair));
    }
    return spectrum;
}

namespace {

using OdeState = std::array<double, 2>;  // f, df/dt with xi = sign * exp(t)

double integrate_log_variable(const heun::HeunParameters& p, double xi_end, std::size_t steps) {
    constexpr double start = 1e-5;
    const double sign = xi_end < 0.0 ? -1.0 : 1.0;
    const double al = p.alpha(), be = p.beta(), ga = p.gamma(), mu = p.mu(), nu = p.nu();

    // Second-order Frobenius data of the regular solution at xi = 0, read off
    // by expanding xi(xi-1) times the ODE in powers of xi.
    const double a1 = -mu / (be + 1.0);
    const double a2 = ((be + ga + 2.0 - al - mu) * a1 + mu + nu) / (2.0 * (be + 2.0));
    const double xi0 = sign * start;
    if (std::abs(xi_end) <= start) return 1.0 + a1 * xi_end + a2 * xi_end * xi_end;

    OdeState state{1.0 + a1 * xi0 + a2 * xi0 * xi0, xi0 * (a1 + 2.0 * a2 * xi0)};
    const auto rhs = [&](const OdeState& y, OdeState& dy, double t) {
        const double xi = sign * std::exp(t);
        const double pole = 1.0 / (xi - 1.0);
        dy[0] = y[1];
        dy[1] = -(be + al * xi + (ga + 1.0) * xi * pole) * y[1] - (mu * xi + nu * xi * xi * pole) * y[0];
    };
    const double t0 = std::log(start);
    const double dt = (std::log(std::abs(xi_end)) - t0) / static_cast<double>(steps);
    boost::numeric::odeint::runge_kutta_fehlberg78<OdeState> stepper;
    boost::numeric::odeint::integrate_n_steps(stepper, rhs, state, t0, dt, steps);
    return state[0];
}

}  // namespace

double integrate_heun_ode(const heun::HeunParameters& params, double xi_end, std::size_t steps) {
    if (!(std::abs(xi_end) < 1.0)) throw DomainError("Heun ODE integration requires |xi_end| < 1");
    if (steps == 0) throw DomainError("step count must be positive");
    if (xi_end == 0.0) return 1.0;
    const double coarse = integrate_log_variable(params, xi_end, steps);
    const double fine = integrate_log_variable(params, xi_end, 2 * steps);
    if (std::abs(fine - coarse) > 1e-9 * std::max(1.0, std::abs(fine)))
        throw ConvergenceError(fmt::format("Heun ODE step halving changed f({}) from {} to {}", xi_end, coarse, fine));
    return fine;
}

double quadrature(const std::function<double(double)>& f, double a, double b_end, double tol) {
    double error = 0.0;
    double l1 = 0.0;
    const double value =
        boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, a, b_end, 20, tol, &error, &l1);
    if (!std::isfinite(value) || error > std::max(tol, tol * l1))
        throw ConvergenceError(fmt::format("quadrature on [{}, {}] did not reach tol {} (error estimate {})", a, b_end,
                                           tol, error));
    return value;
}

}  // namespace qes::oracle
