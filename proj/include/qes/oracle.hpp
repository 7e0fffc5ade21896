// Independent numerical machinery used to check the closed-form results:
// a finite-difference radial eigensolver, a direct integrator for the
// confluent Heun ODE, and adaptive quadrature.
//
// Nothing here may use the analytic solution formulas; the only shared
// physics is the potential definition in model.hpp.
#pragma once

#include "qes/heun.hpp"
#include "qes/model.hpp"

#include <functional>
#include <limits>
#include <vector>

namespace qes::oracle {

/// Uniform grid r_i = r_min + i h, i = 0 .. n_points-1. The reduced radial
/// function u = r R is pinned to zero at both ends.
struct RadialGrid {
    double r_min = 1e-6;
    double r_max = 10.0;
    std::size_t n_points = 4000;

    /// Throws DomainError unless 0 < r_min < r_max and n_points >= 100.
    void validate() const;
    double spacing() const { return (r_max - r_min) / static_cast<double>(n_points - 1); }
    double radius(std::size_t i) const { return r_min + static_cast<double>(i) * spacing(); }
    /// Same interval with the spacing halved.
    RadialGrid refined() const { return {r_min, r_max, 2 * (n_points - 1) + 1}; }

    /// Defaults scaled to the confinement length: r_min = 1e-6 b, r_max = 10 b.
    static RadialGrid for_length(double b, std::size_t n_points = 4000);
};

struct OracleEigenpair {
    double eigenvalue = 0.0;         ///< E_r, Richardson-extrapolated from this grid and its refinement
    double eigenvalue_coarse = 0.0;  ///< E_r on this grid alone
    std::vector<double> u_values;    ///< u = r R on the grid; int u^2 dr = 1, positive near the origin
    std::size_t node_count = 0;
    RadialGrid grid;
};

struct RadialSpectrum {
    std::vector<OracleEigenpair> states;  ///< ascending in energy
    /// Set when the two grids disagree by more than the Richardson tolerance.
    bool coarse_grid_warning = false;
};

/// Lowest n_states eigenpairs of -u'' + (r^2/b^4 + g/(r^2+d^2) + l(l+1)/r^2) u = k^2 u
/// with E_r = k^2 / 2, from the three-point discretization.
RadialSpectrum radial_eigensolve(const AtomParameters& atom, int l_r, const RadialGrid& grid,
                                 std::size_t n_states, double richardson_tol = 1e-5);

/// f(xi_end) for the confluent Heun ODE with f(0) = 1, f'(0) = -mu/(beta+1),
/// integrated with fixed-step RK4 in t = ln|xi|. Throws ConvergenceError if
/// halving the step changes the result by more than 1e-9 (relative).
double integrate_heun_ode(const heun::HeunParameters& params, double xi_end, std::size_t steps = 4000);

/// Adaptive Gauss-Kronrod integral of f over [a, b_end]; b_end may be +infinity.
/// Throws ConvergenceError if the error estimate exceeds max(tol, tol*|I|).
double quadrature(const std::function<double(double)>& f, double a, double b_end, double tol = 1e-12);

inline constexpr double infinity = std::numeric_limits<double>::infinity();

}  // namespace qes::oracle
