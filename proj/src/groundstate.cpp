#include "qes/groundstate.hpp"

#include "qes/oracle.hpp"
#include "qes/polynomial.hpp"

#include <boost/math/constants/constants.hpp>

#include <cmath>
#include <fmt/format.h>
#include <stdexcept>

namespace qes::groundstate {

namespace {

constexpr double pi = boost::math::constants::pi<double>();

// Bracketed polynomial of the closed-form density in s = (r1/d)^2.
// f1 carries 12 (1 - v1) as its constant term; with 12 (v1 - 1) the density
// would no longer equal 2 int |Psi|^2 d^3 r2.
Polynomial density_bracket(double v, double t) {
    const double t2 = t * t, t4 = t2 * t2, t6 = t4 * t2, t8 = t4 * t4;
    const Polynomial f1({12.0 * (1.0 - v), 10.0 * (1.0 + v * (v - 4.0)), 21.0 * v * (v - 1.0), 9.0 * v * v});
    const Polynomial f2({10.0 + 10.0 * v * (v - 4.0), 70.0 * v * (v - 1.0), 63.0 * v * v});
    const Polynomial two_plus_s({2.0, 1.0});
    const Polynomial vs_minus_two({-2.0, v});
    const Polynomial squares = two_plus_s * two_plus_s * vs_minus_two * vs_minus_two;
    return Polynomial::constant(945.0 * v * v) + f1 * (32.0 * t6) + f2 * (24.0 * t4) + squares * (16.0 * t8) +
           Polynomial({v - 1.0, 3.0 * v}) * (840.0 * v * t2);
}

// rho / N^2 without the Gaussian: 1/(512 pi b^3) (b/d)^11.
double density_prefactor(const AtomParameters& atom) {
    return std::pow(atom.b / atom.d, 11) / (512.0 * pi * std::pow(atom.b, 3));
}

double wavefunction_prefactor(const AtomParameters& atom, double normalization) {
    return normalization / (2.0 * std::pow(pi, 1.25) * std::pow(atom.b * atom.d, 1.5));
}

double correlation_factor(double r12_sq, double v1, double d) {
    const double x = r12_sq / (2.0 * d * d);
    return (1.0 + x) * (1.0 - v1 * x);
}

}  // namespace

GroundState GroundState::build(double b, double d) {
    const auto roots = atom::solve_g(1, 0, b, d);
    for (double g : roots) {
        const auto sol = atom::radial_solution(1, 0, b, d, g);
        if (sol.n_r != 0) continue;
        const AtomParameters atom{b, d, g, NucleusMass::infinite()};
        const double v1 = sol.coefficients[1];
        const double energy = atom::assemble_total_energy(Vec3::Zero(), atom.M, b, 0, 0, sol.energy_r);
        return GroundState(atom, v1, normalization_constant(atom, v1), energy);
    }
    throw DomainError(fmt::format("no node-less N=1 solution for b={}, d={}", b, d));
}

GroundState GroundState::with_normalization(double normalization) const {
    if (!(normalization > 0.0)) throw DomainError("normalization must be positive");
    return GroundState(atom_, v1_, normalization, energy_total_);
}

double wavefunction(const GroundState& gs, const Vec3& r1, const Vec3& r2) {
    const auto& atom = gs.atom();
    const double gauss = std::exp(-(r1.squaredNorm() + r2.squaredNorm()) / (2.0 * atom.b * atom.b));
    return wavefunction_prefactor(atom, gs.normalization()) * correlation_factor((r1 - r2).squaredNorm(), gs.v1(), atom.d) *
           gauss;
}

double density_closed_form(const GroundState& gs, double r1) {
    const auto& atom = gs.atom();
    const double y = r1 / atom.d;
    const double n2 = gs.normalization() * gs.normalization();
    return n2 * density_prefactor(atom) * std::exp(-r1 * r1 / (atom.b * atom.b)) *
           density_bracket(gs.v1(), atom.d / atom.b)(y * y);
}

double normalization_constant(const AtomParameters& atom, double v1) {
    atom.validate();
    // int rho d^3 r with N = 1, term by term:
    // 4 pi d^3 c_k int_0^inf y^{2k+2} exp(-t^2 y^2) dy = 4 pi d^3 c_k Gamma(k + 3/2) / (2 t^{2k+3}).
    const double t = atom.d / atom.b;
    const Polynomial bracket = density_bracket(v1, t);
    double moments = 0.0;
    for (int k = 0; k <= bracket.degree(); ++k)
        moments += bracket.coefficient(k) * std::tgamma(k + 1.5) / (2.0 * std::pow(t, 2 * k + 3));
    const double unit_integral = density_prefactor(atom) * 4.0 * pi * std::pow(atom.d, 3) * moments;
    const double closed = std::sqrt(2.0 / unit_integral);

    // Guard: norm of Psi in separated coordinates, where the pseudorelative
    // Gaussian integrates to (pi b^2)^{3/2}.
    const double radial = oracle::quadrature(
        [&](double r) {
            const double c = correlation_factor(2.0 * r * r, v1, atom.d);
            return c * c * std::exp(-r * r / (atom.b * atom.b)) * r * r;
        },
        0.0, oracle::infinity, 1e-13);
    const double pre = wavefunction_prefactor(atom, 1.0);
    const double guard = 1.0 / std::sqrt(pre * pre * std::pow(pi * atom.b * atom.b, 1.5) * 4.0 * pi * radial);
    if (std::abs(closed - guard) > 1e-10 * closed)
        throw std::logic_error(fmt::format("normalization mismatch: moments {} vs quadrature {}", closed, guard));
    return closed;
}

DensityProfile density_profile(const GroundState& gs, std::size_t n_points, double r_max) {
    if (n_points < 2) throw DomainError("density profile needs at least 2 points");
    if (r_max <= 0.0) r_max = 6.0 * gs.atom().b;
    DensityProfile out;
    out.normalization = gs.normalization();
    for (std::size_t i = 0; i < n_points; ++i) {
        const double r = r_max * static_cast<double>(i) / static_cast<double>(n_points - 1);
        out.radii.push_back(r);
        out.values.push_back(density_closed_form(gs, r));
    }
    return out;
}

double wavefunction_at_separation(const GroundState& gs, double r12, const Vec3& midpoint, const Vec3& axis) {
    const Vec3 half = 0.5 * r12 * axis.normalized();
    return wavefunction(gs, midpoint + half, midpoint - half);
}

double cusp_derivative(const GroundState& gs, const Vec3& midpoint) {
    // Along the path, r1^2 + r2^2 = 2 |midpoint|^2 + s^2 / 2, so
    // Psi(s) = P exp(-(2 m^2 + s^2/2) / 2b^2) (1 + s^2/2d^2)(1 - v1 s^2/2d^2).
    const auto& atom = gs.atom();
    const double s = 0.0;
    const double inv_2d2 = 1.0 / (2.0 * atom.d * atom.d);
    const double x = s * s * inv_2d2;
    const double dx = 2.0 * s * inv_2d2;
    const double corr = (1.0 + x) * (1.0 - gs.v1() * x);
    const double dcorr = dx * (1.0 - gs.v1() * x) - gs.v1() * dx * (1.0 + x);
    const double gauss = std::exp(-(2.0 * midpoint.squaredNorm() + 0.5 * s * s) / (2.0 * atom.b * atom.b));
    const double dgauss = -s / (2.0 * atom.b * atom.b) * gauss;
    return wavefunction_prefactor(atom, gs.normalization()) * (dcorr * gauss + corr * dgauss);
}

double coalescence_slope(const std::function<double(double)>& f, double h) {
    return (-3.0 * f(0.0) + 4.0 * f(h) - f(2.0 * h)) / (2.0 * h);
}

double density_numeric(const atom::PolynomialSolution& sol, double r1, double tol) {
    const double b2 = sol.atom.b * sol.atom.b;
    const double d = sol.atom.d;
    // |phi_0(S)|^2 |R(r)|^2 / 4 pi, where 1/4 pi is the m-averaged |Y_lm|^2.
    const double pre = std::pow(pi * b2, -1.5) / (4.0 * pi);
    // R(r) without its Gaussian. The two Gaussians combine to exp(-(r1^2 + r2^2)/b^2)
    // since S^2 + r^2 = r1^2 + r2^2, which keeps the angular integrand out of the
    // subnormal range where relative error control breaks down.
    const auto algebraic = [&](double r) {
        const double z = r * r / (d * d);
        return sol.normalization * std::pow(d, -1.5) * std::pow(r / d, sol.l_r) * (1.0 + z) * sol.polynomial(z);
    };
    const auto shell = [&](double r2) {
        const double envelope = std::exp(-(r1 * r1 + r2 * r2) / b2);
        if (envelope == 0.0) return 0.0;
        const double base = 0.5 * (r1 * r1 + r2 * r2);
        const double cross = r1 * r2;
        const double angular = oracle::quadrature(
            [&](double c) {
                const double a = algebraic(std::sqrt(std::max(0.0, base - cross * c)));
                return a * a;
            },
            -1.0, 1.0, tol);
        return 2.0 * pi * envelope * angular * r2 * r2;
    };
    return 2.0 * pre * oracle::quadrature(shell, 0.0, oracle::infinity, tol);
}

DensityProfile density_profile_numeric(const atom::PolynomialSolution& sol, std::size_t n_points, double r_max) {
    if (n_points < 2) throw DomainError("density profile needs at least 2 points");
    if (r_max <= 0.0) r_max = 6.0 * sol.atom.b;
    DensityProfile out;
    out.normalization = sol.normalization;
    out.numeric = true;
    for (std::size_t i = 0; i < n_points; ++i) {
        const double r = r_max * static_cast<double>(i) / static_cast<double>(n_points - 1);
        out.radii.push_back(r);
        out.values.push_back(density_numeric(sol, r));
    }
    return out;
}

}  // namespace qes::groundstate
