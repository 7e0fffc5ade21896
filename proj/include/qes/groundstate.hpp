// The correlated two-electron singlet ground state of the N = 1 class for an
// infinitely heavy nucleus, its closed-form one-body density, and the
// numerical density of any other exact radial solution.
#pragma once

#include "qes/atom.hpp"
#include "qes/model.hpp"

#include <functional>
#include <vector>

namespace qes::groundstate {

class GroundState {
public:
    /// Node-less N = 1, l_r = 0 solution for confinement b and screening d.
    static GroundState build(double b, double d);

    const AtomParameters& atom() const { return atom_; }
    double v1() const { return v1_; }
    double g_root() const { return atom_.g; }
    double normalization() const { return normalization_; }
    double energy_total() const { return energy_total_; }

    /// Same state with a different normalization constant.
    GroundState with_normalization(double normalization) const;

private:
    GroundState(AtomParameters atom, double v1, double normalization, double energy_total)
        : atom_(atom), v1_(v1), normalization_(normalization), energy_total_(energy_total) {}

    AtomParameters atom_;
    double v1_;
    double normalization_;
    double energy_total_;
};

/// Psi(r1, r2) = N / (2 pi^{5/4} (b d)^{3/2}) (1 + r12^2/2d^2)(1 - v1 r12^2/2d^2) exp(-(r1^2 + r2^2)/2b^2)
double wavefunction(const GroundState& gs, const Vec3& r1, const Vec3& r2);

/// Closed-form one-body density rho(r1) = 2 int |Psi|^2 d^3 r2.
double density_closed_form(const GroundState& gs, double r1);

/// Normalization fixing int rho d^3 r = 2, from Gaussian moments of the
/// density polynomial. Cross-checked against quadrature of the separated
/// two-electron norm; disagreement beyond 1e-10 throws std::logic_error.
double normalization_constant(const AtomParameters& atom, double v1);

struct DensityProfile {
    std::vector<double> radii;
    std::vector<double> values;
    double normalization = 0.0;
    bool numeric = false;  ///< true when sampled by quadrature instead of the closed form
};

/// Closed-form density on n_points uniform radii in [0, r_max]; r_max defaults to 6 b.
DensityProfile density_profile(const GroundState& gs, std::size_t n_points = 400, double r_max = 0.0);

/// d Psi / d r12 at coalescence (r12 = 0) with the electrons' midpoint fixed at
/// `midpoint`. Only even powers of r12 occur, so this is identically zero.
double cusp_derivative(const GroundState& gs, const Vec3& midpoint = Vec3::Zero());

/// Psi along the coalescence path r1 = midpoint + s e/2, r2 = midpoint - s e/2.
double wavefunction_at_separation(const GroundState& gs, double r12, const Vec3& midpoint = Vec3::Zero(),
                                  const Vec3& axis = Vec3::UnitZ());

/// One-sided second-order difference (-3 f(0) + 4 f(h) - f(2h)) / 2h of a
/// function of r12 >= 0 at the origin.
double coalescence_slope(const std::function<double(double)>& f_of_r12, double h = 1e-4);

/// rho(r1) = 2 int |Psi|^2 d^3 r2 by 2-D quadrature for the two-electron state
/// built from a radial solution and the pseudorelative oscillator ground state.
/// For l_r > 0 the density is averaged over m_r.
double density_numeric(const atom::PolynomialSolution& sol, double r1, double tol = 1e-11);

DensityProfile density_profile_numeric(const atom::PolynomialSolution& sol, std::size_t n_points = 400,
                                       double r_max = 0.0);

}  // namespace qes::groundstate
