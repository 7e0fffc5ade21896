// Exactly solvable relative motion of the two electrons.
//
// The radial equation
//   R'' + (2/r) R' + (k^2 - r^2/b^4 - g/(r^2+d^2) - l(l+1)/r^2) R = 0,  k^2 = 2 E_r,
// maps onto a confluent Heun equation in xi = -(r/d)^2. Polynomial (square
// integrable) solutions exist when E_r = (7 + 2 l + 4 N) / (2 b^2) and the
// coupling g is a root of an (N+1)x(N+1) tridiagonal determinant.
#pragma once

#include "qes/heun.hpp"
#include "qes/model.hpp"
#include "qes/polynomial.hpp"

#include <Eigen/Core>

#include <complex>
#include <vector>

namespace qes::atom {

struct QuantumNumbers {
    int n_s = 0;
    int l_s = 0;
    int m_s = 0;
    int n_r = 0;
    int l_r = 0;
    int m_r = 0;
    Vec3 K = Vec3::Zero();

    /// Throws DomainError on negative n/l or |m| > l.
    void validate() const;
};

struct JacobiCoordinates {
    Vec3 R;  ///< center of mass
    Vec3 S;  ///< pseudorelative
    Vec3 r;  ///< relative
};

/// (r1, r2, r3) -> (R, S, r) with electrons 1, 2 and the nucleus 3.
JacobiCoordinates jacobi_transform(const Vec3& r1, const Vec3& r2, const Vec3& r3, const NucleusMass& M);

double quantized_energy(int N, int l_r, double b);

/// Heun parameters of the radial problem at energy E_r. Also checks that the
/// (delta, eta) route to (mu, nu) agrees with the direct expressions; a
/// mismatch beyond 1e-12 relative throws std::logic_error.
heun::HeunParameters heun_parameters(const AtomParameters& atom, int l_r, double energy_r);

/// mu as a function of the coupling at the termination energy of class N.
double mu_of_g(int N, int l_r, double d_over_b, double g);
double g_of_mu(int N, int l_r, double d_over_b, double mu);

/// Tridiagonal termination matrix. Row k: diagonal k a + mu - k (k + l + 5/2),
/// superdiagonal (k+1)(k + 3/2 + l), subdiagonal (N + 1 - k) a, with a = (d/b)^2.
Eigen::MatrixXd termination_matrix(int N, int l_r, double d_over_b, double mu);

/// Determinant of termination_matrix as a polynomial in mu, via the
/// continuant recurrence D_k = diag_k D_{k-1} - sub_k super_{k-1} D_{k-2}.
Polynomial termination_polynomial(int N, int l_r, double d_over_b);

/// Determinant of termination_matrix at a given mu (same recurrence, numeric).
double termination_determinant(int N, int l_r, double d_over_b, double mu);

class ComplexRootsError : public DomainError {
public:
    ComplexRootsError(const std::string& what, std::vector<std::complex<double>> roots)
        : DomainError(what), roots_(std::move(roots)) {}
    const std::vector<std::complex<double>>& roots() const { return roots_; }

private:
    std::vector<std::complex<double>> roots_;
};

/// All couplings g (ascending) admitting a degree-N polynomial solution with
/// angular momentum l_r. Throws ComplexRootsError if any root has an imaginary
/// part beyond 1e-9.
std::vector<double> solve_g(int N, int l_r, double b, double d);

enum class Symmetry { Singlet, Triplet };

Symmetry classify_symmetry(int l_r);
const char* to_string(Symmetry s);

struct RadialDerivatives {
    double value;
    double first;
    double second;
};

/// One exact radial solution
///   R(r) = (norm / d^{3/2}) (r/d)^l (1 + z) P_N(z) exp(-r^2 / 2b^2),  z = (r/d)^2,
/// with P_N(z) = sum_n v_n (-z)^n.
struct PolynomialSolution {
    int N = 1;
    int l_r = 0;
    double energy_r = 0.0;
    double g_root = 0.0;
    heun::SeriesCoefficients coefficients;  ///< v_0 .. v_N
    int n_r = 0;
    double normalization = 1.0;
    AtomParameters atom;

    double polynomial(double z) const;
    /// R without the normalization constant.
    double shape(double r) const;
    double operator()(double r) const { return normalization * shape(r); }
    RadialDerivatives derivatives(double r) const;
    /// |radial equation residual| / largest individual term at r > 0.
    double ode_residual(double r) const;
};

/// Builds the normalized solution at a verified root. Throws DomainError if
/// the Heun series does not terminate at degree N for this g.
PolynomialSolution radial_solution(int N, int l_r, double b, double d, double g_root);

/// Sets normalization so that int_0^inf R^2 r^2 dr = 1. Idempotent.
PolynomialSolution normalize_radial(PolynomialSolution sol);

/// Number of distinct positive real roots of P_N.
int count_positive_roots(const Polynomial& p_of_z);

double center_of_mass_energy(const Vec3& K, const NucleusMass& M);
double pseudorelative_energy(const NucleusMass& M, double b, int n_s, int l_s);
double assemble_total_energy(const Vec3& K, const NucleusMass& M, double b, int n_s, int l_s, double energy_r);

}  // namespace qes::atom
