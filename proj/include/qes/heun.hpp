// Confluent Heun function H_C(alpha, beta, gamma, delta, eta; xi) as a
// power series around xi = 0, for the equation
//
//   f'' + (alpha + (beta+1)/xi + (gamma+1)/(xi-1)) f' + (mu/xi + nu/(xi-1)) f = 0
//
// with (mu, nu) derived from (delta, eta). Coefficients obey the three-term
// recurrence A_n v_n = B_n v_{n-1} + C_n v_{n-2}, v_{-1} = 0, v_0 = 1.
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace qes::heun {

class HeunParameters {
public:
    HeunParameters(double alpha, double beta, double gamma, double delta, double eta);

    double alpha() const { return alpha_; }
    double beta() const { return beta_; }
    double gamma() const { return gamma_; }
    double delta() const { return delta_; }
    double eta() const { return eta_; }

    /// (alpha - beta - gamma + alpha*beta - beta*gamma)/2 - eta
    double mu() const;
    /// (alpha + beta + gamma + alpha*gamma + beta*gamma)/2 + delta + eta
    double nu() const;

    /// delta/alpha + (beta+gamma)/2 + n - 1; the bracket of C_n. Requires alpha != 0.
    double c_bracket(std::size_t n) const;

    /// Degree N at which C_{N+2} vanishes identically, if delta/alpha +
    /// (beta+gamma)/2 + N + 1 = 0 holds for a nonnegative integer N within tol.
    std::optional<std::size_t> terminating_degree_candidate(double tol = 1e-12) const;

private:
    double alpha_;
    double beta_;
    double gamma_;
    double delta_;
    double eta_;
};

struct RecurrenceCoefficients {
    double a;
    double b;
    double c;
};

/// Recurrence coefficients at index n >= 1 (throws std::invalid_argument for n = 0).
RecurrenceCoefficients recurrence_coefficients(const HeunParameters& params, std::size_t n);

struct SeriesCoefficients {
    std::vector<double> values;  ///< v_0 .. v_n; v_0 == 1
    HeunParameters params;

    std::size_t size() const { return values.size(); }
    double operator[](std::size_t n) const { return values[n]; }
};

/// v_0 .. v_{n_max} by forward recurrence. Throws std::runtime_error if some
/// A_n is zero.
SeriesCoefficients series_coefficients(const HeunParameters& params, std::size_t n_max);

/// Degree N of a terminated series: C_{N+2} vanishes and
/// |v_{N+1}| <= tol * max(|v_0|..|v_N|). Needs v_{N+1} to be present.
std::optional<std::size_t> termination_degree(const SeriesCoefficients& coeffs, double tol = 1e-10);

struct HeunValue {
    double value;
    bool converged;
};

/// Sums the power series at xi with compensated accumulation. Non-terminated
/// series require |xi| < 1 (DomainError otherwise); terminated series are
/// evaluated as exact polynomials for any xi.
HeunValue evaluate(const HeunParameters& params, double xi, double tol = 1e-14,
                   std::size_t max_terms = 20000);

}  // namespace qes::heun
