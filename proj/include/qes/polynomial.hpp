// Dense real polynomials in the monomial basis, lowest degree first.
#pragma once

#include <complex>
#include <span>
#include <vector>

namespace qes {

class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<double> coefficients);

    static Polynomial constant(double c) { return Polynomial({c}); }
    /// x + shift
    static Polynomial linear(double shift) { return Polynomial({shift, 1.0}); }

    /// Degree after ignoring exactly-zero leading coefficients; 0 for the zero polynomial.
    int degree() const;
    std::span<const double> coefficients() const { return coeffs_; }
    double coefficient(int k) const;

    double operator()(double x) const;
    Polynomial derivative() const;

    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial operator*(double scale) const;

private:
    void trim();
    std::vector<double> coeffs_{0.0};
};

/// All complex roots via eigenvalues of the companion matrix.
std::vector<std::complex<double>> companion_roots(const Polynomial& p);

/// Newton iteration on a real root estimate; stops when the step falls below
/// tol * max(1, |x|) or after max_iter steps.
double newton_polish(const Polynomial& p, double x, double tol = 1e-14, int max_iter = 50);

}  // namespace qes
