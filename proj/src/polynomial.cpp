#include "qes/polynomial.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qes {

Polynomial::Polynomial(std::vector<double> coefficients) : coeffs_(std::move(coefficients)) {
    if (coeffs_.empty()) coeffs_.push_back(0.0);
    trim();
}

void Polynomial::trim() {
    while (coeffs_.size() > 1 && coeffs_.back() == 0.0) coeffs_.pop_back();
}

int Polynomial::degree() const { return static_cast<int>(coeffs_.size()) - 1; }

double Polynomial::coefficient(int k) const {
    if (k < 0 || k > degree()) return 0.0;
    return coeffs_[static_cast<std::size_t>(k)];
}

double Polynomial::operator()(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return Polynomial::constant(0.0);
    std::vector<double> out(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) out[k - 1] = static_cast<double>(k) * coeffs_[k];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    std::vector<double> out(std::max(coeffs_.size(), other.coeffs_.size()), 0.0);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) out[k] += coeffs_[k];
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k) out[k] += other.coeffs_[k];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& other) const { return *this + other * -1.0; }

Polynomial Polynomial::operator*(const Polynomial& other) const {
    std::vector<double> out(coeffs_.size() + other.coeffs_.size() - 1, 0.0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(double scale) const {
    std::vector<double> out = coeffs_;
    for (double& c : out) c *= scale;
    return Polynomial(std::move(out));
}

std::vector<std::complex<double>> companion_roots(const Polynomial& p) {
    const int n = p.degree();
    if (n < 1) return {};
    const double lead = p.coefficient(n);
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
    for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) companion(i, n - 1) = -p.coefficient(i) / lead;

    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success) throw std::runtime_error("companion eigenvalue solve failed");
    const auto& ev = solver.eigenvalues();
    std::vector<std::complex<double>> roots(ev.data(), ev.data() + ev.size());
    std::sort(roots.begin(), roots.end(), [](auto a, auto b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    return roots;
}

double newton_polish(const Polynomial& p, double x, double tol, int max_iter) {
    const Polynomial dp = p.derivative();
    for (int it = 0; it < max_iter; ++it) {
        const double slope = dp(x);
        if (slope == 0.0) break;
        const double step = p(x) / slope;
        x -= step;
        if (std::abs(step) <= tol * std::max(1.0, std::abs(x))) break;
    }
    return x;
}

}  // namespace qes
