#include "qes/atom.hpp"

#include "qes/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <stdexcept>

namespace qes::atom {

void QuantumNumbers::validate() const {
    if (n_s < 0 || l_s < 0 || n_r < 0 || l_r < 0) throw DomainError("n and l quantum numbers must be nonnegative");
    if (std::abs(m_s) > l_s || std::abs(m_r) > l_r) throw DomainError("|m| must not exceed l");
}

JacobiCoordinates jacobi_transform(const Vec3& r1, const Vec3& r2, const Vec3& r3, const NucleusMass& M) {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    JacobiCoordinates out;
    if (M.is_infinite()) {
        out.R = r3;
    } else {
        const double m = M.value();
        out.R = (r1 + r2 + m * r3) / (2.0 + m);
    }
    out.S = inv_sqrt2 * (r1 + r2 - 2.0 * r3);
    out.r = inv_sqrt2 * (r1 - r2);
    return out;
}

double quantized_energy(int N, int l_r, double b) {
    if (N < 1) throw DomainError(fmt::format("termination class N must be >= 1, got {}", N));
    if (l_r < 0) throw DomainError("l_r must be nonnegative");
    return (7.0 + 2.0 * l_r + 4.0 * N) / (2.0 * b * b);
}

heun::HeunParameters heun_parameters(const AtomParameters& atom, int l_r, double energy_r) {
    atom.validate();
    const double k2d2 = 2.0 * energy_r * atom.d * atom.d;
    const double alpha = atom.d * atom.d / (atom.b * atom.b);
    const double beta = 0.5 + l_r;
    heun::HeunParameters params(alpha, beta, 1.0, -0.25 * k2d2, 0.5 + 0.25 * (k2d2 - atom.g));

    const double mu_direct = 0.25 * (atom.g - k2d2) + (l_r + 1.5) * (0.5 * alpha - 1.0);
    const double nu_direct = 1.5 + l_r + alpha - 0.25 * atom.g;
    const auto mismatch = [](double x, double y) {
        return std::abs(x - y) > 1e-12 * std::max({1.0, std::abs(x), std::abs(y)});
    };
    if (mismatch(params.mu(), mu_direct) || mismatch(params.nu(), nu_direct)) {
        throw std::logic_error(fmt::format("Heun parameterizations disagree: mu {} vs {}, nu {} vs {}", params.mu(),
                                           mu_direct, params.nu(), nu_direct));
    }
    return params;
}

double mu_of_g(int N, int l_r, double d_over_b, double g) {
    const double alpha = d_over_b * d_over_b;
    return 0.25 * (g - (7.0 + 2.0 * l_r + 4.0 * N) * alpha) + (l_r + 1.5) * (0.5 * alpha - 1.0);
}

double g_of_mu(int N, int l_r, double d_over_b, double mu) {
    const double alpha = d_over_b * d_over_b;
    return 4.0 * (mu - (l_r + 1.5) * (0.5 * alpha - 1.0)) + (7.0 + 2.0 * l_r + 4.0 * N) * alpha;
}

namespace {

struct TridiagonalEntries {
    std::vector<double> diag_shift;  // diagonal minus mu
    std::vector<double> super;       // (k, k+1)
    std::vector<double> sub;         // (k, k-1), index k
};

TridiagonalEntries termination_entries(int N, int l_r, double d_over_b) {
    if (N < 1) throw DomainError(fmt::format("termination class N must be >= 1, got {}", N));
    if (l_r < 0) throw DomainError("l_r must be nonnegative");
    const double alpha = d_over_b * d_over_b;
    TridiagonalEntries e;
    for (int k = 0; k <= N; ++k) {
        e.diag_shift.push_back(k * alpha - k * (k + l_r + 2.5));
        e.super.push_back((k + 1) * (k + 1.5 + l_r));
        e.sub.push_back((N + 1 - k) * alpha);
    }
    return e;
}

}  // namespace

Eigen::MatrixXd termination_matrix(int N, int l_r, double d_over_b, double mu) {
    const auto e = termination_entries(N, l_r, d_over_b);
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(N + 1, N + 1);
    for (int k = 0; k <= N; ++k) {
        m(k, k) = e.diag_shift[k] + mu;
        if (k < N) m(k, k + 1) = e.super[k];
        if (k > 0) m(k, k - 1) = e.sub[k];
    }
    return m;
}

Polynomial termination_polynomial(int N, int l_r, double d_over_b) {
    const auto e = termination_entries(N, l_r, d_over_b);
    Polynomial prev2 = Polynomial::constant(1.0);
    Polynomial prev = Polynomial::linear(e.diag_shift[0]);
    for (int k = 1; k <= N; ++k) {
        Polynomial next = Polynomial::linear(e.diag_shift[k]) * prev - prev2 * (e.sub[k] * e.super[k - 1]);
        prev2 = std::move(prev);
        prev = std::move(next);
    }
    return prev;
}

double termination_determinant(int N, int l_r, double d_over_b, double mu) {
    const auto e = termination_entries(N, l_r, d_over_b);
    double prev2 = 1.0;
    double prev = e.diag_shift[0] + mu;
    for (int k = 1; k <= N; ++k) {
        const double next = (e.diag_shift[k] + mu) * prev - e.sub[k] * e.super[k - 1] * prev2;
        prev2 = prev;
        prev = next;
    }
    return prev;
}

std::vector<double> solve_g(int N, int l_r, double b, double d) {
    AtomParameters{b, d, 0.0}.validate();
    const double d_over_b = d / b;
    const Polynomial det = termination_polynomial(N, l_r, d_over_b);
    const auto roots = companion_roots(det);

    std::vector<std::complex<double>> complex_roots;
    std::vector<double> g_roots;
    for (const auto& z : roots) {
        if (std::abs(z.imag()) > 1e-9 * std::max(1.0, std::abs(z.real()))) {
            complex_roots.push_back(z);
            continue;
        }
        const double mu = newton_polish(det, z.real(), 1e-15);
        g_roots.push_back(g_of_mu(N, l_r, d_over_b, mu));
    }
    if (!complex_roots.empty()) {
        std::string list;
        for (const auto& z : complex_roots) list += fmt::format(" ({:.12g}{:+.12g}i)", z.real(), z.imag());
        throw ComplexRootsError(
            fmt::format("termination determinant for N={}, l_r={}, d/b={} has complex mu roots:{}", N, l_r, d_over_b, list),
            complex_roots);
    }
    std::sort(g_roots.begin(), g_roots.end());
    return g_roots;
}

Symmetry classify_symmetry(int l_r) {
    if (l_r < 0) throw DomainError("l_r must be nonnegative");
    return l_r % 2 == 0 ? Symmetry::Singlet : Symmetry::Triplet;
}

const char* to_string(Symmetry s) { return s == Symmetry::Singlet ? "singlet" : "triplet"; }

namespace {

// (r/d)^l (1 + z) P_N(z) / d^{3/2} as a polynomial in r.
Polynomial radial_factor(const PolynomialSolution& sol) {
    const double d = sol.atom.d;
    const double inv_d2 = 1.0 / (d * d);
    std::vector<double> p(2 * sol.coefficients.size() - 1, 0.0);
    double scale = 1.0;
    for (std::size_t n = 0; n < sol.coefficients.size(); ++n) {
        p[2 * n] = (n % 2 == 0 ? 1.0 : -1.0) * sol.coefficients[n] * scale;
        scale *= inv_d2;
    }
    std::vector<double> lead(static_cast<std::size_t>(sol.l_r) + 1, 0.0);
    lead.back() = std::pow(d, -sol.l_r - 1.5);
    return Polynomial(std::move(lead)) * Polynomial({1.0, 0.0, inv_d2}) * Polynomial(std::move(p));
}

}  // namespace

double PolynomialSolution::polynomial(double z) const {
    double acc = 0.0;
    for (std::size_t n = coefficients.size(); n-- > 0;) acc = acc * (-z) + coefficients[n];
    return acc;
}

double PolynomialSolution::shape(double r) const {
    const double z = r * r / (atom.d * atom.d);
    return std::pow(r / atom.d, l_r) * (1.0 + z) * polynomial(z) * std::exp(-r * r / (2.0 * atom.b * atom.b)) /
           std::pow(atom.d, 1.5);
}

RadialDerivatives PolynomialSolution::derivatives(double r) const {
    const Polynomial f = radial_factor(*this);
    const Polynomial df = f.derivative();
    const Polynomial d2f = df.derivative();
    const double inv_b2 = 1.0 / (atom.b * atom.b);
    const double gauss = normalization * std::exp(-0.5 * r * r * inv_b2);
    const double fv = f(r), dfv = df(r), d2fv = d2f(r);
    return {fv * gauss, (dfv - r * inv_b2 * fv) * gauss,
            (d2fv - 2.0 * r * inv_b2 * dfv - inv_b2 * fv + r * r * inv_b2 * inv_b2 * fv) * gauss};
}

double PolynomialSolution::ode_residual(double r) const {
    if (!(r > 0.0)) throw DomainError("radial residual is evaluated at r > 0");
    const auto [R, dR, d2R] = derivatives(r);
    const double b4 = std::pow(atom.b, 4);
    const double terms[] = {d2R,
                            2.0 * dR / r,
                            2.0 * energy_r * R,
                            -r * r / b4 * R,
                            -atom.g / (r * r + atom.d * atom.d) * R,
                            -l_r * (l_r + 1.0) / (r * r) * R};
    double sum = 0.0, scale = 0.0;
    for (double t : terms) {
        sum += t;
        scale = std::max(scale, std::abs(t));
    }
    return scale == 0.0 ? 0.0 : std::abs(sum) / scale;
}

int count_positive_roots(const Polynomial& p_of_z) {
    std::vector<double> positive;
    for (const auto& z : companion_roots(p_of_z)) {
        if (std::abs(z.imag()) > 1e-9 * std::max(1.0, std::abs(z.real()))) continue;
        if (z.real() > 0.0) positive.push_back(z.real());
    }
    std::sort(positive.begin(), positive.end());
    const auto last = std::unique(positive.begin(), positive.end(),
                                  [](double a, double b) { return std::abs(a - b) <= 1e-8 * std::max(1.0, b); });
    return static_cast<int>(last - positive.begin());
}

PolynomialSolution radial_solution(int N, int l_r, double b, double d, double g_root) {
    const AtomParameters atom{b, d, g_root, NucleusMass::infinite()};
    const double energy = quantized_energy(N, l_r, b);
    auto coeffs = heun::series_coefficients(heun_parameters(atom, l_r, energy), static_cast<std::size_t>(N) + 2);
    const auto degree = heun::termination_degree(coeffs);
    if (!degree || *degree != static_cast<std::size_t>(N)) {
        throw DomainError(fmt::format("Heun series does not terminate at degree {} for g = {:.15g} (|v_{}| = {:.3g})", N,
                                      g_root, N + 1, std::abs(coeffs[static_cast<std::size_t>(N) + 1])));
    }
    coeffs.values.resize(static_cast<std::size_t>(N) + 1);

    std::vector<double> pz(coeffs.values);
    for (std::size_t n = 1; n < pz.size(); n += 2) pz[n] = -pz[n];
    const int nodes = count_positive_roots(Polynomial(std::move(pz)));

    return normalize_radial(PolynomialSolution{.N = N,
                                               .l_r = l_r,
                                               .energy_r = energy,
                                               .g_root = g_root,
                                               .coefficients = std::move(coeffs),
                                               .n_r = nodes,
                                               .normalization = 1.0,
                                               .atom = atom});
}

PolynomialSolution normalize_radial(PolynomialSolution sol) {
    const double integral = oracle::quadrature(
        [&](double r) {
            const double R = sol.shape(r);
            return R * R * r * r;
        },
        0.0, oracle::infinity, 1e-13);
    if (!(integral > 0.0)) throw ConvergenceError("radial norm integral is not positive");
    sol.normalization = 1.0 / std::sqrt(integral);
    return sol;
}

double center_of_mass_energy(const Vec3& K, const NucleusMass& M) {
    if (M.is_infinite()) return 0.0;
    return K.squaredNorm() / (2.0 * M.value() * M.mass_factor());
}

double pseudorelative_energy(const NucleusMass& M, double b, int n_s, int l_s) {
    if (n_s < 0 || l_s < 0) throw DomainError("n_s and l_s must be nonnegative");
    return std::sqrt(M.mass_factor()) * (3.0 + 4.0 * n_s + 2.0 * l_s) / (2.0 * b * b);
}

double assemble_total_energy(const Vec3& K, const NucleusMass& M, double b, int n_s, int l_s, double energy_r) {
    return center_of_mass_energy(K, M) + pseudorelative_energy(M, b, n_s, l_s) + energy_r;
}

}  // namespace qes::atom
