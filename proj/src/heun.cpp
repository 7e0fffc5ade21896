#include "qes/heun.hpp"

#include "qes/model.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <stdexcept>

namespace qes::heun {

namespace {

// Neumaier's variant of Kahan summation.
class CompensatedSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

}  // namespace

HeunParameters::HeunParameters(double alpha, double beta, double gamma, double delta, double eta)
    : alpha_(alpha), beta_(beta), gamma_(gamma), delta_(delta), eta_(eta) {}

double HeunParameters::mu() const {
    return 0.5 * (alpha_ - beta_ - gamma_ + alpha_ * beta_ - beta_ * gamma_) - eta_;
}

double HeunParameters::nu() const {
    return 0.5 * (alpha_ + beta_ + gamma_ + alpha_ * gamma_ + beta_ * gamma_) + delta_ + eta_;
}

double HeunParameters::c_bracket(std::size_t n) const {
    return delta_ / alpha_ + 0.5 * (beta_ + gamma_) + static_cast<double>(n) - 1.0;
}

std::optional<std::size_t> HeunParameters::terminating_degree_candidate(double tol) const {
    if (alpha_ == 0.0) return std::nullopt;
    const double x = -(delta_ / alpha_ + 0.5 * (beta_ + gamma_)) - 1.0;
    const double n = std::round(x);
    if (n < 0.0 || std::abs(x - n) > tol * std::max(1.0, std::abs(x))) return std::nullopt;
    return static_cast<std::size_t>(n);
}

RecurrenceCoefficients recurrence_coefficients(const HeunParameters& p, std::size_t n) {
    if (n == 0) throw std::invalid_argument("recurrence index must be >= 1");
    const double nn = static_cast<double>(n);
    const double n2 = nn * nn;
    const double al = p.alpha(), be = p.beta(), ga = p.gamma();
    RecurrenceCoefficients out{};
    out.a = 1.0 + be / nn;
    out.b = 1.0 + (be + ga - al - 1.0) / nn + p.eta() / n2 -
            (be + ga - al + al * be - be * ga) / (2.0 * n2);
    out.c = (al / n2) * (p.delta() / al + 0.5 * (be + ga) + nn - 1.0);
    return out;
}

SeriesCoefficients series_coefficients(const HeunParameters& params, std::size_t n_max) {
    SeriesCoefficients out{{1.0}, params};
    out.values.reserve(n_max + 1);
    for (std::size_t n = 1; n <= n_max; ++n) {
        const auto rc = recurrence_coefficients(params, n);
        if (rc.a == 0.0) throw std::runtime_error(fmt::format("recurrence coefficient A_{} vanished", n));
        const double prev2 = n >= 2 ? out.values[n - 2] : 0.0;
        out.values.push_back((rc.b * out.values[n - 1] + rc.c * prev2) / rc.a);
    }
    return out;
}

std::optional<std::size_t> termination_degree(const SeriesCoefficients& coeffs, double tol) {
    const auto candidate = coeffs.params.terminating_degree_candidate();
    if (!candidate || *candidate + 1 >= coeffs.size()) return std::nullopt;
    const std::size_t n = *candidate;
    double scale = 0.0;
    for (std::size_t k = 0; k <= n; ++k) scale = std::max(scale, std::abs(coeffs[k]));
    if (std::abs(coeffs[n + 1]) > tol * scale) return std::nullopt;
    return n;
}

HeunValue evaluate(const HeunParameters& params, double xi, double tol, std::size_t max_terms) {
    if (const auto candidate = params.terminating_degree_candidate()) {
        const auto coeffs = series_coefficients(params, *candidate + 1);
        if (const auto degree = termination_degree(coeffs)) {
            CompensatedSum sum;
            double power = 1.0;
            for (std::size_t n = 0; n <= *degree; ++n) {
                sum.add(coeffs[n] * power);
                power *= xi;
            }
            return {sum.value(), true};
        }
    }
    if (!(std::abs(xi) < 1.0)) {
        throw DomainError(fmt::format("series for a non-terminating Heun function diverges at |xi| = {}", std::abs(xi)));
    }

    CompensatedSum sum;
    sum.add(1.0);
    double v_prev2 = 0.0;
    double v_prev = 1.0;
    double power = 1.0;
    int small_run = 0;
    for (std::size_t n = 1; n < max_terms; ++n) {
        const auto rc = recurrence_coefficients(params, n);
        const double v = (rc.b * v_prev + rc.c * v_prev2) / rc.a;
        power *= xi;
        const double term = v * power;
        sum.add(term);
        v_prev2 = v_prev;
        v_prev = v;
        // Require two consecutive negligible terms: a single coefficient can
        // pass through zero while the tail is still significant.
        if (std::abs(term) <= tol * std::max(std::abs(sum.value()), 1e-300)) {
            if (++small_run >= 2) return {sum.value(), true};
        } else {
            small_run = 0;
        }
    }
    return {sum.value(), false};
}

}  // namespace qes::heun
