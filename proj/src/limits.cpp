#include "qes/limits.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fmt/format.h>

namespace qes::limits {

const char* to_string(Regime r) { return r == Regime::SmallD ? "small-d" : "large-d"; }

namespace {

void check_state(int n_r, int l_r) {
    if (n_r < 0 || l_r < 0) throw DomainError("n_r and l_r must be nonnegative");
}

bool same_level(double a, double b) { return std::abs(a - b) <= 1e-12 * std::max({1.0, std::abs(a), std::abs(b)}); }

std::vector<Level> group_levels(std::vector<LimitSpectrumEntry> entries, int levels) {
    std::stable_sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
        return a.energy != b.energy ? a.energy < b.energy : a.n_r > b.n_r;
    });
    std::vector<Level> out;
    for (auto& e : entries) {
        if (out.empty() || !same_level(out.back().energy, e.energy)) {
            if (static_cast<int>(out.size()) == levels) break;
            out.push_back({e.energy, {}});
        }
        out.back().states.push_back(e);
    }
    return out;
}

}  // namespace

double small_d_energy(int n_r, int l_r, double g, double b) {
    check_state(n_r, l_r);
    if (!(b > 0.0) || !std::isfinite(b)) throw DomainError(fmt::format("b must be positive and finite, got {}", b));
    const double arg = g + (l_r + 0.5) * (l_r + 0.5);
    if (arg < 0.0)
        throw DomainError(fmt::format("g = {} is below -(l_r + 1/2)^2 = {}: fall to center", g, -(l_r + 0.5) * (l_r + 0.5)));
    return (1.0 + 2.0 * n_r + std::sqrt(arg)) / (b * b);
}

std::optional<double> small_d_degeneracy_g(int n_r, int l_r, int n_r2, int l_r2) {
    check_state(n_r, l_r);
    check_state(n_r2, l_r2);
    const double dn = n_r - n_r2;
    const double dl = l_r - l_r2;
    if (dn == 0.0) return std::nullopt;
    const double sum = l_r + l_r2 + 1.0;
    const double g = (dl * dl - 4.0 * dn * dn) / (16.0 * dn * dn) * (sum * sum - 4.0 * dn * dn);
    // The closed form also returns couplings where the square roots differ by
    // -2 dn instead of +2 dn; only keep those that really close the gap.
    const double lowest = std::min((l_r + 0.5) * (l_r + 0.5), (l_r2 + 0.5) * (l_r2 + 0.5));
    if (g + lowest < 0.0) return std::nullopt;
    if (!same_level(small_d_energy(n_r, l_r, g, 1.0), small_d_energy(n_r2, l_r2, g, 1.0))) return std::nullopt;
    return g;
}

double gamma_renorm(const AtomParameters& atom) {
    const double ratio = atom.b / atom.d;
    return 1.0 - atom.g * std::pow(ratio, 4);
}

double large_d_energy(int n_r, int l_r, const AtomParameters& atom) {
    check_state(n_r, l_r);
    atom.validate();
    const double gamma = gamma_renorm(atom);
    if (!(gamma > 0.0))
        throw DomainError(fmt::format("renormalized oscillator strength 1 - g b^4/d^4 = {} is not positive", gamma));
    return atom.g / (2.0 * atom.d * atom.d) + std::sqrt(gamma) / (2.0 * atom.b * atom.b) * (3.0 + 4.0 * n_r + 2.0 * l_r);
}

bool large_d_degenerate(int n_r, int l_r, int n_r2, int l_r2) { return 2 * (n_r - n_r2) + (l_r - l_r2) == 0; }

std::vector<Level> small_d_spectrum(double g, double b, int levels) {
    if (levels < 1) throw DomainError("levels must be >= 1");
    std::vector<LimitSpectrumEntry> entries;
    // Energy grows in both quantum numbers, so the lowest `levels` levels use n_r, l_r < levels.
    for (int n = 0; n < levels; ++n)
        for (int l = 0; l < levels; ++l) entries.push_back({n, l, small_d_energy(n, l, g, b), Regime::SmallD, {}});
    return group_levels(std::move(entries), levels);
}

std::vector<Level> large_d_spectrum(const AtomParameters& atom, int levels) {
    if (levels < 1) throw DomainError("levels must be >= 1");
    const double gamma = gamma_renorm(atom);
    std::vector<LimitSpectrumEntry> entries;
    for (int n = 0; n < levels; ++n)
        for (int l = 0; l < 2 * levels; ++l)
            entries.push_back({n, l, large_d_energy(n, l, atom), Regime::LargeD, gamma});
    return group_levels(std::move(entries), levels);
}

}  // namespace qes::limits
