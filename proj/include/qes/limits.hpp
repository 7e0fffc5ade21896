// Closed-form spectra in the two limits of the screening length:
// d -> 0 (inverse-square e-e repulsion) and d -> infinity (harmonic e-e
// interaction with a renormalized oscillator strength).
#pragma once

#include "qes/model.hpp"

#include <optional>
#include <vector>

namespace qes::limits {

enum class Regime { SmallD, LargeD };

const char* to_string(Regime r);

struct LimitSpectrumEntry {
    int n_r = 0;
    int l_r = 0;
    double energy = 0.0;
    Regime regime = Regime::SmallD;
    std::optional<double> gamma_renorm;  ///< 1 - g b^4 / d^4, large-d only
};

/// (1/b^2) (1 + 2 n_r + sqrt(g + (l_r + 1/2)^2)). DomainError if the root argument is negative.
double small_d_energy(int n_r, int l_r, double g, double b);

/// Coupling at which (n_r, l_r) and (n_r', l_r') are degenerate in the
/// small-d limit, or nullopt if no admissible g makes them degenerate.
std::optional<double> small_d_degeneracy_g(int n_r, int l_r, int n_r2, int l_r2);

/// 1 - g b^4 / d^4
double gamma_renorm(const AtomParameters& atom);

/// g/(2 d^2) + sqrt(gamma)/(2 b^2) (3 + 4 n_r + 2 l_r). DomainError if gamma <= 0.
double large_d_energy(int n_r, int l_r, const AtomParameters& atom);

/// 2 (n_r - n_r') + (l_r - l_r') == 0
bool large_d_degenerate(int n_r, int l_r, int n_r2, int l_r2);

/// One energy level with every (n_r, l_r) state that shares it.
struct Level {
    double energy = 0.0;
    std::vector<LimitSpectrumEntry> states;
};

/// Lowest `levels` distinct levels, ascending. States are grouped when their
/// energies agree to 1e-12 relative.
std::vector<Level> small_d_spectrum(double g, double b, int levels);
std::vector<Level> large_d_spectrum(const AtomParameters& atom, int levels);

}  // namespace qes::limits
