// Physical model of the two-electron atom: harmonic electron-nucleus
// confinement with strength set by b, and a screened, regularized
// electron-electron repulsion g / (r12^2 + 2 d^2). Atomic units throughout.
#pragma once

#include <Eigen/Core>

#include <stdexcept>
#include <string>

namespace qes {

using Vec3 = Eigen::Vector3d;

/// Raised when an input lies outside the domain of a formula.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised when an iterative or adaptive numerical procedure fails to converge.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Nucleus mass in units of the electron mass. The infinite-mass limit is a
/// distinct state rather than a large number, so 1/M terms vanish exactly.
class NucleusMass {
public:
    static NucleusMass infinite() { return NucleusMass{}; }
    static NucleusMass finite(double mass);

    bool is_infinite() const { return infinite_; }
    /// Throws std::logic_error for the infinite variant.
    double value() const;
    /// 1 + 2/M, which is exactly 1 for an infinitely heavy nucleus.
    double mass_factor() const { return infinite_ ? 1.0 : 1.0 + 2.0 / mass_; }

    std::string to_string() const;

private:
    NucleusMass() = default;
    explicit NucleusMass(double mass) : infinite_(false), mass_(mass) {}

    bool infinite_ = true;
    double mass_ = 0.0;
};

struct AtomParameters {
    double b = 1.0;  ///< harmonic confinement length
    double d = 1.0;  ///< screening length of the e-e interaction
    double g = 0.0;  ///< e-e coupling constant
    NucleusMass M = NucleusMass::infinite();

    /// Throws DomainError unless b > 0 and d > 0.
    void validate() const;

    double d_over_b() const { return d / b; }
};

/// Potential of the relative-motion Hamiltonian,
/// r^2 / (2 b^4) + (g/2) / (r^2 + d^2).
double relative_potential(double r, const AtomParameters& atom);

/// Electron-electron interaction g / (r12^2 + 2 d^2).
double electron_interaction(double r12, const AtomParameters& atom);

}  // namespace qes
