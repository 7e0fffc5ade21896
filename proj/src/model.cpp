#include "qes/model.hpp"

#include <cmath>
#include <fmt/format.h>

namespace qes {

NucleusMass NucleusMass::finite(double mass) {
    if (!(mass > 0.0) || !std::isfinite(mass)) {
        throw DomainError(fmt::format("nucleus mass must be positive and finite, got {}", mass));
    }
    return NucleusMass(mass);
}

double NucleusMass::value() const {
    if (infinite_) throw std::logic_error("infinite nucleus mass has no finite value");
    return mass_;
}

std::string NucleusMass::to_string() const {
    return infinite_ ? std::string("inf") : fmt::format("{:.12g}", mass_);
}

void AtomParameters::validate() const {
    if (!(b > 0.0) || !std::isfinite(b)) throw DomainError(fmt::format("b must be positive, got {}", b));
    if (!(d > 0.0) || !std::isfinite(d)) throw DomainError(fmt::format("d must be positive, got {}", d));
    if (!std::isfinite(g)) throw DomainError("g must be finite");
}

double relative_potential(double r, const AtomParameters& atom) {
    const double b2 = atom.b * atom.b;
    return r * r / (2.0 * b2 * b2) + 0.5 * atom.g / (r * r + atom.d * atom.d);
}

double electron_interaction(double r12, const AtomParameters& atom) {
    return atom.g / (r12 * r12 + 2.0 * atom.d * atom.d);
}

}  // namespace qes
