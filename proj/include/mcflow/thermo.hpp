#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mcflow/errors.hpp"

namespace mcflow {

// Per-species constants for the stiffened gas law p + gamma*p_inf = (gamma-1)*rho*e.
// p_inf = 0 recovers the perfect gas exactly.
struct GasComponent {
    double gamma = 1.4;   // ratio of specific heats, > 1
    double cv = 1.0;      // specific heat at constant volume, > 0
    double p_inf = 0.0;   // stiffening pressure, >= 0
};

struct GasPair {
    GasComponent g1, g2;
};

// Mixture-level EOS parameters. For the mass-fraction model p_inf stays 0;
// the gamma-based model carries the reconstructed mixture values.
struct MixtureThermo {
    double gamma = 1.4;
    double p_inf = 0.0;
};

inline void validate(const GasComponent& g) {
    if (!(g.gamma > 1.0))
        throw std::invalid_argument("GasComponent: gamma must be > 1");
    if (!(g.cv > 0.0))
        throw std::invalid_argument("GasComponent: cv must be > 0");
    if (!(g.p_inf >= 0.0))
        throw std::invalid_argument("GasComponent: p_inf must be >= 0");
}

// cv-weighted mixture ratio of specific heats,
//   gamma = (y1*g1*cv1 + (1-y1)*g2*cv2) / (y1*cv1 + (1-y1)*cv2).
// Endpoints and the equal-gamma case return the species value bitwise; the
// general result is clamped into [min(g1,g2), max(g1,g2)].
inline double mixture_gamma(double y1, const GasComponent& g1, const GasComponent& g2) {
    if (g1.gamma == g2.gamma) return g1.gamma;
    const double w1 = y1 * g1.cv;
    const double w2 = (1.0 - y1) * g2.cv;
    const double den = w1 + w2;
    if (!(den > 0.0))
        throw std::domain_error("mixture_gamma: non-positive cv weighting (corrupted state)");
    if (w1 == 0.0) return g2.gamma;
    if (w2 == 0.0) return g1.gamma;
    const double lo = std::min(g1.gamma, g2.gamma);
    const double hi = std::max(g1.gamma, g2.gamma);
    return std::clamp((w1 * g1.gamma + w2 * g2.gamma) / den, lo, hi);
}

// p = (gamma-1)*rho*e - gamma*p_inf. May legitimately return p <= 0 for
// liquids under tension; callers decide.
inline double pressure_from_internal_energy(double rho, double e, const MixtureThermo& th) {
    return (th.gamma - 1.0) * rho * e - th.gamma * th.p_inf;
}

// e = (p + gamma*p_inf) / ((gamma-1)*rho); inverse of the above.
inline double internal_energy_from_pressure(double rho, double p, const MixtureThermo& th) {
    if (!(th.gamma > 1.0))
        throw std::domain_error("internal_energy_from_pressure: gamma <= 1");
    return (p + th.gamma * th.p_inf) / ((th.gamma - 1.0) * rho);
}

// a = sqrt(gamma*(p + p_inf)/rho); reduces to sqrt(gamma*p/rho) when p_inf = 0.
inline double sound_speed(double rho, double p, const MixtureThermo& th) {
    const double radicand = th.gamma * (p + th.p_inf) / rho;
    if (!(radicand > 0.0))
        throw UnphysicalStateError("sound_speed: non-positive radicand (unphysical state)");
    return std::sqrt(radicand);
}

}  // namespace mcflow
