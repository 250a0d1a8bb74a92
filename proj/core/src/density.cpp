#include "amoclab/density.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace amoclab {

void DensityParams::validate() const {
    if (!(rho0 > 0.0)) throw std::invalid_argument("DensityParams: rho0 must be > 0");
    if (!(alpha > 0.0)) throw std::invalid_argument("DensityParams: alpha must be > 0");
    if (!(beta > 0.0)) throw std::invalid_argument("DensityParams: beta must be > 0");
}

double rho_linear(double t, double s, const DensityParams& p) {
    if (!std::isfinite(t) || !std::isfinite(s)) {
        throw std::domain_error("rho_linear: non-finite input");
    }
    return p.rho0 - p.alpha * (t - p.t0) + p.beta * (s - p.s0);
}

double rho_eos80(double t, double s) {
    if (!std::isfinite(t) || !std::isfinite(s) || t < 0.0 || t > 40.0 || s < 0.0 || s > 42.0) {
        throw std::domain_error("rho_eos80: (t=" + std::to_string(t) + ", s=" + std::to_string(s) +
                                ") outside validity range t in [0,40], s in [0,42]");
    }

    // Density of Standard Mean Ocean Water (pure-water limit).
    const double rho_w = 999.842594 +
                         t * (6.793952e-2 +
                              t * (-9.095290e-3 +
                                   t * (1.001685e-4 + t * (-1.120083e-6 + t * 6.536332e-9))));

    const double a = 8.24493e-1 +
                     t * (-4.0899e-3 + t * (7.6438e-5 + t * (-8.2467e-7 + t * 5.3875e-9)));
    const double b = -5.72466e-3 + t * (1.0227e-4 + t * (-1.6546e-6));
    const double c = 4.8314e-4;

    return rho_w + a * s + b * s * std::sqrt(s) + c * s * s;
}

}  // namespace amoclab
