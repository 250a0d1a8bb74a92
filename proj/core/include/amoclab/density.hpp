#pragma once

namespace amoclab {

/// Parameters of the linearized seawater density law
///   rho(T, S) = rho0 - alpha*(T - T0) + beta*(S - S0).
struct DensityParams {
    double rho0 = 1027.0;  ///< baseline density (kg/m^3)
    double t0 = 24.0;      ///< reference temperature (degC)
    double s0 = 35.0;      ///< reference salinity (ppt)
    double alpha = 0.2;    ///< thermal expansion coefficient
    double beta = 0.8;     ///< haline contraction coefficient

    void validate() const;
};

enum class DensityLaw { Linear, Eos80 };

/// Linear density law. Throws std::domain_error on non-finite input.
double rho_linear(double t, double s, const DensityParams& p);

/// One-atmosphere EOS-80 seawater density (UNESCO polynomial): pure-water
/// quintic in T plus S, S^1.5 and S^2 salinity terms. Valid for
/// t in [0, 40] degC and s in [0, 42] ppt; out-of-range input throws
/// std::domain_error rather than extrapolating.
double rho_eos80(double t, double s);

}  // namespace amoclab
