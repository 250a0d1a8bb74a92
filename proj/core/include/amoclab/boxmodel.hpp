#pragma once

#include <cstddef>
#include <filesystem>
#include <vector>

#include "amoclab/density.hpp"
#include "amoclab/forcing.hpp"

namespace amoclab {

enum class Variant { Standard, Extended };

/// Full configuration of the two-box circulation model.
struct ModelConfig {
    DensityLaw density_law = DensityLaw::Linear;
    double k = 1e10;      ///< flow proportionality constant
    double area = 5e7;    ///< box surface area (m^2)
    double depth = 4000;  ///< box depth (m)
    double volume1 = 0;   ///< box 1 volume; 0 means area*depth
    double volume2 = 0;   ///< box 2 volume; 0 means area*depth
    Variant variant = Variant::Standard;
    DensityParams density;

    double v1() const { return volume1 > 0 ? volume1 : area * depth; }
    double v2() const { return volume2 > 0 ? volume2 : area * depth; }

    /// The Standard variant works on (dS, dT) with a single volume V=V1=V2;
    /// unequal volumes are rejected for it.
    void validate() const;
};

/// Per-box state of the Extended variant.
struct BoxState {
    double s1 = 0, s2 = 0;  ///< salinities (ppt)
    double t1 = 0, t2 = 0;  ///< temperatures (degC)

    void validate() const;
};

/// Difference state of the Standard variant: delta_s = S1-S2, delta_t = T1-T2.
struct DeltaState {
    double delta_s = 0;
    double delta_t = 0;

    void validate() const;
};

/// Integration time grid. Steps are floor(tau_max/dt); every output_stride-th
/// step is stored, always including tau=0 and the final step.
struct TimeGrid {
    double tau_max = 150000.0;  ///< simulated span (years)
    double dt = 0.5;            ///< step (years)
    std::size_t output_stride = 150;

    void validate() const;
    std::size_t n_steps() const;
};

enum class IntegrationMethod { Euler, RK4 };

/// Time-indexed output of integrate(). The per-box series are filled for the
/// Extended variant only; delta series are filled for both (derived from the
/// boxes in the Extended case). All filled series share one length.
struct Trajectory {
    Variant variant = Variant::Standard;
    std::vector<double> tau;
    std::vector<double> s1, s2, t1, t2;
    std::vector<double> delta_s, delta_t;
    std::vector<double> fs, ft;
    std::vector<double> q;

    std::size_t size() const { return tau.size(); }
};

/// Circulation strength q = k*(rho1 - rho2).
/// Linear law on a difference state: k*(beta*dS - alpha*dT).
double q_from_state(const DeltaState& ds, const ModelConfig& cfg);
/// Box state works with both laws; EOS-80 needs the absolute T, S per box.
double q_from_state(const BoxState& bs, const ModelConfig& cfg);

/// One explicit Euler step of the Standard-variant equations
///   d(dS)/dtau = -2*(|q|*dS + Fs)/V,  d(dT)/dtau = -2*(|q|*dT + Ft)/V
/// with |q| evaluated from the pre-step state.
DeltaState step_standard(const DeltaState& ds, double fs_value, double ft_value,
                         const ModelConfig& cfg, double dt);

/// One explicit Euler step of the Extended-variant equations. The exchange
/// and forcing terms cancel across boxes, so V1*S1+V2*S2 and V1*T1+V2*T2 are
/// conserved exactly.
BoxState step_extended(const BoxState& bs, double fs_value, double ft_value,
                       const ModelConfig& cfg, double dt);

/// Deterministic fixed-step integration of the Standard variant.
/// Throws std::runtime_error naming the offending tau if the state goes
/// non-finite.
Trajectory integrate(const ModelConfig& cfg, const ForcingSpec& fs, const ForcingSpec& ft,
                     const TimeGrid& grid, const DeltaState& initial,
                     IntegrationMethod method = IntegrationMethod::RK4);

/// Extended-variant integration.
Trajectory integrate(const ModelConfig& cfg, const ForcingSpec& fs, const ForcingSpec& ft,
                     const TimeGrid& grid, const BoxState& initial,
                     IntegrationMethod method = IntegrationMethod::RK4);

/// CSV with header tau,s1,s2,t1,t2,delta_s,delta_t,fs,ft,q; columns a variant
/// does not produce are written empty. 17 significant digits.
std::string trajectory_to_csv(const Trajectory& traj);
void write_trajectory_csv(const std::filesystem::path& path, const Trajectory& traj);
Trajectory read_trajectory_csv(const std::filesystem::path& path);

}  // namespace amoclab
