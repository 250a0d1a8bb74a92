#pragma once

#include <string>

namespace amoclab {

enum class ForcingKind { Zero, Linear, SinusoidStationary, SinusoidNonstationary };

/// Parametric forcing generator. Time enters either as the ramp fraction
/// tau/tau_max (Linear, amplitude growth) or as the sinusoid phase
/// 2*pi*tau/period.
struct ForcingSpec {
    ForcingKind kind = ForcingKind::Zero;
    double base = 0.0;        ///< constant offset
    double slope = 0.0;       ///< Linear: total change over [0, tau_max]
    double amplitude = 0.0;   ///< sinusoid amplitude
    double period = 1.0;      ///< sinusoid period (years)
    double amp_growth = 0.0;  ///< fractional amplitude growth over [0, tau_max]

    void validate() const;
};

/// Evaluates a forcing at time tau. Requires 0 <= tau <= tau_max.
///   Zero                  -> 0
///   Linear                -> base + slope * (tau / tau_max)
///   SinusoidStationary    -> base + amplitude * sin(2*pi*tau/period)
///   SinusoidNonstationary -> base + amplitude * (1 + amp_growth*tau/tau_max)
///                                 * sin(2*pi*tau/period)
double eval_forcing(const ForcingSpec& spec, double tau, double tau_max);

enum class ScenarioId { F1, F2, F3, F4, F5, F6 };

std::string to_string(ScenarioId id);
ScenarioId parse_scenario_id(const std::string& name);

std::string to_string(ForcingKind kind);

}  // namespace amoclab
