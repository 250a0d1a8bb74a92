#pragma once

#include <optional>
#include <string>
#include <variant>

#include "amoclab/boxmodel.hpp"
#include "amoclab/forcing.hpp"

namespace amoclab {

/// Optional overrides applied on top of a scenario's defaults. Every
/// numeric knob a config file or CLI flag can set lives here.
struct ScenarioOverrides {
    std::optional<double> tau_max, dt;
    std::optional<std::size_t> output_stride;
    std::optional<double> k, area, depth, volume1, volume2;
    std::optional<double> rho0, t0, s0, alpha, beta;
    std::optional<double> s1, s2, t1, t2;  ///< initial state (Extended)
    std::optional<double> delta_s, delta_t;  ///< initial state (Standard)
    std::optional<double> fs_base, fs_slope, fs_amplitude, fs_period, fs_amp_growth;
    std::optional<double> ft_base, ft_slope, ft_amplitude, ft_period, ft_amp_growth;
};

/// A fully bound experiment configuration: model, both forcings, grid and
/// initial state.
struct ScenarioSetup {
    ScenarioId id = ScenarioId::F1;
    ModelConfig model;
    ForcingSpec fs;
    ForcingSpec ft;
    TimeGrid grid;
    std::variant<DeltaState, BoxState> initial;

    Trajectory run(IntegrationMethod method = IntegrationMethod::RK4) const;

    /// key=value lines naming every resolved field; echoed by the CLI so
    /// each run is self-describing.
    std::string describe() const;
};

/// Binds one of the six forcing setups:
///   F1..F3 use the Standard variant with the linear density law and Ft = 0;
///   F4..F6 use the Extended variant with EOS-80 and a matching-kind Ft.
/// F1/F4 are linear ramps, F2/F5 stationary sinusoids, F3/F6 nonstationary
/// sinusoids. The forcing magnitudes are implementation defaults chosen so
/// that F1's ramp crosses the circulation collapse threshold within tau_max
/// and the sinusoidal setups cycle through repeated collapse and recovery.
ScenarioSetup scenario(ScenarioId id, const ScenarioOverrides& overrides = {});

}  // namespace amoclab
