#include "amoclab/forcing.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "amoclab/io.hpp"
#include "amoclab/scenario.hpp"

namespace amoclab {

void ForcingSpec::validate() const {
    const bool sinusoid =
        kind == ForcingKind::SinusoidStationary || kind == ForcingKind::SinusoidNonstationary;
    if (sinusoid && !(period > 0.0)) {
        throw std::invalid_argument("ForcingSpec: sinusoid period must be > 0");
    }
    if (amp_growth < 0.0) throw std::invalid_argument("ForcingSpec: amp_growth must be >= 0");
}

double eval_forcing(const ForcingSpec& spec, double tau, double tau_max) {
    if (!(tau >= 0.0) || !(tau <= tau_max)) {
        throw std::domain_error("eval_forcing: tau=" + format_g17(tau) + " outside [0, " +
                                format_g17(tau_max) + "]");
    }
    switch (spec.kind) {
        case ForcingKind::Zero:
            return 0.0;
        case ForcingKind::Linear:
            return spec.base + spec.slope * (tau / tau_max);
        case ForcingKind::SinusoidStationary:
            return spec.base +
                   spec.amplitude * std::sin(2.0 * std::numbers::pi * tau / spec.period);
        case ForcingKind::SinusoidNonstationary:
            return spec.base + spec.amplitude * (1.0 + spec.amp_growth * tau / tau_max) *
                                   std::sin(2.0 * std::numbers::pi * tau / spec.period);
    }
    throw std::invalid_argument("eval_forcing: unknown forcing kind");
}

std::string to_string(ScenarioId id) {
    switch (id) {
        case ScenarioId::F1: return "F1";
        case ScenarioId::F2: return "F2";
        case ScenarioId::F3: return "F3";
        case ScenarioId::F4: return "F4";
        case ScenarioId::F5: return "F5";
        case ScenarioId::F6: return "F6";
    }
    throw std::invalid_argument("to_string: unknown scenario id");
}

ScenarioId parse_scenario_id(const std::string& name) {
    if (name == "F1" || name == "f1") return ScenarioId::F1;
    if (name == "F2" || name == "f2") return ScenarioId::F2;
    if (name == "F3" || name == "f3") return ScenarioId::F3;
    if (name == "F4" || name == "f4") return ScenarioId::F4;
    if (name == "F5" || name == "f5") return ScenarioId::F5;
    if (name == "F6" || name == "f6") return ScenarioId::F6;
    throw std::invalid_argument("unknown scenario id: '" + name + "' (expected F1..F6)");
}

std::string to_string(ForcingKind kind) {
    switch (kind) {
        case ForcingKind::Zero: return "zero";
        case ForcingKind::Linear: return "linear";
        case ForcingKind::SinusoidStationary: return "sinusoid_stationary";
        case ForcingKind::SinusoidNonstationary: return "sinusoid_nonstationary";
    }
    throw std::invalid_argument("to_string: unknown forcing kind");
}

namespace {

// Freshwater forcing magnitudes are set against the natural scale
// k*beta ~ 8e9: a steady forcing F holds the quasi-static difference state at
// |dS| = sqrt(F/(k*beta)), so values of a few 1e11 move dS by O(10) ppt.
constexpr double kF1Base = 5.12e11;
constexpr double kF1Slope = -8.0e11;
constexpr double kSinPeriod = 10000.0;

ForcingSpec zero() { return {}; }

ForcingSpec linear(double base, double slope) {
    ForcingSpec f;
    f.kind = ForcingKind::Linear;
    f.base = base;
    f.slope = slope;
    return f;
}

ForcingSpec sin_stationary(double base, double amplitude, double period) {
    ForcingSpec f;
    f.kind = ForcingKind::SinusoidStationary;
    f.base = base;
    f.amplitude = amplitude;
    f.period = period;
    return f;
}

ForcingSpec sin_nonstationary(double base, double amplitude, double period, double growth) {
    ForcingSpec f;
    f.kind = ForcingKind::SinusoidNonstationary;
    f.base = base;
    f.amplitude = amplitude;
    f.period = period;
    f.amp_growth = growth;
    return f;
}

void apply_forcing_overrides(ForcingSpec& f, const std::optional<double>& base,
                             const std::optional<double>& slope,
                             const std::optional<double>& amplitude,
                             const std::optional<double>& period,
                             const std::optional<double>& amp_growth) {
    if (base) f.base = *base;
    if (slope) f.slope = *slope;
    if (amplitude) f.amplitude = *amplitude;
    if (period) f.period = *period;
    if (amp_growth) f.amp_growth = *amp_growth;
}

std::string describe_forcing(const std::string& prefix, const ForcingSpec& f) {
    std::ostringstream out;
    out << prefix << "_kind=" << to_string(f.kind) << '\n';
    if (f.kind == ForcingKind::Zero) return out.str();
    out << prefix << "_base=" << format_g17(f.base) << '\n';
    if (f.kind == ForcingKind::Linear) {
        out << prefix << "_slope=" << format_g17(f.slope) << '\n';
    } else {
        out << prefix << "_amplitude=" << format_g17(f.amplitude) << '\n';
        out << prefix << "_period=" << format_g17(f.period) << '\n';
        if (f.kind == ForcingKind::SinusoidNonstationary) {
            out << prefix << "_amp_growth=" << format_g17(f.amp_growth) << '\n';
        }
    }
    return out.str();
}

}  // namespace

Trajectory ScenarioSetup::run(IntegrationMethod method) const {
    if (std::holds_alternative<DeltaState>(initial)) {
        return integrate(model, fs, ft, grid, std::get<DeltaState>(initial), method);
    }
    return integrate(model, fs, ft, grid, std::get<BoxState>(initial), method);
}

std::string ScenarioSetup::describe() const {
    std::ostringstream out;
    out << "scenario=" << to_string(id) << '\n';
    out << "variant=" << (model.variant == Variant::Standard ? "standard" : "extended") << '\n';
    out << "density_law=" << (model.density_law == DensityLaw::Linear ? "linear" : "eos80")
        << '\n';
    out << "k=" << format_g17(model.k) << '\n';
    out << "area=" << format_g17(model.area) << '\n';
    out << "depth=" << format_g17(model.depth) << '\n';
    out << "volume1=" << format_g17(model.v1()) << '\n';
    out << "volume2=" << format_g17(model.v2()) << '\n';
    out << "rho0=" << format_g17(model.density.rho0) << '\n';
    out << "t0=" << format_g17(model.density.t0) << '\n';
    out << "s0=" << format_g17(model.density.s0) << '\n';
    out << "alpha=" << format_g17(model.density.alpha) << '\n';
    out << "beta=" << format_g17(model.density.beta) << '\n';
    out << "tau_max=" << format_g17(grid.tau_max) << '\n';
    out << "dt=" << format_g17(grid.dt) << '\n';
    out << "output_stride=" << grid.output_stride << '\n';
    if (std::holds_alternative<DeltaState>(initial)) {
        const auto& d = std::get<DeltaState>(initial);
        out << "initial_delta_s=" << format_g17(d.delta_s) << '\n';
        out << "initial_delta_t=" << format_g17(d.delta_t) << '\n';
    } else {
        const auto& b = std::get<BoxState>(initial);
        out << "initial_s1=" << format_g17(b.s1) << '\n';
        out << "initial_s2=" << format_g17(b.s2) << '\n';
        out << "initial_t1=" << format_g17(b.t1) << '\n';
        out << "initial_t2=" << format_g17(b.t2) << '\n';
    }
    out << describe_forcing("fs", fs);
    out << describe_forcing("ft", ft);
    return out.str();
}

ScenarioSetup scenario(ScenarioId id, const ScenarioOverrides& ov) {
    ScenarioSetup s;
    s.id = id;
    s.grid = TimeGrid{};

    const bool extended = id == ScenarioId::F4 || id == ScenarioId::F5 || id == ScenarioId::F6;
    s.model.variant = extended ? Variant::Extended : Variant::Standard;
    s.model.density_law = extended ? DensityLaw::Eos80 : DensityLaw::Linear;

    switch (id) {
        case ScenarioId::F1:
            s.fs = linear(kF1Base, kF1Slope);
            s.ft = zero();
            break;
        case ScenarioId::F2:
            s.fs = sin_stationary(1.0e11, 5.0e11, kSinPeriod);
            s.ft = zero();
            break;
        case ScenarioId::F3:
            s.fs = sin_nonstationary(1.0e11, 3.0e11, kSinPeriod, 1.0);
            s.ft = zero();
            break;
        case ScenarioId::F4:
            s.fs = linear(2.0e11, -4.0e11);
            s.ft = linear(0.0, -2.0e10);
            break;
        case ScenarioId::F5:
            s.fs = sin_stationary(5.0e10, 3.5e11, kSinPeriod);
            s.ft = sin_stationary(0.0, 1.5e10, kSinPeriod);
            break;
        case ScenarioId::F6:
            s.fs = sin_nonstationary(5.0e10, 2.2e11, kSinPeriod, 1.0);
            s.ft = sin_nonstationary(0.0, 1.0e10, kSinPeriod, 1.0);
            break;
    }

    if (extended) {
        // EOS-80 runs start with salinities inside [5, 15] where the law is
        // most strongly nonlinear.
        s.initial = BoxState{12.0, 14.0, 1.0, 10.0};
    } else {
        // Table values S1=12, S2=20, T1=1, T2=10 as differences.
        s.initial = DeltaState{-8.0, -9.0};
    }

    if (ov.tau_max) s.grid.tau_max = *ov.tau_max;
    if (ov.dt) s.grid.dt = *ov.dt;
    if (ov.output_stride) s.grid.output_stride = *ov.output_stride;
    if (ov.k) s.model.k = *ov.k;
    if (ov.area) s.model.area = *ov.area;
    if (ov.depth) s.model.depth = *ov.depth;
    if (ov.volume1) s.model.volume1 = *ov.volume1;
    if (ov.volume2) s.model.volume2 = *ov.volume2;
    if (ov.rho0) s.model.density.rho0 = *ov.rho0;
    if (ov.t0) s.model.density.t0 = *ov.t0;
    if (ov.s0) s.model.density.s0 = *ov.s0;
    if (ov.alpha) s.model.density.alpha = *ov.alpha;
    if (ov.beta) s.model.density.beta = *ov.beta;

    if (extended) {
        BoxState b = std::get<BoxState>(s.initial);
        if (ov.s1) b.s1 = *ov.s1;
        if (ov.s2) b.s2 = *ov.s2;
        if (ov.t1) b.t1 = *ov.t1;
        if (ov.t2) b.t2 = *ov.t2;
        s.initial = b;
    } else {
        DeltaState d = std::get<DeltaState>(s.initial);
        if (ov.delta_s) d.delta_s = *ov.delta_s;
        if (ov.delta_t) d.delta_t = *ov.delta_t;
        if (ov.s1 || ov.s2) d.delta_s = ov.s1.value_or(12.0) - ov.s2.value_or(20.0);
        if (ov.t1 || ov.t2) d.delta_t = ov.t1.value_or(1.0) - ov.t2.value_or(10.0);
        s.initial = d;
    }

    apply_forcing_overrides(s.fs, ov.fs_base, ov.fs_slope, ov.fs_amplitude, ov.fs_period,
                            ov.fs_amp_growth);
    apply_forcing_overrides(s.ft, ov.ft_base, ov.ft_slope, ov.ft_amplitude, ov.ft_period,
                            ov.ft_amp_growth);

    s.model.validate();
    s.grid.validate();
    s.fs.validate();
    s.ft.validate();
    return s;
}

}  // namespace amoclab
