#include "amoclab/boxmodel.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "amoclab/io.hpp"

namespace amoclab {

void ModelConfig::validate() const {
    density.validate();
    if (!(k > 0.0)) throw std::invalid_argument("ModelConfig: k must be > 0");
    if (!(v1() > 0.0) || !(v2() > 0.0)) {
        throw std::invalid_argument("ModelConfig: box volumes must be > 0");
    }
    if (variant == Variant::Standard && v1() != v2()) {
        throw std::invalid_argument("ModelConfig: Standard variant requires volume1 == volume2");
    }
}

void BoxState::validate() const {
    if (!std::isfinite(s1) || !std::isfinite(s2) || !std::isfinite(t1) || !std::isfinite(t2)) {
        throw std::invalid_argument("BoxState: non-finite value");
    }
    if (s1 < 0.0 || s2 < 0.0) throw std::invalid_argument("BoxState: salinity must be >= 0");
}

void DeltaState::validate() const {
    if (!std::isfinite(delta_s) || !std::isfinite(delta_t)) {
        throw std::invalid_argument("DeltaState: non-finite value");
    }
}

void TimeGrid::validate() const {
    if (!(dt > 0.0)) throw std::invalid_argument("TimeGrid: dt must be > 0");
    if (!(tau_max >= dt)) throw std::invalid_argument("TimeGrid: tau_max must be >= dt");
    if (output_stride < 1) throw std::invalid_argument("TimeGrid: output_stride must be >= 1");
    if (n_steps() < 2) throw std::invalid_argument("TimeGrid: fewer than 2 steps");
}

std::size_t TimeGrid::n_steps() const {
    return static_cast<std::size_t>(std::floor(tau_max / dt));
}

double q_from_state(const DeltaState& ds, const ModelConfig& cfg) {
    if (cfg.density_law == DensityLaw::Eos80) {
        throw std::invalid_argument("q_from_state: EOS-80 needs absolute T, S per box, not deltas");
    }
    const auto& p = cfg.density;
    return cfg.k * (p.beta * ds.delta_s - p.alpha * ds.delta_t);
}

double q_from_state(const BoxState& bs, const ModelConfig& cfg) {
    if (cfg.density_law == DensityLaw::Linear) {
        const auto& p = cfg.density;
        return cfg.k * (p.beta * (bs.s1 - bs.s2) - p.alpha * (bs.t1 - bs.t2));
    }
    return cfg.k * (rho_eos80(bs.t1, bs.s1) - rho_eos80(bs.t2, bs.s2));
}

namespace {

struct DeltaRates {
    double d_delta_s, d_delta_t;
};

DeltaRates standard_rhs(const DeltaState& ds, double fs_value, double ft_value,
                        const ModelConfig& cfg) {
    const double v = cfg.v1();
    const double abs_q = std::abs(q_from_state(ds, cfg));
    return {-2.0 * (abs_q * ds.delta_s + fs_value) / v,
            -2.0 * (abs_q * ds.delta_t + ft_value) / v};
}

struct BoxRates {
    double d_s1, d_s2, d_t1, d_t2;
};

BoxRates extended_rhs(const BoxState& bs, double fs_value, double ft_value,
                      const ModelConfig& cfg) {
    const double abs_q = std::abs(q_from_state(bs, cfg));
    const double v1 = cfg.v1();
    const double v2 = cfg.v2();
    return {(abs_q * (bs.s2 - bs.s1) - fs_value) / v1,
            (abs_q * (bs.s1 - bs.s2) + fs_value) / v2,
            (abs_q * (bs.t2 - bs.t1) - ft_value) / v1,
            (abs_q * (bs.t1 - bs.t2) + ft_value) / v2};
}

bool finite(const DeltaState& s) {
    return std::isfinite(s.delta_s) && std::isfinite(s.delta_t);
}

bool finite(const BoxState& s) {
    return std::isfinite(s.s1) && std::isfinite(s.s2) && std::isfinite(s.t1) &&
           std::isfinite(s.t2);
}

[[noreturn]] void throw_blowup(double tau) {
    throw std::runtime_error("integrate: non-finite state at tau=" + format_g17(tau));
}

DeltaState rk4_standard(const DeltaState& y, double tau, double dt, const ForcingSpec& fs,
                        const ForcingSpec& ft, double tau_max, const ModelConfig& cfg) {
    auto rhs = [&](const DeltaState& s, double t) {
        return standard_rhs(s, eval_forcing(fs, t, tau_max), eval_forcing(ft, t, tau_max), cfg);
    };
    const DeltaRates k1 = rhs(y, tau);
    const DeltaRates k2 = rhs({y.delta_s + 0.5 * dt * k1.d_delta_s,
                               y.delta_t + 0.5 * dt * k1.d_delta_t},
                              tau + 0.5 * dt);
    const DeltaRates k3 = rhs({y.delta_s + 0.5 * dt * k2.d_delta_s,
                               y.delta_t + 0.5 * dt * k2.d_delta_t},
                              tau + 0.5 * dt);
    const DeltaRates k4 = rhs({y.delta_s + dt * k3.d_delta_s, y.delta_t + dt * k3.d_delta_t},
                              tau + dt);
    return {y.delta_s + dt / 6.0 *
                            (k1.d_delta_s + 2.0 * k2.d_delta_s + 2.0 * k3.d_delta_s + k4.d_delta_s),
            y.delta_t + dt / 6.0 *
                            (k1.d_delta_t + 2.0 * k2.d_delta_t + 2.0 * k3.d_delta_t + k4.d_delta_t)};
}

BoxState rk4_extended(const BoxState& y, double tau, double dt, const ForcingSpec& fs,
                      const ForcingSpec& ft, double tau_max, const ModelConfig& cfg) {
    auto rhs = [&](const BoxState& s, double t) {
        return extended_rhs(s, eval_forcing(fs, t, tau_max), eval_forcing(ft, t, tau_max), cfg);
    };
    auto advance = [](const BoxState& s, const BoxRates& r, double h) {
        return BoxState{s.s1 + h * r.d_s1, s.s2 + h * r.d_s2, s.t1 + h * r.d_t1,
                        s.t2 + h * r.d_t2};
    };
    const BoxRates k1 = rhs(y, tau);
    const BoxRates k2 = rhs(advance(y, k1, 0.5 * dt), tau + 0.5 * dt);
    const BoxRates k3 = rhs(advance(y, k2, 0.5 * dt), tau + 0.5 * dt);
    const BoxRates k4 = rhs(advance(y, k3, dt), tau + dt);
    return {y.s1 + dt / 6.0 * (k1.d_s1 + 2.0 * k2.d_s1 + 2.0 * k3.d_s1 + k4.d_s1),
            y.s2 + dt / 6.0 * (k1.d_s2 + 2.0 * k2.d_s2 + 2.0 * k3.d_s2 + k4.d_s2),
            y.t1 + dt / 6.0 * (k1.d_t1 + 2.0 * k2.d_t1 + 2.0 * k3.d_t1 + k4.d_t1),
            y.t2 + dt / 6.0 * (k1.d_t2 + 2.0 * k2.d_t2 + 2.0 * k3.d_t2 + k4.d_t2)};
}

bool store_index(std::size_t i, std::size_t stride, std::size_t last) {
    return i % stride == 0 || i == last;
}

}  // namespace

DeltaState step_standard(const DeltaState& ds, double fs_value, double ft_value,
                         const ModelConfig& cfg, double dt) {
    if (cfg.variant != Variant::Standard) {
        throw std::invalid_argument("step_standard: config variant is not Standard");
    }
    if (!(dt > 0.0)) throw std::invalid_argument("step_standard: dt must be > 0");
    const DeltaRates r = standard_rhs(ds, fs_value, ft_value, cfg);
    DeltaState out{ds.delta_s + dt * r.d_delta_s, ds.delta_t + dt * r.d_delta_t};
    if (!finite(out)) throw std::runtime_error("step_standard: non-finite state");
    return out;
}

BoxState step_extended(const BoxState& bs, double fs_value, double ft_value,
                       const ModelConfig& cfg, double dt) {
    if (cfg.variant != Variant::Extended) {
        throw std::invalid_argument("step_extended: config variant is not Extended");
    }
    if (!(dt > 0.0)) throw std::invalid_argument("step_extended: dt must be > 0");
    const BoxRates r = extended_rhs(bs, fs_value, ft_value, cfg);
    BoxState out{bs.s1 + dt * r.d_s1, bs.s2 + dt * r.d_s2, bs.t1 + dt * r.d_t1,
                 bs.t2 + dt * r.d_t2};
    if (!finite(out)) throw std::runtime_error("step_extended: non-finite state");
    return out;
}

Trajectory integrate(const ModelConfig& cfg, const ForcingSpec& fs, const ForcingSpec& ft,
                     const TimeGrid& grid, const DeltaState& initial, IntegrationMethod method) {
    cfg.validate();
    grid.validate();
    fs.validate();
    ft.validate();
    initial.validate();
    if (cfg.variant != Variant::Standard) {
        throw std::invalid_argument("integrate: DeltaState initial state requires Standard variant");
    }

    const std::size_t n = grid.n_steps();
    Trajectory traj;
    traj.variant = Variant::Standard;

    DeltaState state = initial;
    for (std::size_t i = 0; i <= n; ++i) {
        const double tau = static_cast<double>(i) * grid.dt;
        if (!finite(state)) throw_blowup(tau);
        if (store_index(i, grid.output_stride, n)) {
            traj.tau.push_back(tau);
            traj.delta_s.push_back(state.delta_s);
            traj.delta_t.push_back(state.delta_t);
            traj.fs.push_back(eval_forcing(fs, tau, grid.tau_max));
            traj.ft.push_back(eval_forcing(ft, tau, grid.tau_max));
            traj.q.push_back(q_from_state(state, cfg));
        }
        if (i == n) break;
        if (method == IntegrationMethod::Euler) {
            state = step_standard(state, eval_forcing(fs, tau, grid.tau_max),
                                  eval_forcing(ft, tau, grid.tau_max), cfg, grid.dt);
        } else {
            state = rk4_standard(state, tau, grid.dt, fs, ft, grid.tau_max, cfg);
        }
    }
    return traj;
}

Trajectory integrate(const ModelConfig& cfg, const ForcingSpec& fs, const ForcingSpec& ft,
                     const TimeGrid& grid, const BoxState& initial, IntegrationMethod method) {
    cfg.validate();
    grid.validate();
    fs.validate();
    ft.validate();
    initial.validate();
    if (cfg.variant != Variant::Extended) {
        throw std::invalid_argument("integrate: BoxState initial state requires Extended variant");
    }

    const std::size_t n = grid.n_steps();
    Trajectory traj;
    traj.variant = Variant::Extended;

    BoxState state = initial;
    for (std::size_t i = 0; i <= n; ++i) {
        const double tau = static_cast<double>(i) * grid.dt;
        if (!finite(state)) throw_blowup(tau);
        if (store_index(i, grid.output_stride, n)) {
            traj.tau.push_back(tau);
            traj.s1.push_back(state.s1);
            traj.s2.push_back(state.s2);
            traj.t1.push_back(state.t1);
            traj.t2.push_back(state.t2);
            traj.delta_s.push_back(state.s1 - state.s2);
            traj.delta_t.push_back(state.t1 - state.t2);
            traj.fs.push_back(eval_forcing(fs, tau, grid.tau_max));
            traj.ft.push_back(eval_forcing(ft, tau, grid.tau_max));
            traj.q.push_back(q_from_state(state, cfg));
        }
        if (i == n) break;
        if (method == IntegrationMethod::Euler) {
            state = step_extended(state, eval_forcing(fs, tau, grid.tau_max),
                                  eval_forcing(ft, tau, grid.tau_max), cfg, grid.dt);
        } else {
            state = rk4_extended(state, tau, grid.dt, fs, ft, grid.tau_max, cfg);
        }
    }
    return traj;
}

std::string trajectory_to_csv(const Trajectory& traj) {
    std::ostringstream out;
    out << "tau,s1,s2,t1,t2,delta_s,delta_t,fs,ft,q\n";
    const bool extended = traj.variant == Variant::Extended;
    for (std::size_t i = 0; i < traj.size(); ++i) {
        out << format_g17(traj.tau[i]) << ',';
        if (extended) {
            out << format_g17(traj.s1[i]) << ',' << format_g17(traj.s2[i]) << ','
                << format_g17(traj.t1[i]) << ',' << format_g17(traj.t2[i]) << ',';
        } else {
            out << ",,,,";
        }
        out << format_g17(traj.delta_s[i]) << ',' << format_g17(traj.delta_t[i]) << ','
            << format_g17(traj.fs[i]) << ',' << format_g17(traj.ft[i]) << ','
            << format_g17(traj.q[i]) << '\n';
    }
    return out.str();
}

void write_trajectory_csv(const std::filesystem::path& path, const Trajectory& traj) {
    write_text_file(path, trajectory_to_csv(traj));
}

Trajectory read_trajectory_csv(const std::filesystem::path& path) {
    const std::string text = read_text_file(path);
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("trajectory csv: empty file");

    Trajectory traj;
    bool extended = false;
    bool first_row = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto fields = split_csv_line(line);
        if (fields.size() != 10) {
            throw std::runtime_error("trajectory csv: expected 10 columns, got " +
                                     std::to_string(fields.size()));
        }
        const double s1 = parse_double_or_nan(fields[1]);
        if (first_row) {
            extended = std::isfinite(s1);
            traj.variant = extended ? Variant::Extended : Variant::Standard;
            first_row = false;
        }
        traj.tau.push_back(parse_double(fields[0]));
        if (extended) {
            traj.s1.push_back(s1);
            traj.s2.push_back(parse_double(fields[2]));
            traj.t1.push_back(parse_double(fields[3]));
            traj.t2.push_back(parse_double(fields[4]));
        }
        traj.delta_s.push_back(parse_double(fields[5]));
        traj.delta_t.push_back(parse_double(fields[6]));
        traj.fs.push_back(parse_double(fields[7]));
        traj.ft.push_back(parse_double(fields[8]));
        traj.q.push_back(parse_double(fields[9]));
    }
    if (traj.size() < 2) throw std::runtime_error("trajectory csv: fewer than 2 samples");
    return traj;
}

}  // namespace amoclab
