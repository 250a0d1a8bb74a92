#include "amoclab/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace amoclab {

void PredictionSeries::validate() const {
    const std::size_t n = tau.size();
    if (q_true.size() != n || q_pred.size() != n || q_std.size() != n) {
        throw std::invalid_argument("PredictionSeries: series lengths differ");
    }
    if (split_boundary >= n) {
        throw std::invalid_argument("PredictionSeries: split boundary leaves no test segment");
    }
    for (double s : q_std) {
        if (s < 0.0) throw std::invalid_argument("PredictionSeries: q_std must be >= 0");
    }
}

std::vector<double> bias_series(const PredictionSeries& ps) {
    ps.validate();
    std::vector<double> out(ps.tau.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = ps.q_pred[i] - ps.q_true[i];
    return out;
}

Metrics metrics(const PredictionSeries& ps) {
    ps.validate();
    const std::size_t n = ps.tau.size();
    const std::size_t b = ps.split_boundary;

    Metrics m;
    for (std::size_t i = 0; i < n; ++i) {
        const double e = ps.q_pred[i] - ps.q_true[i];
        m.mse += e * e;
        m.mae += std::abs(e);
    }
    m.mse /= static_cast<double>(n);
    m.mae /= static_cast<double>(n);

    const std::size_t n_test = n - b;
    double test_mean = 0.0;
    for (std::size_t i = b; i < n; ++i) test_mean += ps.q_true[i];
    test_mean /= static_cast<double>(n_test);

    double var = 0.0;
    for (std::size_t i = b; i < n; ++i) {
        const double d = ps.q_true[i] - test_mean;
        var += d * d;
        const double e = ps.q_pred[i] - ps.q_true[i];
        m.test_mse += e * e;
    }
    var /= static_cast<double>(n_test);
    m.test_mse /= static_cast<double>(n_test);
    m.skill_vs_mean = var > 0.0 ? 1.0 - m.test_mse / var : (m.test_mse == 0.0 ? 1.0 : 0.0);
    return m;
}

std::vector<TippingEvent> detect_tipping(const std::vector<double>& q,
                                         double threshold_fraction) {
    if (q.size() < 3) throw std::invalid_argument("detect_tipping: series length must be >= 3");
    if (!(threshold_fraction > 0.0) || threshold_fraction > 1.0) {
        throw std::invalid_argument("detect_tipping: threshold_fraction must be in (0, 1]");
    }

    const double lo = *std::min_element(q.begin(), q.end());
    const double hi = *std::max_element(q.begin(), q.end());
    const double range = hi - lo;
    std::vector<TippingEvent> events;
    if (range == 0.0) return events;  // constant series

    std::vector<double> sorted = q;
    std::nth_element(sorted.begin(), sorted.begin() + sorted.size() / 2, sorted.end());
    const double median = sorted[sorted.size() / 2];

    const double threshold = threshold_fraction * range;
    std::size_t i = 0;
    while (i + 1 < q.size()) {
        if (std::abs(q[i + 1] - q[i]) <= threshold) {
            ++i;
            continue;
        }
        // Merge the run of adjacent over-threshold jumps into one event,
        // placed at the largest jump.
        std::size_t best = i;
        double best_jump = std::abs(q[i + 1] - q[i]);
        std::size_t j = i + 1;
        while (j + 1 < q.size() && std::abs(q[j + 1] - q[j]) > threshold) {
            if (std::abs(q[j + 1] - q[j]) > best_jump) {
                best_jump = std::abs(q[j + 1] - q[j]);
                best = j;
            }
            ++j;
        }
        const double before = std::abs(q[best] - median);
        const double after = std::abs(q[best + 1] - median);
        TippingEvent ev;
        ev.tau_index = best + 1;
        ev.magnitude = best_jump;
        ev.kind = after >= before ? TippingKind::Breakdown : TippingKind::Recovery;
        events.push_back(ev);
        i = j;
    }
    return events;
}

std::vector<SpikeStats> spike_report(const PredictionSeries& ps,
                                     const std::vector<TippingEvent>& events,
                                     std::size_t window) {
    ps.validate();
    const std::vector<double> bias = bias_series(ps);
    std::vector<SpikeStats> out;
    out.reserve(events.size());
    for (const auto& ev : events) {
        if (ev.tau_index >= ps.tau.size()) {
            throw std::invalid_argument("spike_report: event index outside series");
        }
        const std::size_t lo = ev.tau_index > window ? ev.tau_index - window : 0;
        const std::size_t hi = std::min(ps.tau.size() - 1, ev.tau_index + window);
        SpikeStats s;
        s.tau_index = ev.tau_index;
        for (std::size_t i = lo; i <= hi; ++i) {
            s.max_abs_bias = std::max(s.max_abs_bias, std::abs(bias[i]));
            s.max_q_std = std::max(s.max_q_std, ps.q_std[i]);
        }
        out.push_back(s);
    }
    return out;
}

std::string to_string(TippingKind kind) {
    return kind == TippingKind::Breakdown ? "breakdown" : "recovery";
}

}  // namespace amoclab
