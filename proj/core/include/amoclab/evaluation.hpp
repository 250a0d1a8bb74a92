#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace amoclab {

/// Aligned truth/prediction series with optional per-sample uncertainty
/// (zero for a plain MLP).
struct PredictionSeries {
    std::vector<double> tau;
    std::vector<double> q_true;
    std::vector<double> q_pred;
    std::vector<double> q_std;
    std::size_t split_boundary = 0;  ///< first test index

    void validate() const;
};

enum class TippingKind { Breakdown, Recovery };

struct TippingEvent {
    std::size_t tau_index = 0;  ///< first sample after the jump
    TippingKind kind = TippingKind::Breakdown;
    double magnitude = 0.0;  ///< |dq| of the largest jump in the event
};

struct Metrics {
    double mse = 0.0;       ///< full series
    double mae = 0.0;       ///< full series
    double test_mse = 0.0;  ///< past the split boundary
    double skill_vs_mean = 0.0;  ///< 1 - test_mse / var(q_true on test)
};

/// Per-event windowed maxima used to tabulate error/uncertainty spikes
/// around collapse and recovery.
struct SpikeStats {
    std::size_t tau_index = 0;
    double max_abs_bias = 0.0;
    double max_q_std = 0.0;
};

/// Signed error series q_pred - q_true.
std::vector<double> bias_series(const PredictionSeries& ps);

Metrics metrics(const PredictionSeries& ps);

/// Scale-free jump detector: an event is a consecutive-sample jump
/// exceeding threshold_fraction of the series range. Runs of adjacent
/// jumps merge into one event at the largest jump. A jump moving away
/// from the series median is a Breakdown, one moving back is a Recovery.
std::vector<TippingEvent> detect_tipping(const std::vector<double>& q,
                                         double threshold_fraction = 0.3);

/// Windowed max |bias| and max q_std around each event (window of +-w
/// stored samples, clipped at the series ends).
std::vector<SpikeStats> spike_report(const PredictionSeries& ps,
                                     const std::vector<TippingEvent>& events,
                                     std::size_t window = 10);

std::string to_string(TippingKind kind);

}  // namespace amoclab
