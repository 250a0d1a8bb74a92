// Temporary tuning driver: integrates each scenario and reports state ranges
// and detected tipping events so forcing defaults can be frozen.
#include <algorithm>
#include <cstdio>
#include <vector>

#include "amoclab/boxmodel.hpp"
#include "amoclab/evaluation.hpp"
#include "amoclab/scenario.hpp"

using namespace amoclab;

static void report(ScenarioId id) {
    ScenarioSetup s = scenario(id);
    Trajectory t;
    try {
        t = s.run();
    } catch (const std::exception& e) {
        std::printf("%s: FAILED: %s\n", to_string(id).c_str(), e.what());
        return;
    }
    auto mm = [](const std::vector<double>& v) {
        return std::pair<double, double>{*std::min_element(v.begin(), v.end()),
                                         *std::max_element(v.begin(), v.end())};
    };
    auto [qlo, qhi] = mm(t.q);
    std::printf("%s: n=%zu q=[%.3e, %.3e]", to_string(id).c_str(), t.size(), qlo, qhi);
    auto [dslo, dshi] = mm(t.delta_s);
    auto [dtlo, dthi] = mm(t.delta_t);
    std::printf(" dS=[%.2f, %.2f] dT=[%.2f, %.2f]", dslo, dshi, dtlo, dthi);
    if (t.variant == Variant::Extended) {
        auto [s1lo, s1hi] = mm(t.s1);
        auto [s2lo, s2hi] = mm(t.s2);
        auto [t1lo, t1hi] = mm(t.t1);
        auto [t2lo, t2hi] = mm(t.t2);
        std::printf(" S1=[%.2f,%.2f] S2=[%.2f,%.2f] T1=[%.2f,%.2f] T2=[%.2f,%.2f]", s1lo, s1hi,
                    s2lo, s2hi, t1lo, t1hi, t2lo, t2hi);
    }
    std::printf("\n");
    // Jump-size diagnostics: largest consecutive-sample |dq| as a fraction of
    // the q range, plus the distribution tail.
    double range = qhi - qlo;
    std::vector<double> fracs;
    for (std::size_t i = 0; i + 1 < t.q.size(); ++i) {
        fracs.push_back(std::abs(t.q[i + 1] - t.q[i]) / range);
    }
    std::sort(fracs.begin(), fracs.end());
    std::printf("  jump fractions: max=%.4f p99=%.4f p90=%.4f median=%.5f\n", fracs.back(),
                fracs[fracs.size() * 99 / 100], fracs[fracs.size() * 9 / 10],
                fracs[fracs.size() / 2]);
    for (double thr : {0.3, 0.05, 0.01, 0.005}) {
        auto events = detect_tipping(t.q, thr);
        std::size_t nb = 0, nr = 0;
        for (const auto& ev : events) {
            (ev.kind == TippingKind::Breakdown ? nb : nr)++;
        }
        std::printf("  events@%.3f: %zu (B=%zu R=%zu)\n", thr, events.size(), nb, nr);
    }
}

int main() {
    for (auto id : {ScenarioId::F1, ScenarioId::F2, ScenarioId::F3, ScenarioId::F4,
                    ScenarioId::F5, ScenarioId::F6}) {
        report(id);
    }

    // Reversed F1 ramp from the collapsed state.
    ScenarioSetup f1 = scenario(ScenarioId::F1);
    Trajectory fwd = f1.run();
    ScenarioOverrides rev;
    rev.fs_base = f1.fs.base + f1.fs.slope;
    rev.fs_slope = -f1.fs.slope;
    rev.delta_s = fwd.delta_s.back();
    rev.delta_t = fwd.delta_t.back();
    ScenarioSetup f1r = scenario(ScenarioId::F1, rev);
    Trajectory back = f1r.run();
    auto events = detect_tipping(back.q, 0.3);
    std::printf("F1 reversed: events: %zu [", events.size());
    for (const auto& ev : events) {
        std::printf(" %zu:%s(%.2e)", ev.tau_index, to_string(ev.kind).c_str(), ev.magnitude);
    }
    std::printf(" ]\n");
    return 0;
}
