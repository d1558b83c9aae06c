#include "sentinel/detector.hpp"

#include <cmath>

namespace sentinel {

std::vector<double> window_variances(const WorkloadWindow& w) {
    const int t_len = w.ticks();
    const int dims = w.dims();
    std::vector<double> vars(dims, 0.0);
    if (t_len < 2) return vars;
    for (int n = 0; n < dims; ++n) {
        double mean = 0.0;
        for (int t = 0; t < t_len; ++t) mean += w.at(t, n);
        mean /= t_len;
        double ss = 0.0;
        for (int t = 0; t < t_len; ++t) {
            const double d = w.at(t, n) - mean;
            ss += d * d;
        }
        vars[n] = ss / (t_len - 1);
    }
    return vars;
}

Grid2<double> window_correlation(const WorkloadWindow& w) {
    const int t_len = w.ticks();
    const int dims = w.dims();
    std::vector<double> means(dims, 0.0);
    for (int n = 0; n < dims; ++n) {
        for (int t = 0; t < t_len; ++t) means[n] += w.at(t, n);
        means[n] /= t_len;
    }
    std::vector<double> sd(dims, 0.0);
    for (int n = 0; n < dims; ++n) {
        double ss = 0.0;
        for (int t = 0; t < t_len; ++t) {
            const double d = w.at(t, n) - means[n];
            ss += d * d;
        }
        sd[n] = std::sqrt(ss);
    }
    Grid2<double> corr(dims, dims, 0.0);
    for (int a = 0; a < dims; ++a) {
        corr(a, a) = 1.0;
        for (int b = a + 1; b < dims; ++b) {
            if (sd[a] == 0.0 || sd[b] == 0.0) continue;  // stays 0
            double cov = 0.0;
            for (int t = 0; t < t_len; ++t) {
                cov += (w.at(t, a) - means[a]) * (w.at(t, b) - means[b]);
            }
            const double r = cov / (sd[a] * sd[b]);
            corr(a, b) = r;
            corr(b, a) = r;
        }
    }
    return corr;
}

double frobenius_gap(const Grid2<double>& a, const Grid2<double>& b) {
    double ss = 0.0;
    for (std::size_t i = 0; i < a.data().size(); ++i) {
        const double d = a.data()[i] - b.data()[i];
        ss += d * d;
    }
    return std::sqrt(ss);
}

RuleVerdict rule_check(const WorkloadWindow& window, const RuleConfig& cfg) {
    const WorkloadWindow& base = cfg.baseline;
    if (window.ticks() != base.ticks() || window.dims() != base.dims()) {
        throw ShapeMismatchError("rule_check: window and baseline shapes differ");
    }
    const int dims = window.dims();

    const std::vector<double> v = window_variances(window);
    const std::vector<double> vh = window_variances(base);
    constexpr double kVarEps = 1e-12;
    int diverging = 0;
    for (int n = 0; n < dims; ++n) {
        const double stat = std::abs(v[n] - vh[n]) / (v[n] + vh[n] + kVarEps);
        if (stat > cfg.theta_v) ++diverging;
    }
    const int needed = static_cast<int>(std::ceil(cfg.beta * dims));
    const bool c1 = diverging >= needed;

    const double gap = frobenius_gap(window_correlation(window), window_correlation(base));
    const bool c2 = gap > cfg.theta_r;

    if (c1 && c2) return RuleVerdict::kFaulty;
    if (!c1 && !c2) return RuleVerdict::kHealthy;
    return RuleVerdict::kAmbiguous;
}

DetectionResult detect_all(const std::vector<Server>& servers,
                           const std::vector<WorkloadWindow>& windows,
                           const std::vector<RuleConfig>& rule_cfgs,
                           const MvgruModel* model) {
    if (windows.size() != servers.size() || rule_cfgs.size() != servers.size()) {
        throw ShapeMismatchError("detect_all: one window and rule config per server");
    }
    DetectionResult result;
    std::vector<std::uint8_t> d(servers.size(), 1);
    result.rule_verdicts.resize(servers.size());
    for (std::size_t e = 0; e < servers.size(); ++e) {
        const RuleVerdict verdict = rule_check(windows[e], rule_cfgs[e]);
        result.rule_verdicts[e] = verdict;
        if (verdict == RuleVerdict::kFaulty) {
            d[e] = 0;
        } else if (verdict == RuleVerdict::kAmbiguous && model != nullptr) {
            ++result.model_invocations;
            if (model->window_anomalous(windows[e])) d[e] = 0;
        }
    }
    result.availability = DeviceAvailability(std::move(d));
    return result;
}

int medoid_index(const std::vector<WorkloadWindow>& windows) {
    if (windows.empty()) throw DomainError("medoid of empty window set");
    const int n = static_cast<int>(windows.size());
    int best = 0;
    double best_cost = -1.0;
    for (int i = 0; i < n; ++i) {
        double cost = 0.0;
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const auto& a = windows[i].values();
            const auto& b = windows[j].values();
            double ss = 0.0;
            for (std::size_t k = 0; k < a.size(); ++k) {
                const double diff = a[k] - b[k];
                ss += diff * diff;
            }
            cost += ss;
        }
        if (best_cost < 0.0 || cost < best_cost) {
            best_cost = cost;
            best = i;
        }
    }
    return best;
}

}  // namespace sentinel
