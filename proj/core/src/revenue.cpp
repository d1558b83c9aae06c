#include "sentinel/revenue.hpp"

#include <algorithm>
#include <cmath>

namespace sentinel {

double revenue_efficiency(const RevenueCurve& curve, double utilization) {
    const double d = utilization - curve.u_opt;
    return std::exp(-(d * d) / (2.0 * curve.sigma * curve.sigma));
}

double server_revenue(const RevenueCurve& curve, double utilization,
                      double bandwidth_capacity, double unit_price) {
    return revenue_efficiency(curve, utilization) * bandwidth_capacity * unit_price;
}

OpsHistory::OpsHistory(std::vector<OpsSample> samples) : samples_(std::move(samples)) {
    for (const OpsSample& s : samples_) {
        if (s.utilization < 0.0 || s.utilization > 1.0) {
            throw DomainError("ops sample utilization must lie in [0,1]");
        }
    }
}

void OpsHistory::add(OpsSample s) {
    if (s.utilization < 0.0 || s.utilization > 1.0) {
        throw DomainError("ops sample utilization must lie in [0,1]");
    }
    samples_.push_back(s);
}

namespace {

double nearest_rank_percentile(std::vector<double> values, double percentile) {
    std::sort(values.begin(), values.end());
    const auto n = values.size();
    std::size_t rank = static_cast<std::size_t>(
        std::ceil(percentile / 100.0 * static_cast<double>(n)));
    if (rank == 0) rank = 1;
    if (rank > n) rank = n;
    return values[rank - 1];
}

constexpr int kUtilBins = 20;

// Lower edge of the lowest utilization bin whose mean metric exceeds the
// metric's own percentile; 1.0 if no bin degrades that far.
double threshold_utilization(const std::vector<OpsSample>& samples,
                             double metric_percentile,
                             double (*metric)(const OpsSample&)) {
    std::vector<double> sums(kUtilBins, 0.0);
    std::vector<std::int64_t> counts(kUtilBins, 0);
    for (const OpsSample& s : samples) {
        int bin = static_cast<int>(s.utilization * kUtilBins);
        if (bin == kUtilBins) bin = kUtilBins - 1;
        sums[bin] += metric(s);
        counts[bin] += 1;
    }
    for (int b = 0; b < kUtilBins; ++b) {
        if (counts[b] == 0) continue;
        if (sums[b] / static_cast<double>(counts[b]) > metric_percentile) {
            return static_cast<double>(b) / kUtilBins;
        }
    }
    return 1.0;
}

}  // namespace

double compute_u_opt(const OpsHistory& history, double percentile) {
    if (history.empty()) throw EmptyHistoryError();
    const auto& samples = history.samples();

    std::vector<double> latencies, errors;
    latencies.reserve(samples.size());
    errors.reserve(samples.size());
    for (const OpsSample& s : samples) {
        latencies.push_back(s.startup_latency_ms);
        errors.push_back(s.error_rate);
    }
    const double lat_p = nearest_rank_percentile(std::move(latencies), percentile);
    const double err_p = nearest_rank_percentile(std::move(errors), percentile);

    const double u_lat = threshold_utilization(
        samples, lat_p, [](const OpsSample& s) { return s.startup_latency_ms; });
    const double u_err = threshold_utilization(
        samples, err_p, [](const OpsSample& s) { return s.error_rate; });

    const double u = std::min(u_lat, u_err);
    return std::clamp(u, 1.0 / kUtilBins, 1.0);  // keep strictly positive
}

}  // namespace sentinel
