#pragma once

#include <stdexcept>
#include <vector>

#include "sentinel/domain.hpp"

namespace sentinel {

struct EmptyHistoryError : DomainError {
    EmptyHistoryError() : DomainError("ops history is empty") {}
};

// Gaussian revenue efficiency curve peaking at the optimal utilization.
struct RevenueCurve {
    double u_opt = 0.6;
    double sigma = 0.2;
};

// efficiency = exp(-(u - u_opt)^2 / (2 sigma^2)), in (0, 1].
double revenue_efficiency(const RevenueCurve& curve, double utilization);

// Absolute revenue for one server: efficiency scaled by capacity and price,
// so heterogeneous capacities yield heterogeneous revenue under one curve.
double server_revenue(const RevenueCurve& curve, double utilization,
                      double bandwidth_capacity, double unit_price = 1.0);

struct OpsSample {
    double utilization = 0.0;       // [0,1]
    double startup_latency_ms = 0.0;
    double error_rate = 0.0;        // fraction
};

class OpsHistory {
  public:
    OpsHistory() = default;
    explicit OpsHistory(std::vector<OpsSample> samples);

    void add(OpsSample s);
    const std::vector<OpsSample>& samples() const { return samples_; }
    bool empty() const { return samples_.empty(); }

  private:
    std::vector<OpsSample> samples_;
};

// U_opt = min(U_Lat_p, U_Err_p): for each metric, take its nearest-rank
// p-th percentile over all samples, bin utilization into 20 equal-width
// bins, and return the lower edge of the lowest bin whose mean metric
// exceeds that percentile (1.0 when no bin does).
double compute_u_opt(const OpsHistory& history, double percentile = 80.0);

}  // namespace sentinel
