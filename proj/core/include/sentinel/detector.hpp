#pragma once

#include <optional>
#include <vector>

#include "sentinel/domain.hpp"
#include "sentinel/grid.hpp"
#include "sentinel/mvgru.hpp"

namespace sentinel {

enum class RuleVerdict { kHealthy, kFaulty, kAmbiguous };

// Rule-stage thresholds. The per-dimension variance statistic is the
// bounded symmetric relative difference |var - var_h| / (var + var_h + eps):
// an absolute difference can never exceed 0.25 on [0,1]-normalized
// telemetry, which would leave the 0.4 default threshold unreachable.
struct RuleConfig {
    double theta_v = 0.4;
    double theta_r = 0.4;
    double beta = 0.5;            // fraction of dimensions required for C1
    WorkloadWindow baseline;      // healthy reference window, same T x N
};

// Per-dimension sample variances (denominator T-1).
std::vector<double> window_variances(const WorkloadWindow& w);

// Pearson correlation matrix; zero-variance dimensions correlate 0 with
// all others (diagonal stays 1).
Grid2<double> window_correlation(const WorkloadWindow& w);

double frobenius_gap(const Grid2<double>& a, const Grid2<double>& b);

// C1: at least ceil(beta*N) dimensions differ in variance beyond theta_v.
// C2: Frobenius gap between correlation matrices exceeds theta_r.
// Faulty = C1 and C2, Healthy = neither, Ambiguous = exactly one.
RuleVerdict rule_check(const WorkloadWindow& window, const RuleConfig& cfg);

// Two-stage fleet detection: rule verdicts first, the learned model only on
// Ambiguous windows. D_e = 0 iff Faulty, or Ambiguous with score above the
// model threshold.
struct DetectionResult {
    DeviceAvailability availability;
    std::vector<RuleVerdict> rule_verdicts;
    std::int64_t model_invocations = 0;
};

DetectionResult detect_all(const std::vector<Server>& servers,
                           const std::vector<WorkloadWindow>& windows,
                           const std::vector<RuleConfig>& rule_cfgs,
                           const MvgruModel* model);

// Baseline selection: the healthy window minimizing total squared distance
// to the others of its group (medoid).
int medoid_index(const std::vector<WorkloadWindow>& windows);

}  // namespace sentinel
