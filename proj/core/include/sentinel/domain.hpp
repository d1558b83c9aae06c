#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "sentinel/grid.hpp"

namespace sentinel {

using Tick = std::int64_t;

// Telemetry dimensions: upload bandwidth, memory, CPU, disk.
constexpr int kTelemetryDims = 4;
constexpr int kTicksPerDay = 1440;  // one tick = one minute

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct EmptyPlatformError : DomainError {
    EmptyPlatformError() : DomainError("platform has no servers or no regions") {}
};
struct DanglingRegionError : DomainError {
    explicit DanglingRegionError(const std::string& what) : DomainError(what) {}
};
struct ShapeMismatchError : DomainError {
    explicit ShapeMismatchError(const std::string& what) : DomainError(what) {}
};

// Failure-proneness bands used by the generator; failure frequency is
// increasing in the enum value.
enum class ReliabilityClass : int {
    kStable = 0,
    kSteady = 1,
    kAverage = 2,
    kShaky = 3,
    kFlaky = 4,
};
constexpr int kReliabilityClasses = 5;

struct DemandProfile {
    double scale = 1.0;        // relative regional demand
    double peak_shift_hours = 0.0;
};

struct Server {
    int id = 0;
    int region = 0;
    double bandwidth_capacity = 0.0;  // Mbps
    std::vector<double> hardware_profile;  // per-telemetry-dimension scale, > 0
    ReliabilityClass reliability = ReliabilityClass::kStable;
};

struct Region {
    int id = 0;
    std::vector<int> neighbors;
    DemandProfile demand;
};

struct RequestCategory {
    int id = 0;
    std::vector<double> centroid;  // content type, platform, nominal bitrate (Mbps)
};

struct LiveRequest {
    std::int64_t id = 0;
    int region = 0;
    std::vector<double> features;
    int category = -1;  // unset until clustered
    Tick arrival_tick = 0;
    double nominal_throughput = 0.0;  // Mbps
};

// T ticks x N dimensions of per-server telemetry, normalized to [0,1]
// fraction of capacity. Shape and range are enforced at construction.
class WorkloadWindow {
  public:
    WorkloadWindow() = default;
    WorkloadWindow(int server_id, Tick start_tick, int ticks, int dims,
                   std::vector<double> values);

    int server_id() const { return server_id_; }
    Tick start_tick() const { return start_tick_; }
    int ticks() const { return ticks_; }
    int dims() const { return dims_; }
    double at(int t, int n) const { return values_[static_cast<std::size_t>(t) * dims_ + n]; }
    const std::vector<double>& values() const { return values_; }

    bool operator==(const WorkloadWindow&) const = default;

  private:
    int server_id_ = 0;
    Tick start_tick_ = 0;
    int ticks_ = 0;
    int dims_ = 0;
    std::vector<double> values_;
};

// Non-negative request counts per (region, category) at one tick.
class RequestBatch {
  public:
    RequestBatch() = default;
    RequestBatch(Tick tick, Grid2<std::int64_t> counts);

    Tick tick() const { return tick_; }
    const Grid2<std::int64_t>& counts() const { return counts_; }
    std::int64_t at(int region, int category) const { return counts_(region, category); }
    std::int64_t total() const;
    int regions() const { return counts_.rows(); }
    int categories() const { return counts_.cols(); }

    bool operator==(const RequestBatch&) const = default;

  private:
    Tick tick_ = 0;
    Grid2<std::int64_t> counts_;
};

// Revenue matrix A (Mbps consumed per request per minute, >= 0) and
// serviceability matrix S (1 = serviceable without anomaly), both E x M x I.
class EffectMatrices {
  public:
    EffectMatrices() = default;
    EffectMatrices(Grid3<double> revenue, Grid3<std::uint8_t> anomaly);

    const Grid3<double>& revenue() const { return revenue_; }
    const Grid3<std::uint8_t>& serviceable() const { return serviceable_; }
    double a(int e, int m, int i) const { return revenue_(e, m, i); }
    int s(int e, int m, int i) const { return serviceable_(e, m, i); }
    int servers() const { return revenue_.dim0(); }
    int regions() const { return revenue_.dim1(); }
    int categories() const { return revenue_.dim2(); }

    bool operator==(const EffectMatrices&) const = default;

  private:
    Grid3<double> revenue_;
    Grid3<std::uint8_t> serviceable_;
};

// Per-server availability vector D; 0 marks a server excluded by device
// anomaly detection.
class DeviceAvailability {
  public:
    DeviceAvailability() = default;
    explicit DeviceAvailability(std::vector<std::uint8_t> d);
    static DeviceAvailability all_available(int servers);

    int size() const { return static_cast<int>(d_.size()); }
    bool available(int e) const { return d_[e] != 0; }
    const std::vector<std::uint8_t>& values() const { return d_; }

    bool operator==(const DeviceAvailability&) const = default;

  private:
    std::vector<std::uint8_t> d_;
};

// Pre-scheduling strategy: planned request counts per (server, region,
// category), the collapsed per-(server, category) counts it was derived
// from, and the collapsed revenue (drain priority) used when matching.
struct PreSchedule {
    Grid3<std::int64_t> assignments;       // E x M x I, >= 0
    Grid2<double> collapsed;               // E x I, >= 0
    Grid2<double> collapsed_revenue;       // E x I, expected Mbps per request (A-bar)
    Tick built_for_tick = 0;
    // Demand the optimizer could not place (per category) when capacity was
    // short; routed to post-scheduling fallback.
    std::vector<double> unscheduled_per_category;

    std::int64_t total_assigned() const;
};

struct Placement {
    std::int64_t request_id = 0;
    int server_id = 0;
};

// Per-placement provenance kept for robustness slicing.
struct PlacementRecord {
    std::int64_t request_id = 0;
    int server_id = 0;
    int origin_region = 0;
    int category = 0;
    double throughput = 0.0;  // realized Mbps (0 when the device failed)
    bool device_anomaly = false;
    bool service_anomaly = false;
};

struct ScheduleOutcome {
    Tick tick = 0;
    std::vector<Placement> placements;
    std::vector<PlacementRecord> records;
    std::int64_t dropped = 0;
    std::int64_t device_anomaly_count = 0;
    std::int64_t service_anomaly_count = 0;
    std::vector<double> utilization;  // per server, realized bandwidth fraction
    double revenue = 0.0;             // fine-adjusted
    double raw_revenue = 0.0;         // anomaly-free counterfactual, same metric
    double decision_time_ms = 0.0;
};

struct PlatformDescriptor {
    int servers = 0;   // E
    int regions = 0;   // M
};

// Checks cross-references and fixes E and M.
PlatformDescriptor validate_platform(const std::vector<Server>& servers,
                                     const std::vector<Region>& regions);

// Hop distances over the region adjacency graph (BFS; unreachable pairs get
// a large sentinel distance that still orders after every reachable hop).
Grid2<int> region_hop_distances(const std::vector<Region>& regions);
constexpr int kUnreachableHops = 1 << 20;

}  // namespace sentinel
