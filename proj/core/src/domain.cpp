#include "sentinel/domain.hpp"

#include <deque>
#include <numeric>

namespace sentinel {

WorkloadWindow::WorkloadWindow(int server_id, Tick start_tick, int ticks, int dims,
                               std::vector<double> values)
    : server_id_(server_id), start_tick_(start_tick), ticks_(ticks), dims_(dims),
      values_(std::move(values)) {
    if (ticks_ <= 0 || dims_ <= 0 ||
        values_.size() != static_cast<std::size_t>(ticks_) * dims_) {
        throw ShapeMismatchError("workload window must hold exactly ticks*dims values");
    }
    for (double v : values_) {
        if (!(v >= 0.0 && v <= 1.0)) {
            throw DomainError("telemetry values must lie in [0,1]");
        }
    }
}

RequestBatch::RequestBatch(Tick tick, Grid2<std::int64_t> counts)
    : tick_(tick), counts_(std::move(counts)) {
    if (counts_.rows() <= 0 || counts_.cols() <= 0) {
        throw ShapeMismatchError("request batch needs at least one region and category");
    }
    for (std::int64_t c : counts_.data()) {
        if (c < 0) throw DomainError("request counts must be non-negative");
    }
}

std::int64_t RequestBatch::total() const {
    return std::accumulate(counts_.data().begin(), counts_.data().end(), std::int64_t{0});
}

EffectMatrices::EffectMatrices(Grid3<double> revenue, Grid3<std::uint8_t> anomaly)
    : revenue_(std::move(revenue)), serviceable_(std::move(anomaly)) {
    if (revenue_.dim0() != serviceable_.dim0() || revenue_.dim1() != serviceable_.dim1() ||
        revenue_.dim2() != serviceable_.dim2()) {
        throw ShapeMismatchError("A and S shapes differ");
    }
    for (double a : revenue_.data()) {
        if (a < 0.0) throw DomainError("revenue matrix entries must be non-negative");
    }
    for (std::uint8_t s : serviceable_.data()) {
        if (s > 1) throw DomainError("serviceability matrix entries must be 0 or 1");
    }
}

DeviceAvailability::DeviceAvailability(std::vector<std::uint8_t> d) : d_(std::move(d)) {
    for (std::uint8_t v : d_) {
        if (v > 1) throw DomainError("availability entries must be 0 or 1");
    }
}

DeviceAvailability DeviceAvailability::all_available(int servers) {
    return DeviceAvailability(std::vector<std::uint8_t>(servers, 1));
}

std::int64_t PreSchedule::total_assigned() const {
    return std::accumulate(assignments.data().begin(), assignments.data().end(),
                           std::int64_t{0});
}

PlatformDescriptor validate_platform(const std::vector<Server>& servers,
                                     const std::vector<Region>& regions) {
    if (servers.empty() || regions.empty()) throw EmptyPlatformError();
    const int m = static_cast<int>(regions.size());
    for (const Server& s : servers) {
        if (s.region < 0 || s.region >= m) {
            throw DanglingRegionError("server " + std::to_string(s.id) +
                                      " references region " + std::to_string(s.region) +
                                      " of " + std::to_string(m));
        }
        if (s.bandwidth_capacity <= 0.0) {
            throw DomainError("server bandwidth capacity must be positive");
        }
        for (double h : s.hardware_profile) {
            if (h <= 0.0) throw DomainError("hardware profile entries must be positive");
        }
    }
    for (const Region& r : regions) {
        for (int nb : r.neighbors) {
            if (nb < 0 || nb >= m) {
                throw DanglingRegionError("region " + std::to_string(r.id) +
                                          " references neighbor " + std::to_string(nb));
            }
        }
    }
    return PlatformDescriptor{static_cast<int>(servers.size()), m};
}

Grid2<int> region_hop_distances(const std::vector<Region>& regions) {
    const int m = static_cast<int>(regions.size());
    Grid2<int> dist(m, m, kUnreachableHops);
    for (int src = 0; src < m; ++src) {
        dist(src, src) = 0;
        std::deque<int> queue{src};
        while (!queue.empty()) {
            const int cur = queue.front();
            queue.pop_front();
            for (int nb : regions[cur].neighbors) {
                if (dist(src, nb) == kUnreachableHops) {
                    dist(src, nb) = dist(src, cur) + 1;
                    queue.push_back(nb);
                }
            }
        }
    }
    return dist;
}

}  // namespace sentinel
