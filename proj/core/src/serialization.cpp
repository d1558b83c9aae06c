#include "sentinel/serialization.hpp"

namespace sentinel {

namespace {

template <typename T>
json grid2_to_json(const Grid2<T>& g) {
    return json{{"rows", g.rows()}, {"cols", g.cols()}, {"data", g.data()}};
}

template <typename T>
Grid2<T> grid2_from_json(const json& j) {
    Grid2<T> g(j.at("rows").get<int>(), j.at("cols").get<int>());
    g.data() = j.at("data").get<std::vector<T>>();
    if (g.data().size() != static_cast<std::size_t>(g.rows()) * g.cols()) {
        throw ShapeMismatchError("grid2 payload size mismatch");
    }
    return g;
}

template <typename T>
json grid3_to_json(const Grid3<T>& g) {
    return json{{"d0", g.dim0()}, {"d1", g.dim1()}, {"d2", g.dim2()}, {"data", g.data()}};
}

template <typename T>
Grid3<T> grid3_from_json(const json& j) {
    Grid3<T> g(j.at("d0").get<int>(), j.at("d1").get<int>(), j.at("d2").get<int>());
    g.data() = j.at("data").get<std::vector<T>>();
    if (g.data().size() !=
        static_cast<std::size_t>(g.dim0()) * g.dim1() * g.dim2()) {
        throw ShapeMismatchError("grid3 payload size mismatch");
    }
    return g;
}

}  // namespace

void to_json(json& j, const DemandProfile& p) {
    j = json{{"scale", p.scale}, {"peak_shift_hours", p.peak_shift_hours}};
}
void from_json(const json& j, DemandProfile& p) {
    j.at("scale").get_to(p.scale);
    j.at("peak_shift_hours").get_to(p.peak_shift_hours);
}

void to_json(json& j, const Server& s) {
    j = json{{"id", s.id},
             {"region", s.region},
             {"bandwidth_capacity", s.bandwidth_capacity},
             {"hardware_profile", s.hardware_profile},
             {"reliability_class", static_cast<int>(s.reliability)}};
}
void from_json(const json& j, Server& s) {
    j.at("id").get_to(s.id);
    j.at("region").get_to(s.region);
    j.at("bandwidth_capacity").get_to(s.bandwidth_capacity);
    j.at("hardware_profile").get_to(s.hardware_profile);
    s.reliability = static_cast<ReliabilityClass>(j.at("reliability_class").get<int>());
}

void to_json(json& j, const Region& r) {
    j = json{{"id", r.id}, {"neighbors", r.neighbors}, {"demand_profile", r.demand}};
}
void from_json(const json& j, Region& r) {
    j.at("id").get_to(r.id);
    j.at("neighbors").get_to(r.neighbors);
    j.at("demand_profile").get_to(r.demand);
}

void to_json(json& j, const RequestCategory& c) {
    j = json{{"id", c.id}, {"centroid", c.centroid}};
}
void from_json(const json& j, RequestCategory& c) {
    j.at("id").get_to(c.id);
    j.at("centroid").get_to(c.centroid);
}

void to_json(json& j, const LiveRequest& r) {
    j = json{{"id", r.id},
             {"region", r.region},
             {"features", r.features},
             {"category", r.category},
             {"arrival_tick", r.arrival_tick},
             {"nominal_throughput", r.nominal_throughput}};
}
void from_json(const json& j, LiveRequest& r) {
    j.at("id").get_to(r.id);
    j.at("region").get_to(r.region);
    j.at("features").get_to(r.features);
    j.at("category").get_to(r.category);
    j.at("arrival_tick").get_to(r.arrival_tick);
    j.at("nominal_throughput").get_to(r.nominal_throughput);
}

void to_json(json& j, const WorkloadWindow& w) {
    j = json{{"server_id", w.server_id()},
             {"start_tick", w.start_tick()},
             {"ticks", w.ticks()},
             {"dims", w.dims()},
             {"values", w.values()}};
}
void from_json(const json& j, WorkloadWindow& w) {
    w = WorkloadWindow(j.at("server_id").get<int>(), j.at("start_tick").get<Tick>(),
                       j.at("ticks").get<int>(), j.at("dims").get<int>(),
                       j.at("values").get<std::vector<double>>());
}

void to_json(json& j, const RequestBatch& b) {
    j = json{{"tick", b.tick()}, {"counts", grid2_to_json(b.counts())}};
}
void from_json(const json& j, RequestBatch& b) {
    b = RequestBatch(j.at("tick").get<Tick>(),
                     grid2_from_json<std::int64_t>(j.at("counts")));
}

void to_json(json& j, const EffectMatrices& e) {
    j = json{{"revenue", grid3_to_json(e.revenue())},
             {"serviceable", grid3_to_json(e.serviceable())}};
}
void from_json(const json& j, EffectMatrices& e) {
    e = EffectMatrices(grid3_from_json<double>(j.at("revenue")),
                       grid3_from_json<std::uint8_t>(j.at("serviceable")));
}

void to_json(json& j, const DeviceAvailability& d) {
    j = json{{"d", d.values()}};
}
void from_json(const json& j, DeviceAvailability& d) {
    d = DeviceAvailability(j.at("d").get<std::vector<std::uint8_t>>());
}

void to_json(json& j, const PreSchedule& p) {
    j = json{{"assignments", grid3_to_json(p.assignments)},
             {"collapsed", grid2_to_json(p.collapsed)},
             {"collapsed_revenue", grid2_to_json(p.collapsed_revenue)},
             {"built_for_tick", p.built_for_tick},
             {"unscheduled_per_category", p.unscheduled_per_category}};
}
void from_json(const json& j, PreSchedule& p) {
    p.assignments = grid3_from_json<std::int64_t>(j.at("assignments"));
    p.collapsed = grid2_from_json<double>(j.at("collapsed"));
    p.collapsed_revenue = grid2_from_json<double>(j.at("collapsed_revenue"));
    j.at("built_for_tick").get_to(p.built_for_tick);
    j.at("unscheduled_per_category").get_to(p.unscheduled_per_category);
}

void to_json(json& j, const PlacementRecord& r) {
    j = json{{"request_id", r.request_id},
             {"server_id", r.server_id},
             {"origin_region", r.origin_region},
             {"category", r.category},
             {"throughput", r.throughput},
             {"device_anomaly", r.device_anomaly},
             {"service_anomaly", r.service_anomaly}};
}
void from_json(const json& j, PlacementRecord& r) {
    j.at("request_id").get_to(r.request_id);
    j.at("server_id").get_to(r.server_id);
    j.at("origin_region").get_to(r.origin_region);
    j.at("category").get_to(r.category);
    j.at("throughput").get_to(r.throughput);
    j.at("device_anomaly").get_to(r.device_anomaly);
    j.at("service_anomaly").get_to(r.service_anomaly);
}

void to_json(json& j, const ScheduleOutcome& o) {
    json placements = json::array();
    for (const Placement& p : o.placements) {
        placements.push_back(json{{"request_id", p.request_id}, {"server_id", p.server_id}});
    }
    j = json{{"tick", o.tick},
             {"placements", placements},
             {"records", o.records},
             {"dropped", o.dropped},
             {"device_anomaly_count", o.device_anomaly_count},
             {"service_anomaly_count", o.service_anomaly_count},
             {"utilization", o.utilization},
             {"revenue", o.revenue},
             {"raw_revenue", o.raw_revenue},
             {"decision_time_ms", o.decision_time_ms}};
}
void from_json(const json& j, ScheduleOutcome& o) {
    o.placements.clear();
    for (const json& p : j.at("placements")) {
        o.placements.push_back(Placement{p.at("request_id").get<std::int64_t>(),
                                         p.at("server_id").get<int>()});
    }
    j.at("records").get_to(o.records);
    j.at("tick").get_to(o.tick);
    j.at("dropped").get_to(o.dropped);
    j.at("device_anomaly_count").get_to(o.device_anomaly_count);
    j.at("service_anomaly_count").get_to(o.service_anomaly_count);
    j.at("utilization").get_to(o.utilization);
    j.at("revenue").get_to(o.revenue);
    j.at("raw_revenue").get_to(o.raw_revenue);
    j.at("decision_time_ms").get_to(o.decision_time_ms);
}

}  // namespace sentinel
