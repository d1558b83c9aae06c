#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "sentinel/domain.hpp"

namespace sentinel {

// Canonical line-delimited JSON record schema. Field names match the
// domain type fields; doubles serialize with round-trip precision.

using json = nlohmann::json;

void to_json(json& j, const DemandProfile& p);
void from_json(const json& j, DemandProfile& p);
void to_json(json& j, const Server& s);
void from_json(const json& j, Server& s);
void to_json(json& j, const Region& r);
void from_json(const json& j, Region& r);
void to_json(json& j, const RequestCategory& c);
void from_json(const json& j, RequestCategory& c);
void to_json(json& j, const LiveRequest& r);
void from_json(const json& j, LiveRequest& r);
void to_json(json& j, const WorkloadWindow& w);
void from_json(const json& j, WorkloadWindow& w);
void to_json(json& j, const RequestBatch& b);
void from_json(const json& j, RequestBatch& b);
void to_json(json& j, const EffectMatrices& e);
void from_json(const json& j, EffectMatrices& e);
void to_json(json& j, const DeviceAvailability& d);
void from_json(const json& j, DeviceAvailability& d);
void to_json(json& j, const PreSchedule& p);
void from_json(const json& j, PreSchedule& p);
void to_json(json& j, const PlacementRecord& r);
void from_json(const json& j, PlacementRecord& r);
void to_json(json& j, const ScheduleOutcome& o);
void from_json(const json& j, ScheduleOutcome& o);

template <typename T>
void write_records(std::ostream& out, const std::vector<T>& records) {
    for (const T& r : records) {
        out << json(r).dump() << '\n';
    }
}

template <typename T>
std::vector<T> read_records(std::istream& in) {
    std::vector<T> records;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        records.push_back(json::parse(line).get<T>());
    }
    return records;
}

template <typename T>
void write_records_file(const std::string& path, const std::vector<T>& records) {
    std::ofstream out(path);
    if (!out) throw DomainError("cannot open for writing: " + path);
    write_records(out, records);
}

template <typename T>
std::vector<T> read_records_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open for reading: " + path);
    return read_records<T>(in);
}

}  // namespace sentinel
