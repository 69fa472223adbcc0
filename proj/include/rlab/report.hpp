#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace rlab {

using Json = nlohmann::ordered_json;

// Report envelope. `payload` is covered by the byte-reproducibility contract
// (same argv + seed => identical bytes for any worker count); elapsed_ms and
// everything under `timings` is not.
struct Report {
    int schema_version = 1;
    std::string subcommand;
    Json inputs = Json::object();
    std::vector<std::string> seeds;
    Json payload = Json::object();
    Json timings = Json::object();
    double elapsed_ms = 0.0;

    Json to_json() const;
    std::string to_text() const;
};

std::string seed_string(std::uint64_t seed);

// writes to the path, or stdout when path is "-"
void write_report(const Report& rep, const std::string& path, const std::string& format);

} // namespace rlab
