#include "rlab/report.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "rlab/errors.hpp"

namespace rlab {

Json Report::to_json() const {
    Json j;
    j["schema_version"] = schema_version;
    j["subcommand"] = subcommand;
    j["inputs"] = inputs;
    j["seeds"] = seeds;
    j["payload"] = payload;
    j["timings"] = timings;
    j["elapsed_ms"] = elapsed_ms;
    return j;
}

namespace {

void flatten(const Json& j, const std::string& prefix, std::ostringstream& out, int depth) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
            if (it->is_object() || (it->is_array() && depth < 1))
                flatten(*it, key, out, depth + 1);
            else
                out << key << ": " << it->dump() << '\n';
        }
    } else {
        out << prefix << ": " << j.dump() << '\n';
    }
}

} // namespace

std::string Report::to_text() const {
    std::ostringstream out;
    out << subcommand << '\n';
    flatten(payload, "", out, 0);
    out << "elapsed_ms: " << elapsed_ms << '\n';
    return out.str();
}

std::string seed_string(std::uint64_t seed) { return std::to_string(seed); }

void write_report(const Report& rep, const std::string& path, const std::string& format) {
    std::string body;
    if (format == "json")
        body = rep.to_json().dump(2) + "\n";
    else if (format == "text")
        body = rep.to_text();
    else
        throw InvalidInputError("unknown format: " + format);
    if (path.empty() || path == "-") {
        std::cout << body;
    } else {
        std::ofstream out(path);
        if (!out) throw InvalidInputError("cannot write report to " + path);
        out << body;
    }
}

} // namespace rlab
