#include "report.hpp"

#include <json.hpp>

namespace zeta2k::cli {

std::size_t RunReport::passed() const {
    std::size_t n = 0;
    for (const auto& r : rows) {
        if (r.pass == 1) ++n;
    }
    return n;
}

std::size_t RunReport::failed() const {
    std::size_t n = 0;
    for (const auto& r : rows) {
        if (r.pass == 0) ++n;
    }
    return n;
}

std::string render_json(const RunReport& report) {
    nlohmann::ordered_json doc;
    doc["version"] = report.version;
    doc["command"] = report.command;
    doc["results"] = nlohmann::ordered_json::array();
    for (const auto& r : report.rows) {
        nlohmann::ordered_json row;
        row["name"] = r.name;
        if (!r.params.empty()) row["params"] = r.params;
        if (!r.lhs.empty()) row["lhs"] = r.lhs;
        if (!r.rhs.empty()) row["rhs"] = r.rhs;
        if (!r.value.empty()) row["value"] = r.value;
        if (r.pass >= 0) row["pass"] = (r.pass == 1);
        doc["results"].push_back(std::move(row));
    }
    doc["summary"] = {{"passed", report.passed()}, {"failed", report.failed()}};
    doc["duration_ms"] = report.duration_ms;
    return doc.dump(2) + "\n";
}

std::string render_csv(const RunReport& report) {
    std::string out = "name,params,lhs,rhs,value,pass\n";
    for (const auto& r : report.rows) {
        out += r.name;
        out += ',';
        out += r.params;
        out += ',';
        out += r.lhs;
        out += ',';
        out += r.rhs;
        out += ',';
        out += r.value;
        out += ',';
        if (r.pass >= 0) out += (r.pass == 1) ? "true" : "false";
        out += '\n';
    }
    return out;
}

}  // namespace zeta2k::cli
