#pragma once

#include <string>
#include <vector>

namespace zeta2k::cli {

// One line of command output.  Check rows carry lhs/rhs/pass; value rows
// leave pass at -1 and fill only `value`.  Parseval rows use all five
// columns: lhs = partial sum, rhs = target, value = tail bound.
struct ReportRow {
    std::string name;
    std::string params;
    std::string lhs;
    std::string rhs;
    std::string value;
    int pass = -1;
};

struct RunReport {
    std::string version;
    std::string command;
    std::vector<ReportRow> rows;
    long long duration_ms = 0;

    std::size_t passed() const;
    std::size_t failed() const;
};

std::string render_json(const RunReport& report);
std::string render_csv(const RunReport& report);

}  // namespace zeta2k::cli
