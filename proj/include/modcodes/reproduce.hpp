#pragma once

// Recomputes every printed example and tabulated value and compares it with the
// printed number. Each comparison is one row; a row whose recomputation shows the
// printed value to be wrong is an ERRATUM, not a failure.

#include <string>
#include <vector>

namespace modcodes::reproduce {

enum class Status { Pass, Fail, Erratum };

std::string to_string(Status s);

struct Row {
    int criterion = 0;
    std::string id;
    std::string group;
    Status status = Status::Fail;
    std::string description;
    std::string detail;
};

struct Options {
    /// Empty, a group name (table2, oracle, erratum, hyperelliptic, points, hecke, qseries,
    /// genus, shokrollahi, bounds, conic) or a criterion number.
    std::string only;
    unsigned jobs = 1;
};

/// Known group names, in report order.
const std::vector<std::string>& groups();

/// InvalidArgument for an unknown filter.
std::vector<Row> reproduce_paper(const Options& opts = {});

/// No FAIL rows among those of the criterion (and at least one row).
bool criterion_passed(const std::vector<Row>& rows, int criterion);

}  // namespace modcodes::reproduce
