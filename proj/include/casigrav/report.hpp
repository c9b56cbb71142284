#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace casigrav {

/// One computed number: a key, the value in SI, the unit string, and a note
/// recording the formula that produced it.
struct ReportEntry {
    std::string key;
    double value = 0.0;
    std::string unit;
    std::string note;

    friend bool operator==(const ReportEntry&, const ReportEntry&) = default;
};

struct SweepRow {
    double axis_value = 0.0;
    std::vector<ReportEntry> entries;

    friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

/// Machine-readable result of one subcommand. Field order is fixed so that
/// identical inputs serialize byte-identically.
struct Report {
    std::string subcommand;
    nlohmann::ordered_json inputs; // echo of the resolved config
    std::vector<ReportEntry> results;
    std::vector<std::string> caveats;

    // sweep only
    std::string sweep_axis;
    std::vector<SweepRow> rows;

    nlohmann::ordered_json to_json() const;
    std::string to_csv() const;
    std::string to_table() const;
};

/// %.17g — enough digits to round-trip a double exactly.
std::string format_value(double v);

} // namespace casigrav
