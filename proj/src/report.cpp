#include "casigrav/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace casigrav {

std::string format_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

nlohmann::ordered_json Report::to_json() const {
    nlohmann::ordered_json j;
    j["subcommand"] = subcommand;
    if (!sweep_axis.empty())
        j["axis"] = sweep_axis;
    j["inputs"] = inputs;
    if (sweep_axis.empty()) {
        nlohmann::ordered_json res = nlohmann::ordered_json::object();
        for (const auto& e : results)
            res[e.key] = {{"value", e.value}, {"unit", e.unit}, {"note", e.note}};
        j["results"] = std::move(res);
    } else {
        nlohmann::ordered_json out_rows = nlohmann::ordered_json::array();
        for (const auto& row : rows) {
            nlohmann::ordered_json res = nlohmann::ordered_json::object();
            for (const auto& e : row.entries)
                res[e.key] = {{"value", e.value}, {"unit", e.unit}, {"note", e.note}};
            out_rows.push_back({{"axis_value", row.axis_value}, {"results", std::move(res)}});
        }
        j["rows"] = std::move(out_rows);
    }
    j["caveats"] = caveats;
    return j;
}

std::string Report::to_csv() const {
    std::ostringstream out;
    if (sweep_axis.empty()) {
        out << "key,value,unit\n";
        for (const auto& e : results)
            out << e.key << ',' << format_value(e.value) << ',' << e.unit << '\n';
        return out.str();
    }
    // Sweep: one row per axis value, columns named "key (unit)".
    out << sweep_axis;
    if (!rows.empty())
        for (const auto& e : rows.front().entries)
            out << ',' << e.key << (e.unit.empty() ? "" : " (" + e.unit + ")");
    out << '\n';
    for (const auto& row : rows) {
        out << format_value(row.axis_value);
        for (const auto& e : row.entries)
            out << ',' << format_value(e.value);
        out << '\n';
    }
    return out.str();
}

std::string Report::to_table() const {
    std::ostringstream out;
    out << "# " << subcommand;
    if (!sweep_axis.empty())
        out << " over " << sweep_axis;
    out << '\n';
    auto print_entries = [&out](const std::vector<ReportEntry>& entries, const char* indent) {
        std::size_t width = 0;
        for (const auto& e : entries)
            width = std::max(width, e.key.size());
        for (const auto& e : entries) {
            out << indent << e.key << std::string(width - e.key.size() + 2, ' ')
                << format_value(e.value);
            if (!e.unit.empty())
                out << ' ' << e.unit;
            if (!e.note.empty())
                out << "    [" << e.note << ']';
            out << '\n';
        }
    };
    if (sweep_axis.empty()) {
        print_entries(results, "  ");
    } else {
        for (const auto& row : rows) {
            out << "  " << sweep_axis << " = " << format_value(row.axis_value) << '\n';
            print_entries(row.entries, "    ");
        }
    }
    for (const auto& c : caveats)
        out << "  ! " << c << '\n';
    return out.str();
}

} // namespace casigrav
