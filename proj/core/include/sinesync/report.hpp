#pragma once

// Tabular reports and their serializations.
//
// Every command produces one Report: a named table with parameters, columns
// and rows of pre-formatted cells. The CSV and JSON encodings carry exactly
// the same cells, so either one parses back to the identical report; the
// human table is for terminals. All emission is deterministic: the same
// report always serializes to the same bytes.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sinesync {

// One table cell: canonical text plus whether it is numeric (JSON emits
// numeric cells unquoted). Blank cells mark padding, e.g. a row with fewer
// events than columns.
struct Cell {
    std::string text;
    bool numeric = false;

    static Cell blank();
    static Cell of_text(std::string value);
    static Cell integer(long long value);
    static Cell fixed(double value, int decimals);   // "%.<decimals>f"
    static Cell general(double value, int significant);  // "%.<significant>g"
    static Cell full(double value);  // shortest round-trip form

    friend bool operator==(const Cell&, const Cell&) = default;
};

struct Report {
    std::string command;
    std::vector<std::pair<std::string, std::string>> params;  // ordered
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    std::vector<std::string> diagnostics;  // side channel, never serialized

    friend bool operator==(const Report& lhs, const Report& rhs) {
        return lhs.command == rhs.command && lhs.params == rhs.params &&
               lhs.columns == rhs.columns && lhs.rows == rhs.rows;
    }
};

// Shortest decimal form that parses back to the same double ("0.00075").
std::string format_full(double value);
std::string format_fixed(double value, int decimals);

// CSV: leading "# command: ..." / "# param: k=v" comment lines, then a
// header row and the data rows. UTF-8, comma-separated, LF line endings.
std::string to_csv(const Report& report);
Report from_csv(std::string_view text);

// JSON: one object {"command", "params", "columns", "rows"}; rows are arrays
// of cells with numeric cells as raw numbers. Key order is fixed.
std::string to_json(const Report& report);
Report from_json(std::string_view text);

// Aligned human-readable table with a parameter header.
std::string to_table(const Report& report);

}  // namespace sinesync
