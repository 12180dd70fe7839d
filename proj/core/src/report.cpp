#include "sinesync/report.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <stdexcept>

namespace sinesync {

std::string format_full(double value) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc{}) throw std::runtime_error("number formatting failed");
    return std::string(buf, end);
}

std::string format_fixed(double value, int decimals) {
    char buf[64];
    int written = std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
    return std::string(buf, buf + written);
}

Cell Cell::blank() { return Cell{"", false}; }

Cell Cell::of_text(std::string value) { return Cell{std::move(value), false}; }

Cell Cell::integer(long long value) { return Cell{std::to_string(value), true}; }

Cell Cell::fixed(double value, int decimals) {
    return Cell{format_fixed(value, decimals), true};
}

Cell Cell::general(double value, int significant) {
    char buf[64];
    int written = std::snprintf(buf, sizeof(buf), "%.*g", significant, value);
    return Cell{std::string(buf, buf + written), true};
}

Cell Cell::full(double value) { return Cell{format_full(value), true}; }

namespace {

bool looks_numeric(std::string_view text) {
    if (text.empty()) return false;
    double parsed = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), parsed);
    return ec == std::errc{} && ptr == text.data() + text.size();
}

std::string csv_escape(std::string_view field) {
    bool needs_quotes = field.find_first_of(",\"\n") != std::string_view::npos;
    if (!needs_quotes) return std::string(field);
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out.push_back('"');
    return out;
}

std::vector<std::string> csv_split(std::string_view line) {
    std::vector<std::string> fields;
    std::string current;
    bool quoted = false;
    for (size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    current.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                current.push_back(c);
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(current));
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    fields.push_back(std::move(current));
    return fields;
}

std::string json_escape(std::string_view text) {
    std::string out = "\"";
    for (char c : text) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out.push_back(c);
                }
        }
    }
    out.push_back('"');
    return out;
}

// Minimal JSON reader for the fixed report shape. Number tokens are kept as
// their original text so that parsing an emitted report reproduces the exact
// cells.
class JsonReader {
public:
    explicit JsonReader(std::string_view text) : text_(text) {}

    void expect(char c) {
        skip_space();
        if (pos_ >= text_.size() || text_[pos_] != c)
            throw std::invalid_argument("malformed report JSON");
        ++pos_;
    }

    bool try_consume(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::string read_string() {
        skip_space();
        if (pos_ >= text_.size() || text_[pos_] != '"')
            throw std::invalid_argument("expected JSON string");
        ++pos_;
        std::string out;
        while (pos_ < text_.size() && text_[pos_] != '"') {
            char c = text_[pos_++];
            if (c == '\\') {
                if (pos_ >= text_.size()) throw std::invalid_argument("bad escape");
                char e = text_[pos_++];
                switch (e) {
                    case 'n': out.push_back('\n'); break;
                    case 't': out.push_back('\t'); break;
                    case 'r': out.push_back('\r'); break;
                    case '"': out.push_back('"'); break;
                    case '\\': out.push_back('\\'); break;
                    case 'u': {
                        if (pos_ + 4 > text_.size()) throw std::invalid_argument("bad escape");
                        int code = std::stoi(std::string(text_.substr(pos_, 4)), nullptr, 16);
                        pos_ += 4;
                        out.push_back(static_cast<char>(code));
                        break;
                    }
                    default: throw std::invalid_argument("bad escape");
                }
            } else {
                out.push_back(c);
            }
        }
        if (pos_ >= text_.size()) throw std::invalid_argument("unterminated string");
        ++pos_;  // closing quote
        return out;
    }

    Cell read_cell() {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == '"') return Cell::of_text(read_string());
        if (text_.compare(pos_, 4, "null") == 0) {
            pos_ += 4;
            return Cell::blank();
        }
        size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
                text_[pos_] == '-' || text_[pos_] == '+' || text_[pos_] == '.' ||
                text_[pos_] == 'e' || text_[pos_] == 'E'))
            ++pos_;
        if (pos_ == start) throw std::invalid_argument("expected JSON value");
        return Cell{std::string(text_.substr(start, pos_ - start)), true};
    }

    void skip_space() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

private:
    std::string_view text_;
    size_t pos_ = 0;
};

}  // namespace

std::string to_csv(const Report& report) {
    std::string out;
    out += "# command: " + report.command + "\n";
    for (const auto& [key, value] : report.params)
        out += "# param: " + key + "=" + value + "\n";
    for (size_t i = 0; i < report.columns.size(); ++i) {
        if (i) out.push_back(',');
        out += csv_escape(report.columns[i]);
    }
    out.push_back('\n');
    for (const auto& row : report.rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) out.push_back(',');
            out += csv_escape(row[i].text);
        }
        out.push_back('\n');
    }
    return out;
}

Report from_csv(std::string_view text) {
    Report report;
    bool header_seen = false;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::string_view body = line.substr(1);
            while (!body.empty() && body.front() == ' ') body.remove_prefix(1);
            if (body.starts_with("command:")) {
                std::string_view v = body.substr(8);
                while (!v.empty() && v.front() == ' ') v.remove_prefix(1);
                report.command = std::string(v);
            } else if (body.starts_with("param:")) {
                std::string_view v = body.substr(6);
                while (!v.empty() && v.front() == ' ') v.remove_prefix(1);
                size_t eq = v.find('=');
                if (eq == std::string_view::npos)
                    throw std::invalid_argument("malformed CSV param line");
                report.params.emplace_back(std::string(v.substr(0, eq)),
                                           std::string(v.substr(eq + 1)));
            }
            continue;
        }
        auto fields = csv_split(line);
        if (!header_seen) {
            report.columns.assign(fields.begin(), fields.end());
            header_seen = true;
        } else {
            std::vector<Cell> row;
            row.reserve(fields.size());
            for (auto& f : fields)
                row.push_back(Cell{f, looks_numeric(f)});
            report.rows.push_back(std::move(row));
        }
    }
    if (!header_seen) throw std::invalid_argument("CSV report is missing its header row");
    return report;
}

std::string to_json(const Report& report) {
    std::string out = "{\n  \"command\": " + json_escape(report.command) + ",\n";
    out += "  \"params\": {";
    for (size_t i = 0; i < report.params.size(); ++i) {
        if (i) out.push_back(',');
        out += "\n    " + json_escape(report.params[i].first) + ": " +
               json_escape(report.params[i].second);
    }
    out += report.params.empty() ? "},\n" : "\n  },\n";
    out += "  \"columns\": [";
    for (size_t i = 0; i < report.columns.size(); ++i) {
        if (i) out += ", ";
        out += json_escape(report.columns[i]);
    }
    out += "],\n  \"rows\": [";
    for (size_t r = 0; r < report.rows.size(); ++r) {
        if (r) out.push_back(',');
        out += "\n    [";
        const auto& row = report.rows[r];
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) out += ", ";
            if (row[i].text.empty()) out += "null";
            else if (row[i].numeric) out += row[i].text;
            else out += json_escape(row[i].text);
        }
        out += "]";
    }
    out += report.rows.empty() ? "]\n}\n" : "\n  ]\n}\n";
    return out;
}

Report from_json(std::string_view text) {
    JsonReader reader(text);
    Report report;
    reader.expect('{');

    auto read_key = [&reader]() { return reader.read_string(); };

    bool first = true;
    while (true) {
        if (reader.try_consume('}')) break;
        if (!first) { /* comma already consumed below */ }
        std::string key = read_key();
        reader.expect(':');
        if (key == "command") {
            report.command = reader.read_string();
        } else if (key == "params") {
            reader.expect('{');
            if (!reader.try_consume('}')) {
                do {
                    std::string pkey = reader.read_string();
                    reader.expect(':');
                    std::string pval = reader.read_string();
                    report.params.emplace_back(std::move(pkey), std::move(pval));
                } while (reader.try_consume(','));
                reader.expect('}');
            }
        } else if (key == "columns") {
            reader.expect('[');
            if (!reader.try_consume(']')) {
                do {
                    report.columns.push_back(reader.read_string());
                } while (reader.try_consume(','));
                reader.expect(']');
            }
        } else if (key == "rows") {
            reader.expect('[');
            if (!reader.try_consume(']')) {
                do {
                    reader.expect('[');
                    std::vector<Cell> row;
                    if (!reader.try_consume(']')) {
                        do {
                            row.push_back(reader.read_cell());
                        } while (reader.try_consume(','));
                        reader.expect(']');
                    }
                    report.rows.push_back(std::move(row));
                } while (reader.try_consume(','));
                reader.expect(']');
            }
        } else {
            throw std::invalid_argument("unknown report field: " + key);
        }
        first = false;
        if (!reader.try_consume(',')) {
            reader.expect('}');
            break;
        }
    }
    return report;
}

std::string to_table(const Report& report) {
    std::string out = report.command;
    for (const auto& [key, value] : report.params)
        out += "  " + key + "=" + value;
    out.push_back('\n');

    std::vector<size_t> widths(report.columns.size(), 0);
    for (size_t i = 0; i < report.columns.size(); ++i)
        widths[i] = report.columns[i].size();
    for (const auto& row : report.rows)
        for (size_t i = 0; i < row.size() && i < widths.size(); ++i)
            widths[i] = std::max(widths[i], row[i].text.size());

    auto emit_row = [&](const std::vector<std::string>& cells) {
        for (size_t i = 0; i < cells.size(); ++i) {
            if (i) out += "  ";
            out += cells[i];
            if (i + 1 < cells.size())
                out.append(widths[i] - std::min(widths[i], cells[i].size()), ' ');
        }
        out.push_back('\n');
    };

    emit_row(report.columns);
    for (const auto& row : report.rows) {
        std::vector<std::string> cells;
        cells.reserve(row.size());
        for (const auto& cell : row) cells.push_back(cell.text.empty() ? "-" : cell.text);
        emit_row(cells);
    }
    return out;
}

}  // namespace sinesync
