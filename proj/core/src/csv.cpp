#include "dixkit/csv.hpp"

#include "dixkit/error.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>

namespace dixkit::csv {

std::vector<std::string> split_line(std::string_view line) {
    std::vector<std::string> fields;
    std::string current;
    bool quoted = false;
    bool field_was_quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
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
        } else if (c == '"' && trim(current).empty()) {
            current.clear();
            quoted = true;
            field_was_quoted = true;
        } else if (c == ',') {
            fields.push_back(field_was_quoted ? current : std::string(trim(current)));
            current.clear();
            field_was_quoted = false;
        } else {
            current.push_back(c);
        }
    }
    if (quoted) {
        throw std::invalid_argument("unterminated quoted field");
    }
    fields.push_back(field_was_quoted ? current : std::string(trim(current)));
    return fields;
}

std::string escape(std::string_view field) {
    const bool needs_quotes = field.find_first_of(",\"") != std::string_view::npos ||
                              (!field.empty() && (field.front() == ' ' || field.back() == ' '));
    if (!needs_quotes) {
        return std::string(field);
    }
    std::string out = "\"";
    for (const char c : field) {
        if (c == '"') {
            out.push_back('"');
        }
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

std::string join(const std::vector<std::string> &fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i > 0) {
            out.push_back(',');
        }
        out += escape(fields[i]);
    }
    return out;
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t");
    return s.substr(first, last - first + 1);
}

std::vector<Line> read_lines(std::istream &in) {
    std::vector<Line> lines;
    std::string text;
    std::size_t number = 0;
    while (std::getline(in, text)) {
        ++number;
        if (number == 1 && text.rfind("\xEF\xBB\xBF", 0) == 0) {
            text.erase(0, 3);
        }
        if (!text.empty() && text.back() == '\r') {
            text.pop_back();
        }
        lines.push_back({ number, std::move(text) });
    }
    return lines;
}

std::vector<Line> read_lines(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw DataError("cannot open '" + path.string() + "'");
    }
    return read_lines(in);
}

bool parse_metadata(std::string_view text, std::string &key, std::string &value) {
    if (text.empty() || text.front() != '#') {
        return false;
    }
    const std::string_view body = trim(text.substr(1));
    const auto eq = body.find('=');
    if (eq == std::string_view::npos) {
        return false;
    }
    key = std::string(trim(body.substr(0, eq)));
    value = std::string(trim(body.substr(eq + 1)));
    return !key.empty();
}

bool parse_double(std::string_view field, double &out) {
    field = trim(field);
    if (field.empty()) {
        return false;
    }
    if (field.front() == '+') {
        field.remove_prefix(1);
    }
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), out);
    return ec == std::errc{} && ptr == field.data() + field.size();
}

}  // namespace dixkit::csv
