#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace dixkit::csv {

/// Splits one line into fields. Fields may be double-quoted; a doubled quote
/// inside a quoted field is a literal quote. Throws std::invalid_argument on
/// an unterminated quote.
std::vector<std::string> split_line(std::string_view line);

/// Quotes a field only when it contains a comma, quote or leading/trailing space.
std::string escape(std::string_view field);

std::string join(const std::vector<std::string> &fields);

std::string_view trim(std::string_view s);

/// One physical line of a text file, with its 1-based line number.
struct Line {
    std::size_t number;
    std::string text;
};

/// Reads all lines, stripping a UTF-8 BOM and trailing '\r'.
std::vector<Line> read_lines(std::istream &in);
std::vector<Line> read_lines(const std::filesystem::path &path);

/// Parses a `# key=value` metadata line. Returns false if `text` is not one.
bool parse_metadata(std::string_view text, std::string &key, std::string &value);

/// Strict decimal parse: the whole (trimmed) field must be consumed.
bool parse_double(std::string_view field, double &out);

}  // namespace dixkit::csv
