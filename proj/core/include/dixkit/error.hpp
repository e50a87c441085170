#pragma once

#include <stdexcept>
#include <string>

namespace dixkit {

/// Base of every exception thrown by dixkit.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A caller-supplied argument is outside its documented domain
/// (fractions, kernel sizes, weights, shapes).
class InvalidArgument : public Error {
  public:
    using Error::Error;
};

/// Input data failed to load or validate: missing files, malformed rows,
/// violated invariants.
class DataError : public Error {
  public:
    using Error::Error;
};

/// Parse failure with file/line context baked into the message.
class ParseError : public DataError {
  public:
    ParseError(const std::string &source, std::size_t line, const std::string &what)
        : DataError(source + ":" + std::to_string(line) + ": " + what), source_(source), line_(line) {}

    [[nodiscard]] const std::string &source() const noexcept { return source_; }
    [[nodiscard]] std::size_t line() const noexcept { return line_; }

  private:
    std::string source_;
    std::size_t line_;
};

/// Training diverged (NaN/Inf loss) or another numeric failure.
class NumericError : public Error {
  public:
    using Error::Error;
};

}  // namespace dixkit
