#pragma once

#include <stdexcept>
#include <string>

namespace idp {

// Error taxonomy shared by all pipeline stages. The CLI maps these to
// exit codes: usage errors 1, DataError 2, InternalError 3.

/// Lexing or method-boundary failure in a source file.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string file, int line, const std::string& what)
        : std::runtime_error(file + ":" + std::to_string(line) + ": " + what),
          file_(std::move(file)),
          line_(line) {}

    const std::string& file() const { return file_; }
    int line() const { return line_; }

private:
    std::string file_;
    int line_;
};

/// Malformed input data: bad CSV schema, empty training set, invalid config.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

/// Broken internal invariant; always a bug, never a user error.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace idp
