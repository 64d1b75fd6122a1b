#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace uimigrate {

enum class ErrorKind {
    InvalidArgument,
    Io,
    Parse,
    Unsupported,
    Internal,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

// Parse failure with a source position, formatted as "file:line:col: message".
class ParseError : public Error {
public:
    ParseError(const std::string& file, int line, int column, const std::string& message)
        : Error(ErrorKind::Parse,
                file + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          file_(file), line_(line), column_(column) {}

    const std::string& file() const { return file_; }
    int line() const { return line_; }
    int column() const { return column_; }

private:
    std::string file_;
    int line_;
    int column_;
};

} // namespace uimigrate
