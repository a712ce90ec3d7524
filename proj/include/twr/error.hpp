#pragma once

#include <stdexcept>
#include <string>

namespace twr {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotHermitian : public Error { using Error::Error; };
class Singular : public Error { using Error::Error; };
class DimensionMismatch : public Error { using Error::Error; };
class DomainError : public Error { using Error::Error; };
class Unsupported : public Error { using Error::Error; };
class SearchSpaceTooLarge : public Error { using Error::Error; };
class InsufficientData : public Error { using Error::Error; };

/// Two independent numerical routes disagreed beyond their tolerance.
class CrossCheckFailure : public Error { using Error::Error; };

/// Campaign spec could not be parsed or validated. `line` is 0 when the
/// problem is not tied to a single line.
class ConfigError : public Error {
public:
    ConfigError(const std::string& what, int line = 0)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

}  // namespace twr
