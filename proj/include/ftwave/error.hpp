#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ftwave {

/// Process exit codes used by the command-line tool.
enum class ExitCode : int {
    ok = 0,
    failure = 1,
    config = 2,
    stability = 3,
    numerical = 4,
    io = 5,
};

class Error : public std::runtime_error {
public:
    Error(ExitCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ExitCode code() const noexcept { return code_; }

private:
    ExitCode code_;
};

class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& what) : Error(ExitCode::config, what) {}
};

/// Raised when the Courant number r = c*ht/hx leaves (0, 1].
class StabilityError : public Error {
public:
    explicit StabilityError(double r);
    double courant() const noexcept { return r_; }

private:
    double r_;
};

/// A non-finite value appeared during time marching. Indices are 1-based.
class NumericalError : public Error {
public:
    NumericalError(std::size_t space_index, std::size_t time_index);
    std::size_t space_index() const noexcept { return i_; }
    std::size_t time_index() const noexcept { return j_; }

private:
    std::size_t i_;
    std::size_t j_;
};

class IoError : public Error {
public:
    explicit IoError(const std::string& what) : Error(ExitCode::io, what) {}
};

}  // namespace ftwave
