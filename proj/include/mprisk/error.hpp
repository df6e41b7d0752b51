#pragma once

#include <stdexcept>
#include <string>

namespace mprisk {

// Failure categories; the CLI maps them onto process exit codes.
enum class ErrorKind {
    Validation = 1,  // bad input values, dimensions, configuration
    Numerical = 2,   // non-convergence, quadrature mass error, divergent MLE
    Io = 3           // missing or unreadable files
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& what) : Error(ErrorKind::Validation, what) {}
};

class NumericalError : public Error {
public:
    explicit NumericalError(const std::string& what) : Error(ErrorKind::Numerical, what) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& what) : Error(ErrorKind::Io, what) {}
};

}  // namespace mprisk
