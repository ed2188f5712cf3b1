#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace phisum {

// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An argument lies outside a table, counter, or configured capacity.
// `module()` names the component whose limit was hit.
class BoundError : public Error {
public:
    BoundError(std::string module, const std::string& what)
        : Error(module + ": " + what), module_(std::move(module)) {}
    const std::string& module() const noexcept { return module_; }

private:
    std::string module_;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

class UnsupportedStrategy : public Error {
public:
    using Error::Error;
};

// An exact integer result does not fit the 64-bit count type.
class OverflowError : public Error {
public:
    using Error::Error;
};

class FitError : public Error {
public:
    using Error::Error;
};

// A user-supplied summand raised; carries the argument it was called with.
class SummandError : public Error {
public:
    SummandError(std::int64_t argument, const std::string& what)
        : Error("summand failed at argument " + std::to_string(argument) + ": " + what),
          argument_(argument) {}
    std::int64_t argument() const noexcept { return argument_; }

private:
    std::int64_t argument_;
};

}  // namespace phisum
