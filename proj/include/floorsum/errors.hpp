#pragma once

#include <stdexcept>
#include <string>

namespace floorsum {

// Bad arguments / violated preconditions. CLI maps these to exit code 1.
class UsageError : public std::invalid_argument {
public:
    explicit UsageError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Mathematically invalid input (e.g. an exponent pair outside the
// admissible region). Treated as a usage error by the CLI.
class DomainError : public UsageError {
public:
    explicit DomainError(const std::string& msg) : UsageError(msg) {}
};

// The requested operation is not supported for this input
// (e.g. point evaluation of an arithmetic function beyond its range).
// CLI maps to exit code 2.
class CapabilityError : public std::runtime_error {
public:
    explicit CapabilityError(const std::string& msg) : std::runtime_error(msg) {}
};

// A numeric verification or tolerance target failed. CLI exit code 2.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

// A request would exceed the memory budget. CLI exit code 2.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace floorsum
