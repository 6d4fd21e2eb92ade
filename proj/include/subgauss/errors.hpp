// errors.hpp
#pragma once
#include <stdexcept>
#include <string>

namespace subgauss {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Result not representable as a finite double, even though its logarithm may be.
class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

// An iterative search failed to reach its tolerance.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double achieved_width)
    : std::runtime_error(what), width_(achieved_width) {}

    double achieved_width() const noexcept { return width_; }

private:
    double width_;
};

// Request exceeds a configured size cap (enumeration or DP).
class CapacityError : public std::length_error {
public:
    using std::length_error::length_error;
};

} // namespace subgauss
