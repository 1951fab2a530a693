#pragma once

#include <stdexcept>
#include <string>

namespace schroder {

// Base class for every failure raised by the library.  All of these
// indicate either a violated precondition or a broken identity upstream;
// none of them are recoverable mid-computation.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Lowest-order coefficient is not +1/-1, so the series cannot be inverted.
struct not_a_unit : error {
    explicit not_a_unit(const std::string& msg) : error(msg) {}
};

// Exact polynomial division left a nonzero remainder, or a coefficient
// failed an integer divisibility assertion.
struct inexact_division : error {
    explicit inexact_division(const std::string& msg) : error(msg) {}
};

// x-series inversion requires constant term 1.
struct non_unit_constant : error {
    explicit non_unit_constant(const std::string& msg) : error(msg) {}
};

// A q-exponent that must be integral (after area rescaling) is not.
struct non_integral_exponent : error {
    explicit non_integral_exponent(const std::string& msg) : error(msg) {}
};

// Slope parameters must be coprime.
struct invalid_slope : error {
    explicit invalid_slope(const std::string& msg) : error(msg) {}
};

// A stabilizing limit (strip family k -> infinity) was not reached within
// the diagnostic bound.
struct stabilization_failure : error {
    explicit stabilization_failure(const std::string& msg) : error(msg) {}
};

// Internal bug signals for the slope solver.
struct recursion_guard_tripped : error {
    explicit recursion_guard_tripped(const std::string& msg) : error(msg) {}
};
struct negative_count : error {
    explicit negative_count(const std::string& msg) : error(msg) {}
};

// A q-difference equation that must hold identically failed to.
struct functional_equation_violation : error {
    explicit functional_equation_violation(const std::string& msg) : error(msg) {}
};

// A series that must have non-negative coefficients grew a negative one.
struct negative_coefficient : error {
    explicit negative_coefficient(const std::string& msg) : error(msg) {}
};

// Partition machinery size guard.
struct size_cap_exceeded : error {
    explicit size_cap_exceeded(const std::string& msg) : error(msg) {}
};

// Adams coefficients must come out integral.
struct non_integral_coefficient : error {
    explicit non_integral_coefficient(const std::string& msg) : error(msg) {}
};

// Knot invariant left the t^{1/2} exponent grid.
struct grid_violation : error {
    explicit grid_violation(const std::string& msg) : error(msg) {}
};

// An odd half-integer exponent survived where the substitution needs even.
struct parity_violation : error {
    explicit parity_violation(const std::string& msg) : error(msg) {}
};

// Two independent evaluation routes disagreed.
struct route_mismatch : error {
    explicit route_mismatch(const std::string& msg) : error(msg) {}
};

}  // namespace schroder
