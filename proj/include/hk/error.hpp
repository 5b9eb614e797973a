#pragma once

#include <chrono>
#include <optional>
#include <stdexcept>
#include <string>

namespace hk {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad user input: parse failures, undeclared variables, unknown task kinds.
struct InputError : Error {
    using Error::Error;
};

// Mathematical precondition failures: non-homogeneous input, ideals that are
// not m-primary, infinite lengths, exponent overflow, q not a power of p.
struct MathError : Error {
    using Error::Error;
};

// Wall-clock budget exhausted. Throwers discard partial results.
struct TimeoutError : Error {
    using Error::Error;
};

// Process-wide compute deadline, polled inside long-running loops.
void set_compute_deadline(std::optional<std::chrono::steady_clock::time_point> t);
void clear_compute_deadline();
void check_deadline();

}  // namespace hk
