#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace gha {

using Q = mpq_class;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct StructuralError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Accepts "n", "n/d", and terminating decimals such as "-0.25".
Q parse_rational(const std::string& text);

// Always "num/den", even for integers.
std::string format_rational(const Q& q);

inline int sign_of_parity(long k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace gha
