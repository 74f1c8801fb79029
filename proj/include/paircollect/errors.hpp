#pragma once

#include <stdexcept>

namespace paircollect {

// Invalid parameter combinations (n < 2, j out of range, k below support, ...).
// The CLI maps this to exit code 2.
struct parameter_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Work-size guards: enumeration horizons and exact-rational path bounds.
// The CLI maps this to exit code 3.
struct size_guard_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace paircollect
