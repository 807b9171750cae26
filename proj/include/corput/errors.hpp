#pragma once

#include <stdexcept>
#include <string>

namespace corput {

// Bad arguments or malformed input files.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A configured memory/size guard was exceeded.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Float drift or non-convergence made a result untrustworthy.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace corput
