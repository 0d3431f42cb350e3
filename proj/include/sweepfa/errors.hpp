#pragma once

#include <stdexcept>

namespace sweepfa {

// A brute-force enumeration would outgrow its budget.
struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace sweepfa
