#include "ftwave/error.hpp"

#include <cstdio>

namespace ftwave {

namespace {
std::string format_courant(double r) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", r);
    return buf;
}
}  // namespace

StabilityError::StabilityError(double r)
    : Error(ExitCode::stability, "unstable time step: r = c*ht/hx = " + format_courant(r) + " (requires 0 < r <= 1)"),
      r_(r) {}

NumericalError::NumericalError(std::size_t space_index, std::size_t time_index)
    : Error(ExitCode::numerical, "non-finite value at (i, j) = (" + std::to_string(space_index) + ", " +
                                     std::to_string(time_index) + ")"),
      i_(space_index),
      j_(time_index) {}

}  // namespace ftwave
