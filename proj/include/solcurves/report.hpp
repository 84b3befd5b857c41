#pragma once

#include <string>

namespace solcurves {

// One verification row: a named measurement compared against a pinned
// tolerance. Serializes as {name, pass, max_residual, tolerance}. For
// lower-bound checks max_residual holds the observed minimum and pass means
// measured > tolerance; the field name is kept uniform so every report
// serializes the same way.
struct CheckResult {
    std::string name;
    bool pass = false;
    double max_residual = 0.0;
    double tolerance = 0.0;
};

}  // namespace solcurves
