#pragma once

#include <string>
#include <vector>

#include "elastica/curve.hpp"

namespace elastica::io {

struct Violation {
    enum class Kind { BoundaryData, Degenerate, EndpointMismatch, TangentMismatch, EndpointsTooFar };
    Kind kind;
    std::string message;
};

inline constexpr double kDefaultLengthMargin = 1e-3;
inline constexpr double kTangentTolerancePerH = 10.0;

// Empty iff the end nodes sit on p0, p1 within 1e-10, the discrete unit
// tangents at the ends match tau0, tau1 within 10 h, and
// |p0 - p1| < length(curve) (1 - margin).
std::vector<Violation> validate_compatibility(const DiscreteCurve& curve, double margin = kDefaultLengthMargin);

std::string to_string(Violation::Kind kind);

}  // namespace elastica::io
