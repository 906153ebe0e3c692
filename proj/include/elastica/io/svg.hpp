#pragma once

#include <filesystem>

#include "elastica/curve.hpp"

namespace elastica::io {

// Polyline through the nodes, markers at both ends and arrows along the
// clamped tangents. Curves in d > 2 are drawn in the first two coordinates.
void render_snapshot(const DiscreteCurve& curve, const std::filesystem::path& path);

}  // namespace elastica::io
