#pragma once

#include <string>
#include <string_view>

namespace elastica::io {

// Shortest text is not the goal: 17 significant digits always round-trip.
std::string format_double(double v);
double parse_double(std::string_view s);

}  // namespace elastica::io
