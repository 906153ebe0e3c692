#pragma once

#include "elastica/curve.hpp"
#include "elastica/io/config.hpp"

namespace elastica::io {

// Arc of radius r and opening angle a centred at the origin, symmetric about
// the second axis and traversed left to right. The perturbed arc moves the
// nodes radially by amp (b - c b^2), b = sin^2(mode pi x), with c chosen by
// bisection so the discrete length equals ell. Boundary data not given in the
// config are taken from the unperturbed arc (or from the file's nodes).
DiscreteCurve generate_initial(const RunConfig& config);

// Same config with every boundary entry filled in from the generated curve.
RunConfig resolved(const RunConfig& config, const DiscreteCurve& curve);

}  // namespace elastica::io
