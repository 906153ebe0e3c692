#pragma once

#include "elastica/curve.hpp"
#include "elastica/multiplier.hpp"

namespace elastica {

struct ElasticaReport {
    double lambda_star = 0.0;
    VectorField residual_field;  // grad E - lambda_star kappa
    double residual_l2 = 0.0;    // L2(ds)
    double residual_sup = 0.0;   // max node norm
};

ElasticaReport residual(const Jet& jet, double eps_E = kDefaultEpsE);
ElasticaReport residual(const DiscreteCurve& curve, double eps_E = kDefaultEpsE);

bool is_stationary(const DiscreteCurve& curve, double tol, double eps_E = kDefaultEpsE);

inline constexpr double kDefaultBoundaryTol = 1e-8;

// int <kappa, u> ds for a variation u that vanishes to first order at both ends.
// BoundaryViolation when |u| or the first difference of u at an end exceeds
// boundary_tol.
double tangent_constraint(const DiscreteCurve& curve, const VectorField& u,
                          double boundary_tol = kDefaultBoundaryTol);

}  // namespace elastica
