#pragma once

#include "elastica/curve.hpp"

namespace elastica {

inline constexpr double kDefaultEpsE = 1e-10;

struct BoundCheck {
    double lhs = 0.0;
    double rhs = 0.0;
    bool holds(double slack) const { return lhs <= slack * rhs; }
};

struct LambdaReport {
    double lambda_direct = 0.0;
    double lambda_ibp = 0.0;
    double numerator_N = 0.0;         // boundary term - int |nabla_s kappa|^2 + int |kappa|^4 / 2
    double energy_denominator = 0.0;  // 2 E(f)
    double bound_lhs = 0.0;
    double bound_rhs = 0.0;
};

// L2(ds) projection coefficient of the elastic gradient onto kappa.
double lambda_direct(const Jet& jet, double eps_E = kDefaultEpsE);
double lambda_direct(const DiscreteCurve& curve, double eps_E = kDefaultEpsE);

// Integrated-by-parts form, no fourth derivative involved.
double lambda_ibp(const Jet& jet, double eps_E = kDefaultEpsE);
double lambda_ibp(const DiscreteCurve& curve, double eps_E = kDefaultEpsE);

// |lambda| (ell - |p1 - p0|) <= 2 ell ||dt_perp||_L1(ds) + int |kappa|^2 ds + int |nabla_s kappa| ds
// evaluated with lambda = lambda_direct unless given.
BoundCheck lambda_bound(const Jet& jet, const BoundaryData& boundary, const VectorField& dt_perp,
                        double lambda);
BoundCheck lambda_bound(const DiscreteCurve& curve, const VectorField& dt_perp, double eps_E = kDefaultEpsE);

LambdaReport lambda_report(const DiscreteCurve& curve, const VectorField& dt_perp,
                           double eps_E = kDefaultEpsE);

}  // namespace elastica
