#pragma once

#include "elastica/curve.hpp"

namespace elastica {

struct GeometricFields {
    ScalarField gamma;
    VectorField kappa;
    VectorField nabla_s_kappa;
    VectorField nabla_s2_kappa;
    VectorField a_of_f;
    VectorField grad_E;
    double energy = 0.0;
    double length = 0.0;
};

struct Densities {
    ScalarField kappa4;            // |kappa|^4
    ScalarField nabla_kappa_sq;    // |nabla_s kappa|^2
    ScalarField nabla_kappa_dot;   // <nabla_s kappa, kappa>
};

// Closed-form expressions in the raw parameter derivatives D1..D4 of f.
VectorField curvature(const Jet& jet);
VectorField nabla_s_kappa(const Jet& jet);
VectorField nabla_s2_kappa(const Jet& jet);
// Full fourth-order operator D4/gamma^4 + F~, not projected.
VectorField a_of_f(const Jet& jet);
// The lower-order part F~ = A(f) - D4/gamma^4.
VectorField a_of_f_lower(const Jet& jet);
VectorField elastic_gradient(const Jet& jet);
double energy(const Jet& jet);
double length(const Jet& jet);
Densities lambda_densities(const Jet& jet);
GeometricFields evaluate(const Jet& jet);

VectorField curvature(const DiscreteCurve& curve);
VectorField nabla_s_kappa(const DiscreteCurve& curve);
VectorField nabla_s2_kappa(const DiscreteCurve& curve);
VectorField a_of_f(const DiscreteCurve& curve);
VectorField elastic_gradient(const DiscreteCurve& curve);
double energy(const DiscreteCurve& curve);
double length(const DiscreteCurve& curve);
Densities lambda_densities(const DiscreteCurve& curve);
GeometricFields evaluate(const DiscreteCurve& curve);

// Second route to the same quantities, built only from deriv, arc_element and
// project_normal: covariant derivatives are P_perp (1/gamma) d/dx applied to
// the curvature field node values. Used to cross-check the closed forms.
namespace composed {

VectorField nabla_s_kappa(const DiscreteCurve& curve);
VectorField nabla_s2_kappa(const DiscreteCurve& curve);
// nabla_s^2 kappa + |kappa|^2 kappa / 2 with the closed-form pieces
VectorField elastic_gradient(const DiscreteCurve& curve);
Densities lambda_densities(const DiscreteCurve& curve);

}  // namespace composed

}  // namespace elastica
