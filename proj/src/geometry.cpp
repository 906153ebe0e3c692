#include "elastica/geometry.hpp"

#include <cmath>

namespace elastica {
namespace {

// Per-node inner products of the derivative fields.
struct Invariants {
    ScalarField a;    // <D2, D1>
    ScalarField b;    // <D3, D1>
    ScalarField c22;  // |D2|^2
    ScalarField c32;  // <D3, D2>
    ScalarField c33;  // |D3|^2
};

Invariants invariants(const Jet& j, bool third) {
    Invariants v;
    v.a = dot(j.d2, j.d1);
    v.c22 = norm_squared(j.d2);
    if (third) {
        v.b = dot(j.d3, j.d1);
        v.c32 = dot(j.d3, j.d2);
        v.c33 = norm_squared(j.d3);
    }
    return v;
}

template <class F>
ScalarField pointwise(std::size_t n, F&& f) {
    ScalarField s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = f(i);
    return s;
}

double ipow(double x, int p) {
    double r = 1.0;
    for (int k = 0; k < p; ++k) r *= x;
    return r;
}

VectorField zero_like(const Jet& j) { return VectorField(j.d1.dim(), j.size()); }

// D4/g^4 - 6 a D3/g^6 - 4 b D2/g^6 + c_sq |D2|^2 D2/g^6 + c_aa a^2 D2/g^8,
// the shared shape of the two bracketed fourth-order expressions.
VectorField bracket(const Jet& j, const Invariants& v, double c_sq, double c_aa, bool with_d4) {
    const std::size_t n = j.size();
    const ScalarField& g = j.gamma;
    VectorField out = zero_like(j);
    if (with_d4) add_scaled(out, pointwise(n, [&](std::size_t i) { return 1.0 / ipow(g[i], 4); }), j.d4);
    add_scaled(out, pointwise(n, [&](std::size_t i) { return -6.0 * v.a[i] / ipow(g[i], 6); }), j.d3);
    add_scaled(out, pointwise(n, [&](std::size_t i) { return -4.0 * v.b[i] / ipow(g[i], 6); }), j.d2);
    add_scaled(out, pointwise(n, [&](std::size_t i) { return c_sq * v.c22[i] / ipow(g[i], 6); }), j.d2);
    add_scaled(out, pointwise(n, [&](std::size_t i) { return c_aa * v.a[i] * v.a[i] / ipow(g[i], 8); }),
               j.d2);
    return out;
}

}  // namespace

VectorField curvature(const Jet& j) {
    const std::size_t n = j.size();
    const ScalarField a = dot(j.d2, j.d1);
    const ScalarField& g = j.gamma;
    VectorField k = zero_like(j);
    add_scaled(k, pointwise(n, [&](std::size_t i) { return 1.0 / (g[i] * g[i]); }), j.d2);
    add_scaled(k, pointwise(n, [&](std::size_t i) { return -a[i] / ipow(g[i], 4); }), j.d1);
    return k;
}

VectorField nabla_s_kappa(const Jet& j) {
    const std::size_t n = j.size();
    const ScalarField a = dot(j.d2, j.d1);
    const ScalarField b = dot(j.d3, j.d1);
    const ScalarField& g = j.gamma;
    VectorField out = zero_like(j);
    add_scaled(out, pointwise(n, [&](std::size_t i) { return 1.0 / ipow(g[i], 3); }), j.d3);
    add_scaled(out, pointwise(n, [&](std::size_t i) { return -b[i] / ipow(g[i], 5); }), j.d1);
    add_scaled(out, pointwise(n, [&](std::size_t i) { return -3.0 * a[i] / ipow(g[i], 5); }), j.d2);
    add_scaled(out, pointwise(n, [&](std::size_t i) { return 3.0 * a[i] * a[i] / ipow(g[i], 7); }), j.d1);
    return out;
}

VectorField nabla_s2_kappa(const Jet& j) {
    return project_normal_with(j.tangent, bracket(j, invariants(j, true), -3.0, 18.0, true));
}

VectorField a_of_f(const Jet& j) { return bracket(j, invariants(j, true), -2.5, 17.5, true); }

VectorField a_of_f_lower(const Jet& j) { return bracket(j, invariants(j, true), -2.5, 17.5, false); }

VectorField elastic_gradient(const Jet& j) { return project_normal_with(j.tangent, a_of_f(j)); }

double energy(const Jet& j) { return 0.5 * quad_ds(j.gamma, norm_squared(curvature(j))); }

double length(const Jet& j) { return quad_ds(j.gamma, ScalarField(j.size(), 1.0)); }

Densities lambda_densities(const Jet& j) {
    const Invariants v = invariants(j, true);
    const ScalarField& g = j.gamma;
    const std::size_t n = j.size();
    Densities d;
    d.kappa4 = pointwise(n, [&](std::size_t i) {
        const double a = v.a[i], c = v.c22[i];
        return c * c / ipow(g[i], 8) - 2.0 * c * a * a / ipow(g[i], 10) + ipow(a, 4) / ipow(g[i], 12);
    });
    d.nabla_kappa_sq = pointwise(n, [&](std::size_t i) {
        const double a = v.a[i], b = v.b[i];
        return v.c33[i] / ipow(g[i], 6) - b * b / ipow(g[i], 8) - 6.0 * v.c32[i] * a / ipow(g[i], 8) +
               6.0 * b * a * a / ipow(g[i], 10) + 9.0 * a * a * v.c22[i] / ipow(g[i], 10) -
               9.0 * ipow(a, 4) / ipow(g[i], 12);
    });
    d.nabla_kappa_dot = pointwise(n, [&](std::size_t i) {
        const double a = v.a[i], b = v.b[i];
        return v.c32[i] / ipow(g[i], 5) - b * a / ipow(g[i], 7) - 3.0 * a * v.c22[i] / ipow(g[i], 7) +
               3.0 * ipow(a, 3) / ipow(g[i], 9);
    });
    return d;
}

GeometricFields evaluate(const Jet& j) {
    GeometricFields f;
    f.gamma = j.gamma;
    f.kappa = curvature(j);
    f.nabla_s_kappa = nabla_s_kappa(j);
    f.nabla_s2_kappa = nabla_s2_kappa(j);
    f.a_of_f = a_of_f(j);
    f.grad_E = project_normal_with(j.tangent, f.a_of_f);
    f.energy = 0.5 * quad_ds(j.gamma, norm_squared(f.kappa));
    f.length = length(j);
    return f;
}

VectorField curvature(const DiscreteCurve& c) { return curvature(make_jet(c)); }
VectorField nabla_s_kappa(const DiscreteCurve& c) { return nabla_s_kappa(make_jet(c)); }
VectorField nabla_s2_kappa(const DiscreteCurve& c) { return nabla_s2_kappa(make_jet(c)); }
VectorField a_of_f(const DiscreteCurve& c) { return a_of_f(make_jet(c)); }
VectorField elastic_gradient(const DiscreteCurve& c) { return elastic_gradient(make_jet(c)); }
double energy(const DiscreteCurve& c) { return energy(make_jet(c)); }
double length(const DiscreteCurve& c) { return quad_ds(arc_element(c), ScalarField(c.size(), 1.0)); }
Densities lambda_densities(const DiscreteCurve& c) { return lambda_densities(make_jet(c)); }
GeometricFields evaluate(const DiscreteCurve& c) { return evaluate(make_jet(c)); }

namespace composed {
namespace {

// P_perp (1/gamma) d/dx X
VectorField covariant(const DiscreteCurve& curve, const ScalarField& gamma, const VectorField& x) {
    ScalarField inv(gamma.size());
    for (std::size_t i = 0; i < gamma.size(); ++i) inv[i] = 1.0 / gamma[i];
    return project_normal(curve, scaled(inv, deriv(x, 1)));
}

// kappa = d_s d_s f
VectorField curvature_chain(const DiscreteCurve& curve, const ScalarField& gamma) {
    const VectorField t = unit_tangent(curve);
    ScalarField inv(gamma.size());
    for (std::size_t i = 0; i < gamma.size(); ++i) inv[i] = 1.0 / gamma[i];
    return scaled(inv, deriv(t, 1));
}

}  // namespace

VectorField nabla_s_kappa(const DiscreteCurve& curve) {
    const ScalarField g = arc_element(curve);
    return covariant(curve, g, curvature_chain(curve, g));
}

VectorField nabla_s2_kappa(const DiscreteCurve& curve) {
    const ScalarField g = arc_element(curve);
    return covariant(curve, g, covariant(curve, g, curvature_chain(curve, g)));
}

VectorField elastic_gradient(const DiscreteCurve& curve) {
    const Jet j = make_jet(curve);
    const VectorField k = curvature(j);
    ScalarField half = norm_squared(k);
    for (double& x : half) x *= 0.5;
    VectorField out = nabla_s2_kappa(j);
    add_scaled(out, half, k);
    return out;
}

Densities lambda_densities(const DiscreteCurve& curve) {
    const Jet j = make_jet(curve);
    const VectorField k = curvature(j);
    const VectorField nk = elastica::nabla_s_kappa(j);
    Densities d;
    d.kappa4 = norm_squared(k);
    for (double& x : d.kappa4) x *= x;
    d.nabla_kappa_sq = norm_squared(nk);
    d.nabla_kappa_dot = dot(nk, k);
    return d;
}

}  // namespace composed

}  // namespace elastica
