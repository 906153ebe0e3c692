#include "elastica/multiplier.hpp"

#include <cmath>

#include "elastica/errors.hpp"
#include "elastica/geometry.hpp"

namespace elastica {
namespace {

double kappa_integral(const Jet& j, const VectorField& kappa, double eps_E) {
    const double den = quad_ds(j.gamma, norm_squared(kappa));
    if (!(den >= eps_E)) throw ZeroEnergy(den);
    return den;
}

double distance(const Point& a, const Point& b) {
    double s = 0.0;
    for (std::size_t c = 0; c < a.size(); ++c) s += (a[c] - b[c]) * (a[c] - b[c]);
    return std::sqrt(s);
}

}  // namespace

double lambda_direct(const Jet& j, double eps_E) {
    const VectorField k = curvature(j);
    const double den = kappa_integral(j, k, eps_E);
    VectorField g = nabla_s2_kappa(j);
    ScalarField half = norm_squared(k);
    for (double& x : half) x *= 0.5;
    add_scaled(g, half, k);
    return quad_ds(j.gamma, dot(g, k)) / den;
}

double lambda_direct(const DiscreteCurve& curve, double eps_E) { return lambda_direct(make_jet(curve), eps_E); }

double lambda_ibp(const Jet& j, double eps_E) {
    const VectorField k = curvature(j);
    const double den = kappa_integral(j, k, eps_E);
    const Densities d = lambda_densities(j);
    const std::size_t n = j.size();
    const double boundary = d.nabla_kappa_dot[n - 1] - d.nabla_kappa_dot[0];
    const double numerator = boundary - quad_ds(j.gamma, d.nabla_kappa_sq) + 0.5 * quad_ds(j.gamma, d.kappa4);
    return numerator / den;
}

double lambda_ibp(const DiscreteCurve& curve, double eps_E) { return lambda_ibp(make_jet(curve), eps_E); }

BoundCheck lambda_bound(const Jet& j, const BoundaryData& bc, const VectorField& dt_perp, double lambda) {
    if (dt_perp.size() != j.size() || dt_perp.dim() != j.d1.dim())
        throw InvalidArgument("lambda_bound: velocity field not aligned with the curve");
    const VectorField k = curvature(j);
    const VectorField nk = nabla_s_kappa(j);
    ScalarField speed = norm_squared(dt_perp);
    for (double& x : speed) x = std::sqrt(x);
    ScalarField nk_abs = norm_squared(nk);
    for (double& x : nk_abs) x = std::sqrt(x);
    BoundCheck b;
    b.lhs = std::abs(lambda) * (bc.ell - distance(bc.p1, bc.p0));
    b.rhs = 2.0 * bc.ell * quad_ds(j.gamma, speed) + quad_ds(j.gamma, norm_squared(k)) + quad_ds(j.gamma, nk_abs);
    return b;
}

BoundCheck lambda_bound(const DiscreteCurve& curve, const VectorField& dt_perp, double eps_E) {
    const Jet j = make_jet(curve);
    return lambda_bound(j, curve.boundary(), dt_perp, lambda_direct(j, eps_E));
}

LambdaReport lambda_report(const DiscreteCurve& curve, const VectorField& dt_perp, double eps_E) {
    const Jet j = make_jet(curve);
    LambdaReport r;
    r.lambda_direct = lambda_direct(j, eps_E);
    r.lambda_ibp = lambda_ibp(j, eps_E);
    r.energy_denominator = 2.0 * energy(j);
    r.numerator_N = r.lambda_ibp * r.energy_denominator;
    const BoundCheck b = lambda_bound(j, curve.boundary(), dt_perp, r.lambda_direct);
    r.bound_lhs = b.lhs;
    r.bound_rhs = b.rhs;
    return r;
}

}  // namespace elastica
