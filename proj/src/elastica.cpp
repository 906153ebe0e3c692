#include "elastica/elastica.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "elastica/errors.hpp"
#include "elastica/geometry.hpp"

namespace elastica {

ElasticaReport residual(const Jet& j, double eps_E) {
    ElasticaReport r;
    r.lambda_star = lambda_direct(j, eps_E);
    r.residual_field = elastic_gradient(j);
    add_scaled(r.residual_field, -r.lambda_star, curvature(j));
    ScalarField sq = norm_squared(r.residual_field);
    r.residual_l2 = std::sqrt(std::max(0.0, quad_ds(j.gamma, sq)));
    for (double v : sq) r.residual_sup = std::max(r.residual_sup, std::sqrt(v));
    return r;
}

ElasticaReport residual(const DiscreteCurve& curve, double eps_E) { return residual(make_jet(curve), eps_E); }

bool is_stationary(const DiscreteCurve& curve, double tol, double eps_E) {
    return residual(curve, eps_E).residual_l2 <= tol;
}

double tangent_constraint(const DiscreteCurve& curve, const VectorField& u, double boundary_tol) {
    if (u.size() != curve.size() || u.dim() != curve.dim())
        throw InvalidArgument("tangent_constraint: field not aligned with the curve");
    const std::size_t n = u.size();
    auto check = [&](std::size_t end, std::size_t inner) {
        double v = 0.0, diff = 0.0;
        for (std::size_t c = 0; c < u.dim(); ++c) {
            v = std::max(v, std::abs(u(c, end)));
            diff = std::max(diff, std::abs(u(c, inner) - u(c, end)));
        }
        if (v > boundary_tol || diff > boundary_tol) {
            std::ostringstream s;
            s << "variation does not vanish to first order at node " << end << ": |u| = " << v
              << ", first difference = " << diff << " (tolerance " << boundary_tol << ")";
            throw BoundaryViolation(s.str());
        }
    };
    check(0, 1);
    check(n - 1, n - 2);
    const Jet j = make_jet(curve);
    return quad_ds(j.gamma, dot(curvature(j), u));
}

}  // namespace elastica
