#include "elastica/curve.hpp"

#include <cmath>
#include <sstream>

#include "elastica/errors.hpp"
#include "elastica/kernels/kernels.hpp"
#include "elastica/stencil.hpp"

namespace elastica {

DegenerateCurve::DegenerateCurve(std::size_t node, double gamma)
    : NumericalError("degenerate curve: arc element " + std::to_string(gamma) + " at node " +
                     std::to_string(node)),
      node_(node),
      gamma_(gamma) {}

ZeroEnergy::ZeroEnergy(double denominator)
    : NumericalError("curvature integral " + std::to_string(denominator) +
                     " below threshold: (near-)straight configuration"),
      denominator_(denominator) {}

namespace {

double norm(const Point& p) {
    double s = 0.0;
    for (double x : p) s += x * x;
    return std::sqrt(s);
}

}  // namespace

std::vector<std::string> BoundaryData::problems() const {
    std::vector<std::string> out;
    const std::size_t d = p0.size();
    if (d < 2) out.push_back("dimension must be at least 2");
    if (p1.size() != d || tau0.size() != d || tau1.size() != d)
        out.push_back("boundary vectors have inconsistent dimensions");
    if (!out.empty()) return out;
    if (std::abs(norm(tau0) - 1.0) > 1e-12) out.push_back("tau0 is not a unit vector");
    if (std::abs(norm(tau1) - 1.0) > 1e-12) out.push_back("tau1 is not a unit vector");
    Point chord(d);
    for (std::size_t c = 0; c < d; ++c) chord[c] = p1[c] - p0[c];
    if (!(norm(chord) < ell)) {
        std::ostringstream s;
        s << "endpoint distance " << norm(chord) << " is not below the prescribed length " << ell;
        out.push_back(s.str());
    }
    return out;
}

DiscreteCurve::DiscreteCurve(VectorField nodes, BoundaryData boundary)
    : nodes_(std::move(nodes)), boundary_(std::move(boundary)) {
    const std::size_t n = nodes_.size();
    const std::size_t d = nodes_.dim();
    if (n < 7) throw InvalidArgument("a curve needs at least 7 nodes, got " + std::to_string(n));
    if (d < 2) throw InvalidArgument("curves live in dimension >= 2, got " + std::to_string(d));
    if (boundary_.p0.size() != d || boundary_.p1.size() != d || boundary_.tau0.size() != d ||
        boundary_.tau1.size() != d)
        throw InvalidArgument("boundary data dimension does not match the nodes");
}

DiscreteCurve DiscreteCurve::pinned(VectorField nodes, BoundaryData boundary) {
    if (nodes.dim() == boundary.p0.size() && nodes.dim() == boundary.p1.size() && nodes.size() > 0) {
        nodes.set_node(0, boundary.p0);
        nodes.set_node(nodes.size() - 1, boundary.p1);
    }
    return DiscreteCurve(std::move(nodes), std::move(boundary));
}

VectorField deriv(const VectorField& f, int k) {
    DerivativeOperator op(f.size(), k);
    VectorField out(f.dim(), f.size());
    for (std::size_t c = 0; c < f.dim(); ++c) op.apply(f.component(c), out.component(c));
    return out;
}

VectorField deriv(const DiscreteCurve& curve, int k) { return deriv(curve.nodes(), k); }

namespace {

ScalarField gamma_of(const VectorField& d1, double gamma_min) {
    ScalarField g = norm_squared(d1);
    for (std::size_t i = 0; i < g.size(); ++i) {
        g[i] = std::sqrt(g[i]);
        if (!(g[i] > gamma_min)) throw DegenerateCurve(i, g[i]);
    }
    return g;
}

VectorField tangent_of(const VectorField& d1, const ScalarField& gamma) {
    ScalarField inv(gamma.size());
    for (std::size_t i = 0; i < gamma.size(); ++i) inv[i] = 1.0 / gamma[i];
    return scaled(inv, d1);
}

}  // namespace

ScalarField arc_element(const DiscreteCurve& curve, double gamma_min) {
    return gamma_of(deriv(curve, 1), gamma_min);
}

double quad_ds(std::span<const double> gamma, std::span<const double> g) {
    if (gamma.size() != g.size()) throw InvalidArgument("quad_ds: field not aligned with the curve");
    if (g.size() < 2) return 0.0;
    const double h = 1.0 / static_cast<double>(g.size() - 1);
    return kernels::active().trapezoid(g.data(), gamma.data(), g.size(), h);
}

double quad_ds(const DiscreteCurve& curve, std::span<const double> g) {
    if (g.size() != curve.size()) throw InvalidArgument("quad_ds: field not aligned with the curve");
    const ScalarField gamma = arc_element(curve);
    return quad_ds(gamma, g);
}

double quad_dx(std::span<const double> g) {
    const ScalarField ones(g.size(), 1.0);
    return quad_ds(ones, g);
}

VectorField unit_tangent(const DiscreteCurve& curve, double gamma_min) {
    const VectorField d1 = deriv(curve, 1);
    return tangent_of(d1, gamma_of(d1, gamma_min));
}

VectorField project_normal_with(const VectorField& tangent, const VectorField& x) {
    ScalarField s = dot(x, tangent);
    for (double& v : s) v = -v;
    VectorField out = x;
    add_scaled(out, s, tangent);
    return out;
}

VectorField project_normal(const DiscreteCurve& curve, const VectorField& x) {
    if (x.size() != curve.size() || x.dim() != curve.dim())
        throw InvalidArgument("project_normal: field not aligned with the curve");
    return project_normal_with(unit_tangent(curve), x);
}

Jet make_jet(const DiscreteCurve& curve, double gamma_min) {
    Jet j;
    j.h = curve.spacing();
    j.d1 = deriv(curve, 1);
    j.gamma = gamma_of(j.d1, gamma_min);
    j.tangent = tangent_of(j.d1, j.gamma);
    j.d2 = deriv(curve, 2);
    j.d3 = deriv(curve, 3);
    j.d4 = deriv(curve, 4);
    return j;
}

}  // namespace elastica
