#include "elastica/io/initial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "elastica/errors.hpp"
#include "elastica/flow.hpp"
#include "elastica/geometry.hpp"
#include "elastica/io/trajectory_io.hpp"

namespace elastica::io {
namespace {

struct Arc {
    double r, angle, theta0;
    explicit Arc(double radius, double a) : r(radius), angle(a), theta0(0.5 * (3.141592653589793 + a)) {}
    double theta(double x) const { return theta0 - angle * x; }
};

BoundaryData arc_boundary(const Arc& arc, std::size_t dim) {
    BoundaryData bc;
    bc.p0.assign(dim, 0.0);
    bc.p1.assign(dim, 0.0);
    bc.tau0.assign(dim, 0.0);
    bc.tau1.assign(dim, 0.0);
    const double t0 = arc.theta(0.0), t1 = arc.theta(1.0);
    bc.p0[0] = arc.r * std::cos(t0);
    bc.p0[1] = arc.r * std::sin(t0);
    bc.p1[0] = arc.r * std::cos(t1);
    bc.p1[1] = arc.r * std::sin(t1);
    // d/dx (cos, sin)(theta0 - a x) points along (sin, -cos)
    bc.tau0[0] = std::sin(t0);
    bc.tau0[1] = -std::cos(t0);
    bc.tau1[0] = std::sin(t1);
    bc.tau1[1] = -std::cos(t1);
    bc.ell = arc.r * arc.angle;
    // cos(pi) is exact but sin(pi) is not; keep axis-aligned data exact
    for (Point* p : {&bc.p0, &bc.p1, &bc.tau0, &bc.tau1})
        for (double& v : *p)
            if (std::abs(v) < 1e-15 * std::max(1.0, arc.r)) v = 0.0;
    return bc;
}

// End positions and end derivative rows taken from the unperturbed arc, so
// the nodes already satisfy the discrete clamped conditions of the flow.
VectorField pinned_nodes(VectorField f, const BoundaryData& natural) {
    f.set_node(0, natural.p0);
    f.set_node(f.size() - 1, natural.p1);
    return clamp_end_rows(DiscreteCurve(std::move(f), natural)).nodes();
}

VectorField arc_nodes(const Arc& arc, std::size_t n, std::size_t dim, double amp, int mode, double blend) {
    VectorField f(dim, n);
    const double pi = 3.141592653589793;
    for (std::size_t i = 0; i < n; ++i) {
        const double x = static_cast<double>(i) / static_cast<double>(n - 1);
        const double s = std::sin(mode * pi * x);
        const double b = s * s;
        const double rad = arc.r + amp * (b - blend * b * b);
        f(0, i) = rad * std::cos(arc.theta(x));
        f(1, i) = rad * std::sin(arc.theta(x));
    }
    return f;
}

void apply_overrides(BoundaryData& bc, const BoundaryOverrides& o) {
    if (o.p0) bc.p0 = *o.p0;
    if (o.p1) bc.p1 = *o.p1;
    if (o.tau0) bc.tau0 = *o.tau0;
    if (o.tau1) bc.tau1 = *o.tau1;
    if (o.ell) bc.ell = *o.ell;
}

DiscreteCurve perturbed(const Arc& arc, const RunConfig& c, const BoundaryData& natural, BoundaryData bc) {
    const std::size_t n = c.flow.n_nodes, dim = c.initial.dim;
    const double amp = c.initial.amp;
    const int mode = c.initial.mode;
    auto curve_for = [&](double blend) {
        return DiscreteCurve(pinned_nodes(arc_nodes(arc, n, dim, amp, mode, blend), natural), bc);
    };
    auto excess = [&](double blend) {
        try {
            return length(curve_for(blend)) - bc.ell;
        } catch (const DegenerateCurve&) {
            return std::nan("");
        }
    };
    if (amp == 0.0) return curve_for(0.0);

    // Scan outwards from blend 0 for the nearest sign change, then bisect.
    const double step = 0.05;
    const int reach = 400;
    double lo = 0.0, flo = excess(0.0), hi = 0.0;
    bool found = std::abs(flo) <= 1e-15 * bc.ell;
    hi = lo;
    for (int k = 1; k <= reach && !found; ++k) {
        for (double sign : {1.0, -1.0}) {
            const double a = sign * (k - 1) * step, b = sign * k * step;
            const double fa = excess(a), fb = excess(b);
            if (std::isfinite(fa) && std::isfinite(fb) && fa * fb <= 0.0) {
                lo = a;
                flo = fa;
                hi = b;
                found = true;
                break;
            }
        }
    }
    if (!found) {
        std::ostringstream s;
        s << "perturbed arc: no blend in [" << -reach * step << ", " << reach * step
          << "] restores the length " << bc.ell << " for amp = " << amp;
        throw GenerationFailure(s.str());
    }
    for (int it = 0; it < 200 && lo != hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        const double fm = excess(mid);
        if (!std::isfinite(fm)) throw GenerationFailure("perturbed arc: degenerate curve during length fit");
        if (flo * fm <= 0.0) {
            hi = mid;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    const double best = std::abs(excess(lo)) <= std::abs(excess(hi)) ? lo : hi;
    DiscreteCurve out = curve_for(best);
    const double miss = std::abs(length(out) - bc.ell);
    if (!(miss <= 1e-10 * bc.ell)) {
        std::ostringstream s;
        s << "perturbed arc: length fit missed by " << miss;
        throw GenerationFailure(s.str());
    }
    return out;
}

}  // namespace

DiscreteCurve generate_initial(const RunConfig& c) {
    c.flow.validate();
    const std::size_t n = c.flow.n_nodes, dim = c.initial.dim;
    if (dim < 2) throw InvalidArgument("initial.dim must be at least 2");
    const InitialSpec& s = c.initial;
    if (s.kind == InitialKind::FromFile) {
        if (s.path.empty()) throw InvalidArgument("initial.path is required for from_file");
        VectorField nodes = read_snapshot(s.path);
        BoundaryData bc;
        bc.p0 = nodes.node(0);
        bc.p1 = nodes.node(nodes.size() - 1);
        bc.tau0.assign(nodes.dim(), 0.0);
        bc.tau1.assign(nodes.dim(), 0.0);
        DiscreteCurve raw(nodes, bc);
        const VectorField t = unit_tangent(raw, c.flow.gamma_min);
        bc.tau0 = t.node(0);
        bc.tau1 = t.node(nodes.size() - 1);
        bc.ell = length(raw);
        apply_overrides(bc, c.boundary);
        return DiscreteCurve(std::move(nodes), std::move(bc));
    }
    if (!(s.radius > 0.0)) throw InvalidArgument("initial.radius must be positive");
    const double angle = s.kind == InitialKind::Semicircle ? 3.141592653589793 : s.angle;
    if (!(angle > 0.0 && angle < 2.0 * 3.141592653589793))
        throw InvalidArgument("initial.angle must lie in (0, 2 pi)");
    const Arc arc(s.radius, angle);
    const BoundaryData natural = arc_boundary(arc, dim);
    BoundaryData bc = natural;
    apply_overrides(bc, c.boundary);
    if (s.kind == InitialKind::PerturbedArc) {
        if (s.mode < 1) throw InvalidArgument("initial.mode must be at least 1");
        return perturbed(arc, c, natural, std::move(bc));
    }
    return DiscreteCurve(pinned_nodes(arc_nodes(arc, n, dim, 0.0, 1, 0.0), natural), std::move(bc));
}

RunConfig resolved(const RunConfig& config, const DiscreteCurve& curve) {
    RunConfig out = config;
    const BoundaryData& bc = curve.boundary();
    out.boundary.p0 = bc.p0;
    out.boundary.p1 = bc.p1;
    out.boundary.tau0 = bc.tau0;
    out.boundary.tau1 = bc.tau1;
    out.boundary.ell = bc.ell;
    return out;
}

}  // namespace elastica::io
