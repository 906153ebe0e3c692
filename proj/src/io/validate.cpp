#include "elastica/io/validate.hpp"

#include <cmath>
#include <sstream>

#include "elastica/errors.hpp"
#include "elastica/geometry.hpp"

namespace elastica::io {

std::string to_string(Violation::Kind kind) {
    switch (kind) {
        case Violation::Kind::BoundaryData: return "boundary-data";
        case Violation::Kind::Degenerate: return "degenerate";
        case Violation::Kind::EndpointMismatch: return "endpoint-mismatch";
        case Violation::Kind::TangentMismatch: return "tangent-mismatch";
        case Violation::Kind::EndpointsTooFar: return "endpoints-too-far";
    }
    return "?";
}

namespace {

double distance(const Point& a, const Point& b) {
    double s = 0.0;
    for (std::size_t c = 0; c < a.size(); ++c) s += (a[c] - b[c]) * (a[c] - b[c]);
    return std::sqrt(s);
}

double norm(const Point& a) {
    double s = 0.0;
    for (double v : a) s += v * v;
    return std::sqrt(s);
}

}  // namespace

std::vector<Violation> validate_compatibility(const DiscreteCurve& curve, double margin) {
    std::vector<Violation> out;
    const BoundaryData& bc = curve.boundary();
    const std::size_t n = curve.size();
    auto add = [&](Violation::Kind k, const std::string& msg) { out.push_back({k, msg}); };

    if (std::abs(norm(bc.tau0) - 1.0) > 1e-12) add(Violation::Kind::BoundaryData, "tau0 is not a unit vector");
    if (std::abs(norm(bc.tau1) - 1.0) > 1e-12) add(Violation::Kind::BoundaryData, "tau1 is not a unit vector");

    const double e0 = distance(curve.nodes().node(0), bc.p0);
    const double e1 = distance(curve.nodes().node(n - 1), bc.p1);
    if (e0 > 1e-10) {
        std::ostringstream s;
        s << "first node is " << e0 << " away from p0";
        add(Violation::Kind::EndpointMismatch, s.str());
    }
    if (e1 > 1e-10) {
        std::ostringstream s;
        s << "last node is " << e1 << " away from p1";
        add(Violation::Kind::EndpointMismatch, s.str());
    }

    VectorField t;
    ScalarField gamma;
    try {
        gamma = arc_element(curve);
        t = unit_tangent(curve);
    } catch (const DegenerateCurve& e) {
        add(Violation::Kind::Degenerate, e.what());
        return out;
    }
    const double tol = kTangentTolerancePerH * curve.spacing();
    const double m0 = distance(t.node(0), bc.tau0);
    const double m1 = distance(t.node(n - 1), bc.tau1);
    if (m0 > tol) {
        std::ostringstream s;
        s << "unit tangent at the start differs from tau0 by " << m0 << " (tolerance " << tol << ")";
        add(Violation::Kind::TangentMismatch, s.str());
    }
    if (m1 > tol) {
        std::ostringstream s;
        s << "unit tangent at the end differs from tau1 by " << m1 << " (tolerance " << tol << ")";
        add(Violation::Kind::TangentMismatch, s.str());
    }

    const double len = quad_ds(gamma, ScalarField(n, 1.0));
    const double chord = distance(bc.p0, bc.p1);
    if (!(chord < len * (1.0 - margin))) {
        std::ostringstream s;
        s << "endpoint distance " << chord << " is not below length " << len << " times (1 - " << margin << ")";
        add(Violation::Kind::EndpointsTooFar, s.str());
    }
    return out;
}

}  // namespace elastica::io
