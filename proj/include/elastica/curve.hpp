#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "elastica/fields.hpp"

namespace elastica {

inline constexpr double kDefaultGammaMin = 1e-8;

struct BoundaryData {
    Point p0, p1;      // clamped end positions
    Point tau0, tau1;  // clamped unit tangents
    double ell = 0.0;  // prescribed length

    std::size_t dim() const { return p0.size(); }
    // Human-readable list of broken invariants; empty when consistent.
    std::vector<std::string> problems() const;
};

class DiscreteCurve {
public:
    // Nodes at x_i = i/(N-1). Requires N >= 7, d >= 2 and matching dimensions.
    // Whether the end nodes sit on p0, p1 is a compatibility question answered
    // by validate_compatibility; the solver only builds pinned curves.
    DiscreteCurve(VectorField nodes, BoundaryData boundary);

    // Same as above but overwrites the end nodes with p0 and p1 exactly.
    static DiscreteCurve pinned(VectorField nodes, BoundaryData boundary);

    std::size_t size() const { return nodes_.size(); }
    std::size_t dim() const { return nodes_.dim(); }
    double spacing() const { return 1.0 / static_cast<double>(size() - 1); }
    double parameter(std::size_t i) const { return static_cast<double>(i) * spacing(); }

    const VectorField& nodes() const { return nodes_; }
    const BoundaryData& boundary() const { return boundary_; }

    DiscreteCurve with_nodes(VectorField nodes) const { return DiscreteCurve(std::move(nodes), boundary_); }

private:
    VectorField nodes_;
    BoundaryData boundary_;
};

// k-th parameter derivative of every component, 1 <= k <= 4.
VectorField deriv(const DiscreteCurve& curve, int k);
VectorField deriv(const VectorField& f, int k);

// gamma_i = |D1 f|_i; DegenerateCurve when some gamma_i <= gamma_min.
ScalarField arc_element(const DiscreteCurve& curve, double gamma_min = kDefaultGammaMin);

// Trapezoid rule for the integral of g ds = g gamma dx.
double quad_ds(const DiscreteCurve& curve, std::span<const double> g);
double quad_ds(std::span<const double> gamma, std::span<const double> g);

// Trapezoid rule in the parameter, integral of g dx.
double quad_dx(std::span<const double> g);

VectorField unit_tangent(const DiscreteCurve& curve, double gamma_min = kDefaultGammaMin);

// X - <X, T> T at every node.
VectorField project_normal(const DiscreteCurve& curve, const VectorField& x);
VectorField project_normal_with(const VectorField& tangent, const VectorField& x);

// Parameter derivatives up to fourth order and the arc element, evaluated once
// and shared by the geometry formulas.
struct Jet {
    VectorField d1, d2, d3, d4;
    ScalarField gamma;
    VectorField tangent;
    double h = 0.0;

    std::size_t size() const { return gamma.size(); }
};

Jet make_jet(const DiscreteCurve& curve, double gamma_min = kDefaultGammaMin);

}  // namespace elastica
