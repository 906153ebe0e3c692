#pragma once

#include <cmath>
#include <functional>
#include <random>

#include "elastica/curve.hpp"

namespace testing_support {

using elastica::BoundaryData;
using elastica::DiscreteCurve;
using elastica::VectorField;

// Curve sampled from a parametrization x -> R^d on the uniform grid.
VectorField sample(std::size_t n, std::size_t dim, const std::function<void(double, double*)>& f);

// Semicircle of radius r from (-r, 0) to (r, 0) over the top.
DiscreteCurve semicircle(std::size_t n, double r = 1.0);

// Boundary data read off a parametrization: end positions, unit tangents
// and length from a fine polyline.
BoundaryData boundary_of(const std::function<void(double, double*)>& f, std::size_t dim);

// Smooth, non-uniformly parametrized clamped perturbation of the unit
// semicircle with random coefficients; same geometry for every n.
struct RandomCurve {
    double a[4];
    double warp;
    explicit RandomCurve(std::mt19937_64& rng, double amp = 0.05);
    void operator()(double x, double* out) const;
    DiscreteCurve sampled(std::size_t n) const;
};

// Unit semicircle with a length-preserving radial bump, as built by the
// initial-curve generator.
DiscreteCurve perturbed_arc(std::size_t n, double amp = 0.1, int mode = 1);

double fit_h2(double q_coarse, double q_fine, double h_coarse, double h_fine);

}  // namespace testing_support
