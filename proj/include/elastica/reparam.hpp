#pragma once

#include <span>
#include <vector>

#include "elastica/curve.hpp"
#include "elastica/flow.hpp"
#include "elastica/multiplier.hpp"

namespace elastica {

// Monotone piecewise cubic Hermite interpolant (Fritsch-Carlson slopes).
class MonotoneCubic {
public:
    MonotoneCubic() = default;
    MonotoneCubic(std::vector<double> xs, std::vector<double> ys);
    double operator()(double x) const;

private:
    std::vector<double> xs_, ys_, slopes_;
};

struct ReparamMap {
    std::vector<double> phi;          // normalized arc length at each node
    std::vector<double> psi_samples;  // parameter reaching arc length fraction i/(N-1)
    MonotoneCubic psi;                // continuous inverse through (phi_i, x_i)
};

ReparamMap cumulative_arclength(const DiscreteCurve& curve, double gamma_min = kDefaultGammaMin);

// Resamples the curve at equal arc length. Positions come from local degree-7
// interpolation, arc length from 8-point Gauss-Legendre on every grid interval.
DiscreteCurve constant_speed(const DiscreteCurve& curve, double gamma_min = kDefaultGammaMin);

double velocity_bound_constant(double ell, double E0);

// lhs = ||(g_next - g_prev)/dt||_L2(dx) with g the constant speed resamplings,
// rhs = velocity_bound_constant(ell, E0) ||velocity_next||_L2(ds)
BoundCheck velocity_bound_check(const FlowState& prev, const FlowState& next, double E0);
BoundCheck velocity_bound_check(const VectorField& resampled_prev, const VectorField& resampled_next, double dt,
                                double constant, const VectorField& velocity, std::span<const double> gamma_next);

}  // namespace elastica
