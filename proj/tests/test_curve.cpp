#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "elastica/curve.hpp"
#include "elastica/errors.hpp"
#include "elastica/stencil.hpp"
#include "support.hpp"

using namespace elastica;
using testing_support::sample;
using testing_support::semicircle;

namespace {

const double pi = std::numbers::pi;

BoundaryData line_bc(double len) { return {{0.0, 0.0}, {len, 0.0}, {1.0, 0.0}, {1.0, 0.0}, 2.0 * len}; }

DiscreteCurve line(std::size_t n, double speed) {
    return DiscreteCurve::pinned(sample(n, 2, [&](double x, double* p) { p[0] = speed * x; p[1] = 0.0; }),
                                 line_bc(speed));
}

double semicircle_d1_error(std::size_t n) {
    const VectorField d = deriv(semicircle(n), 1);
    double err = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double x = static_cast<double>(i) / (n - 1);
        err = std::max(err, std::hypot(d(0, i) - pi * std::sin(pi * x), d(1, i) - pi * std::cos(pi * x)));
    }
    return err;
}

}  // namespace

TEST(FdWeights, KnownStencils) {
    const double c3[] = {-1, 0, 1};
    const auto w1 = fd_weights(0.0, c3, 1);
    EXPECT_NEAR(w1[0], -0.5, 1e-15);
    EXPECT_NEAR(w1[1], 0.0, 1e-15);
    EXPECT_NEAR(w1[2], 0.5, 1e-15);
    const double one_sided[] = {0, 1, 2};
    const auto w2 = fd_weights(0.0, one_sided, 1);
    EXPECT_NEAR(w2[0], -1.5, 1e-15);
    EXPECT_NEAR(w2[1], 2.0, 1e-15);
    EXPECT_NEAR(w2[2], -0.5, 1e-15);
    const double four[] = {0, 1, 2, 3};
    const auto w3 = fd_weights(0.0, four, 2);
    const double expect3[] = {2, -5, 4, -1};
    for (int j = 0; j < 4; ++j) EXPECT_NEAR(w3[j], expect3[j], 1e-14);
    const double c5[] = {-2, -1, 0, 1, 2};
    const auto w4 = fd_weights(0.0, c5, 4);
    const double expect4[] = {1, -4, 6, -4, 1};
    for (int j = 0; j < 5; ++j) EXPECT_NEAR(w4[j], expect4[j], 1e-13);
    const auto w5 = fd_weights(0.0, c5, 3);
    const double expect5[] = {-0.5, 1, 0, -1, 0.5};
    for (int j = 0; j < 5; ++j) EXPECT_NEAR(w5[j], expect5[j], 1e-14);
}

TEST(Deriv, LinearCurveHasConstantFirstDerivative) {
    const VectorField d = deriv(line(51, 1.0), 1);
    for (std::size_t i = 0; i < d.size(); ++i) {
        EXPECT_NEAR(d(0, i), 1.0, 1e-12);
        EXPECT_NEAR(d(1, i), 0.0, 1e-12);
    }
}

TEST(Deriv, ParabolaHasConstantSecondDerivative) {
    const DiscreteCurve c = DiscreteCurve::pinned(
        sample(201, 2, [](double x, double* p) { p[0] = x; p[1] = x * x; }), {{0, 0}, {1, 1}, {1, 0}, {0, 1}, 3.0});
    const VectorField d = deriv(c, 2);
    for (std::size_t i = 0; i < d.size(); ++i) {
        EXPECT_NEAR(d(0, i), 0.0, 1e-10);
        EXPECT_NEAR(d(1, i), 2.0, 1e-10);
    }
}

TEST(Deriv, ExactForPolynomialsUpToDegreeKPlusOne) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const std::size_t n = 21;
    const double h = 1.0 / (n - 1);
    for (int k = 1; k <= 4; ++k) {
        const int deg = k + 1;
        std::vector<double> a(deg + 1);
        for (double& v : a) v = u(rng);
        std::vector<double> vals(n);
        for (std::size_t i = 0; i < n; ++i) {
            const double x = i * h;
            double s = 0.0;
            for (int p = deg; p >= 0; --p) s = s * x + a[p];
            vals[i] = s;
        }
        const auto d = DerivativeOperator(n, k).apply(vals);
        const double tol = 2e3 * 2.2e-16 * std::pow(h, -k);
        for (std::size_t i = 0; i < n; ++i) {
            const double x = i * h;
            double exact = 0.0;
            for (int p = k; p <= deg; ++p) {
                double c = a[p];
                for (int q = 0; q < k; ++q) c *= (p - q);
                exact += c * std::pow(x, p - k);
            }
            EXPECT_NEAR(d[i], exact, tol) << "order " << k << " node " << i;
        }
    }
}

TEST(Deriv, SemicircleFirstDerivativeIsSecondOrder) {
    const double e101 = semicircle_d1_error(101), e201 = semicircle_d1_error(201);
    EXPECT_LT(e201, 1e-3);
    const double ratio = e101 / e201;
    EXPECT_GE(ratio, 3.2);
    EXPECT_LE(ratio, 4.8);
}

TEST(Deriv, RejectsInvalidOrder) {
    EXPECT_THROW(deriv(semicircle(11), 0), InvalidArgument);
    EXPECT_THROW(deriv(semicircle(11), 5), InvalidArgument);
}

TEST(DiscreteCurve, ConstructorChecksShape) {
    EXPECT_THROW(DiscreteCurve(VectorField(2, 6), line_bc(1.0)), InvalidArgument);
    BoundaryData one_d{{0.0}, {1.0}, {1.0}, {1.0}, 2.0};
    EXPECT_THROW(DiscreteCurve(VectorField(1, 11), one_d), InvalidArgument);
    EXPECT_THROW(DiscreteCurve(VectorField(3, 11), line_bc(1.0)), InvalidArgument);
}

TEST(DiscreteCurve, PinnedPutsEndNodesOnBoundaryPositions) {
    const DiscreteCurve c = DiscreteCurve::pinned(VectorField(2, 9, 0.5), line_bc(2.0));
    EXPECT_EQ(c.nodes().node(0), (Point{0.0, 0.0}));
    EXPECT_EQ(c.nodes().node(8), (Point{2.0, 0.0}));
}

TEST(BoundaryData, ReportsBrokenInvariants) {
    EXPECT_TRUE(semicircle(11).boundary().problems().empty());
    BoundaryData bad{{0, 0}, {1, 0}, {1, 1}, {1, 0}, 2.0};
    EXPECT_EQ(bad.problems().size(), 1u);
    BoundaryData tight{{0, 0}, {1, 0}, {1, 0}, {1, 0}, 1.0};
    EXPECT_EQ(tight.problems().size(), 1u);
}

TEST(ArcElement, ConstantSpeedLine) {
    const ScalarField g = arc_element(line(31, 2.0));
    for (double v : g) EXPECT_NEAR(v, 2.0, 1e-12);
}

TEST(ArcElement, SemicircleSpeedIsPiToSecondOrder) {
    auto err = [](std::size_t n) {
        double e = 0.0;
        for (double v : arc_element(semicircle(n))) e = std::max(e, std::abs(v - pi));
        return e;
    };
    const double ratio = err(101) / err(201);
    EXPECT_LT(err(201), 1e-3);
    EXPECT_GE(ratio, 3.2);
    EXPECT_LE(ratio, 4.8);
}

TEST(ArcElement, RepeatedNodeIsDegenerate) {
    // a curve that stops at node 0: f(x) = (x^2, 0)
    VectorField f = sample(21, 2, [](double x, double* p) { p[0] = x * x; p[1] = 0.0; });
    const DiscreteCurve c(f, line_bc(1.0));
    EXPECT_THROW(arc_element(c), DegenerateCurve);
    VectorField g = line(21, 1.0).nodes();
    g(0, 5) = g(0, 4);
    g(0, 6) = g(0, 4);
    EXPECT_THROW(arc_element(DiscreteCurve(g, line_bc(1.0))), DegenerateCurve);
}

TEST(QuadDs, SegmentLengthIsExact) {
    for (std::size_t n : {7u, 31u, 200u}) {
        const DiscreteCurve c = line(n, 3.0);
        EXPECT_NEAR(quad_ds(c, ScalarField(n, 1.0)), 3.0, 1e-13);
        EXPECT_EQ(quad_ds(c, ScalarField(n, 0.0)), 0.0);
    }
}

TEST(QuadDs, SemicircleLengthIsSecondOrder) {
    auto err = [](std::size_t n) { return std::abs(quad_ds(semicircle(n), ScalarField(n, 1.0)) - pi); };
    EXPECT_LT(err(201), 1e-3);
    const double ratio = err(101) / err(201);
    EXPECT_GE(ratio, 3.2);
    EXPECT_LE(ratio, 4.8);
}

TEST(QuadDs, LinearAndMonotone) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const DiscreteCurve c = semicircle(41);
    for (int trial = 0; trial < 20; ++trial) {
        ScalarField a(41), b(41), mix(41);
        for (std::size_t i = 0; i < 41; ++i) {
            a[i] = u(rng);
            b[i] = u(rng) - 0.5;
            mix[i] = 2.0 * a[i] - 3.0 * b[i];
        }
        EXPECT_NEAR(quad_ds(c, mix), 2.0 * quad_ds(c, a) - 3.0 * quad_ds(c, b), 1e-13);
        EXPECT_GE(quad_ds(c, a), 0.0);
    }
    EXPECT_THROW(quad_ds(c, ScalarField(40, 1.0)), InvalidArgument);
}

TEST(ProjectNormal, TangentFieldVanishes) {
    const DiscreteCurve c = semicircle(51);
    const VectorField p = project_normal(c, unit_tangent(c));
    EXPECT_LT(max_abs(p), 1e-15);
}

TEST(ProjectNormal, LineSplitsIntoComponents) {
    const DiscreteCurve c = line(21, 1.0);
    const VectorField up = sample(21, 2, [](double, double* p) { p[0] = 0.0; p[1] = 1.0; });
    const VectorField p = project_normal(c, up);
    EXPECT_LT(max_node_distance(p, up), 1e-15);
}

TEST(ProjectNormal, OrthogonalIdempotentAndContracting) {
    std::mt19937_64 rng(9);
    const testing_support::RandomCurve shape(rng);
    const DiscreteCurve c = shape.sampled(101);
    std::normal_distribution<double> g;
    VectorField x(2, 101);
    for (double& v : x.raw()) v = g(rng);
    const VectorField p = project_normal(c, x);
    const VectorField pp = project_normal(c, p);
    const VectorField t = unit_tangent(c);
    const ScalarField along = dot(p, t);
    const ScalarField before = norm_squared(x), after = norm_squared(p);
    for (std::size_t i = 0; i < 101; ++i) {
        EXPECT_LT(std::abs(along[i]), 1e-12);
        EXPECT_LE(after[i], before[i] * (1.0 + 1e-15));
    }
    EXPECT_LT(max_node_distance(p, pp), 1e-12);
}
