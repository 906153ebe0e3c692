#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "elastica/geometry.hpp"
#include "elastica/kernels/kernels.hpp"
#include "support.hpp"

using namespace elastica;

namespace {

std::vector<double> random_vector(std::size_t n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> v(n);
    for (double& x : v) x = u(rng);
    return v;
}

class KernelGuard {
public:
    KernelGuard() : saved_(kernels::active().name) {}
    ~KernelGuard() { kernels::select(saved_); }

private:
    std::string saved_;
};

}  // namespace

TEST(Kernels, ScalarTableIsAlwaysSelectable) {
    KernelGuard guard;
    EXPECT_TRUE(kernels::select("scalar"));
    EXPECT_STREQ(kernels::active().name, "scalar");
    EXPECT_FALSE(kernels::select("no-such-kernel"));
}

TEST(Kernels, DispatchPrefersAvx2WhenPresent) {
    if (!kernels::avx2()) GTEST_SKIP() << "AVX2 not available";
    if (std::getenv("ELASTICA_KERNELS")) GTEST_SKIP() << "kernel choice forced by environment";
    EXPECT_STREQ(kernels::active().name, "avx2");
}

TEST(Kernels, StencilMatchesScalarBitForBit) {
    const kernels::Table* simd = kernels::avx2();
    if (!simd) GTEST_SKIP() << "AVX2 not available";
    std::mt19937_64 rng(11);
    for (int width : {3, 5, 7}) {
        for (std::size_t n : {7u, 8u, 13u, 64u, 201u, 1003u}) {
            if (n < static_cast<std::size_t>(width)) continue;
            const auto in = random_vector(n, rng);
            const auto w = random_vector(width, rng);
            const std::size_t r = width / 2;
            std::vector<double> a(n, 0.0), b(n, 0.0);
            kernels::scalar().stencil(in.data(), a.data(), r, n - r, w.data(), width, 12345.678);
            simd->stencil(in.data(), b.data(), r, n - r, w.data(), width, 12345.678);
            for (std::size_t i = 0; i < n; ++i) ASSERT_EQ(a[i], b[i]) << "width " << width << " n " << n << " i " << i;
        }
    }
}

TEST(Kernels, MulAddMatchesScalarBitForBit) {
    const kernels::Table* simd = kernels::avx2();
    if (!simd) GTEST_SKIP() << "AVX2 not available";
    std::mt19937_64 rng(12);
    for (std::size_t n : {1u, 3u, 4u, 5u, 17u, 201u}) {
        const auto x = random_vector(n, rng), y = random_vector(n, rng), z = random_vector(n, rng);
        auto a = z, b = z;
        kernels::scalar().mul_add(x.data(), y.data(), a.data(), n);
        simd->mul_add(x.data(), y.data(), b.data(), n);
        EXPECT_EQ(a, b);
    }
}

TEST(Kernels, TrapezoidAgreesWithinRoundoff) {
    const kernels::Table* simd = kernels::avx2();
    if (!simd) GTEST_SKIP() << "AVX2 not available";
    std::mt19937_64 rng(13);
    for (std::size_t n : {2u, 3u, 7u, 10u, 201u, 4001u}) {
        const auto g = random_vector(n, rng), gamma = random_vector(n, rng);
        double mag = 0.0;
        for (std::size_t i = 0; i < n; ++i) mag += std::abs(g[i] * gamma[i]);
        const double h = 1.0 / (n - 1);
        EXPECT_NEAR(kernels::scalar().trapezoid(g.data(), gamma.data(), n, h),
                    simd->trapezoid(g.data(), gamma.data(), n, h), 1e-15 * mag * h * 8);
    }
}

TEST(Kernels, TrapezoidReference) {
    const double g[] = {1, 2, 3, 4};
    const double gamma[] = {1, 1, 1, 1};
    // (1/2 + 2 + 3 + 4/2) h
    EXPECT_DOUBLE_EQ(kernels::scalar().trapezoid(g, gamma, 4, 0.5), 3.75);
}

TEST(Kernels, GeometryFieldsIdenticalAcrossVariants) {
    if (!kernels::avx2()) GTEST_SKIP() << "AVX2 not available";
    KernelGuard guard;
    std::mt19937_64 rng(5);
    const testing_support::RandomCurve shape(rng);
    const DiscreteCurve curve = shape.sampled(201);
    kernels::select("scalar");
    const GeometricFields a = evaluate(curve);
    kernels::select("avx2");
    const GeometricFields b = evaluate(curve);
    EXPECT_EQ(a.gamma, b.gamma);
    EXPECT_EQ(a.kappa, b.kappa);
    EXPECT_EQ(a.nabla_s_kappa, b.nabla_s_kappa);
    EXPECT_EQ(a.nabla_s2_kappa, b.nabla_s2_kappa);
    EXPECT_EQ(a.a_of_f, b.a_of_f);
    EXPECT_EQ(a.grad_E, b.grad_E);
    EXPECT_NEAR(a.energy, b.energy, 1e-14 * a.energy);
    EXPECT_NEAR(a.length, b.length, 1e-14 * a.length);
}
