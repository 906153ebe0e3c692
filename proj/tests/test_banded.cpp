#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "elastica/banded.hpp"
#include "elastica/errors.hpp"

using namespace elastica;

namespace {

using Dense = std::vector<std::vector<double>>;

// Dense Gaussian elimination with partial pivoting.
std::vector<double> dense_solve(Dense a, std::vector<double> b) {
    const std::size_t n = b.size();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(a[i][k]) > std::abs(a[p][k])) p = i;
        std::swap(a[k], a[p]);
        std::swap(b[k], b[p]);
        for (std::size_t i = k + 1; i < n; ++i) {
            const double m = a[i][k] / a[k][k];
            for (std::size_t j = k; j < n; ++j) a[i][j] -= m * a[k][j];
            b[i] -= m * b[k];
        }
    }
    std::vector<double> x(n);
    for (std::size_t k = n; k-- > 0;) {
        double s = b[k];
        for (std::size_t j = k + 1; j < n; ++j) s -= a[k][j] * x[j];
        x[k] = s / a[k][k];
    }
    return x;
}

BandedMatrix random_banded(std::size_t n, std::mt19937_64& rng, bool weak_diagonal) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    BandedMatrix m(n, 2, 2);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = (i >= 2 ? i - 2 : 0); j <= std::min(n - 1, i + 2); ++j) m.set(i, j, u(rng));
        if (!weak_diagonal) m.set(i, i, 6.0 + u(rng));
    }
    return m;
}

// Second-difference-squared operator with coefficient c and identity end rows.
BandedMatrix smoothing_matrix(std::size_t n, double c) {
    BandedMatrix m(n, 2, 2);
    const double w[] = {1, -4, 6, -4, 1};
    for (std::size_t i = 0; i < n; ++i) {
        if (i < 2 || i + 2 >= n) {
            m.set(i, i, 1.0);
            continue;
        }
        for (int k = 0; k < 5; ++k) m.set(i, i - 2 + k, (k == 2 ? 1.0 : 0.0) + c * w[k]);
    }
    return m;
}

}  // namespace

TEST(Banded, StorageRespectsBand) {
    BandedMatrix m(6, 2, 2);
    m.set(3, 1, 2.0);
    m.set(3, 5, 3.0);
    EXPECT_EQ(m.get(3, 1), 2.0);
    EXPECT_EQ(m.get(3, 5), 3.0);
    EXPECT_EQ(m.get(0, 5), 0.0);
    EXPECT_THROW(m.set(0, 3, 1.0), InvalidArgument);
    EXPECT_THROW(m.set(5, 2, 1.0), InvalidArgument);
    m.clear_row(3);
    EXPECT_EQ(m.get(3, 1), 0.0);
}

TEST(Banded, MultiplyMatchesDense) {
    std::mt19937_64 rng(41);
    const BandedMatrix m = random_banded(12, rng, true);
    const Dense d = m.dense();
    std::vector<double> x(12);
    for (std::size_t i = 0; i < 12; ++i) x[i] = std::sin(1.0 + i);
    const auto y = m.multiply(x);
    for (std::size_t i = 0; i < 12; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < 12; ++j) s += d[i][j] * x[j];
        EXPECT_NEAR(y[i], s, 1e-14);
    }
}

TEST(Banded, SolveMatchesDenseEliminationWithPivoting) {
    std::mt19937_64 rng(42);
    for (std::size_t n : {5u, 8u, 31u, 200u}) {
        for (bool weak : {false, true}) {
            const BandedMatrix m = random_banded(n, rng, weak);
            std::vector<double> b(n);
            for (std::size_t i = 0; i < n; ++i) b[i] = std::cos(0.3 * i);
            const auto x = BandedLU(m).solve(std::span<const double>(b));
            const auto ref = dense_solve(m.dense(), b);
            double scale = 0.0;
            for (double v : ref) scale = std::max(scale, std::abs(v));
            for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(x[i], ref[i], 1e-9 * (1.0 + scale)) << n << " " << i;
            const auto back = m.multiply(x);
            for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(back[i], b[i], 1e-9 * (1.0 + scale));
        }
    }
}

TEST(Banded, RequiresPivotingOnZeroDiagonal) {
    BandedMatrix m(4, 2, 2);
    // permutation-like system with zero leading diagonal entry
    m.set(0, 1, 1.0);
    m.set(1, 0, 1.0);
    m.set(2, 3, 1.0);
    m.set(3, 2, 1.0);
    std::vector<double> b = {1.0, 2.0, 3.0, 4.0};
    BandedLU(m).solve(std::span<double>(b));
    EXPECT_EQ(b, (std::vector<double>{2.0, 1.0, 4.0, 3.0}));
}

TEST(Banded, SingularSystemIsReported) {
    BandedMatrix m(5, 2, 2);
    for (std::size_t i = 0; i < 5; ++i) m.set(i, i, 1.0);
    m.set(2, 2, 0.0);
    EXPECT_THROW(BandedLU{m}, SingularSystem);
}

TEST(Banded, DeltaSourceSpreadsAndDecays) {
    const std::size_t n = 31;
    const BandedMatrix m = smoothing_matrix(n, 2.0);
    std::vector<double> b(n, 0.0);
    b[15] = 1.0;
    const auto x = BandedLU(m).solve(std::span<const double>(b));
    const auto ref = dense_solve(m.dense(), b);
    for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(x[i], ref[i], 1e-13);
    // symmetric, peaked at the source, envelope shrinking with distance
    for (std::size_t d = 1; d <= 15; ++d) EXPECT_NEAR(x[15 - d], x[15 + d], 1e-13);
    double prev = std::abs(x[15]);
    for (std::size_t d = 1; d <= 15; ++d) {
        double env = 0.0;
        for (std::size_t e = d; e <= 15; ++e) env = std::max(env, std::abs(x[15 + e]));
        EXPECT_LE(env, prev);
        prev = env;
    }
    EXPECT_GT(std::abs(x[15]), std::abs(x[13]));
}
