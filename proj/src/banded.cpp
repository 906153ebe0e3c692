#include "elastica/banded.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "elastica/errors.hpp"

namespace elastica {

BandedMatrix::BandedMatrix(std::size_t n, std::size_t kl, std::size_t ku)
    : n_(n), kl_(kl), ku_(ku), a_(n * (2 * kl + ku + 1), 0.0) {}

bool BandedMatrix::in_band(std::size_t i, std::size_t j) const {
    return i < n_ && j < n_ && j + kl_ >= i && j <= i + ku_;
}

double BandedMatrix::get(std::size_t i, std::size_t j) const { return in_band(i, j) ? slot(i, j) : 0.0; }

void BandedMatrix::set(std::size_t i, std::size_t j, double v) {
    if (!in_band(i, j))
        throw InvalidArgument("BandedMatrix: entry (" + std::to_string(i) + ", " + std::to_string(j) +
                              ") outside the band");
    slot(i, j) = v;
}

void BandedMatrix::clear_row(std::size_t i) {
    std::fill(a_.begin() + i * width(), a_.begin() + (i + 1) * width(), 0.0);
}

std::vector<double> BandedMatrix::multiply(std::span<const double> x) const {
    std::vector<double> y(n_, 0.0);
    for (std::size_t i = 0; i < n_; ++i) {
        const std::size_t lo = i >= kl_ ? i - kl_ : 0;
        const std::size_t hi = std::min(n_ - 1, i + ku_);
        for (std::size_t j = lo; j <= hi; ++j) y[i] += slot(i, j) * x[j];
    }
    return y;
}

std::vector<std::vector<double>> BandedMatrix::dense() const {
    std::vector<std::vector<double>> d(n_, std::vector<double>(n_, 0.0));
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) d[i][j] = get(i, j);
    return d;
}

BandedLU::BandedLU(BandedMatrix m) : lu_(std::move(m)), pivot_(lu_.n_) {
    const std::size_t n = lu_.n_, kl = lu_.kl_, ku = lu_.ku_;
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t last_row = std::min(n - 1, k + kl);
        const std::size_t last_col = std::min(n - 1, k + ku + kl);
        std::size_t p = k;
        for (std::size_t i = k + 1; i <= last_row; ++i)
            if (std::abs(lu_.slot(i, k)) > std::abs(lu_.slot(p, k))) p = i;
        pivot_[k] = p;
        if (lu_.slot(p, k) == 0.0 || !std::isfinite(lu_.slot(p, k)))
            throw SingularSystem("banded system is singular at column " + std::to_string(k));
        if (p != k)
            for (std::size_t j = k; j <= last_col; ++j) std::swap(lu_.slot(p, j), lu_.slot(k, j));
        const double piv = lu_.slot(k, k);
        for (std::size_t i = k + 1; i <= last_row; ++i) {
            const double m = lu_.slot(i, k) / piv;
            lu_.slot(i, k) = m;
            if (m == 0.0) continue;
            for (std::size_t j = k + 1; j <= last_col; ++j) lu_.slot(i, j) -= m * lu_.slot(k, j);
        }
    }
}

void BandedLU::solve(std::span<double> b) const {
    const std::size_t n = lu_.n_, kl = lu_.kl_, ku = lu_.ku_;
    if (b.size() != n) throw InvalidArgument("BandedLU::solve: right-hand side size mismatch");
    for (std::size_t k = 0; k < n; ++k) {
        if (pivot_[k] != k) std::swap(b[k], b[pivot_[k]]);
        const std::size_t last_row = std::min(n - 1, k + kl);
        for (std::size_t i = k + 1; i <= last_row; ++i) b[i] -= lu_.slot(i, k) * b[k];
    }
    for (std::size_t k = n; k-- > 0;) {
        const std::size_t last_col = std::min(n - 1, k + ku + kl);
        double s = b[k];
        for (std::size_t j = k + 1; j <= last_col; ++j) s -= lu_.slot(k, j) * b[j];
        b[k] = s / lu_.slot(k, k);
    }
}

std::vector<double> BandedLU::solve(std::span<const double> rhs) const {
    std::vector<double> b(rhs.begin(), rhs.end());
    solve(std::span<double>(b));
    return b;
}

}  // namespace elastica
