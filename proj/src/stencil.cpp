#include "elastica/stencil.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "elastica/errors.hpp"
#include "elastica/kernels/kernels.hpp"

namespace elastica {

std::vector<double> fd_weights(double z, std::span<const double> xs, int m) {
    const int n = static_cast<int>(xs.size());
    if (m < 0 || n <= m) throw InvalidArgument("fd_weights: need more nodes than the derivative order");
    // c[j][k]: weight of node j for derivative k
    std::vector<std::vector<double>> c(n, std::vector<double>(m + 1, 0.0));
    double c1 = 1.0;
    double c4 = xs[0] - z;
    c[0][0] = 1.0;
    for (int i = 1; i < n; ++i) {
        const int mn = std::min(i, m);
        double c2 = 1.0;
        const double c5 = c4;
        c4 = xs[i] - z;
        for (int j = 0; j < i; ++j) {
            const double c3 = xs[i] - xs[j];
            c2 *= c3;
            if (j == i - 1) {
                for (int k = mn; k >= 1; --k)
                    c[i][k] = c1 * (k * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
                c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
            }
            for (int k = mn; k >= 1; --k) c[j][k] = (c4 * c[j][k] - k * c[j][k - 1]) / c3;
            c[j][0] = c4 * c[j][0] / c3;
        }
        c1 = c2;
    }
    std::vector<double> w(n);
    for (int j = 0; j < n; ++j) w[j] = c[j][m];
    return w;
}

namespace {

std::vector<double> offsets(int first, int count) {
    std::vector<double> xs(count);
    for (int j = 0; j < count; ++j) xs[j] = first + j;
    return xs;
}

}  // namespace

DerivativeOperator::DerivativeOperator(std::size_t n, int order) : n_(n), k_(order) {
    if (order < 1 || order > 4)
        throw InvalidArgument("derivative order must be in 1..4, got " + std::to_string(order));
    if (n < 7) throw InvalidArgument("need at least 7 nodes, got " + std::to_string(n));
    r_ = order <= 2 ? 1 : 2;
    h_ = 1.0 / static_cast<double>(n - 1);
    scale_ = std::pow(h_, -order);
    central_ = fd_weights(0.0, offsets(-r_, 2 * r_ + 1), order);
    const int width = order + 2;
    for (int i = 0; i < r_; ++i) {
        left_.push_back(fd_weights(i, offsets(0, width), order));
        // node n-1-i, window [n-width, n-1], measured from the window start
        right_.push_back(fd_weights(width - 1 - i, offsets(0, width), order));
    }
}

void DerivativeOperator::apply(std::span<const double> in, std::span<double> out) const {
    if (in.size() != n_ || out.size() != n_) throw InvalidArgument("DerivativeOperator: size mismatch");
    kernels::active().stencil(in.data(), out.data(), r_, n_ - r_, central_.data(),
                              static_cast<int>(central_.size()), scale_);
    const std::size_t width = static_cast<std::size_t>(k_ + 2);
    for (int i = 0; i < r_; ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < width; ++j) acc += left_[i][j] * in[j];
        out[i] = acc * scale_;
        acc = 0.0;
        const std::size_t start = n_ - width;
        for (std::size_t j = 0; j < width; ++j) acc += right_[i][j] * in[start + j];
        out[n_ - 1 - i] = acc * scale_;
    }
}

std::vector<double> DerivativeOperator::apply(std::span<const double> in) const {
    std::vector<double> out(n_);
    apply(in, out);
    return out;
}

DerivativeOperator::Row DerivativeOperator::row(std::size_t i) const {
    if (i >= n_) throw InvalidArgument("DerivativeOperator::row: index out of range");
    Row r;
    const std::size_t width = static_cast<std::size_t>(k_ + 2);
    const std::size_t rr = static_cast<std::size_t>(r_);
    const std::vector<double>* w = nullptr;
    if (i < rr) {
        r.first = 0;
        w = &left_[i];
    } else if (i >= n_ - rr) {
        r.first = n_ - width;
        w = &right_[n_ - 1 - i];
    } else {
        r.first = i - rr;
        w = &central_;
    }
    r.weights = *w;
    for (double& x : r.weights) x *= scale_;
    return r;
}

}  // namespace elastica
