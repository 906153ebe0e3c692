#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace elastica {

// Weights of the m-th derivative at z from values at the nodes xs (Fornberg's
// recursion). Exact for polynomials of degree < xs.size().
std::vector<double> fd_weights(double z, std::span<const double> xs, int m);

// k-th derivative on the uniform grid x_i = i/(n-1), second order everywhere:
// central stencils (3 points for k <= 2, 5 points for k = 3, 4) in the interior
// and k+2 point one-sided windows anchored at the ends where those do not fit.
class DerivativeOperator {
public:
    DerivativeOperator(std::size_t n, int order);

    std::size_t size() const { return n_; }
    int order() const { return k_; }
    // Nodes [radius, n - radius) use the central stencil.
    int radius() const { return r_; }
    double spacing() const { return h_; }

    void apply(std::span<const double> in, std::span<double> out) const;
    std::vector<double> apply(std::span<const double> in) const;

    struct Row {
        std::size_t first;            // column of weights[0]
        std::vector<double> weights;  // already scaled by h^-k
    };
    Row row(std::size_t i) const;

private:
    std::size_t n_;
    int k_;
    int r_;
    double h_;
    double scale_;
    std::vector<double> central_;
    std::vector<std::vector<double>> left_;   // window starts at node 0
    std::vector<std::vector<double>> right_;  // window ends at node n-1
};

}  // namespace elastica
