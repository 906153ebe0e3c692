#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace elastica {

// Square matrix with kl sub- and ku super-diagonals. Rows keep kl extra slots
// on the right for the fill-in produced by row interchanges.
class BandedMatrix {
public:
    BandedMatrix(std::size_t n, std::size_t kl, std::size_t ku);

    std::size_t size() const { return n_; }
    std::size_t lower() const { return kl_; }
    std::size_t upper() const { return ku_; }

    bool in_band(std::size_t i, std::size_t j) const;
    double get(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, double v);
    void clear_row(std::size_t i);

    std::vector<double> multiply(std::span<const double> x) const;
    std::vector<std::vector<double>> dense() const;

private:
    friend class BandedLU;
    std::size_t width() const { return 2 * kl_ + ku_ + 1; }
    double& slot(std::size_t i, std::size_t j) { return a_[i * width() + (j + kl_ - i)]; }
    double slot(std::size_t i, std::size_t j) const { return a_[i * width() + (j + kl_ - i)]; }

    std::size_t n_, kl_, ku_;
    std::vector<double> a_;
};

// Gaussian elimination with partial pivoting restricted to the band.
class BandedLU {
public:
    explicit BandedLU(BandedMatrix m);  // SingularSystem on a zero pivot
    void solve(std::span<double> rhs) const;
    std::vector<double> solve(std::span<const double> rhs) const;

private:
    BandedMatrix lu_;
    std::vector<std::size_t> pivot_;
};

}  // namespace elastica
