#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace elastica {

using Point = std::vector<double>;
using ScalarField = std::vector<double>;

// N vectors in R^d stored component-major: all x-coordinates, then all y, ...
class VectorField {
public:
    VectorField() = default;
    VectorField(std::size_t dim, std::size_t n, double fill = 0.0);

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return n_; }

    double& operator()(std::size_t c, std::size_t i) { return data_[c * n_ + i]; }
    double operator()(std::size_t c, std::size_t i) const { return data_[c * n_ + i]; }

    std::span<double> component(std::size_t c) { return {data_.data() + c * n_, n_}; }
    std::span<const double> component(std::size_t c) const { return {data_.data() + c * n_, n_}; }

    Point node(std::size_t i) const;
    void set_node(std::size_t i, std::span<const double> p);

    const std::vector<double>& raw() const { return data_; }
    std::vector<double>& raw() { return data_; }

    bool operator==(const VectorField&) const = default;

private:
    std::size_t dim_ = 0;
    std::size_t n_ = 0;
    std::vector<double> data_;
};

// Pointwise helpers. All of them go through the active kernel table.
ScalarField dot(const VectorField& a, const VectorField& b);
ScalarField norm_squared(const VectorField& a);
// out += s * v, pointwise scalar s
void add_scaled(VectorField& out, const ScalarField& s, const VectorField& v);
void add_scaled(VectorField& out, double s, const VectorField& v);
VectorField scaled(const ScalarField& s, const VectorField& v);
VectorField operator+(const VectorField& a, const VectorField& b);
VectorField operator-(const VectorField& a, const VectorField& b);
VectorField operator*(double s, const VectorField& v);

double max_abs(const VectorField& v);
double max_abs(std::span<const double> v);
// max over nodes of the Euclidean distance between a and b
double max_node_distance(const VectorField& a, const VectorField& b);

}  // namespace elastica
