#include "elastica/fields.hpp"

#include <algorithm>
#include <cmath>

#include "elastica/errors.hpp"
#include "elastica/kernels/kernels.hpp"

namespace elastica {

VectorField::VectorField(std::size_t dim, std::size_t n, double fill)
    : dim_(dim), n_(n), data_(dim * n, fill) {}

Point VectorField::node(std::size_t i) const {
    Point p(dim_);
    for (std::size_t c = 0; c < dim_; ++c) p[c] = (*this)(c, i);
    return p;
}

void VectorField::set_node(std::size_t i, std::span<const double> p) {
    if (p.size() != dim_) throw InvalidArgument("set_node: point dimension mismatch");
    for (std::size_t c = 0; c < dim_; ++c) (*this)(c, i) = p[c];
}

namespace {

void require_same_shape(const VectorField& a, const VectorField& b, const char* what) {
    if (a.dim() != b.dim() || a.size() != b.size())
        throw InvalidArgument(std::string(what) + ": field shape mismatch");
}

}  // namespace

ScalarField dot(const VectorField& a, const VectorField& b) {
    require_same_shape(a, b, "dot");
    ScalarField out(a.size(), 0.0);
    const auto& k = kernels::active();
    for (std::size_t c = 0; c < a.dim(); ++c)
        k.mul_add(a.component(c).data(), b.component(c).data(), out.data(), a.size());
    return out;
}

ScalarField norm_squared(const VectorField& a) { return dot(a, a); }

void add_scaled(VectorField& out, const ScalarField& s, const VectorField& v) {
    require_same_shape(out, v, "add_scaled");
    if (s.size() != v.size()) throw InvalidArgument("add_scaled: scalar field size mismatch");
    const auto& k = kernels::active();
    for (std::size_t c = 0; c < v.dim(); ++c)
        k.mul_add(s.data(), v.component(c).data(), out.component(c).data(), v.size());
}

void add_scaled(VectorField& out, double s, const VectorField& v) {
    add_scaled(out, ScalarField(v.size(), s), v);
}

VectorField scaled(const ScalarField& s, const VectorField& v) {
    VectorField out(v.dim(), v.size());
    add_scaled(out, s, v);
    return out;
}

VectorField operator+(const VectorField& a, const VectorField& b) {
    require_same_shape(a, b, "operator+");
    VectorField out = a;
    for (std::size_t j = 0; j < out.raw().size(); ++j) out.raw()[j] += b.raw()[j];
    return out;
}

VectorField operator-(const VectorField& a, const VectorField& b) {
    require_same_shape(a, b, "operator-");
    VectorField out = a;
    for (std::size_t j = 0; j < out.raw().size(); ++j) out.raw()[j] -= b.raw()[j];
    return out;
}

VectorField operator*(double s, const VectorField& v) {
    VectorField out = v;
    for (double& x : out.raw()) x *= s;
    return out;
}

double max_abs(std::span<const double> v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

double max_abs(const VectorField& v) { return max_abs(std::span<const double>(v.raw())); }

double max_node_distance(const VectorField& a, const VectorField& b) {
    require_same_shape(a, b, "max_node_distance");
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double s = 0.0;
        for (std::size_t c = 0; c < a.dim(); ++c) {
            double d = a(c, i) - b(c, i);
            s += d * d;
        }
        m = std::max(m, std::sqrt(s));
    }
    return m;
}

}  // namespace elastica
