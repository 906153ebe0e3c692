#include "elastica/kernels/kernels.hpp"

namespace elastica::kernels {
namespace {

void stencil(const double* in, double* out, std::size_t begin, std::size_t end,
             const double* w, int width, double scale) {
    const std::size_t r = static_cast<std::size_t>(width / 2);
    for (std::size_t i = begin; i < end; ++i) {
        const double* src = in + (i - r);
        double acc = w[0] * src[0];
        for (int j = 1; j < width; ++j) acc = acc + w[j] * src[j];
        out[i] = acc * scale;
    }
}

void mul_add(const double* a, const double* b, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = out[i] + a[i] * b[i];
}

double trapezoid(const double* g, const double* gamma, std::size_t n, double h) {
    if (n == 0) return 0.0;
    if (n == 1) return 0.0;
    double s = 0.5 * (g[0] * gamma[0] + g[n - 1] * gamma[n - 1]);
    for (std::size_t i = 1; i + 1 < n; ++i) s += g[i] * gamma[i];
    return s * h;
}

}  // namespace

const Table& scalar() {
    static const Table t{"scalar", stencil, mul_add, trapezoid};
    return t;
}

}  // namespace elastica::kernels
