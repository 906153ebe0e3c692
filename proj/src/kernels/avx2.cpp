#include <immintrin.h>

#include "elastica/kernels/kernels.hpp"

namespace elastica::kernels {
namespace {

// Same association order as the scalar loop, lane by lane: no FMA, the
// accumulator starts from the first tap.
void stencil(const double* in, double* out, std::size_t begin, std::size_t end,
             const double* w, int width, double scale) {
    const std::size_t r = static_cast<std::size_t>(width / 2);
    const __m256d vs = _mm256_set1_pd(scale);
    std::size_t i = begin;
    for (; i + 4 <= end; i += 4) {
        const double* src = in + (i - r);
        __m256d acc = _mm256_mul_pd(_mm256_set1_pd(w[0]), _mm256_loadu_pd(src));
        for (int j = 1; j < width; ++j)
            acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_set1_pd(w[j]), _mm256_loadu_pd(src + j)));
        _mm256_storeu_pd(out + i, _mm256_mul_pd(acc, vs));
    }
    for (; i < end; ++i) {
        const double* src = in + (i - r);
        double acc = w[0] * src[0];
        for (int j = 1; j < width; ++j) acc = acc + w[j] * src[j];
        out[i] = acc * scale;
    }
}

void mul_add(const double* a, const double* b, double* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d p = _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
        _mm256_storeu_pd(out + i, _mm256_add_pd(_mm256_loadu_pd(out + i), p));
    }
    for (; i < n; ++i) out[i] = out[i] + a[i] * b[i];
}

double trapezoid(const double* g, const double* gamma, std::size_t n, double h) {
    if (n < 2) return 0.0;
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 1;
    const std::size_t last = n - 1;
    for (; i + 4 <= last; i += 4)
        acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(g + i), _mm256_loadu_pd(gamma + i)));
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double s = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
    for (; i < last; ++i) s += g[i] * gamma[i];
    s += 0.5 * (g[0] * gamma[0] + g[last] * gamma[last]);
    return s * h;
}

}  // namespace

const Table* avx2_table() {
    static const Table t{"avx2", stencil, mul_add, trapezoid};
    return &t;
}

}  // namespace elastica::kernels
