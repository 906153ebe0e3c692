#pragma once

#include <cstddef>
#include <string_view>

namespace elastica::kernels {

// Inner loops shared by every field evaluation. Each variant must reproduce the
// scalar table bit for bit, except `trapezoid` whose summation order may differ.
struct Table {
    const char* name;

    // out[i] = scale * sum_j w[j] * in[i - width/2 + j]   for begin <= i < end
    void (*stencil)(const double* in, double* out, std::size_t begin, std::size_t end,
                    const double* w, int width, double scale);

    // out[i] += a[i] * b[i]
    void (*mul_add)(const double* a, const double* b, double* out, std::size_t n);

    // sum_i c_i g_i gamma_i h, c = 1/2 at both ends and 1 elsewhere
    double (*trapezoid)(const double* g, const double* gamma, std::size_t n, double h);
};

const Table& scalar();

// nullptr when the variant is not compiled in or the CPU lacks it.
const Table* avx2();

// Best table for this machine. ELASTICA_KERNELS=scalar|avx2 forces a choice.
const Table& active();

// Overrides the active table; returns false if `name` is unavailable.
bool select(std::string_view name);

}  // namespace elastica::kernels
