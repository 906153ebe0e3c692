#include <atomic>
#include <cstdlib>
#include <string_view>

#include "elastica/kernels/kernels.hpp"

namespace elastica::kernels {

#if defined(ELASTICA_HAVE_AVX2)
const Table* avx2_table();
#endif

const Table* avx2() {
#if defined(ELASTICA_HAVE_AVX2)
    static const bool ok = __builtin_cpu_supports("avx2");
    return ok ? avx2_table() : nullptr;
#else
    return nullptr;
#endif
}

namespace {

const Table* pick_default() {
    if (const char* env = std::getenv("ELASTICA_KERNELS")) {
        std::string_view want(env);
        if (want == "scalar") return &scalar();
        if (want == "avx2" && avx2()) return avx2();
    }
    if (const Table* t = avx2()) return t;
    return &scalar();
}

std::atomic<const Table*>& current() {
    static std::atomic<const Table*> t{pick_default()};
    return t;
}

}  // namespace

const Table& active() { return *current().load(std::memory_order_acquire); }

bool select(std::string_view name) {
    const Table* t = nullptr;
    if (name == "scalar") t = &scalar();
    else if (name == "avx2") t = avx2();
    if (!t) return false;
    current().store(t, std::memory_order_release);
    return true;
}

}  // namespace elastica::kernels
