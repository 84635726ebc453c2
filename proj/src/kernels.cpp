#include "peano/kernels.hpp"

#include <cstdlib>

namespace peano::kernels {

namespace {

const dispatch_table scalar_table{
    &scalar::max_sq_dist_point,
    &scalar::min_sq_dist_point,
    &scalar::max_sq_dist_pairwise,
    "scalar",
};

#if defined(__x86_64__) || defined(_M_X64)
const dispatch_table avx2_table{
    &avx2::max_sq_dist_point,
    &avx2::min_sq_dist_point,
    &avx2::max_sq_dist_pairwise,
    "avx2",
};

bool cpu_has_avx2() {
#if defined(__GNUC__) || defined(__clang__)
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}
#endif

#if defined(__aarch64__)
const dispatch_table neon_table{
    &neon::max_sq_dist_point,
    &neon::min_sq_dist_point,
    &neon::max_sq_dist_pairwise,
    "neon",
};
#endif

const dispatch_table* pick_default() {
    if (const char* env = std::getenv("PEANO_KERNELS")) {
        std::string want(env);
        if (want == "scalar") return &scalar_table;
#if defined(__x86_64__) || defined(_M_X64)
        if (want == "avx2" && cpu_has_avx2()) return &avx2_table;
#endif
#if defined(__aarch64__)
        if (want == "neon") return &neon_table;
#endif
    }
#if defined(__x86_64__) || defined(_M_X64)
    if (cpu_has_avx2()) return &avx2_table;
#endif
#if defined(__aarch64__)
    return &neon_table;
#endif
    return &scalar_table;
}

const dispatch_table* g_active = nullptr;

} // namespace

const dispatch_table& active() {
    if (!g_active) g_active = pick_default();
    return *g_active;
}

bool select(const std::string& name) {
    if (name == "scalar") {
        g_active = &scalar_table;
        return true;
    }
#if defined(__x86_64__) || defined(_M_X64)
    if (name == "avx2" && cpu_has_avx2()) {
        g_active = &avx2_table;
        return true;
    }
#endif
#if defined(__aarch64__)
    if (name == "neon") {
        g_active = &neon_table;
        return true;
    }
#endif
    return false;
}

std::string available() {
    std::string out = "scalar";
#if defined(__x86_64__) || defined(_M_X64)
    if (cpu_has_avx2()) out += ",avx2";
#endif
#if defined(__aarch64__)
    out += ",neon";
#endif
    return out;
}

} // namespace peano::kernels
