#include <atomic>
#include <cstdlib>
#include <string_view>

#include "secant/simd/kernels.hpp"

namespace secant::simd {

namespace {

Isa probe() noexcept {
#if defined(SECANT_HAVE_AVX2_TU) && (defined(__x86_64__) || defined(__i386__))
    __builtin_cpu_init();
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt")) return Isa::Avx2;
#endif
    return Isa::Scalar;
}

Isa initial() noexcept {
    const char* env = std::getenv("SECANT_SIMD");
    if (env != nullptr && std::string_view(env) == "scalar") return Isa::Scalar;
    return probe();
}

std::atomic<Isa>& current() noexcept {
    static std::atomic<Isa> isa{initial()};
    return isa;
}

}  // namespace

Isa detected_isa() noexcept {
    static const Isa isa = probe();
    return isa;
}

Isa active_isa() noexcept { return current().load(std::memory_order_relaxed); }

void set_isa(Isa isa) noexcept {
    if (isa == Isa::Avx2 && detected_isa() != Isa::Avx2) isa = Isa::Scalar;
    current().store(isa, std::memory_order_relaxed);
}

std::string_view isa_name(Isa isa) noexcept {
    switch (isa) {
        case Isa::Avx2: return "avx2";
        case Isa::Scalar: break;
    }
    return "scalar";
}

const Kernels& kernels(Isa isa) noexcept {
#if defined(SECANT_HAVE_AVX2_TU)
    if (isa == Isa::Avx2 && detected_isa() == Isa::Avx2) return detail::avx2_kernels;
#else
    (void)isa;
#endif
    return detail::scalar_kernels;
}

}  // namespace secant::simd
