#include "minkowski/errors.hpp"
#include "minkowski/kernels.hpp"

namespace minkowski::kernels {

std::string_view to_string(Isa isa) {
    switch (isa) {
        case Isa::scalar: return "scalar";
        case Isa::avx2: return "avx2";
        case Isa::avx512: return "avx512";
    }
    return "unknown";
}

bool isa_available(Isa isa) {
    switch (isa) {
        case Isa::scalar: return true;
        case Isa::avx2:
#if defined(__x86_64__) || defined(_M_X64)
            return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
            return false;
#endif
        case Isa::avx512:
#if defined(__x86_64__) || defined(_M_X64)
            return __builtin_cpu_supports("avx512f");
#else
            return false;
#endif
    }
    return false;
}

Isa detect_isa() {
    if (isa_available(Isa::avx512)) return Isa::avx512;
    if (isa_available(Isa::avx2)) return Isa::avx2;
    return Isa::scalar;
}

PhaseAccumulateFn select(Isa isa) {
    if (!isa_available(isa)) throw DomainError("kernel variant '" + std::string(to_string(isa)) + "' not supported on this CPU");
    switch (isa) {
        case Isa::scalar: return &phase_accumulate_scalar;
        case Isa::avx2:
#if defined(__x86_64__) || defined(_M_X64)
            return &phase_accumulate_avx2;
#else
            break;
#endif
        case Isa::avx512:
#if defined(__x86_64__) || defined(_M_X64)
            return &phase_accumulate_avx512;
#else
            break;
#endif
    }
    return &phase_accumulate_scalar;
}

PhaseAccumulateFn best() {
    static const PhaseAccumulateFn fn = select(detect_isa());
    return fn;
}

}  // namespace minkowski::kernels
