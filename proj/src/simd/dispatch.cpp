#include "fqv/simd/kernels.hpp"

namespace fqv::simd {

#if defined(FQV_HAVE_AVX2_TU)
const Kernels& avx2_kernels();
#endif
#if defined(FQV_HAVE_NEON_TU)
const Kernels& neon_kernels();
#endif

namespace {

struct Selected {
    const Kernels* k;
    const char* name;
};

Selected select() {
#if defined(FQV_HAVE_AVX2_TU) && (defined(__x86_64__) || defined(_M_X64))
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"))
        return {&avx2_kernels(), "avx2"};
#endif
#if defined(FQV_HAVE_NEON_TU)
    return {&neon_kernels(), "neon"};
#endif
    return {&scalar(), "scalar"};
}

const Selected& selected() {
    static const Selected s = select();
    return s;
}

} // namespace

const Kernels& active() { return *selected().k; }
std::string active_name() { return selected().name; }

} // namespace fqv::simd
