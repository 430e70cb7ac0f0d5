#include "srlq/kernels.hpp"

#include <atomic>

namespace srlq::kernels {

#if defined(SRLQ_HAVE_AVX2)
const Backend& avx2_backend_impl();
#endif

bool avx2_available() {
#if defined(SRLQ_HAVE_AVX2)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

namespace {

const Backend* pick_auto() {
#if defined(SRLQ_HAVE_AVX2)
    if (avx2_available()) return &avx2_backend_impl();
#endif
    return &scalar_backend();
}

std::atomic<const Backend*>& current() {
    static std::atomic<const Backend*> backend{pick_auto()};
    return backend;
}

}  // namespace

const Backend& active() { return *current().load(std::memory_order_relaxed); }

std::vector<std::string_view> available_backends() {
    std::vector<std::string_view> names{"scalar"};
    if (avx2_available()) names.push_back("avx2");
    return names;
}

bool select_backend(std::string_view name) {
    if (name == "auto") {
        current().store(pick_auto(), std::memory_order_relaxed);
        return true;
    }
    if (name == "scalar") {
        current().store(&scalar_backend(), std::memory_order_relaxed);
        return true;
    }
#if defined(SRLQ_HAVE_AVX2)
    if (name == "avx2" && avx2_available()) {
        current().store(&avx2_backend_impl(), std::memory_order_relaxed);
        return true;
    }
#endif
    return false;
}

}  // namespace srlq::kernels
