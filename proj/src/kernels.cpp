#include "gridfuzz/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

namespace gridfuzz::kernels {

bool avx2_supported() {
#if (defined(__x86_64__) || defined(_M_X64)) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

namespace {

const Backend* choose_backend() {
  if (const char* env = std::getenv("GRIDFUZZ_KERNELS")) {
    if (std::strcmp(env, "scalar") == 0) {
      return &scalar_backend();
    }
    if (std::strcmp(env, "avx2") == 0 && avx2_supported()) {
      return &avx2_backend();
    }
  }
  return avx2_supported() ? &avx2_backend() : &scalar_backend();
}

std::atomic<const Backend*>& slot() {
  static std::atomic<const Backend*> current{choose_backend()};
  return current;
}

}  // namespace

const Backend& active_backend() { return *slot().load(std::memory_order_relaxed); }

void set_active_backend(const Backend& backend) {
  slot().store(&backend, std::memory_order_relaxed);
}

}  // namespace gridfuzz::kernels
