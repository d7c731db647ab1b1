#include "sholes/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <string>

#include "sholes/error.hpp"

namespace sholes::kernels {
namespace {

const Ops& ops_for(Backend backend) {
#if defined(SHOLES_HAVE_AVX2)
  if (backend == Backend::avx2) return avx2_ops();
#endif
  (void)backend;
  return scalar_ops();
}

std::atomic<const Ops*> g_ops{nullptr};
std::atomic<Backend> g_backend{Backend::scalar};

void ensure_selected() {
  if (g_ops.load(std::memory_order_acquire) != nullptr) return;
  const Backend backend = detect_backend();
  g_backend.store(backend, std::memory_order_relaxed);
  g_ops.store(&ops_for(backend), std::memory_order_release);
}

}  // namespace

bool backend_supported(Backend backend) {
  switch (backend) {
    case Backend::scalar:
      return true;
    case Backend::avx2:
#if defined(SHOLES_HAVE_AVX2)
      return __builtin_cpu_supports("avx2") != 0;
#else
      return false;
#endif
  }
  return false;
}

const char* backend_name(Backend backend) {
  switch (backend) {
    case Backend::scalar: return "scalar";
    case Backend::avx2: return "avx2";
  }
  return "unknown";
}

Backend detect_backend() {
  if (const char* env = std::getenv("SHOLES_KERNELS")) {
    if (std::strcmp(env, "scalar") == 0) return Backend::scalar;
    if (std::strcmp(env, "avx2") == 0 && backend_supported(Backend::avx2)) {
      return Backend::avx2;
    }
  }
  if (backend_supported(Backend::avx2)) return Backend::avx2;
  return Backend::scalar;
}

const Ops& active() {
  ensure_selected();
  return *g_ops.load(std::memory_order_acquire);
}

Backend active_backend() {
  ensure_selected();
  return g_backend.load(std::memory_order_relaxed);
}

void set_backend(Backend backend) {
  if (!backend_supported(backend)) {
    throw Error(ErrorCode::InvalidArgument,
                std::string("kernel backend not available: ") +
                    backend_name(backend));
  }
  g_backend.store(backend, std::memory_order_relaxed);
  g_ops.store(&ops_for(backend), std::memory_order_release);
}

}  // namespace sholes::kernels
