#pragma once

#include <cstddef>
#include <cstdint>

namespace sholes::kernels {

enum class Backend {
  scalar,
  avx2,
};

// Value-plane kernels shared by the sparse primitives. Every backend must
// produce bit-identical results for identical inputs, so the floating-point
// evaluation order is part of the contract:
//
//  * reduce_add splits the 4-aligned body into four interleaved partial sums
//    s0..s3 (lane l accumulates x[l], x[l+4], ...), combines them as
//    (s0 + s2) + (s1 + s3), then adds the tail elements left to right.
//  * scale, multiply and gather are pure element-wise maps.
//  * scatter_axpy performs acc[cols[t]] += c * vals[t] for t = 0..n-1 in
//    order; each product is a single IEEE multiplication (no FMA). Column
//    indices must be duplicate-free within one call.
struct Ops {
  double (*reduce_add)(const double* x, std::size_t n);
  void (*scale)(double* dst, const double* x, double c, std::size_t n);
  void (*multiply)(double* dst, const double* a, const double* b,
                   std::size_t n);
  void (*scatter_axpy)(double* acc, const std::int32_t* cols,
                       const double* vals, std::size_t n, double c);
  void (*gather)(double* out, const double* src, const std::int32_t* idx,
                 std::size_t n);
};

const Ops& scalar_ops();
#if defined(SHOLES_HAVE_AVX2)
const Ops& avx2_ops();
#endif

/// Best backend supported by the running CPU. The SHOLES_KERNELS environment
/// variable ("scalar" or "avx2") overrides the choice when the named backend
/// is available.
Backend detect_backend();

/// Kernel table currently in effect (selected on first use).
const Ops& active();
Backend active_backend();

/// Force a specific backend; throws Error(InvalidArgument) if this build or
/// CPU does not support it.
void set_backend(Backend backend);

bool backend_supported(Backend backend);
const char* backend_name(Backend backend);

}  // namespace sholes::kernels
