// Reference kernels. These define the numerical behaviour every SIMD
// backend has to reproduce bit for bit; keep them boring.

#include "sholes/kernels.hpp"

namespace sholes::kernels {
namespace {

double reduce_add_scalar(const double* x, std::size_t n) {
  double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
  const std::size_t body = n & ~std::size_t{3};
  for (std::size_t t = 0; t < body; t += 4) {
    s0 += x[t];
    s1 += x[t + 1];
    s2 += x[t + 2];
    s3 += x[t + 3];
  }
  double total = (s0 + s2) + (s1 + s3);
  for (std::size_t t = body; t < n; ++t) total += x[t];
  return total;
}

void scale_scalar(double* dst, const double* x, double c, std::size_t n) {
  for (std::size_t t = 0; t < n; ++t) dst[t] = x[t] * c;
}

void multiply_scalar(double* dst, const double* a, const double* b,
                     std::size_t n) {
  for (std::size_t t = 0; t < n; ++t) dst[t] = a[t] * b[t];
}

void scatter_axpy_scalar(double* acc, const std::int32_t* cols,
                         const double* vals, std::size_t n, double c) {
  for (std::size_t t = 0; t < n; ++t) acc[cols[t]] += c * vals[t];
}

void gather_scalar(double* out, const double* src, const std::int32_t* idx,
                   std::size_t n) {
  for (std::size_t t = 0; t < n; ++t) out[t] = src[idx[t]];
}

}  // namespace

const Ops& scalar_ops() {
  static const Ops ops{reduce_add_scalar, scale_scalar, multiply_scalar,
                       scatter_axpy_scalar, gather_scalar};
  return ops;
}

}  // namespace sholes::kernels
