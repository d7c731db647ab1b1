// AVX2 backend. Compiled with -mavx2 -ffp-contract=off and only ever
// dispatched to after a runtime cpuid check. The lane layout mirrors the
// interleaved partial sums of the scalar reference, so results are
// bit-identical (see the contract in kernels.hpp).

#if defined(SHOLES_HAVE_AVX2) && defined(__x86_64__)

#include <immintrin.h>

#include "sholes/kernels.hpp"

namespace sholes::kernels {
namespace {

double reduce_add_avx2(const double* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  const std::size_t body = n & ~std::size_t{3};
  for (std::size_t t = 0; t < body; t += 4) {
    acc = _mm256_add_pd(acc, _mm256_loadu_pd(x + t));
  }
  const __m128d lo = _mm256_castpd256_pd128(acc);    // [s0, s1]
  const __m128d hi = _mm256_extractf128_pd(acc, 1);  // [s2, s3]
  const __m128d pair = _mm_add_pd(lo, hi);           // [s0+s2, s1+s3]
  double total =
      _mm_cvtsd_f64(pair) + _mm_cvtsd_f64(_mm_unpackhi_pd(pair, pair));
  for (std::size_t t = body; t < n; ++t) total += x[t];
  return total;
}

void scale_avx2(double* dst, const double* x, double c, std::size_t n) {
  const __m256d cv = _mm256_set1_pd(c);
  const std::size_t body = n & ~std::size_t{3};
  for (std::size_t t = 0; t < body; t += 4) {
    _mm256_storeu_pd(dst + t, _mm256_mul_pd(_mm256_loadu_pd(x + t), cv));
  }
  for (std::size_t t = body; t < n; ++t) dst[t] = x[t] * c;
}

void multiply_avx2(double* dst, const double* a, const double* b,
                   std::size_t n) {
  const std::size_t body = n & ~std::size_t{3};
  for (std::size_t t = 0; t < body; t += 4) {
    _mm256_storeu_pd(
        dst + t, _mm256_mul_pd(_mm256_loadu_pd(a + t), _mm256_loadu_pd(b + t)));
  }
  for (std::size_t t = body; t < n; ++t) dst[t] = a[t] * b[t];
}

void scatter_axpy_avx2(double* acc, const std::int32_t* cols,
                       const double* vals, std::size_t n, double c) {
  // The products vectorize; the scatter stays scalar (AVX2 has no scatter).
  // Within one call the columns are unique, so lane order only has to match
  // the scalar loop, which it does.
  const __m256d cv = _mm256_set1_pd(c);
  const std::size_t body = n & ~std::size_t{3};
  alignas(32) double prod[4];
  for (std::size_t t = 0; t < body; t += 4) {
    _mm256_store_pd(prod, _mm256_mul_pd(_mm256_loadu_pd(vals + t), cv));
    acc[cols[t]] += prod[0];
    acc[cols[t + 1]] += prod[1];
    acc[cols[t + 2]] += prod[2];
    acc[cols[t + 3]] += prod[3];
  }
  for (std::size_t t = body; t < n; ++t) acc[cols[t]] += c * vals[t];
}

void gather_avx2(double* out, const double* src, const std::int32_t* idx,
                 std::size_t n) {
  const std::size_t body = n & ~std::size_t{3};
  for (std::size_t t = 0; t < body; t += 4) {
    const __m128i iv =
        _mm_loadu_si128(reinterpret_cast<const __m128i*>(idx + t));
    _mm256_storeu_pd(out + t, _mm256_i32gather_pd(src, iv, 8));
  }
  for (std::size_t t = body; t < n; ++t) out[t] = src[idx[t]];
}

}  // namespace

const Ops& avx2_ops() {
  static const Ops ops{reduce_add_avx2, scale_avx2, multiply_avx2,
                       scatter_axpy_avx2, gather_avx2};
  return ops;
}

}  // namespace sholes::kernels

#endif  // SHOLES_HAVE_AVX2 && __x86_64__
