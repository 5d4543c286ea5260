// Compiled with -mavx2; only called after the dispatcher has checked CPUID.

#include "ppers/kernels.hpp"

#include <immintrin.h>

namespace ppers::kernels::avx2 {

void xor_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
  const std::size_t n = dst.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    auto* d = reinterpret_cast<__m256i*>(dst.data() + i);
    const auto* s = reinterpret_cast<const __m256i*>(src.data() + i);
    _mm256_storeu_si256(d, _mm256_xor_si256(_mm256_loadu_si256(d), _mm256_loadu_si256(s)));
  }
  for (; i < n; ++i) dst[i] ^= src[i];
}

bool and_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> a,
              std::span<const std::uint64_t> b) {
  const std::size_t n = dst.size();
  std::size_t i = 0;
  __m256i any = _mm256_setzero_si256();
  for (; i + 4 <= n; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a.data() + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b.data() + i));
    __m256i r = _mm256_and_si256(va, vb);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst.data() + i), r);
    any = _mm256_or_si256(any, r);
  }
  std::uint64_t tail = 0;
  for (; i < n; ++i) {
    dst[i] = a[i] & b[i];
    tail |= dst[i];
  }
  return tail != 0 || !_mm256_testz_si256(any, any);
}

void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t scalar,
              std::uint32_t p) {
  // dst + scalar * src < p + p^2 < 2^31 for p <= kMaxModulus, so the lanes stay
  // in signed 32-bit range and the quotient estimate in double is off by at most one.
  const std::size_t n = dst.size();
  const __m256i vs = _mm256_set1_epi32(static_cast<int>(scalar));
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i vpm1 = _mm256_set1_epi32(static_cast<int>(p - 1));
  const __m256d vinv = _mm256_set1_pd(1.0 / static_cast<double>(p));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    auto* d = reinterpret_cast<__m256i*>(dst.data() + i);
    const auto* s = reinterpret_cast<const __m256i*>(src.data() + i);
    __m256i x = _mm256_add_epi32(_mm256_loadu_si256(d), _mm256_mullo_epi32(_mm256_loadu_si256(s), vs));
    __m128i qlo = _mm256_cvttpd_epi32(_mm256_mul_pd(_mm256_cvtepi32_pd(_mm256_castsi256_si128(x)), vinv));
    __m128i qhi = _mm256_cvttpd_epi32(_mm256_mul_pd(_mm256_cvtepi32_pd(_mm256_extracti128_si256(x, 1)), vinv));
    __m256i q = _mm256_set_m128i(qhi, qlo);
    __m256i r = _mm256_sub_epi32(x, _mm256_mullo_epi32(q, vp));
    r = _mm256_sub_epi32(r, _mm256_and_si256(_mm256_cmpgt_epi32(r, vpm1), vp));
    _mm256_storeu_si256(d, r);
  }
  for (; i < n; ++i) dst[i] = (dst[i] + scalar * src[i]) % p;
}

}  // namespace ppers::kernels::avx2
