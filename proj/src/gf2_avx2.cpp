#include <immintrin.h>

#include "tanghom/gf2.hpp"

namespace tanghom::gf2 {

namespace {

void xor_into_avx2(uint64_t* dst, const uint64_t* src, size_t nwords) {
  size_t i = 0;
  for (; i + 4 <= nwords; i += 4) {
    __m256i a = _mm256_loadu_si256((const __m256i*)(dst + i));
    __m256i b = _mm256_loadu_si256((const __m256i*)(src + i));
    _mm256_storeu_si256((__m256i*)(dst + i), _mm256_xor_si256(a, b));
  }
  for (; i < nwords; ++i) dst[i] ^= src[i];
}

long first_set_avx2(const uint64_t* row, size_t from_word, size_t nwords) {
  size_t i = from_word;
  for (; i + 4 <= nwords; i += 4) {
    __m256i a = _mm256_loadu_si256((const __m256i*)(row + i));
    if (!_mm256_testz_si256(a, a)) break;
  }
  for (; i < nwords; ++i)
    if (row[i]) return (long)(i * 64 + (size_t)__builtin_ctzll(row[i]));
  return -1;
}

}  // namespace

const Kernels& avx2_kernels() {
  static const Kernels k{"avx2", xor_into_avx2, first_set_avx2};
  return k;
}

}  // namespace tanghom::gf2
