#include <arm_neon.h>

#include "tanghom/gf2.hpp"

namespace tanghom::gf2 {

namespace {

void xor_into_neon(uint64_t* dst, const uint64_t* src, size_t nwords) {
  size_t i = 0;
  for (; i + 2 <= nwords; i += 2) {
    uint64x2_t a = vld1q_u64(dst + i);
    uint64x2_t b = vld1q_u64(src + i);
    vst1q_u64(dst + i, veorq_u64(a, b));
  }
  for (; i < nwords; ++i) dst[i] ^= src[i];
}

long first_set_neon(const uint64_t* row, size_t from_word, size_t nwords) {
  size_t i = from_word;
  for (; i + 2 <= nwords; i += 2) {
    uint64x2_t a = vld1q_u64(row + i);
    if (vgetq_lane_u64(a, 0) | vgetq_lane_u64(a, 1)) break;
  }
  for (; i < nwords; ++i)
    if (row[i]) return (long)(i * 64 + (size_t)__builtin_ctzll(row[i]));
  return -1;
}

}  // namespace

const Kernels& neon_kernels() {
  static const Kernels k{"neon", xor_into_neon, first_set_neon};
  return k;
}

}  // namespace tanghom::gf2
