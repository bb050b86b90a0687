#include "tanghom/gf2.hpp"

#include <cstdlib>
#include <cstring>

namespace tanghom::gf2 {

namespace {

void xor_into_scalar(uint64_t* dst, const uint64_t* src, size_t nwords) {
  for (size_t i = 0; i < nwords; ++i) dst[i] ^= src[i];
}

long first_set_scalar(const uint64_t* row, size_t from_word, size_t nwords) {
  for (size_t i = from_word; i < nwords; ++i)
    if (row[i]) return (long)(i * 64 + (size_t)__builtin_ctzll(row[i]));
  return -1;
}

const Kernels kScalar{"scalar", xor_into_scalar, first_set_scalar};

}  // namespace

const Kernels& scalar_kernels() { return kScalar; }

#if defined(TANGHOM_HAVE_AVX2_TU)
const Kernels& avx2_kernels();  // defined in gf2_avx2.cpp
#endif
#if defined(TANGHOM_HAVE_NEON_TU)
const Kernels& neon_kernels();  // defined in gf2_neon.cpp
#endif

const Kernels& active_kernels() {
  static const Kernels* chosen = [] {
    const char* env = std::getenv("TANGHOM_SIMD");
    std::string want = env ? env : "";
    if (want == "scalar") return &kScalar;
#if defined(TANGHOM_HAVE_AVX2_TU)
    if (want.empty() || want == "avx2") {
      if (__builtin_cpu_supports("avx2")) return &avx2_kernels();
    }
#endif
#if defined(TANGHOM_HAVE_NEON_TU)
    if (want.empty() || want == "neon") return &neon_kernels();
#endif
    return &kScalar;
  }();
  return *chosen;
}

std::string active_kernel_name() { return active_kernels().name; }

int rank(Mat m, const Kernels& k) {
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    size_t w = (size_t)c >> 6;
    uint64_t bit = uint64_t(1) << (c & 63);
    int pivot = -1;
    for (int i = r; i < m.rows; ++i)
      if (m.row(i)[w] & bit) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != r)
      for (size_t j = 0; j < m.words; ++j) std::swap(m.row(pivot)[j], m.row(r)[j]);
    for (int i = r + 1; i < m.rows; ++i)
      if (m.row(i)[w] & bit) k.xor_into(m.row(i) + w, m.row(r) + w, m.words - w);
    ++r;
  }
  return r;
}

}  // namespace tanghom::gf2
