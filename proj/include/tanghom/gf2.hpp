#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace tanghom::gf2 {

// Row kernels for bit-packed GF(2) linear algebra.  The scalar reference
// implementations are always available; an AVX2 (or NEON) variant is
// selected at runtime when the CPU supports it.  Both produce identical
// results; the equivalence is unit-tested.
struct Kernels {
  const char* name;
  // dst ^= src over nwords 64-bit words
  void (*xor_into)(uint64_t* dst, const uint64_t* src, size_t nwords);
  // index of first set bit at or after word `from`, or -1
  long (*first_set)(const uint64_t* row, size_t from_word, size_t nwords);
};

const Kernels& scalar_kernels();
const Kernels& active_kernels();  // honors TANGHOM_SIMD=scalar|avx2|neon
std::string active_kernel_name();

// Dense bit-packed matrix over GF(2), row major.
struct Mat {
  int rows = 0, cols = 0;
  size_t words = 0;
  std::vector<uint64_t> bits;

  Mat() = default;
  Mat(int r, int c)
      : rows(r), cols(c), words((size_t)(c + 63) / 64), bits((size_t)r * ((c + 63) / 64), 0) {}
  uint64_t* row(int r) { return bits.data() + (size_t)r * words; }
  const uint64_t* row(int r) const { return bits.data() + (size_t)r * words; }
  bool get(int r, int c) const { return (row(r)[c >> 6] >> (c & 63)) & 1; }
  void set(int r, int c, bool v) {
    uint64_t m = uint64_t(1) << (c & 63);
    if (v)
      row(r)[c >> 6] |= m;
    else
      row(r)[c >> 6] &= ~m;
  }
};

// Rank by in-place row reduction with the given kernels.
int rank(Mat m, const Kernels& k = active_kernels());

}  // namespace tanghom::gf2
