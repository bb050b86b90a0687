#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tanghom/gf2.hpp"

namespace tanghom::lin {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

enum class Ring { Z, Z2, Q };
const char* ring_name(Ring r);

// ---------------------------------------------------------------------------
// Integer matrices
// ---------------------------------------------------------------------------

// Sparse rows over arbitrary-precision integers.  Matrices act on column
// vectors: an (r x c) matrix maps Z^c -> Z^r.
struct IntMat {
  int rows = 0, cols = 0;
  std::vector<std::map<int, Int>> row;

  IntMat() = default;
  IntMat(int r, int c) : rows(r), cols(c), row(r) {}
  static IntMat identity(int n);

  Int get(int r, int c) const;
  void set(int r, int c, Int v);
  void add(int r, int c, const Int& v);
  bool is_zero() const;
  long long nnz() const;

  IntMat mul(const IntMat& o) const;
  IntMat plus(const IntMat& o, const Int& scale = 1) const;
  IntMat scaled(const Int& s) const;
  IntMat transpose() const;
  IntMat cols_subset(const std::vector<int>& idx) const;
  std::vector<std::vector<Int>> dense() const;
  gf2::Mat mod2() const;
  bool operator==(const IntMat& o) const;
};

// block matrix [[a, b], [c, d]]; any block may be empty (0 x 0)
IntMat block2x2(const IntMat& a, const IntMat& b, const IntMat& c, const IntMat& d, int top_rows,
                int bottom_rows, int left_cols, int right_cols);

// ---------------------------------------------------------------------------
// Smith normal form
// ---------------------------------------------------------------------------

// A = U * D * V with U, V unimodular and D diagonal with divisibility-
// ordered nonnegative entries.  Uinv and Vinv are maintained alongside.
struct SmithForm {
  IntMat U, D, V, Uinv, Vinv;
  int rank = 0;
  std::vector<Int> invariant_factors;  // the nonzero diagonal of D
};
SmithForm smith_normal_form(const IntMat& A);

// Columns form a basis of the integer kernel (saturated).
IntMat kernel_basis(const IntMat& A);
int rank_z(const IntMat& A);
Int det(const IntMat& A);

// Exact integer solve A X = B; false when no integral solution exists.
bool solve_exact(const IntMat& A, const IntMat& B, IntMat& X);

// ---------------------------------------------------------------------------
// Cokernel presentation
// ---------------------------------------------------------------------------

// F / im(R) for R : Z^k -> F = Z^f.  proj maps F onto the free part F',
// sect splits it (proj * sect = id); torsion lists invariant factors > 1.
struct CokerPresentation {
  int free_rank = 0;
  std::vector<Int> torsion;
  IntMat proj;  // free_rank x f
  IntMat sect;  // f x free_rank
};
CokerPresentation coker_presentation(const IntMat& R, int f_dim);

// ---------------------------------------------------------------------------
// Graded complexes
// ---------------------------------------------------------------------------

struct GradedModule {
  std::vector<std::string> labels;
  std::vector<int> q;  // quantum degree per basis element
  int dim() const { return (int)q.size(); }
};

struct DifferentialNotSquareZero : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotAChainMap : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Cochain complex: d[j] maps mod[j] -> mod[j+1] and preserves q.
struct ChainComplex {
  std::map<int, GradedModule> mod;
  std::map<int, IntMat> d;

  const GradedModule* term(int j) const;
  int dim(int j) const;
  IntMat diff(int j) const;  // zero matrix when absent
  void validate() const;     // throws DifferentialNotSquareZero
  // shift: hom degree += dj (paper's [dj] is shift_hom(-dj)), quantum += dq
  ChainComplex shifted(int dj, int dq) const;
  std::pair<int, int> hom_range() const;  // [lo, hi] inclusive; (0,-1) if empty
};

// degree-(0,0) chain map f[j] : C.mod[j] -> D.mod[j]
struct ChainMap {
  std::map<int, IntMat> f;
  IntMat at(const ChainComplex& C, const ChainComplex& D, int j) const;
};
void check_chain_map(const ChainComplex& C, const ChainComplex& D, const ChainMap& f);

// Cone(f)_j = C_{j+1} (+) D_j with differential [[-dC, 0], [f, dD]].
ChainComplex cone(const ChainComplex& C, const ChainComplex& D, const ChainMap& f);

// Total complex with Koszul signs: d(x@y) = dx@y + (-1)^{|x|} x@dy.
// basis order within degree j: ascending a (x-degree), then x-index major,
// y-index minor.
struct TensorLayout {
  // (a, ia, ib) -> index in mod[a+b]; offsets[(j, a)] = start of the a-block
  std::map<std::pair<int, int>, int> offset;
  std::map<int, std::pair<int, int>> arange;  // j -> [alo, ahi] present
};
ChainComplex tensor_complexes(const ChainComplex& A, const ChainComplex& B, TensorLayout* layout);

// ---------------------------------------------------------------------------
// Homology
// ---------------------------------------------------------------------------

struct Group {
  long long free = 0;
  std::vector<Int> torsion;
  bool operator==(const Group& o) const { return free == o.free && torsion == o.torsion; }
};

struct HomologyReport {
  Ring ring = Ring::Z;
  std::map<std::pair<int, int>, Group> groups;  // (j, k) -> group, zero groups omitted
  int writhe = 0, cups = 0;
  bool operator==(const HomologyReport& o) const {
    return ring == o.ring && groups == o.groups && writhe == o.writhe && cups == o.cups;
  }
};

HomologyReport homology(const ChainComplex& C, Ring ring);

// collapse along antidiagonals: key = j - k (delta) or j + k (sigma)
std::map<int, Group> collapse_delta(const HomologyReport& r);
std::map<int, Group> collapse_sigma(const HomologyReport& r);

// graded Euler characteristic: q -> sum_j (-1)^j rank
std::map<int, long long> euler_characteristic(const ChainComplex& C);
std::map<int, long long> euler_characteristic(const HomologyReport& r);

// ---------------------------------------------------------------------------
// Rational linear algebra (for induced maps on homology)
// ---------------------------------------------------------------------------

struct QMat {
  int rows = 0, cols = 0;
  std::vector<std::vector<Rat>> a;
  QMat() = default;
  QMat(int r, int c) : rows(r), cols(c), a(r, std::vector<Rat>(c, 0)) {}
  static QMat from(const IntMat& m);
};
int q_rank(QMat m);
// solve A x = b; returns false if inconsistent
bool q_solve(QMat A, std::vector<Rat> b, std::vector<Rat>& x);

// Homology of one (j,q)-block over Q with an explicit basis of cycle
// representatives modulo boundaries, for computing induced maps.
struct QHomBasis {
  std::vector<std::vector<Rat>> cycles;  // representatives, length = block dim
  IntMat boundaries;                     // image generators (columns)
};

}  // namespace tanghom::lin
