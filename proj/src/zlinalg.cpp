#include "tanghom/zlinalg.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace tanghom::lin {

const char* ring_name(Ring r) {
  switch (r) {
    case Ring::Z: return "Z";
    case Ring::Z2: return "Z2";
    case Ring::Q: return "Q";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// IntMat
// ---------------------------------------------------------------------------

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m.row[i][i] = 1;
  return m;
}

Int IntMat::get(int r, int c) const {
  auto it = row[r].find(c);
  return it == row[r].end() ? Int(0) : it->second;
}

void IntMat::set(int r, int c, Int v) {
  if (v == 0)
    row[r].erase(c);
  else
    row[r][c] = std::move(v);
}

void IntMat::add(int r, int c, const Int& v) {
  if (v == 0) return;
  auto it = row[r].find(c);
  if (it == row[r].end()) {
    row[r][c] = v;
  } else {
    it->second += v;
    if (it->second == 0) row[r].erase(it);
  }
}

bool IntMat::is_zero() const {
  for (auto& r : row)
    if (!r.empty()) return false;
  return true;
}

long long IntMat::nnz() const {
  long long n = 0;
  for (auto& r : row) n += (long long)r.size();
  return n;
}

IntMat IntMat::mul(const IntMat& o) const {
  assert(cols == o.rows);
  IntMat out(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (auto& [k, v] : row[i])
      for (auto& [j, w] : o.row[k]) out.add(i, j, v * w);
  return out;
}

IntMat IntMat::plus(const IntMat& o, const Int& scale) const {
  assert(rows == o.rows && cols == o.cols);
  IntMat out = *this;
  for (int i = 0; i < rows; ++i)
    for (auto& [j, v] : o.row[i]) out.add(i, j, v * scale);
  return out;
}

IntMat IntMat::scaled(const Int& s) const {
  IntMat out(rows, cols);
  if (s == 0) return out;
  for (int i = 0; i < rows; ++i)
    for (auto& [j, v] : row[i]) out.row[i][j] = v * s;
  return out;
}

IntMat IntMat::transpose() const {
  IntMat out(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (auto& [j, v] : row[i]) out.row[j][i] = v;
  return out;
}

IntMat IntMat::cols_subset(const std::vector<int>& idx) const {
  IntMat out(rows, (int)idx.size());
  std::map<int, int> inv;
  for (int t = 0; t < (int)idx.size(); ++t) inv[idx[t]] = t;
  for (int i = 0; i < rows; ++i)
    for (auto& [j, v] : row[i]) {
      auto it = inv.find(j);
      if (it != inv.end()) out.row[i][it->second] = v;
    }
  return out;
}

std::vector<std::vector<Int>> IntMat::dense() const {
  std::vector<std::vector<Int>> d(rows, std::vector<Int>(cols, 0));
  for (int i = 0; i < rows; ++i)
    for (auto& [j, v] : row[i]) d[i][j] = v;
  return d;
}

gf2::Mat IntMat::mod2() const {
  gf2::Mat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (auto& [j, v] : row[i])
      if (v % 2 != 0) m.set(i, j, true);
  return m;
}

bool IntMat::operator==(const IntMat& o) const {
  if (rows != o.rows || cols != o.cols) return false;
  for (int i = 0; i < rows; ++i)
    if (row[i] != o.row[i]) return false;
  return true;
}

IntMat block2x2(const IntMat& a, const IntMat& b, const IntMat& c, const IntMat& d, int top_rows,
                int bottom_rows, int left_cols, int right_cols) {
  IntMat out(top_rows + bottom_rows, left_cols + right_cols);
  auto paste = [&](const IntMat& m, int r0, int c0) {
    if (m.rows == 0 || m.cols == 0) return;
    for (int i = 0; i < m.rows; ++i)
      for (auto& [j, v] : m.row[i]) out.row[i + r0][j + c0] = v;
  };
  paste(a, 0, 0);
  paste(b, 0, left_cols);
  paste(c, top_rows, 0);
  paste(d, top_rows, left_cols);
  return out;
}

// ---------------------------------------------------------------------------
// Smith normal form
// ---------------------------------------------------------------------------

namespace {

struct SnfWork {
  int n, m;
  std::vector<std::vector<Int>> D, U, Uinv, V, Vinv;

  explicit SnfWork(const IntMat& A) : n(A.rows), m(A.cols) {
    D = A.dense();
    auto ident = [](int k) {
      std::vector<std::vector<Int>> e(k, std::vector<Int>(k, 0));
      for (int i = 0; i < k; ++i) e[i][i] = 1;
      return e;
    };
    U = ident(n);
    Uinv = ident(n);
    V = ident(m);
    Vinv = ident(m);
  }

  // R_i += q R_j on D
  void row_add(int i, int j, const Int& q) {
    if (q == 0) return;
    for (int c = 0; c < m; ++c)
      if (D[j][c] != 0) D[i][c] += q * D[j][c];
    for (int r = 0; r < n; ++r)
      if (U[r][i] != 0) U[r][j] -= q * U[r][i];
    for (int c = 0; c < n; ++c)
      if (Uinv[j][c] != 0) Uinv[i][c] += q * Uinv[j][c];
  }
  void row_swap(int i, int j) {
    if (i == j) return;
    std::swap(D[i], D[j]);
    for (int r = 0; r < n; ++r) std::swap(U[r][i], U[r][j]);
    std::swap(Uinv[i], Uinv[j]);
  }
  void row_negate(int i) {
    for (int c = 0; c < m; ++c) D[i][c] = -D[i][c];
    for (int r = 0; r < n; ++r) U[r][i] = -U[r][i];
    for (int c = 0; c < n; ++c) Uinv[i][c] = -Uinv[i][c];
  }
  // C_i += q C_j on D
  void col_add(int i, int j, const Int& q) {
    if (q == 0) return;
    for (int r = 0; r < n; ++r)
      if (D[r][j] != 0) D[r][i] += q * D[r][j];
    for (int c = 0; c < m; ++c)
      if (V[i][c] != 0) V[j][c] -= q * V[i][c];
    for (int r = 0; r < m; ++r)
      if (Vinv[r][j] != 0) Vinv[r][i] += q * Vinv[r][j];
  }
  void col_swap(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < n; ++r) std::swap(D[r][i], D[r][j]);
    std::swap(V[i], V[j]);
    for (int r = 0; r < m; ++r) std::swap(Vinv[r][i], Vinv[r][j]);
  }

  bool find_pivot(int t, int& pr, int& pc) {
    // smallest nonzero magnitude limits coefficient growth
    bool found = false;
    Int best = 0;
    for (int r = t; r < n; ++r)
      for (int c = t; c < m; ++c)
        if (D[r][c] != 0) {
          Int a = abs(D[r][c]);
          if (!found || a < best) {
            best = a;
            pr = r;
            pc = c;
            found = true;
          }
        }
    return found;
  }

  void clear_at(int t) {
    for (;;) {
      int pr = t, pc = t;
      if (!find_pivot(t, pr, pc)) return;
      row_swap(t, pr);
      col_swap(t, pc);
      bool dirty = false;
      for (int r = t + 1; r < n; ++r)
        if (D[r][t] != 0) {
          Int q = D[r][t] / D[t][t];
          row_add(r, t, -q);
          if (D[r][t] != 0) dirty = true;
        }
      if (dirty) continue;  // a smaller remainder became the new pivot candidate
      for (int c = t + 1; c < m; ++c)
        if (D[t][c] != 0) {
          Int q = D[t][c] / D[t][t];
          col_add(c, t, -q);
          if (D[t][c] != 0) dirty = true;
        }
      if (dirty) continue;
      bool clean = true;
      for (int r = t + 1; r < n && clean; ++r) clean = clean && D[r][t] == 0;
      for (int c = t + 1; c < m && clean; ++c) clean = clean && D[t][c] == 0;
      if (clean) return;
    }
  }

  // mini reduction confined to the rows/columns {i, j}
  void clear_pair(int i, int j) {
    for (;;) {
      int br = -1, bc = -1;
      Int best = 0;
      for (int r : {i, j})
        for (int c : {i, j})
          if (D[r][c] != 0) {
            Int a = abs(D[r][c]);
            if (br < 0 || a < best) {
              best = a;
              br = r;
              bc = c;
            }
          }
      if (br < 0) return;
      if (br == j) row_swap(i, j);
      if (bc == j) col_swap(i, j);
      bool dirty = false;
      if (D[j][i] != 0) {
        row_add(j, i, -(D[j][i] / D[i][i]));
        dirty = dirty || D[j][i] != 0;
      }
      if (!dirty && D[i][j] != 0) {
        col_add(j, i, -(D[i][j] / D[i][i]));
        dirty = dirty || D[i][j] != 0;
      }
      if (!dirty && D[j][i] == 0 && D[i][j] == 0) break;
    }
    if (D[i][i] < 0) row_negate(i);
    if (D[j][j] < 0) row_negate(j);
  }
};

IntMat to_intmat(const std::vector<std::vector<Int>>& d) {
  IntMat m((int)d.size(), d.empty() ? 0 : (int)d[0].size());
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (d[i][j] != 0) m.row[i][j] = d[i][j];
  return m;
}

}  // namespace

SmithForm smith_normal_form(const IntMat& A) {
  SnfWork w(A);
  int t_max = std::min(w.n, w.m);
  for (int t = 0; t < t_max; ++t) {
    w.clear_at(t);
    if (w.D[t][t] == 0) break;
    if (w.D[t][t] < 0) w.row_negate(t);
  }
  int rank = 0;
  while (rank < t_max && w.D[rank][rank] != 0) ++rank;

  // enforce divisibility along the diagonal
  for (bool again = true; again;) {
    again = false;
    for (int i = 0; i + 1 < rank; ++i)
      for (int j = i + 1; j < rank; ++j)
        if (w.D[j][j] % w.D[i][i] != 0) {
          w.col_add(i, j, 1);  // couples the pair, then reduce their minor
          w.clear_pair(i, j);
          again = true;
        }
  }

  SmithForm out;
  out.U = to_intmat(w.U);
  out.Uinv = to_intmat(w.Uinv);
  out.V = to_intmat(w.V);
  out.Vinv = to_intmat(w.Vinv);
  out.D = IntMat(w.n, w.m);
  out.rank = 0;
  for (int t = 0; t < t_max; ++t)
    if (w.D[t][t] != 0) {
      out.D.row[t][t] = w.D[t][t];
      out.invariant_factors.push_back(w.D[t][t]);
      ++out.rank;
    }
  return out;
}

IntMat kernel_basis(const IntMat& A) {
  SmithForm s = smith_normal_form(A);
  std::vector<int> idx;
  for (int c = s.rank; c < A.cols; ++c) idx.push_back(c);
  return s.Vinv.cols_subset(idx);
}

int rank_z(const IntMat& A) { return smith_normal_form(A).rank; }

Int det(const IntMat& A) {
  assert(A.rows == A.cols);
  int n = A.rows;
  auto d = A.dense();
  // fraction-free Bareiss
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (d[k][k] == 0) {
      int p = -1;
      for (int r = k + 1; r < n; ++r)
        if (d[r][k] != 0) {
          p = r;
          break;
        }
      if (p < 0) return 0;
      std::swap(d[k], d[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) d[i][j] = (d[i][j] * d[k][k] - d[i][k] * d[k][j]) / prev;
    prev = d[k][k];
  }
  return sign * d[n - 1][n - 1];
}

bool solve_exact(const IntMat& A, const IntMat& B, IntMat& X) {
  assert(A.rows == B.rows);
  SmithForm s = smith_normal_form(A);
  IntMat Y = s.Uinv.mul(B);
  IntMat Z(A.cols, B.cols);
  for (int i = 0; i < A.rows; ++i)
    for (auto& [j, v] : Y.row[i]) {
      if (i >= s.rank) return false;
      Int q = v / s.invariant_factors[i];
      if (q * s.invariant_factors[i] != v) return false;
      if (i < A.cols) Z.row[i][j] = q;
    }
  X = s.Vinv.mul(Z);
  return true;
}

CokerPresentation coker_presentation(const IntMat& R, int f_dim) {
  assert(R.rows == f_dim);
  SmithForm s = smith_normal_form(R);
  CokerPresentation out;
  for (auto& d : s.invariant_factors)
    if (d > 1) out.torsion.push_back(d);
  out.free_rank = f_dim - s.rank;
  out.proj = IntMat(out.free_rank, f_dim);
  for (int t = 0; t < out.free_rank; ++t) out.proj.row[t] = s.Uinv.row[s.rank + t];
  std::vector<int> idx;
  for (int c = s.rank; c < f_dim; ++c) idx.push_back(c);
  out.sect = s.U.cols_subset(idx);
  return out;
}

// ---------------------------------------------------------------------------
// complexes
// ---------------------------------------------------------------------------

const GradedModule* ChainComplex::term(int j) const {
  auto it = mod.find(j);
  return it == mod.end() ? nullptr : &it->second;
}

int ChainComplex::dim(int j) const {
  auto* t = term(j);
  return t ? t->dim() : 0;
}

IntMat ChainComplex::diff(int j) const {
  auto it = d.find(j);
  if (it != d.end()) return it->second;
  return IntMat(dim(j + 1), dim(j));
}

void ChainComplex::validate() const {
  for (auto& [j, dj] : d) {
    if (dj.rows != dim(j + 1) || dj.cols != dim(j))
      throw DifferentialNotSquareZero("differential dimensions mismatch at degree " +
                                      std::to_string(j));
    auto* sj = term(j);
    auto* tj = term(j + 1);
    for (int r = 0; r < dj.rows; ++r)
      for (auto& [c, v] : dj.row[r])
        if (tj->q[r] != sj->q[c])
          throw DifferentialNotSquareZero("differential does not preserve quantum degree at " +
                                          std::to_string(j));
    if (dim(j + 2) > 0) {
      if (!diff(j + 1).mul(dj).is_zero())
        throw DifferentialNotSquareZero("d^2 != 0 at degree " + std::to_string(j));
    }
  }
}

ChainComplex ChainComplex::shifted(int dj, int dq) const {
  ChainComplex out;
  for (auto& [j, t] : mod) {
    GradedModule g = t;
    for (auto& q : g.q) q += dq;
    out.mod.emplace(j + dj, std::move(g));
  }
  for (auto& [j, m] : d) out.d.emplace(j + dj, m);
  return out;
}

std::pair<int, int> ChainComplex::hom_range() const {
  if (mod.empty()) return {0, -1};
  return {mod.begin()->first, mod.rbegin()->first};
}

IntMat ChainMap::at(const ChainComplex& C, const ChainComplex& D, int j) const {
  auto it = f.find(j);
  if (it != f.end()) return it->second;
  return IntMat(D.dim(j), C.dim(j));
}

void check_chain_map(const ChainComplex& C, const ChainComplex& D, const ChainMap& f) {
  auto [clo, chi] = C.hom_range();
  auto [dlo, dhi] = D.hom_range();
  int lo = std::min(clo, dlo), hi = std::max(chi, dhi);
  for (int j = lo; j <= hi; ++j) {
    IntMat fj = f.at(C, D, j);
    if (fj.rows != D.dim(j) || fj.cols != C.dim(j))
      throw NotAChainMap("component dimensions mismatch at degree " + std::to_string(j));
    auto* sc = C.term(j);
    auto* sd = D.term(j);
    for (int r = 0; r < fj.rows; ++r)
      for (auto& [c, v] : fj.row[r])
        if (sd->q[r] != sc->q[c]) throw NotAChainMap("map does not preserve quantum degree");
    IntMat lhs = f.at(C, D, j + 1).mul(C.diff(j));
    IntMat rhs = D.diff(j).mul(fj);
    if (!(lhs == rhs)) throw NotAChainMap("square does not commute at degree " + std::to_string(j));
  }
}

ChainComplex cone(const ChainComplex& C, const ChainComplex& D, const ChainMap& f) {
  check_chain_map(C, D, f);
  ChainComplex out;
  auto [clo, chi] = C.hom_range();
  auto [dlo, dhi] = D.hom_range();
  int lo = std::min(clo - 1, dlo), hi = std::max(chi - 1, dhi);
  for (int j = lo; j <= hi; ++j) {
    GradedModule g;
    if (auto* c = C.term(j + 1)) {
      for (int i = 0; i < c->dim(); ++i) {
        g.labels.push_back("c:" + c->labels[i]);
        g.q.push_back(c->q[i]);
      }
    }
    if (auto* t = D.term(j)) {
      for (int i = 0; i < t->dim(); ++i) {
        g.labels.push_back("d:" + t->labels[i]);
        g.q.push_back(t->q[i]);
      }
    }
    if (g.dim() > 0) out.mod.emplace(j, std::move(g));
  }
  for (int j = lo; j <= hi; ++j) {
    int cj = C.dim(j + 1), dj = D.dim(j);
    int cj1 = C.dim(j + 2), dj1 = D.dim(j + 1);
    if (cj + dj == 0 || cj1 + dj1 == 0) continue;
    IntMat m = block2x2(C.diff(j + 1).scaled(-1), IntMat(cj1, dj), f.at(C, D, j + 1), D.diff(j),
                        cj1, dj1, cj, dj);
    if (!m.is_zero()) out.d.emplace(j, std::move(m));
  }
  return out;
}

ChainComplex tensor_complexes(const ChainComplex& A, const ChainComplex& B, TensorLayout* layout) {
  ChainComplex out;
  auto [alo, ahi] = A.hom_range();
  auto [blo, bhi] = B.hom_range();
  if (ahi < alo || bhi < blo) return out;
  TensorLayout local;
  TensorLayout& lay = layout ? *layout : local;

  for (int j = alo + blo; j <= ahi + bhi; ++j) {
    GradedModule g;
    for (int a = alo; a <= ahi; ++a) {
      int b = j - a;
      auto* ta = A.term(a);
      auto* tb = B.term(b);
      if (!ta || !tb || ta->dim() == 0 || tb->dim() == 0) continue;
      lay.offset[{j, a}] = g.dim();
      if (!lay.arange.count(j)) lay.arange[j] = {a, a};
      lay.arange[j].second = a;
      for (int ia = 0; ia < ta->dim(); ++ia)
        for (int ib = 0; ib < tb->dim(); ++ib) {
          g.labels.push_back(ta->labels[ia] + "|" + tb->labels[ib]);
          g.q.push_back(ta->q[ia] + tb->q[ib]);
        }
    }
    if (g.dim() > 0) out.mod.emplace(j, std::move(g));
  }

  for (int j = alo + blo; j < ahi + bhi; ++j) {
    if (out.dim(j) == 0 || out.dim(j + 1) == 0) continue;
    IntMat m(out.dim(j + 1), out.dim(j));
    for (int a = alo; a <= ahi; ++a) {
      int b = j - a;
      auto* ta = A.term(a);
      auto* tb = B.term(b);
      if (!ta || !tb || ta->dim() == 0 || tb->dim() == 0) continue;
      int src = lay.offset.at({j, a});
      // dA (x) id
      if (A.dim(a + 1) > 0 && out.dim(j + 1) > 0 && lay.offset.count({j + 1, a + 1})) {
        int dst = lay.offset.at({j + 1, a + 1});
        IntMat da = A.diff(a);
        for (int r = 0; r < da.rows; ++r)
          for (auto& [c, v] : da.row[r])
            for (int ib = 0; ib < tb->dim(); ++ib)
              m.add(dst + r * tb->dim() + ib, src + c * tb->dim() + ib, v);
      }
      // (-1)^a id (x) dB
      if (B.dim(b + 1) > 0 && lay.offset.count({j + 1, a})) {
        int dst = lay.offset.at({j + 1, a});
        IntMat db = B.diff(b);
        int tb1 = B.dim(b + 1);
        Int sgn = (a % 2 == 0) ? 1 : -1;
        for (int r = 0; r < db.rows; ++r)
          for (auto& [c, v] : db.row[r])
            for (int ia = 0; ia < ta->dim(); ++ia)
              m.add(dst + ia * tb1 + r, src + ia * tb->dim() + c, v * sgn);
      }
    }
    if (!m.is_zero()) out.d.emplace(j, std::move(m));
  }
  return out;
}

// ---------------------------------------------------------------------------
// homology
// ---------------------------------------------------------------------------

namespace {

std::vector<int> q_indices(const GradedModule& g, int q) {
  std::vector<int> out;
  for (int i = 0; i < g.dim(); ++i)
    if (g.q[i] == q) out.push_back(i);
  return out;
}

IntMat submatrix(const IntMat& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  std::map<int, int> rinv;
  for (int t = 0; t < (int)rows.size(); ++t) rinv[rows[t]] = t;
  IntMat out((int)rows.size(), (int)cols.size());
  std::map<int, int> cinv;
  for (int t = 0; t < (int)cols.size(); ++t) cinv[cols[t]] = t;
  for (auto& [r, rt] : rinv)
    for (auto& [c, v] : m.row[r]) {
      auto it = cinv.find(c);
      if (it != cinv.end()) out.row[rt][it->second] = v;
    }
  return out;
}

}  // namespace

HomologyReport homology(const ChainComplex& C, Ring ring) {
  C.validate();
  HomologyReport rep;
  rep.ring = ring;
  for (auto& [j, g] : C.mod) {
    std::vector<int> qs = g.q;
    std::sort(qs.begin(), qs.end());
    qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
    for (int q : qs) {
      auto here = q_indices(g, q);
      auto above = C.term(j + 1) ? q_indices(*C.term(j + 1), q) : std::vector<int>{};
      auto below = C.term(j - 1) ? q_indices(*C.term(j - 1), q) : std::vector<int>{};
      IntMat dj = C.d.count(j) ? submatrix(C.d.at(j), above, here)
                               : IntMat((int)above.size(), (int)here.size());
      IntMat dj1 = C.d.count(j - 1) ? submatrix(C.d.at(j - 1), here, below)
                                    : IntMat((int)here.size(), (int)below.size());
      Group grp;
      if (ring == Ring::Z2) {
        grp.free = (long long)here.size() - gf2::rank(dj.mod2()) - gf2::rank(dj1.mod2());
      } else if (ring == Ring::Q) {
        grp.free = (long long)here.size() - rank_z(dj) - rank_z(dj1);
      } else {
        IntMat K = kernel_basis(dj);
        IntMat X;
        bool ok = solve_exact(K, dj1, X);
        if (!ok) throw DifferentialNotSquareZero("image not contained in kernel");
        SmithForm s = smith_normal_form(X);
        grp.free = K.cols - s.rank;
        for (auto& f : s.invariant_factors)
          if (f > 1) grp.torsion.push_back(f);
      }
      if (grp.free != 0 || !grp.torsion.empty()) rep.groups[{j, q}] = std::move(grp);
    }
  }
  return rep;
}

static std::map<int, Group> collapse_by(const HomologyReport& r, bool delta) {
  std::map<int, Group> out;
  for (auto& [jk, g] : r.groups) {
    int key = delta ? jk.first - jk.second : jk.first + jk.second;
    out[key].free += g.free;
    for (auto& t : g.torsion) out[key].torsion.push_back(t);
  }
  for (auto& [k, g] : out) std::sort(g.torsion.begin(), g.torsion.end());
  return out;
}

std::map<int, Group> collapse_delta(const HomologyReport& r) { return collapse_by(r, true); }
std::map<int, Group> collapse_sigma(const HomologyReport& r) { return collapse_by(r, false); }

std::map<int, long long> euler_characteristic(const ChainComplex& C) {
  std::map<int, long long> out;
  for (auto& [j, g] : C.mod)
    for (int q : g.q) out[q] += (j % 2 == 0) ? 1 : -1;
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

std::map<int, long long> euler_characteristic(const HomologyReport& r) {
  std::map<int, long long> out;
  for (auto& [jk, g] : r.groups) out[jk.second] += (jk.first % 2 == 0) ? g.free : -g.free;
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

// ---------------------------------------------------------------------------
// rational helpers
// ---------------------------------------------------------------------------

QMat QMat::from(const IntMat& m) {
  QMat q(m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i)
    for (auto& [j, v] : m.row[i]) q.a[i][j] = Rat(v);
  return q;
}

int q_rank(QMat m) {
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int p = -1;
    for (int i = r; i < m.rows; ++i)
      if (m.a[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(m.a[p], m.a[r]);
    for (int i = r + 1; i < m.rows; ++i) {
      if (m.a[i][c] == 0) continue;
      Rat f = m.a[i][c] / m.a[r][c];
      for (int j = c; j < m.cols; ++j) m.a[i][j] -= f * m.a[r][j];
    }
    ++r;
  }
  return r;
}

bool q_solve(QMat A, std::vector<Rat> b, std::vector<Rat>& x) {
  int r = 0;
  std::vector<int> pivot_col;
  for (int c = 0; c < A.cols && r < A.rows; ++c) {
    int p = -1;
    for (int i = r; i < A.rows; ++i)
      if (A.a[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(A.a[p], A.a[r]);
    std::swap(b[p], b[r]);
    for (int i = 0; i < A.rows; ++i) {
      if (i == r || A.a[i][c] == 0) continue;
      Rat f = A.a[i][c] / A.a[r][c];
      for (int j = c; j < A.cols; ++j) A.a[i][j] -= f * A.a[r][j];
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (int i = r; i < A.rows; ++i)
    if (b[i] != 0) return false;
  x.assign(A.cols, 0);
  for (int i = 0; i < r; ++i) x[pivot_col[i]] = b[i] / A.a[i][pivot_col[i]];
  return true;
}

}  // namespace tanghom::lin
