#include "tanghom/planar.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <map>
#include <sstream>

namespace tanghom::planar {

// ---------------------------------------------------------------------------
// matchings
// ---------------------------------------------------------------------------

std::vector<std::pair<int, int>> CrossinglessMatching::arcs() const {
  std::vector<std::pair<int, int>> out;
  for (int p = 1; p <= 2 * n; ++p)
    if (pair[p] > p) out.emplace_back(p, pair[p]);
  return out;
}

bool CrossinglessMatching::noncrossing() const {
  auto as = arcs();
  for (auto [a, b] : as)
    for (auto [c, d] : as)
      if (a < c && c < b && b < d) return false;
  return true;
}

static void enumerate_rec(int lo, int hi, std::vector<std::vector<int>>& acc) {
  // matchings of the points lo..hi written into partner tables; acc holds
  // partial assignments (full tables of size hi+1, only lo..hi filled here)
  if (lo > hi) return;
  std::vector<std::vector<int>> result;
  for (int p = lo + 1; p <= hi; p += 2) {
    std::vector<std::vector<int>> inner;
    if (lo + 1 <= p - 1) {
      inner.clear();
      enumerate_rec(lo + 1, p - 1, inner);
    } else {
      inner = {std::vector<int>(hi + 1, 0)};
    }
    std::vector<std::vector<int>> outer;
    if (p + 1 <= hi) {
      outer.clear();
      enumerate_rec(p + 1, hi, outer);
    } else {
      outer = {std::vector<int>(hi + 1, 0)};
    }
    for (auto& in : inner)
      for (auto& out : outer) {
        std::vector<int> t(hi + 1, 0);
        for (int q = lo + 1; q <= p - 1; ++q) t[q] = in[q];
        for (int q = p + 1; q <= hi; ++q) t[q] = out[q];
        t[lo] = p;
        t[p] = lo;
        result.push_back(std::move(t));
      }
  }
  acc = std::move(result);
}

std::vector<CrossinglessMatching> enumerate_matchings(int n) {
  std::vector<CrossinglessMatching> out;
  if (n == 0) {
    out.push_back(CrossinglessMatching{0, std::vector<int>(1, 0)});
    return out;
  }
  std::vector<std::vector<int>> table;
  enumerate_rec(1, 2 * n, table);
  for (auto& t : table) {
    CrossinglessMatching m;
    m.n = n;
    m.pair = std::move(t);
    out.push_back(std::move(m));
  }
  return out;
}

long long catalan(int n) {
  std::vector<long long> c(n + 1, 0);
  c[0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = 0; j < i; ++j) c[i] += c[j] * c[i - 1 - j];
  return c[n];
}

// ---------------------------------------------------------------------------
// words
// ---------------------------------------------------------------------------

int ElementaryGenerator::in_strands() const {
  switch (kind) {
    case GenKind::Id: return 2 * m;
    case GenKind::Cup: return 2 * m - 2;
    case GenKind::Cap: return 2 * m;
    default: return 2 * m;
  }
}

int ElementaryGenerator::out_strands() const {
  switch (kind) {
    case GenKind::Id: return 2 * m;
    case GenKind::Cup: return 2 * m;
    case GenKind::Cap: return 2 * m - 2;
    default: return 2 * m;
  }
}

std::string ElementaryGenerator::str() const {
  std::ostringstream os;
  switch (kind) {
    case GenKind::Id: os << "id " << m; break;
    case GenKind::Cup: os << "cup " << i << " @ " << m; break;
    case GenKind::Cap: os << "cap " << i << " @ " << m; break;
    case GenKind::SigmaPlus: os << "s+ " << i << " @ " << m; break;
    case GenKind::SigmaMinus: os << "s- " << i << " @ " << m; break;
  }
  return os.str();
}

std::string TangleWord::str() const {
  std::ostringstream os;
  bool first = true;
  if (!bottom_dirs.empty()) {
    os << "orient ";
    for (auto d : bottom_dirs) os << (d > 0 ? 'u' : 'd');
    first = false;
  }
  for (auto& g : gens) {
    if (!first) os << " ; ";
    os << g.str();
    first = false;
  }
  if (first) os << "id " << bottom_m;
  return os.str();
}

TangleWord TangleWord::transpose() const {
  TangleWord t;
  int cur = 2 * bottom_m;
  for (auto& g : gens) cur = g.out_strands();
  t.bottom_m = cur / 2;
  for (auto it = gens.rbegin(); it != gens.rend(); ++it) {
    ElementaryGenerator g = *it;
    switch (g.kind) {
      case GenKind::Cup: g.kind = GenKind::Cap; break;
      case GenKind::Cap: g.kind = GenKind::Cup; break;
      case GenKind::SigmaPlus: g.kind = GenKind::SigmaMinus; break;
      case GenKind::SigmaMinus: g.kind = GenKind::SigmaPlus; break;
      case GenKind::Id: break;
    }
    t.gens.push_back(g);
  }
  return t;
}

bool TangleWord::flat() const {
  for (auto& g : gens)
    if (g.kind == GenKind::SigmaPlus || g.kind == GenKind::SigmaMinus) return false;
  return true;
}

namespace {

// Union-find with parity, for orientation inference.  A strand direction
// is a literal s * x_v over orientation variables; caps impose relations.
struct ParityUF {
  std::vector<int> parent;
  std::vector<int8_t> par;  // sign relative to parent
  int add() {
    parent.push_back((int)parent.size());
    par.push_back(1);
    return (int)parent.size() - 1;
  }
  std::pair<int, int8_t> find(int v) {
    if (parent[v] == v) return {v, 1};
    auto [r, s] = find(parent[v]);
    parent[v] = r;
    par[v] = int8_t(par[v] * s);
    return {r, par[v]};
  }
  // enforce x_a * sa == x_b * sb; false on contradiction
  bool unite(int a, int8_t sa, int b, int8_t sb) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) return int8_t(pa * sa) == int8_t(pb * sb);
    parent[ra] = rb;
    par[ra] = int8_t(sa * pa * sb * pb);
    return true;
  }
};

struct Literal {
  int var;
  int8_t sign;
};

}  // namespace

WordInfo validate_word(const TangleWord& w) {
  WordInfo info;
  info.m = w.bottom_m;
  if (!w.bottom_dirs.empty() && (int)w.bottom_dirs.size() != 2 * w.bottom_m)
    throw WordError(WordErrorKind::StrandMismatch, -1,
                    "orientation string length does not match bottom boundary");

  // structural pass: strand chaining and index bounds
  int cur = 2 * w.bottom_m;
  for (int pos = 0; pos < (int)w.gens.size(); ++pos) {
    const auto& g = w.gens[pos];
    if (g.m < 0 || (g.kind != GenKind::Id && (g.i < 1 || g.i > 2 * g.m - 1)))
      throw WordError(WordErrorKind::BadIndex, pos,
                      "index " + std::to_string(g.i) + " out of range for m=" +
                          std::to_string(g.m) + " at generator " + std::to_string(pos));
    if (g.in_strands() != cur)
      throw WordError(WordErrorKind::StrandMismatch, pos,
                      "generator " + std::to_string(pos) + " (" + g.str() + ") expects " +
                          std::to_string(g.in_strands()) + " strands, found " +
                          std::to_string(cur));
    cur = g.out_strands();
  }
  info.n = cur / 2;

  // orientation pass: bottom points and cups introduce variables (hard
  // constants when 'orient' was given), caps impose relations
  ParityUF uf;
  std::vector<int8_t> hard;           // fixed value per variable, 0 = free
  std::vector<int8_t> preferred;      // default applied to free components
  std::vector<Literal> lits;
  for (int p = 0; p < 2 * w.bottom_m; ++p) {
    int v = uf.add();
    hard.push_back(w.bottom_dirs.empty() ? 0 : w.bottom_dirs[p]);
    preferred.push_back(1);
    lits.push_back({v, 1});
  }
  std::vector<std::vector<Literal>> levels;
  levels.push_back(lits);
  for (int pos = 0; pos < (int)w.gens.size(); ++pos) {
    const auto& g = w.gens[pos];
    switch (g.kind) {
      case GenKind::Id:
        break;
      case GenKind::Cup: {
        // a minimum: the two legs run in opposite senses; the variable is
        // the left leg, defaulting to downward
        int v = uf.add();
        hard.push_back(0);
        preferred.push_back(-1);
        lits.insert(lits.begin() + (g.i - 1), {Literal{v, 1}, Literal{v, -1}});
        ++info.cups;
        break;
      }
      case GenKind::Cap: {
        Literal a = lits[g.i - 1], b = lits[g.i];
        if (!uf.unite(a.var, a.sign, b.var, int8_t(-b.sign)))
          throw WordError(WordErrorKind::OrientationConflict, pos,
                          "cap at generator " + std::to_string(pos) +
                              " joins two strands with equal direction");
        lits.erase(lits.begin() + (g.i - 1), lits.begin() + (g.i + 1));
        break;
      }
      case GenKind::SigmaPlus:
      case GenKind::SigmaMinus:
        std::swap(lits[g.i - 1], lits[g.i]);
        break;
    }
    levels.push_back(lits);
  }

  // bind hard values, then defaults on the free components
  std::vector<int8_t> value(hard.size(), 0);
  for (int v = 0; v < (int)hard.size(); ++v) {
    if (!hard[v]) continue;
    auto [r, s] = uf.find(v);
    int8_t rv = int8_t(hard[v] * s);
    if (value[r] && value[r] != rv)
      throw WordError(WordErrorKind::OrientationConflict, -1,
                      "given boundary orientations are inconsistent");
    value[r] = rv;
  }
  for (int v = 0; v < (int)hard.size(); ++v) {
    auto [r, s] = uf.find(v);
    if (!value[r]) value[r] = int8_t(preferred[v] * s);
  }
  auto eval = [&](Literal l) {
    auto [r, s] = uf.find(l.var);
    return int8_t(l.sign * s * value[r]);
  };

  // numeric pass: record directions and crossing signs
  for (auto& lv : levels) {
    std::vector<int8_t> d;
    d.reserve(lv.size());
    for (auto l : lv) d.push_back(eval(l));
    info.dirs.push_back(std::move(d));
  }
  for (int pos = 0; pos < (int)w.gens.size(); ++pos) {
    const auto& g = w.gens[pos];
    int8_t sign = 0;
    if (g.kind == GenKind::SigmaPlus || g.kind == GenKind::SigmaMinus) {
      const auto& d = info.dirs[pos];
      bool parallel = d[g.i - 1] == d[g.i];
      sign = int8_t((g.kind == GenKind::SigmaPlus ? 1 : -1) * (parallel ? 1 : -1));
      info.writhe += sign;
      (sign > 0 ? info.n_plus : info.n_minus)++;
    }
    info.sign_at.push_back(sign);
  }
  info.top_dirs = info.dirs.back();
  return info;
}

TangleWord resolve_crossing(const TangleWord& w, int position, int r) {
  if (position < 0 || position >= (int)w.gens.size())
    throw NotACrossing("position " + std::to_string(position) + " out of range");
  const auto& g = w.gens[position];
  if (g.kind != GenKind::SigmaPlus && g.kind != GenKind::SigmaMinus)
    throw NotACrossing("generator at position " + std::to_string(position) +
                       " is not a crossing");
  bool id_smoothing = (g.kind == GenKind::SigmaPlus) == (r == 0);
  TangleWord out = w;
  out.gens.erase(out.gens.begin() + position);
  if (id_smoothing) {
    out.gens.insert(out.gens.begin() + position,
                    ElementaryGenerator{GenKind::Id, 0, g.m});
  } else {
    out.gens.insert(out.gens.begin() + position,
                    {ElementaryGenerator{GenKind::Cap, g.i, g.m},
                     ElementaryGenerator{GenKind::Cup, g.i, g.m}});
  }
  return out;
}

TangleWord resolve_all(const TangleWord& w, const std::vector<int>& resolution) {
  TangleWord out = w;
  int c = 0;
  for (int pos = 0; pos < (int)out.gens.size(); ++pos) {
    auto k = out.gens[pos].kind;
    if (k == GenKind::SigmaPlus || k == GenKind::SigmaMinus) {
      out = resolve_crossing(out, pos, resolution.at(c++));
      if (out.gens[pos].kind == GenKind::Cap) ++pos;  // skip the inserted pair
    }
  }
  assert(c == (int)resolution.size());
  return out;
}

// ---------------------------------------------------------------------------
// closed diagrams
// ---------------------------------------------------------------------------

std::string ArcId::str() const {
  std::ostringstream os;
  const char* names = "bgts";  // bottom, generator, top, synthetic
  os << names[layer];
  if (layer == 1) os << (int)level << ".";
  os << idx;
  if (side) os << "'";
  return os.str();
}

void ClosedDiagram::compute_circles() {
  // adjacency: two arc ends per port
  std::vector<std::array<int, 2>> at(nports, {-1, -1});
  auto attach = [&](int port, int arc) {
    if (at[port][0] < 0)
      at[port][0] = arc;
    else {
      assert(at[port][1] < 0);
      at[port][1] = arc;
    }
  };
  for (int i = 0; i < (int)arcs.size(); ++i) {
    attach(arcs[i].p0, i);
    attach(arcs[i].p1, i);
  }
  circles.clear();
  std::vector<char> seen(arcs.size(), 0);
  for (int start = 0; start < (int)arcs.size(); ++start) {
    if (seen[start]) continue;
    std::vector<int> circ;
    int cur = start;
    int port = arcs[start].p0;
    while (!seen[cur]) {
      seen[cur] = 1;
      circ.push_back(cur);
      int next_port = (arcs[cur].p0 == port) ? arcs[cur].p1 : arcs[cur].p0;
      int next = (at[next_port][0] == cur) ? at[next_port][1] : at[next_port][0];
      assert(next >= 0);
      port = next_port;
      cur = next;
    }
    std::sort(circ.begin(), circ.end());
    circles.push_back(std::move(circ));
  }
  std::sort(circles.begin(), circles.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

int ClosedDiagram::circle_of_arc(int arc_index) const {
  for (int c = 0; c < (int)circles.size(); ++c)
    if (std::binary_search(circles[c].begin(), circles[c].end(), arc_index)) return c;
  return -1;
}

ClosedDiagram trace_circles(const CrossinglessMatching& a, const TangleWord& w,
                            const CrossinglessMatching& b) {
  WordInfo info = validate_word(w);
  if (!w.flat()) throw WordError(WordErrorKind::StrandMismatch, -1, "word is not flat");
  if (a.n != info.m || b.n != info.n)
    throw WordError(WordErrorKind::StrandMismatch, -1,
                    "matching sizes do not fit the word boundary");

  int levels = (int)w.gens.size();
  std::vector<int> width(levels + 1), base(levels + 2, 0);
  width[0] = 2 * info.m;
  {
    int cur = 2 * info.m;
    for (int k = 0; k < levels; ++k) {
      cur = w.gens[k].out_strands();
      width[k + 1] = cur;
    }
  }
  for (int k = 0; k <= levels; ++k) base[k + 1] = base[k] + width[k];

  ClosedDiagram d;
  d.nports = base[levels + 1];
  auto port = [&](int level, int pos) { return base[level] + pos - 1; };

  int idx = 0;
  for (auto [l, r] : a.arcs())
    d.arcs.push_back({ArcId{0, 0, 0, idx++}, port(0, l), port(0, r)});

  for (int k = 0; k < levels; ++k) {
    const auto& g = w.gens[k];
    int lev = k + 1;
    idx = 0;
    switch (g.kind) {
      case GenKind::Id:
        for (int p = 1; p <= 2 * g.m; ++p)
          d.arcs.push_back({ArcId{0, 1, (int16_t)lev, idx++}, port(lev - 1, p), port(lev, p)});
        break;
      case GenKind::Cup:
        for (int p = 1; p < g.i; ++p)
          d.arcs.push_back({ArcId{0, 1, (int16_t)lev, idx++}, port(lev - 1, p), port(lev, p)});
        d.arcs.push_back({ArcId{0, 1, (int16_t)lev, idx++}, port(lev, g.i), port(lev, g.i + 1)});
        for (int p = g.i; p <= 2 * g.m - 2; ++p)
          d.arcs.push_back({ArcId{0, 1, (int16_t)lev, idx++}, port(lev - 1, p), port(lev, p + 2)});
        break;
      case GenKind::Cap:
        for (int p = 1; p < g.i; ++p)
          d.arcs.push_back({ArcId{0, 1, (int16_t)lev, idx++}, port(lev - 1, p), port(lev, p)});
        d.arcs.push_back(
            {ArcId{0, 1, (int16_t)lev, idx++}, port(lev - 1, g.i), port(lev - 1, g.i + 1)});
        for (int p = g.i + 2; p <= 2 * g.m; ++p)
          d.arcs.push_back({ArcId{0, 1, (int16_t)lev, idx++}, port(lev - 1, p), port(lev, p - 2)});
        break;
      default:
        break;  // unreachable, word is flat
    }
  }

  idx = 0;
  for (auto [l, r] : b.arcs())
    d.arcs.push_back({ArcId{0, 2, 0, idx++}, port(levels, l), port(levels, r)});

  d.compute_circles();
  return d;
}

ClosedDiagram pair_closure(const CrossinglessMatching& a, const CrossinglessMatching& b) {
  TangleWord empty;
  empty.bottom_m = a.n;
  return trace_circles(a, empty, b);
}

ClosedDiagram stack_disjoint(const ClosedDiagram& a, const ClosedDiagram& b) {
  ClosedDiagram d = a;
  for (auto arc : b.arcs) {
    arc.id.side = 1;
    arc.p0 += a.nports;
    arc.p1 += a.nports;
    d.arcs.push_back(arc);
  }
  d.nports = a.nports + b.nports;
  d.compute_circles();
  return d;
}

SaddleStep saddle(const ClosedDiagram& d, int arc_u, int arc_v, int fresh_tag) {
  SaddleStep st;
  st.before_c0 = d.circle_of_arc(arc_u);
  st.before_c1 = d.circle_of_arc(arc_v);
  st.merged = st.before_c0 != st.before_c1;

  const Arc& u = d.arcs[arc_u];
  const Arc& v = d.arcs[arc_v];
  ClosedDiagram nd;
  nd.nports = d.nports;
  std::vector<int> new_index(d.arcs.size(), -1);
  for (int i = 0; i < (int)d.arcs.size(); ++i) {
    if (i == arc_u || i == arc_v) continue;
    new_index[i] = (int)nd.arcs.size();
    nd.arcs.push_back(d.arcs[i]);
  }
  int s0 = (int)nd.arcs.size();
  nd.arcs.push_back({ArcId{0, 3, 0, fresh_tag}, u.p0, v.p0});
  int s1 = (int)nd.arcs.size();
  nd.arcs.push_back({ArcId{0, 3, 0, fresh_tag + 1}, u.p1, v.p1});
  nd.compute_circles();

  st.old_to_new.assign(d.circles.size(), -1);
  for (int c = 0; c < (int)d.circles.size(); ++c) {
    if (c == st.before_c0 || c == st.before_c1) continue;
    int rep = -1;
    for (int arc : d.circles[c])
      if (new_index[arc] >= 0) {
        rep = new_index[arc];
        break;
      }
    assert(rep >= 0);
    st.old_to_new[c] = nd.circle_of_arc(rep);
  }
  if (st.merged) {
    st.after_c = nd.circle_of_arc(s0);
    assert(st.after_c == nd.circle_of_arc(s1));
    assert(nd.circles.size() + 1 == d.circles.size());
  } else {
    st.after_c0 = nd.circle_of_arc(s0);
    st.after_c1 = nd.circle_of_arc(s1);
    assert(st.after_c0 != st.after_c1);
    assert(nd.circles.size() == d.circles.size() + 1);
  }
  st.after = std::move(nd);
  return st;
}

std::vector<int> match_circles(const ClosedDiagram& d1, const ClosedDiagram& d2) {
  std::map<ArcId, int> where;
  for (int i = 0; i < (int)d2.arcs.size(); ++i) where[d2.arcs[i].id] = d2.circle_of_arc(i);
  std::vector<int> out(d1.circles.size(), -1);
  std::vector<char> used(d2.circles.size(), 0);
  for (int c = 0; c < (int)d1.circles.size(); ++c) {
    int target = -1;
    for (int arc : d1.circles[c]) {
      auto it = where.find(d1.arcs[arc].id);
      if (it == where.end()) continue;
      if (target < 0)
        target = it->second;
      else if (target != it->second)
        throw std::runtime_error("match_circles: inconsistent circle correspondence");
    }
    if (target < 0) throw std::runtime_error("match_circles: circle with no shared arc");
    if (used[target]) throw std::runtime_error("match_circles: correspondence not injective");
    used[target] = 1;
    out[c] = target;
  }
  if (d1.circles.size() != d2.circles.size())
    throw std::runtime_error("match_circles: circle counts differ");
  return out;
}

// ---------------------------------------------------------------------------
// Yetter relations
// ---------------------------------------------------------------------------

const char* yetter_rule_name(YetterRule r) {
  switch (r) {
    case YetterRule::SigmaSigmaFar: return "ss-far";
    case YetterRule::CapCupFar: return "capcup-far";
    case YetterRule::CapSigmaFar: return "capsigma-far";
    case YetterRule::CupSigmaFar: return "cupsigma-far";
    case YetterRule::Kink: return "kink";
    case YetterRule::KinkT: return "kink-t";
    case YetterRule::Inverse: return "inverse";
    case YetterRule::Braid: return "braid";
    case YetterRule::BraidT: return "braid-t";
    case YetterRule::Zigzag: return "zigzag";
    case YetterRule::ZigzagT: return "zigzag-t";
    case YetterRule::SlideA: return "slide-a";
    case YetterRule::SlideB: return "slide-b";
    case YetterRule::SlideAT: return "slide-a-t";
    case YetterRule::SlideBT: return "slide-b-t";
  }
  return "?";
}

std::vector<YetterRule> all_yetter_rules() {
  return {YetterRule::SigmaSigmaFar, YetterRule::CapCupFar, YetterRule::CapSigmaFar,
          YetterRule::CupSigmaFar,   YetterRule::Kink,      YetterRule::KinkT,
          YetterRule::Inverse,       YetterRule::Braid,     YetterRule::BraidT,
          YetterRule::Zigzag,        YetterRule::ZigzagT,   YetterRule::SlideA,
          YetterRule::SlideB,        YetterRule::SlideAT,   YetterRule::SlideBT};
}

std::optional<YetterRule> yetter_rule_by_name(const std::string& s) {
  for (auto r : all_yetter_rules())
    if (s == yetter_rule_name(r)) return r;
  return std::nullopt;
}

bool yetter_rule_flat(YetterRule r) {
  return r == YetterRule::CapCupFar || r == YetterRule::Zigzag || r == YetterRule::ZigzagT;
}

namespace {

using G = ElementaryGenerator;
using K = GenKind;

bool is_sigma(const G& g) { return g.kind == K::SigmaPlus || g.kind == K::SigmaMinus; }

// replace gens[pos .. pos+len) by repl
TangleWord splice(const TangleWord& w, int pos, int len, const std::vector<G>& repl) {
  TangleWord out = w;
  out.gens.erase(out.gens.begin() + pos, out.gens.begin() + pos + len);
  out.gens.insert(out.gens.begin() + pos, repl.begin(), repl.end());
  validate_word(out);
  return out;
}

}  // namespace

TangleWord yetter_rewrite(const TangleWord& w, YetterRule rule, int pos) {
  auto at = [&](int k) -> const G& {
    static G none{K::Id, 0, -1};
    if (pos + k < 0 || pos + k >= (int)w.gens.size()) return none;
    return w.gens[pos + k];
  };
  const G &g0 = at(0), &g1 = at(1), &g2 = at(2);
  auto fail = [&]() -> TangleWord {
    throw PatternMismatch(std::string("rule ") + yetter_rule_name(rule) +
                          " does not match at position " + std::to_string(pos));
  };

  switch (rule) {
    case YetterRule::SigmaSigmaFar: {
      if (is_sigma(g0) && is_sigma(g1) && g0.m == g1.m && std::abs(g0.i - g1.i) >= 2)
        return splice(w, pos, 2, {g1, g0});
      return fail();
    }
    case YetterRule::CapCupFar: {
      if (g0.kind == K::Cup && g1.kind == K::Cap && g1.m == g0.m) {
        int j = g0.i, i = g1.i, m = g0.m;
        if (i >= j + 2)
          return splice(w, pos, 2, {G{K::Cap, i - 2, m - 1}, G{K::Cup, j, m - 1}});
        if (i + 2 <= j)
          return splice(w, pos, 2, {G{K::Cap, i, m - 1}, G{K::Cup, j - 2, m - 1}});
      }
      if (g0.kind == K::Cap && g1.kind == K::Cup && g1.m == g0.m - 1) {
        int i = g0.i, j = g1.i, m1 = g1.m;  // cap at m1+1, cup at m1
        if (i >= j) return splice(w, pos, 2, {G{K::Cup, j, m1 + 1}, G{K::Cap, i + 2, m1 + 1}});
        return splice(w, pos, 2, {G{K::Cup, j + 2, m1 + 1}, G{K::Cap, i, m1 + 1}});
      }
      return fail();
    }
    case YetterRule::CapSigmaFar: {
      if (is_sigma(g0) && g1.kind == K::Cap && g0.m == g1.m && std::abs(g0.i - g1.i) >= 2) {
        int j = g0.i, i = g1.i;
        int jj = j > i ? j - 2 : j;
        return splice(w, pos, 2, {G{K::Cap, i, g1.m}, G{g0.kind, jj, g1.m - 1}});
      }
      if (g0.kind == K::Cap && is_sigma(g1) && g1.m == g0.m - 1) {
        int i = g0.i, jj = g1.i;
        if (jj <= i - 2) return splice(w, pos, 2, {G{g1.kind, jj, g0.m}, G{K::Cap, i, g0.m}});
        if (jj >= i) return splice(w, pos, 2, {G{g1.kind, jj + 2, g0.m}, G{K::Cap, i, g0.m}});
      }
      return fail();
    }
    case YetterRule::CupSigmaFar: {
      if (is_sigma(g0) && g1.kind == K::Cup && g0.m == g1.m - 1 && g0.i != g1.i - 1) {
        int j = g0.i, i = g1.i;
        int jj = j >= i ? j + 2 : j;
        return splice(w, pos, 2, {G{K::Cup, i, g1.m}, G{g0.kind, jj, g1.m}});
      }
      if (g0.kind == K::Cup && is_sigma(g1) && g1.m == g0.m &&
          (g1.i <= g0.i - 2 || g1.i >= g0.i + 2)) {
        int i = g0.i, jj = g1.i;
        int j = jj >= i + 2 ? jj - 2 : jj;
        return splice(w, pos, 2, {G{g1.kind, j, g0.m - 1}, G{K::Cup, i, g0.m}});
      }
      return fail();
    }
    case YetterRule::Kink: {
      if (g0.kind == K::Cup && g1.kind == K::SigmaPlus && g0.m == g1.m && g0.i == g1.i)
        return splice(w, pos, 2, {g0});
      return fail();
    }
    case YetterRule::KinkT: {
      if (g0.kind == K::SigmaMinus && g1.kind == K::Cap && g0.m == g1.m && g0.i == g1.i)
        return splice(w, pos, 2, {g1});
      return fail();
    }
    case YetterRule::Inverse: {
      if (is_sigma(g0) && is_sigma(g1) && g0.kind != g1.kind && g0.i == g1.i && g0.m == g1.m)
        return splice(w, pos, 2, {G{K::Id, 0, g0.m}});
      return fail();
    }
    case YetterRule::Braid:
    case YetterRule::BraidT: {
      K kk = rule == YetterRule::Braid ? K::SigmaPlus : K::SigmaMinus;
      if (g0.kind == kk && g1.kind == kk && g2.kind == kk && g0.i == g2.i &&
          std::abs(g0.i - g1.i) == 1 && g0.m == g1.m && g1.m == g2.m)
        return splice(w, pos, 3, {g1, g0, g1});
      return fail();
    }
    case YetterRule::Zigzag: {
      // cup at i+1 then cap at i straightens to the identity
      if (g0.kind == K::Cup && g1.kind == K::Cap && g0.m == g1.m && g0.i == g1.i + 1)
        return splice(w, pos, 2, {G{K::Id, 0, g0.m - 1}});
      return fail();
    }
    case YetterRule::ZigzagT: {
      if (g0.kind == K::Cup && g1.kind == K::Cap && g0.m == g1.m && g0.i + 1 == g1.i)
        return splice(w, pos, 2, {G{K::Id, 0, g0.m - 1}});
      return fail();
    }
    case YetterRule::SlideA: {
      if (g0.kind == K::Cup && g1.kind == K::SigmaPlus && g0.m == g1.m && g0.i == g1.i + 1)
        return splice(w, pos, 2, {G{K::Cup, g1.i, g0.m}, G{K::SigmaMinus, g1.i + 1, g0.m}});
      if (g0.kind == K::Cup && g1.kind == K::SigmaMinus && g0.m == g1.m && g0.i + 1 == g1.i)
        return splice(w, pos, 2, {G{K::Cup, g1.i, g0.m}, G{K::SigmaPlus, g1.i - 1, g0.m}});
      return fail();
    }
    case YetterRule::SlideB: {
      if (g0.kind == K::Cup && g1.kind == K::SigmaMinus && g0.m == g1.m && g0.i == g1.i + 1)
        return splice(w, pos, 2, {G{K::Cup, g1.i, g0.m}, G{K::SigmaPlus, g1.i + 1, g0.m}});
      if (g0.kind == K::Cup && g1.kind == K::SigmaPlus && g0.m == g1.m && g0.i + 1 == g1.i)
        return splice(w, pos, 2, {G{K::Cup, g1.i, g0.m}, G{K::SigmaMinus, g1.i - 1, g0.m}});
      return fail();
    }
    case YetterRule::SlideAT: {
      if (g0.kind == K::SigmaMinus && g1.kind == K::Cap && g0.m == g1.m && g0.i == g1.i + 1)
        return splice(w, pos, 2, {G{K::SigmaPlus, g1.i, g0.m}, G{K::Cap, g0.i, g0.m}});
      if (g0.kind == K::SigmaPlus && g1.kind == K::Cap && g0.m == g1.m && g0.i + 1 == g1.i)
        return splice(w, pos, 2, {G{K::SigmaMinus, g1.i, g0.m}, G{K::Cap, g0.i, g0.m}});
      return fail();
    }
    case YetterRule::SlideBT: {
      if (g0.kind == K::SigmaPlus && g1.kind == K::Cap && g0.m == g1.m && g0.i == g1.i + 1)
        return splice(w, pos, 2, {G{K::SigmaMinus, g1.i, g0.m}, G{K::Cap, g0.i, g0.m}});
      if (g0.kind == K::SigmaMinus && g1.kind == K::Cap && g0.m == g1.m && g0.i + 1 == g1.i)
        return splice(w, pos, 2, {G{K::SigmaPlus, g1.i, g0.m}, G{K::Cap, g0.i, g0.m}});
      return fail();
    }
  }
  return fail();
}

std::vector<YetterInstance> yetter_instances(YetterRule r, int max_m) {
  std::vector<YetterInstance> out;
  auto word = [](int bottom_m, std::vector<G> gs) {
    TangleWord w;
    w.bottom_m = bottom_m;
    w.gens = std::move(gs);
    return w;
  };
  auto add = [&](TangleWord lhs, int pos) {
    YetterInstance inst;
    inst.rhs = yetter_rewrite(lhs, r, pos);
    inst.lhs = std::move(lhs);
    inst.rule = r;
    inst.pos = pos;
    out.push_back(std::move(inst));
  };
  for (int m = 1; m <= max_m; ++m) {
    switch (r) {
      case YetterRule::SigmaSigmaFar:
        for (int i = 1; i <= 2 * m - 1; ++i)
          for (int j = i + 2; j <= 2 * m - 1; ++j)
            for (auto ka : {K::SigmaPlus, K::SigmaMinus})
              for (auto kb : {K::SigmaPlus, K::SigmaMinus})
                add(word(m, {G{ka, i, m}, G{kb, j, m}}), 0);
        break;
      case YetterRule::CapCupFar:
        for (int j = 1; j <= 2 * m - 1; ++j)
          for (int i = 1; i <= 2 * m - 1; ++i)
            if (i >= j + 2 || i + 2 <= j) add(word(m - 1, {G{K::Cup, j, m}, G{K::Cap, i, m}}), 0);
        break;
      case YetterRule::CapSigmaFar:
        for (int j = 1; j <= 2 * m - 1; ++j)
          for (int i = 1; i <= 2 * m - 1; ++i)
            if (std::abs(i - j) >= 2)
              for (auto kk : {K::SigmaPlus, K::SigmaMinus})
                add(word(m, {G{kk, j, m}, G{K::Cap, i, m}}), 0);
        break;
      case YetterRule::CupSigmaFar:
        for (int i = 1; i <= 2 * m - 1; ++i)
          for (int j = 1; j <= 2 * m - 3; ++j)
            if (j != i - 1)
              for (auto kk : {K::SigmaPlus, K::SigmaMinus})
                add(word(m - 1, {G{kk, j, m - 1}, G{K::Cup, i, m}}), 0);
        break;
      case YetterRule::Kink:
        for (int i = 1; i <= 2 * m - 1; ++i)
          add(word(m - 1, {G{K::Cup, i, m}, G{K::SigmaPlus, i, m}}), 0);
        break;
      case YetterRule::KinkT:
        for (int i = 1; i <= 2 * m - 1; ++i)
          add(word(m, {G{K::SigmaMinus, i, m}, G{K::Cap, i, m}}), 0);
        break;
      case YetterRule::Inverse:
        for (int i = 1; i <= 2 * m - 1; ++i) {
          add(word(m, {G{K::SigmaMinus, i, m}, G{K::SigmaPlus, i, m}}), 0);
          add(word(m, {G{K::SigmaPlus, i, m}, G{K::SigmaMinus, i, m}}), 0);
        }
        break;
      case YetterRule::Braid:
        for (int i = 1; i + 2 <= 2 * m - 1; ++i)
          add(word(m, {G{K::SigmaPlus, i, m}, G{K::SigmaPlus, i + 1, m}, G{K::SigmaPlus, i, m}}),
              0);
        break;
      case YetterRule::BraidT:
        for (int i = 1; i + 2 <= 2 * m - 1; ++i)
          add(word(m,
                   {G{K::SigmaMinus, i, m}, G{K::SigmaMinus, i + 1, m}, G{K::SigmaMinus, i, m}}),
              0);
        break;
      case YetterRule::Zigzag:
        for (int i = 1; i + 1 <= 2 * m - 1; ++i)
          add(word(m - 1, {G{K::Cup, i + 1, m}, G{K::Cap, i, m}}), 0);
        break;
      case YetterRule::ZigzagT:
        for (int i = 1; i + 1 <= 2 * m - 1; ++i)
          add(word(m - 1, {G{K::Cup, i, m}, G{K::Cap, i + 1, m}}), 0);
        break;
      case YetterRule::SlideA:
        for (int i = 1; i + 1 <= 2 * m - 1; ++i)
          add(word(m - 1, {G{K::Cup, i + 1, m}, G{K::SigmaPlus, i, m}}), 0);
        break;
      case YetterRule::SlideB:
        for (int i = 1; i + 1 <= 2 * m - 1; ++i)
          add(word(m - 1, {G{K::Cup, i + 1, m}, G{K::SigmaMinus, i, m}}), 0);
        break;
      case YetterRule::SlideAT:
        for (int i = 1; i + 1 <= 2 * m - 1; ++i)
          add(word(m, {G{K::SigmaMinus, i + 1, m}, G{K::Cap, i, m}}), 0);
        break;
      case YetterRule::SlideBT:
        for (int i = 1; i + 1 <= 2 * m - 1; ++i)
          add(word(m, {G{K::SigmaPlus, i + 1, m}, G{K::Cap, i, m}}), 0);
        break;
    }
  }
  return out;
}

}  // namespace tanghom::planar
