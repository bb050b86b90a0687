#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tanghom::planar {

// ---------------------------------------------------------------------------
// Crossingless matchings
// ---------------------------------------------------------------------------

// Noncrossing perfect pairing of the points 1..2n, all arcs in the upper
// half plane.  pair[p] is the partner of p (1-indexed; pair[0] unused).
struct CrossinglessMatching {
  int n = 0;
  std::vector<int> pair;

  bool operator==(const CrossinglessMatching& o) const { return pair == o.pair; }

  // arcs as (left, right) endpoint pairs, ordered by left endpoint
  std::vector<std::pair<int, int>> arcs() const;
  bool noncrossing() const;
};

// All of C_n in canonical order: ascending partner of point 1, then
// recursively on the enclosed block, then on the trailing block.
std::vector<CrossinglessMatching> enumerate_matchings(int n);

long long catalan(int n);

// ---------------------------------------------------------------------------
// Tangle words
// ---------------------------------------------------------------------------

enum class GenKind : uint8_t { Id, Cup, Cap, SigmaPlus, SigmaMinus };

// Cup_{i;m}: 2m-2 -> 2m strands, 1 <= i <= 2m-1.
// Cap_{i;m}: 2m -> 2m-2, 1 <= i <= 2m-1.
// Sigma_{i;m}: 2m -> 2m, 1 <= i <= 2m-1.
// Id_m is a no-op marker for 2m strands.
struct ElementaryGenerator {
  GenKind kind;
  int i = 0;
  int m = 0;

  bool operator==(const ElementaryGenerator& o) const {
    return kind == o.kind && i == o.i && m == o.m;
  }
  int in_strands() const;
  int out_strands() const;
  std::string str() const;
};

// Generators listed bottom to top.  bottom_dirs holds one flag per bottom
// endpoint, +1 for upward, -1 for downward; empty means default all-up.
struct TangleWord {
  int bottom_m = 0;
  std::vector<ElementaryGenerator> gens;
  std::vector<int8_t> bottom_dirs;

  int bottom_strands() const { return 2 * bottom_m; }
  std::string str() const;
  TangleWord transpose() const;
  bool flat() const;
};

enum class WordErrorKind { StrandMismatch, OrientationConflict, BadIndex };

struct WordError : std::runtime_error {
  WordErrorKind kind;
  int position;  // generator index, -1 for the bottom boundary
  WordError(WordErrorKind k, int pos, const std::string& msg)
      : std::runtime_error(msg), kind(k), position(pos) {}
};

// Result of validating and orienting a word.
struct WordInfo {
  int m = 0, n = 0;
  int writhe = 0;
  int cups = 0;
  int n_plus = 0, n_minus = 0;
  std::vector<int8_t> sign_at;             // per generator, 0 for flat ones
  std::vector<std::vector<int8_t>> dirs;   // strand directions per level
  std::vector<int8_t> top_dirs;
};

// Checks strand-count chaining, propagates orientations (cups default to
// left leg down / right leg up), computes crossing signs and the writhe.
// Throws WordError on mismatch or orientation conflict.
WordInfo validate_word(const TangleWord& w);

// Crossing resolutions: r = 0 is the type-determined 0-smoothing,
// r = 1 the other one.  For SigmaPlus the 0-smoothing is Id, for
// SigmaMinus it is the cap-cup pair.
struct NotACrossing : std::runtime_error {
  using std::runtime_error::runtime_error;
};
TangleWord resolve_crossing(const TangleWord& w, int position, int r);
// Resolve every crossing; resolution[k] applies to the k-th crossing in
// word order.
TangleWord resolve_all(const TangleWord& w, const std::vector<int>& resolution);

// ---------------------------------------------------------------------------
// Closed diagrams
// ---------------------------------------------------------------------------

// Persistent identity of an arc across local surgeries.  layer: 0 bottom
// matching, 1 word generator (level = generator index, 1-based), 2 top
// matching, 3 synthetic (created by a saddle).  side distinguishes stacked
// diagrams.
struct ArcId {
  int8_t side = 0;
  int8_t layer = 0;
  int16_t level = 0;
  int32_t idx = 0;
  bool operator==(const ArcId& o) const = default;
  auto operator<=>(const ArcId& o) const = default;
  std::string str() const;
};

struct Arc {
  ArcId id;
  int p0 = 0, p1 = 0;  // ports
};

// A closed 1-manifold: every port has exactly two incident arc ends.
struct ClosedDiagram {
  std::vector<Arc> arcs;
  int nports = 0;
  // circles as sorted lists of arc indices; ordered by smallest arc index
  std::vector<std::vector<int>> circles;

  void compute_circles();
  int circle_of_arc(int arc_index) const;  // index into circles
  int k() const { return (int)circles.size(); }
};

// Closure a^t w b of a flat word by matchings (a below, b above).
// a in C_m, b in C_n for a (m,n)-word w.
ClosedDiagram trace_circles(const CrossinglessMatching& a, const TangleWord& w,
                            const CrossinglessMatching& b);

// Pair closure a^t b of two matchings in C_m (no word in between).
ClosedDiagram pair_closure(const CrossinglessMatching& a, const CrossinglessMatching& b);

// Disjoint union, ports and arcs of b re-tagged with side = 1.
ClosedDiagram stack_disjoint(const ClosedDiagram& a, const ClosedDiagram& b);

// ---------------------------------------------------------------------------
// Saddles
// ---------------------------------------------------------------------------

// Replaces arcs u = (p0,p1) and v = (q0,q1) by (p0,q0) and (p1,q1); the
// caller orders endpoints so this is the intended resewing.  Reports how
// circles changed: either two circles merged or one split.
struct SaddleStep {
  ClosedDiagram after;
  bool merged = false;
  int before_c0 = -1, before_c1 = -1;  // circle indices in the old diagram
  int after_c = -1;                    // merged circle (merge case)
  int after_c0 = -1, after_c1 = -1;    // split result (split case)
  std::vector<int> old_to_new;         // for untouched circles; -1 for the affected ones
};
SaddleStep saddle(const ClosedDiagram& d, int arc_u, int arc_v, int fresh_tag);

// Matches circles of two isotopic diagrams via shared arc ids, after
// applying `translate` to the ids of d2 (identity by default).  Returns
// for each circle of d1 the corresponding circle of d2.  Throws if the
// matching is not a bijection.
std::vector<int> match_circles(const ClosedDiagram& d1, const ClosedDiagram& d2);

// ---------------------------------------------------------------------------
// Yetter relations
// ---------------------------------------------------------------------------

// The commutation relations between elementary tangles, with explicit
// index arithmetic; patterns and replacements are in bottom-to-top order.
enum class YetterRule {
  SigmaSigmaFar,   // distant crossings commute
  CapCupFar,       // distant cap and cup commute
  CapSigmaFar,     // distant cap and crossing commute
  CupSigmaFar,     // distant cup and crossing commute
  Kink,            // crossing absorbed by the cup below it
  KinkT,           // crossing absorbed by the cap above it
  Inverse,         // a crossing and its mirror cancel
  Braid,           // braid relation for SigmaPlus
  BraidT,          // braid relation for SigmaMinus
  Zigzag,          // cap at i over cup at i+1 straightens
  ZigzagT,         // cap at i+1 over cup at i straightens
  SlideA,          // s+ i over cup i+1  =  s- i+1 over cup i
  SlideB,          // s- i over cup i+1  =  s+ i+1 over cup i
  SlideAT,         // transpose of SlideA
  SlideBT,         // transpose of SlideB
};

const char* yetter_rule_name(YetterRule r);
std::optional<YetterRule> yetter_rule_by_name(const std::string& s);
std::vector<YetterRule> all_yetter_rules();

struct PatternMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Rewrites w at generator position pos: if the rule's left pattern matches
// there it is replaced by the right side and vice versa.  Throws
// PatternMismatch when neither side matches.
TangleWord yetter_rewrite(const TangleWord& w, YetterRule rule, int pos);

// Instances (lhs, rhs) of a rule at strand parameter m (both sides share
// boundary), used by the property suites.
struct YetterInstance {
  TangleWord lhs, rhs;
  YetterRule rule;
  int pos;  // position at which yetter_rewrite(lhs, rule, pos) == rhs
};
std::vector<YetterInstance> yetter_instances(YetterRule r, int max_m);
bool yetter_rule_flat(YetterRule r);

}  // namespace tanghom::planar
