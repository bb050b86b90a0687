#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tanghom/planar.hpp"

using namespace tanghom::planar;
using G = ElementaryGenerator;
using K = GenKind;

static TangleWord word(int m, std::vector<G> gens) {
  TangleWord w;
  w.bottom_m = m;
  w.gens = std::move(gens);
  return w;
}

TEST_CASE("matching enumeration counts and order") {
  CHECK(enumerate_matchings(0).size() == 1);
  auto m2 = enumerate_matchings(2);
  REQUIRE(m2.size() == 2);
  CHECK(m2[0].pair == std::vector<int>{0, 2, 1, 4, 3});
  CHECK(m2[1].pair == std::vector<int>{0, 4, 3, 2, 1});
  CHECK(enumerate_matchings(3).size() == 5);
  for (int n = 0; n <= 6; ++n) {
    auto ms = enumerate_matchings(n);
    CHECK((long long)ms.size() == catalan(n));
    for (auto& m : ms) CHECK(m.noncrossing());
    for (size_t i = 0; i < ms.size(); ++i)
      for (size_t j = i + 1; j < ms.size(); ++j) CHECK(!(ms[i] == ms[j]));
  }
}

TEST_CASE("validate: boundary, cups, writhe") {
  // single cup: (0,1), one cup, no crossings
  auto info = validate_word(word(0, {G{K::Cup, 1, 1}}));
  CHECK(info.m == 0);
  CHECK(info.n == 1);
  CHECK(info.writhe == 0);
  CHECK(info.cups == 1);

  // kinked unknot: the crossing is antiparallel, so the s+ kink is negative
  auto kink = validate_word(word(0, {G{K::Cup, 1, 1}, G{K::SigmaPlus, 1, 1}, G{K::Cap, 1, 1}}));
  CHECK(kink.m == 0);
  CHECK(kink.n == 0);
  CHECK(kink.cups == 1);
  CHECK(kink.writhe == -1);
  auto kink2 = validate_word(word(0, {G{K::Cup, 1, 1}, G{K::SigmaMinus, 1, 1}, G{K::Cap, 1, 1}}));
  CHECK(kink2.writhe == +1);

  // parallel strands: braid sign conventions
  auto braid = validate_word(word(1, {G{K::SigmaPlus, 1, 1}}));
  CHECK(braid.writhe == +1);
  auto braidm = validate_word(word(1, {G{K::SigmaMinus, 1, 1}}));
  CHECK(braidm.writhe == -1);

  CHECK_THROWS_AS(validate_word(word(0, {G{K::Cup, 1, 1}, G{K::Cap, 1, 2}})), WordError);
  CHECK_THROWS_AS(validate_word(word(0, {G{K::Cup, 3, 1}})), WordError);
}

TEST_CASE("orientation inference handles a crossed cap") {
  // two strands crossing then capped is a single through-arc
  auto info = validate_word(word(1, {G{K::SigmaMinus, 1, 1}, G{K::Cap, 1, 1}}));
  CHECK(info.n == 0);
  // explicit inconsistent orientation errors out
  TangleWord w = word(1, {G{K::Cap, 1, 1}});
  w.bottom_dirs = {1, 1};
  CHECK_THROWS_AS(validate_word(w), WordError);
}

TEST_CASE("trace_circles small cases") {
  auto c1 = enumerate_matchings(1);
  auto id1 = word(1, {G{K::Id, 0, 1}});
  auto d = trace_circles(c1[0], id1, c1[0]);
  CHECK(d.k() == 1);

  auto c2 = enumerate_matchings(2);
  auto id2 = word(2, {G{K::Id, 0, 2}});
  CHECK(trace_circles(c2[0], id2, c2[1]).k() == 1);  // interleaved: one loop
  CHECK(trace_circles(c2[0], id2, c2[0]).k() == 2);
  CHECK(trace_circles(c2[1], id2, c2[1]).k() == 2);

  // pair closures agree with the empty word
  CHECK(pair_closure(c2[0], c2[1]).k() == 1);
  CHECK(pair_closure(c2[1], c2[1]).k() == 2);
}

TEST_CASE("trace_circles reflection invariance") {
  for (int n = 1; n <= 3; ++n) {
    auto cn = enumerate_matchings(n);
    // the hourglass word
    TangleWord w = word(n, {G{K::Cap, 1, n}, G{K::Cup, 1, n}});
    TangleWord wt = w.transpose();
    for (auto& a : cn)
      for (auto& b : cn)
        CHECK(trace_circles(a, w, b).k() == trace_circles(b, wt, a).k());
  }
}

TEST_CASE("resolve crossings") {
  auto w = word(1, {G{K::SigmaPlus, 1, 1}});
  auto r0 = resolve_crossing(w, 0, 0);
  REQUIRE(r0.gens.size() == 1);
  CHECK(r0.gens[0].kind == K::Id);
  auto r1 = resolve_crossing(w, 0, 1);
  REQUIRE(r1.gens.size() == 2);
  CHECK(r1.gens[0].kind == K::Cap);
  CHECK(r1.gens[1].kind == K::Cup);
  CHECK(r1.flat());
  CHECK_THROWS_AS(resolve_crossing(r0, 0, 0), NotACrossing);

  // flat fixed point via resolve_all with no crossings
  auto id2 = word(2, {G{K::Id, 0, 2}});
  CHECK(resolve_all(id2, {}).gens.size() == 1);
}

TEST_CASE("saddle merge and split bookkeeping") {
  auto c1 = enumerate_matchings(1);
  // two stacked circles: saddle the top arc of the lower with the bottom
  // arc of the upper
  auto lower = pair_closure(c1[0], c1[0]);
  auto upper = pair_closure(c1[0], c1[0]);
  auto both = stack_disjoint(lower, upper);
  REQUIRE(both.k() == 2);
  // lower's top matching arc has layer 2 side 0; upper's bottom arc layer 0 side 1
  int u = -1, v = -1;
  for (int i = 0; i < (int)both.arcs.size(); ++i) {
    if (both.arcs[i].id.layer == 2 && both.arcs[i].id.side == 0) u = i;
    if (both.arcs[i].id.layer == 0 && both.arcs[i].id.side == 1) v = i;
  }
  REQUIRE(u >= 0);
  REQUIRE(v >= 0);
  auto st = saddle(both, u, v, 0);
  CHECK(st.merged);
  CHECK(st.after.k() == 1);
  // saddle back: split
  int s0 = -1, s1 = -1;
  for (int i = 0; i < (int)st.after.arcs.size(); ++i)
    if (st.after.arcs[i].id.layer == 3) (s0 < 0 ? s0 : s1) = i;
  auto st2 = saddle(st.after, s0, s1, 2);
  CHECK(!st2.merged);
  CHECK(st2.after.k() == 2);
}

TEST_CASE("yetter rewrites") {
  // cap at 1 over cup at 2 straightens (indices must differ by one)
  auto zig = word(1, {G{K::Cup, 2, 2}, G{K::Cap, 1, 2}});
  auto r = yetter_rewrite(zig, YetterRule::Zigzag, 0);
  REQUIRE(r.gens.size() == 1);
  CHECK(r.gens[0].kind == K::Id);
  CHECK(r.gens[0].m == 1);

  auto hour = word(1, {G{K::Cup, 1, 2}, G{K::Cap, 1, 2}});
  CHECK_THROWS_AS(yetter_rewrite(hour, YetterRule::Zigzag, 0), PatternMismatch);

  // distant crossings commute
  auto ss = word(2, {G{K::SigmaPlus, 1, 2}, G{K::SigmaPlus, 3, 2}});
  auto sw = yetter_rewrite(ss, YetterRule::SigmaSigmaFar, 0);
  CHECK(sw.gens[0].i == 3);
  CHECK(sw.gens[1].i == 1);

  // every rule: rewrite of lhs gives rhs, and rewriting rhs matches back
  for (auto rule : all_yetter_rules()) {
    auto insts = yetter_instances(rule, 3);
    CHECK(!insts.empty());
    for (auto& inst : insts) {
      auto got = yetter_rewrite(inst.lhs, rule, inst.pos);
      CHECK(got.gens == inst.rhs.gens);
    }
  }
}

TEST_CASE("flat yetter relations preserve closure circle counts") {
  for (auto rule : all_yetter_rules()) {
    if (!yetter_rule_flat(rule)) continue;
    for (auto& inst : yetter_instances(rule, 3)) {
      auto li = validate_word(inst.lhs);
      auto ms = enumerate_matchings(li.m);
      auto ns = enumerate_matchings(li.n);
      for (auto& a : ms)
        for (auto& b : ns)
          CHECK(trace_circles(a, inst.lhs, b).k() == trace_circles(a, inst.rhs, b).k());
    }
  }
}

TEST_CASE("word transpose round trip") {
  auto w = word(1, {G{K::Cup, 2, 2}, G{K::SigmaPlus, 1, 2}, G{K::Cap, 3, 2}});
  auto tt = w.transpose().transpose();
  CHECK(tt.bottom_m == w.bottom_m);
  CHECK(tt.gens == w.gens);
}
