#include <random>

#include "doctest.h"
#include "vapp/builtins.hpp"
#include "vapp/vrel.hpp"

using namespace vapp;

namespace {

VRelation random_rel(QPtr q, int nx, int ny, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> d(0, q->size() - 1);
  VRelation r(q, nx, ny);
  for (auto& v : r.tab) v = d(rng);
  return r;
}

VRelation identity_rel(QPtr q, int n) {
  VRelation r(q, n, n);
  for (int x = 0; x < n; ++x) r.at(x, x) = q->unit;
  return r;
}

}  // namespace

TEST_CASE("relational composition is associative with identity unit") {
  auto q = chain_frame(4);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    auto r = random_rel(q, 3, 2, seed);
    auto s = random_rel(q, 2, 3, seed + 100);
    auto t = random_rel(q, 3, 2, seed + 200);
    auto left = rel_compose(t, rel_compose(s, r));
    auto right = rel_compose(rel_compose(t, s), r);
    CHECK(left.tab == right.tab);
    CHECK(rel_compose(r, identity_rel(q, 3)).tab == r.tab);
    CHECK(rel_compose(identity_rel(q, 2), r).tab == r.tab);
  }
}

TEST_CASE("enumerating V^X") {
  auto q = chain_frame(3);
  CHECK(enumerate_vfuns(*q, 0).size() == 1);
  CHECK(enumerate_vfuns(*q, 2).size() == 9);
  CHECK_THROWS_AS(enumerate_vfuns(*q, 20), CapabilityError);
}

TEST_CASE("alpha on degenerate arguments") {
  auto q = chain_frame(3);
  auto funs = enumerate_vfuns(*q, 2);
  // Empty set of functions: bottom on nonempty subsets, top on the empty one.
  CHECK(alpha_eval(*q, {}, 0b11) == q->bot());
  CHECK(alpha_eval(*q, {}, 0) == q->top());
  // Singletons evaluate to the meet over the subset.
  VFun sigma = {1, 2};
  CHECK(alpha_eval(*q, {sigma}, 0b11) == 1);
  CHECK(alpha_eval(*q, {sigma}, 0b10) == 2);
}

TEST_CASE("the literal ultrafilter law collapses to evaluation") {
  for (QPtr q : {two_chain(), chain_frame(3)}) {
    for (int n = 0; n <= 2; ++n) {
      auto funs = enumerate_vfuns(*q, n);
      for (int i = 0; i < static_cast<int>(funs.size()); ++i)
        for (int x = 0; x < n; ++x)
          CHECK(beta_literal(*q, funs, i, n, x) == beta_fast(funs[i], x));
    }
  }
}

TEST_CASE("the literal ultrafilter extension collapses to the relation") {
  auto q = chain_frame(3);
  auto r = random_rel(q, 3, 3, 7);
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      CHECK(ubar_literal(r, x, y) == r.at(x, y));
  auto u = ultra_extension(r);
  CHECK(u.tab == r.tab);
}

TEST_CASE("powerset extension matches the law applied to graph functions") {
  // Forward round trip: the extension of r agrees with the law evaluated
  // on the set of rows of r.
  auto q = chain_frame(3);
  auto r = random_rel(q, 2, 2, 11);
  auto ext = powerset_extension(r);
  for (Mask A = 0; A < 4; ++A) {
    std::vector<VFun> rows;
    for (int x = 0; x < 2; ++x)
      if (mask_has(A, x)) rows.push_back({r.at(x, 0), r.at(x, 1)});
    for (Mask B = 0; B < 4; ++B)
      CHECK(ext.at(A, B) == alpha_eval(*q, rows, B));
  }
}

TEST_CASE("law recovered from the extension via evaluation") {
  // Reverse round trip: extending the evaluation relation and reading it
  // at (S, A) gives back the law.
  for (QPtr q : {two_chain(), chain_frame(3)}) {
    for (int n = 0; n <= 2; ++n) {
      auto funs = enumerate_vfuns(*q, n);
      if (funs.size() > 16) continue;
      std::mt19937_64 rng(3);
      for (int t = 0; t < 20; ++t) {
        std::vector<VFun> S;
        for (const auto& f : funs)
          if (rng() & 1) S.push_back(f);
        for (Mask A = 0; A < (1u << n); ++A)
          CHECK(law_from_powerset_extension(*q, funs, S, A) ==
                alpha_eval(*q, S, A));
      }
    }
  }
}

TEST_CASE("lax law conditions hold for the powerset law") {
  LaxLawOptions opt;
  opt.samples = 40;
  for (QPtr q : {two_chain(), chain_frame(3), cost_chain(2)}) {
    CAPTURE(q->name);
    auto rep = check_lax_law_powerset(q, opt);
    CHECK(rep.ok());
  }
  auto g = make_delta_grid({0.0, 1.0}, {0.0, 0.5, 1.0}, TNorm::Min);
  CHECK(check_lax_law_powerset(g.q, opt).ok());
}

TEST_CASE("lax law conditions hold for the ultrafilter law") {
  LaxLawOptions opt;
  opt.samples = 40;
  for (QPtr q : {two_chain(), chain_frame(3), cost_chain(2)}) {
    CAPTURE(q->name);
    CHECK(check_lax_law_ultra(q, opt).ok());
  }
  auto g = make_delta_grid({0.0, 1.0}, {0.0, 0.5, 1.0}, TNorm::Min);
  CHECK(check_lax_law_ultra(g.q, opt).ok());
}

TEST_CASE("a corrupted law is caught") {
  // Swapping meet and join breaks the unit law as soon as two points and a
  // nontrivial unit are around.
  AlphaEval bad = [](const Quantale& q, const std::vector<VFun>& S,
                     Mask A) -> Elt {
    Elt acc = q.bot();
    for (int x = 0; A >> x; ++x) {
      if (!mask_has(A, x)) continue;
      Elt m = q.top();
      for (const auto& sigma : S) m = q.meet(m, sigma[x]);
      acc = q.join(acc, m);
    }
    return acc;
  };
  LaxLawOptions opt;
  opt.samples = 10;
  auto rep = check_lax_law_powerset(chain_frame(3), opt, &bad);
  REQUIRE_FALSE(rep.ok());
  CHECK(rep.violations[0].law == "lax-law/(b)-unit");
}
