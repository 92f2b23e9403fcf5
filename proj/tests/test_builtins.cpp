#include <algorithm>

#include "doctest.h"
#include "vapp/builtins.hpp"
#include "vapp/finite_set.hpp"
#include "vapp/quantale.hpp"

using namespace vapp;

namespace {

DeltaGrid small_grid() {
  return make_delta_grid({0.0, 1.0}, {0.0, 0.5, 1.0}, TNorm::Min);
}

}  // namespace

TEST_CASE("delta grid carrier") {
  auto g = small_grid();
  // Non-decreasing pairs over three values.
  CHECK(g.q->size() == 6);
  CHECK(check_quantale(*g.q).ok());
  CHECK(is_integral(*g.q));
  CHECK(g.q->label(g.q->unit) == "(1,1)");
  CHECK(g.q->label(g.q->bot()) == "(0,0)");
}

TEST_CASE("delta grid jump embeddings") {
  auto g = small_grid();
  CHECK(g.sigma(0) == g.q->unit);          // jump at 0 is the unit
  CHECK(g.sigma(2) == g.q->bot());         // jump at inf never rises
  CHECK(g.q->label(g.sigma(1)) == "(0,1)");
  CHECK(g.tau(0) == g.q->bot());
  CHECK(g.tau(2) == g.q->unit);
}

TEST_CASE("delta grid convolution oracles") {
  auto g = small_grid();
  Elt s1 = g.sigma(1);
  Elt thalf = g.tau(1);
  CHECK(g.q->label(thalf) == "(0.5,0.5)");
  // Frozen by hand: a unit jump at time 1 convolved with the constant 1/2
  // keeps value 0 on (0,1] and reaches 1/2 after it.
  CHECK(g.q->label(g.q->tensor(s1, thalf)) == "(0,0.5)");
  // Two unit jumps at time 1 push the jump past the grid entirely.
  CHECK(g.q->tensor(s1, s1) == g.q->bot());
  // Convolving with the unit changes nothing.
  for (Elt a = 0; a < g.q->size(); ++a)
    CHECK(g.q->tensor(a, g.q->unit) == a);
}

TEST_CASE("delta grid coprimes are the single-jump steps") {
  auto g = small_grid();
  CHECK(is_ccd(*g.q));
  auto cp = coprimes(*g.q);
  std::vector<std::string> got;
  for (Elt p : cp.elements) got.push_back(g.q->label(p));
  std::sort(got.begin(), got.end());
  std::vector<std::string> want = {"(0,0.5)", "(0,1)", "(0.5,0.5)", "(1,1)"};
  CHECK(got == want);
  CHECK(cp.decomposition_holds);
}

TEST_CASE("delta grid presentation by jumps") {
  // Every element is the join over intervals of sigma(left endpoint of the
  // interval) convolved with tau(value on that interval).
  auto g = small_grid();
  for (Elt a = 0; a < g.q->size(); ++a) {
    std::vector<Elt> parts;
    for (int k = 0; k < static_cast<int>(g.times.size()); ++k)
      parts.push_back(g.q->tensor(g.sigma(k), g.tau(g.elems[a][k])));
    CHECK(g.q->join_all(parts) == a);
  }
}

TEST_CASE("delta grid rejects unclosed grids") {
  // 1 + 1 = 2 lands inside the grid span but on no grid point.
  CHECK_THROWS_AS(make_delta_grid({0.0, 1.0, 3.0}, {0.0, 1.0}, TNorm::Min),
                  StructuralError);
  // 0.7 (*) 0.7 = 0.4 is not on the value grid.
  CHECK_THROWS_AS(make_delta_grid({0.0, 1.0}, {0.0, 0.7, 1.0},
                                  TNorm::Lukasiewicz),
                  StructuralError);
  CHECK_THROWS_AS(make_delta_grid({1.0}, {0.0, 1.0}, TNorm::Min),
                  StructuralError);
}

TEST_CASE("delta grid with lukasiewicz values") {
  auto g = make_delta_grid({0.0, 1.0}, {0.0, 0.5, 1.0}, TNorm::Lukasiewicz);
  CHECK(check_quantale(*g.q).ok());
  // tnorm(1/2, 1/2) = 0 under Lukasiewicz.
  Elt th = g.tau(1);
  CHECK(g.q->tensor(th, th) == g.q->bot());
}

TEST_CASE("downsets of a chain form a longer chain") {
  auto d = make_downset(chain_frame(3));
  CHECK(d.q->size() == 4);
  CHECK(check_quantale(*d.q).ok());
  // Inclusion order on {}, {0}, {0,1}, {0,1,2} is a 4-chain.
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK(d.q->leq(i, j) ==
            (mask_size(d.elem_masks[i]) <= mask_size(d.elem_masks[j])));
  CHECK(d.q->label(d.q->unit) == "{0,1,2}");
}

TEST_CASE("downset quantale of the two chain") {
  auto d = make_downset(two_chain());
  CHECK(d.q->size() == 3);
  CHECK(check_quantale(*d.q).ok());
  CHECK(is_ccd(*d.q));
}
