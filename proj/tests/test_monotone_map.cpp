#include "doctest.h"
#include "vapp/builtins.hpp"
#include "vapp/monotone_map.hpp"

using namespace vapp;

TEST_CASE("identity is its own adjoint on both sides") {
  auto q = chain_frame(3);
  auto id = identity_map(q);
  auto l = left_adjoint(id);
  auto r = right_adjoint(id);
  REQUIRE(l);
  REQUIRE(r);
  CHECK(l->table == id.table);
  CHECK(r->table == id.table);
}

TEST_CASE("constant top on a chain") {
  auto q = chain_frame(3);
  MonotoneMap f{q, q, {2, 2, 2}, "const-top"};
  CHECK(is_monotone(f));
  // A left adjoint exists (the constant bottom), but no right adjoint:
  // the image of bottom is top, so joins are not preserved.
  auto l = left_adjoint(f);
  REQUIRE(l);
  CHECK(l->table == std::vector<Elt>{0, 0, 0});
  CHECK_FALSE(right_adjoint(f).has_value());
  auto cls = classify_hom(f);
  CHECK(cls.has_left_adjoint);
  CHECK_FALSE(cls.has_right_adjoint);
}

TEST_CASE("the two-chain embeds into any integral quantale") {
  auto two = two_chain();
  auto q = chain_frame(4);
  MonotoneMap iota{two, q, {0, 3}, "iota"};
  auto cls = classify_hom(iota);
  CHECK(cls.monotone);
  CHECK(cls.lax);
  CHECK(cls.strict);
  CHECK(cls.has_left_adjoint);
  CHECK(cls.has_right_adjoint);
}

TEST_CASE("threshold collapse onto the two-chain") {
  auto q = chain_frame(3);
  auto two = two_chain();
  // v maps to top exactly when v is above the unit.
  MonotoneMap pi{q, two, {0, 0, 1}, "pi"};
  auto cls = classify_hom(pi);
  CHECK(cls.monotone);
  CHECK(cls.lax);
  auto l = left_adjoint(pi);
  REQUIRE(l);
  CHECK(l->table == std::vector<Elt>{0, 2});
  auto r = right_adjoint(pi);
  REQUIRE(r);
  CHECK(r->table == std::vector<Elt>{1, 2});
}

TEST_CASE("non-monotone maps are rejected outright") {
  auto q = chain_frame(3);
  MonotoneMap f{q, q, {2, 1, 0}, "flip"};
  CHECK_FALSE(is_monotone(f));
  CHECK_FALSE(left_adjoint(f).has_value());
  auto cls = classify_hom(f);
  CHECK_FALSE(cls.monotone);
  CHECK(cls.detail == "not monotone");
}

TEST_CASE("composition of adjoints") {
  auto q = chain_frame(3);
  auto two = two_chain();
  MonotoneMap pi{q, two, {0, 0, 1}, "pi"};
  MonotoneMap iota{two, q, {0, 2}, "iota"};
  auto both = compose(pi, iota);
  CHECK(both.table == std::vector<Elt>{0, 1});
  CHECK(is_monotone(both));
}
