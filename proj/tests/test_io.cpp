#include "doctest.h"
#include "vapp/io.hpp"

using namespace vapp;

TEST_CASE("builtin descriptors") {
  CHECK(parse_builtin("two_chain").q->size() == 2);
  CHECK(parse_builtin("chain_frame:4").q->size() == 4);
  CHECK(parse_builtin("cost_chain:3").q->size() == 5);
  CHECK(parse_builtin("unit_grid:4:lukasiewicz").q->size() == 5);
  auto g = parse_builtin("delta_grid:0,1:0,0.5,1:min");
  REQUIRE(g.grid.has_value());
  CHECK(g.q->size() == 6);
  auto d = parse_builtin("downset:chain_frame:3");
  REQUIRE(d.downset.has_value());
  CHECK(d.q->size() == 4);
  CHECK_THROWS_AS(parse_builtin("nonsense"), StructuralError);
  CHECK_THROWS_AS(parse_builtin("chain_frame:x"), StructuralError);
  CHECK_THROWS_AS(parse_builtin("chain_frame"), StructuralError);
}

TEST_CASE("explicit quantale round trip") {
  ParsedQuantale pq;
  pq.q = chain_frame(3);
  ParsedQuantale back = quantale_from_json(quantale_to_json(pq));
  CHECK(back.q->labels == pq.q->labels);
  CHECK(back.q->leq_tab == pq.q->leq_tab);
  CHECK(back.q->tensor_tab == pq.q->tensor_tab);
  CHECK(back.q->unit == pq.q->unit);
  CHECK(check_quantale(*back.q).ok());
}

TEST_CASE("builtin reference survives the round trip") {
  auto pq = parse_builtin("cost_chain:2");
  Json j = quantale_to_json(pq);
  CHECK(j["builtin"] == "cost_chain:2");
  CHECK(quantale_from_json(j).q->labels == pq.q->labels);
}

TEST_CASE("space documents in both presentations") {
  auto pq = parse_builtin("chain_frame:3");
  auto cs = sample_approach_structures(pq.q, 2, 5, 31);
  auto points = default_point_names(2);
  for (const auto& c : cs) {
    SpaceDoc d1 = space_from_json(space_to_json(c, pq, points, "distance"));
    CHECK(d1.c == c);
    CHECK(d1.points == points);
    SpaceDoc d2 = space_from_json(space_to_json(c, pq, points, "tower"));
    CHECK(d2.c == c);
  }
}

TEST_CASE("malformed space documents are rejected") {
  auto pq = parse_builtin("two_chain");
  DistanceStructure c(pq.q, 1);
  auto points = default_point_names(1);
  Json j = space_to_json(c, pq, points, "distance");
  Json missing = j;
  missing["table"].erase(0);
  CHECK_THROWS_AS(space_from_json(missing), StructuralError);
  Json bad = j;
  bad["table"][0]["distances"]["x0"] = "zilch";
  CHECK_THROWS_AS(space_from_json(bad), StructuralError);
  Json wrong = j;
  wrong["presentation"] = "matrix";
  CHECK_THROWS_AS(space_from_json(wrong), StructuralError);
}

TEST_CASE("convergence document round trip") {
  auto pq = parse_builtin("chain_frame:3");
  auto points = default_point_names(3);
  for (const auto& l : sample_convergence_algebras(pq.q, 3, 5, 13)) {
    ConvergenceDoc d =
        convergence_from_json(convergence_to_json(l, pq, points));
    CHECK(d.l == l);
  }
}

TEST_CASE("map document round trip") {
  auto v = parse_builtin("chain_frame:3");
  auto two = parse_builtin("two_chain");
  MonotoneMap p = pi_map(v.q);
  MapDoc d = map_from_json(map_to_json(p, v, two));
  CHECK(d.f.table == p.table);
  CHECK(d.f.name == "pi");
}

TEST_CASE("builtin maps resolve against parsed quantales") {
  auto two = parse_builtin("two_chain");
  auto v = parse_builtin("chain_frame:3");
  auto cost = parse_builtin("cost_chain:2");
  auto grid = parse_builtin("delta_grid:0,1,2:0,0.5,1:min");
  auto dq = parse_builtin("downset:chain_frame:3");
  CHECK(builtin_map("iota", two, v).table == iota_map(v.q).table);
  CHECK(builtin_map("pi", v, two).table == pi_map(v.q).table);
  CHECK(builtin_map("o", v, two).table == o_map(v.q).table);
  CHECK(builtin_map("sigma", cost, grid).table ==
        sigma_map(cost.q, *grid.grid).table);
  CHECK(builtin_map("rho", grid, cost).table ==
        rho_map(*grid.grid, cost.q).table);
  CHECK(builtin_map("lambda", grid, cost).table ==
        lambda_map(*grid.grid, cost.q).table);
  CHECK(builtin_map("downset.sup", dq, v).table == sup_map(*dq.downset).table);
  CHECK(builtin_map("downset.down", v, dq).table ==
        down_map(*dq.downset).table);
  CHECK(builtin_map("downset.up", v, dq).table ==
        totally_below_map(*dq.downset).table);
  // tau needs a value chain matching the grid's value set.
  auto values = parse_builtin("unit_grid:2:min");
  auto tau = builtin_map("tau", values, grid);
  CHECK(tau.table[2] == grid.q->unit);
  CHECK_THROWS_AS(builtin_map("tau", v, grid), StructuralError);
  CHECK_THROWS_AS(builtin_map("sigma", cost, v), StructuralError);
  CHECK_THROWS_AS(builtin_map("warp", two, v), StructuralError);
}
