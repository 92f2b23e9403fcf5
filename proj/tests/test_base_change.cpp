#include "doctest.h"
#include "vapp/base_change.hpp"
#include "vapp/builtins.hpp"

using namespace vapp;

namespace {

QPtr diamond() {
  auto q = std::make_shared<Quantale>();
  q->name = "M3";
  q->labels = {"bot", "a", "b", "c", "top"};
  q->leq_tab.assign(25, 0);
  auto le = [&](int x, int y) { q->leq_tab[x * 5 + y] = 1; };
  for (int i = 0; i < 5; ++i) le(i, i);
  for (int i = 1; i < 5; ++i) le(0, i);
  for (int i = 0; i < 5; ++i) le(i, 4);
  q->finalize();
  q->tensor_tab.assign(25, -1);
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b) q->tensor_tab[a * 5 + b] = q->meet(a, b);
  q->unit = 4;
  return q;
}

}  // namespace

TEST_CASE("reflection is least above the graph") {
  for (QPtr q : {two_chain(), chain_frame(3)}) {
    CAPTURE(q->name);
    CHECK(check_reflect_minimal(q, GraphKind::Ultrafilter, 2, 50, 5).ok());
    CHECK(check_reflect_minimal(q, GraphKind::Category, 2, 50, 5).ok());
    CHECK(check_reflect_minimal(q, GraphKind::Powerset, 2, 30, 5).ok());
  }
}

TEST_CASE("reflection fixes the structures that already satisfy the laws") {
  auto q = chain_frame(3);
  for (const auto& l : sample_convergence_algebras(q, 3, 20, 8)) {
    auto g = BaseGraph::from_convergence(l);
    CHECK(reflect(g) == g);
  }
  for (const auto& c : sample_approach_structures(q, 2, 20, 8)) {
    auto g = BaseGraph::from_distance(c);
    CHECK(reflect(g) == g);
  }
}

TEST_CASE("two chain embeds with both retractions") {
  auto v = chain_frame(4);
  MonotoneMap i = iota_map(v), p = pi_map(v), o = o_map(v);
  CHECK(maps_are_adjoint(i, p));
  CHECK(maps_are_adjoint(o, i));
  CHECK_FALSE(maps_are_adjoint(i, o));
  CHECK(classify_hom(i).lax);
  CHECK(classify_hom(p).lax);
  CHECK(verify_embedding_corollaries(v, GraphKind::Ultrafilter, 3, 15, 2)
            .ok());
  CHECK(verify_embedding_corollaries(v, GraphKind::Category, 3, 15, 2).ok());
  CHECK(verify_embedding_corollaries(v, GraphKind::Powerset, 2, 15, 2).ok());
}

TEST_CASE("jump embedding of the cost chain into the distance grid") {
  auto cost = cost_chain(2);
  auto g = make_delta_grid({0.0, 1.0, 2.0}, {0.0, 0.5, 1.0}, TNorm::Min);
  MonotoneMap s = sigma_map(cost, g);
  MonotoneMap r = rho_map(g, cost);
  MonotoneMap l = lambda_map(g, cost);
  CHECK(classify_hom(s).strict);
  CHECK(maps_are_adjoint(s, r));
  CHECK(maps_are_adjoint(l, s));
  auto ra = right_adjoint(s);
  auto la = left_adjoint(s);
  REQUIRE(ra.has_value());
  REQUIRE(la.has_value());
  CHECK(ra->table == r.table);
  CHECK(la->table == l.table);
  // The constant-1 function is reached at time 0 and leaves 0 immediately;
  // bottom never reaches 1 and stays 0 forever.
  CHECK(r.table[g.q->unit] == 0);
  CHECK(l.table[g.q->unit] == 0);
  CHECK(r.table[g.q->bot()] == 3);
  CHECK(l.table[g.q->bot()] == 3);
  // A mismatched time grid is rejected.
  auto g2 = make_delta_grid({0.0, 1.0}, {0.0, 1.0}, TNorm::Min);
  CHECK_THROWS_AS(sigma_map(cost, g2), StructuralError);
}

TEST_CASE("downset triple of adjunctions") {
  auto d = make_downset(chain_frame(3));
  MonotoneMap dn = down_map(d), sp = sup_map(d), tb = totally_below_map(d);
  CHECK(maps_are_adjoint(sp, dn));
  CHECK(maps_are_adjoint(tb, sp));
  CHECK(classify_hom(sp).strict);
  CHECK(classify_hom(dn).lax);
}

TEST_CASE("change of base along an adjoint pair") {
  auto v = chain_frame(3);
  for (GraphKind kind :
       {GraphKind::Ultrafilter, GraphKind::Category, GraphKind::Powerset}) {
    int n = kind == GraphKind::Powerset ? 2 : 3;
    CHECK(verify_change_of_base_adjunction(iota_map(v), pi_map(v), kind, n,
                                           10, 3)
              .ok());
    CHECK(verify_change_of_base_adjunction(o_map(v), iota_map(v), kind, n,
                                           10, 3)
              .ok());
  }
  auto cost = cost_chain(2);
  auto g = make_delta_grid({0.0, 1.0, 2.0}, {0.0, 0.5, 1.0}, TNorm::Min);
  CHECK(verify_change_of_base_adjunction(sigma_map(cost, g),
                                         rho_map(g, cost),
                                         GraphKind::Ultrafilter, 2, 8, 4)
            .ok());
  CHECK(verify_change_of_base_adjunction(lambda_map(g, cost),
                                         sigma_map(cost, g),
                                         GraphKind::Ultrafilter, 2, 8, 4)
            .ok());
  // A non-adjoint pair is reported up front.
  auto bad = verify_change_of_base_adjunction(iota_map(v), o_map(v),
                                              GraphKind::Category, 2, 5, 3);
  REQUIRE_FALSE(bad.ok());
  CHECK(bad.violations[0].law == "cob/maps-not-adjoint");
}

TEST_CASE("map adjointness matches functor adjointness on the two-point "
          "family") {
  auto v = chain_frame(3);
  auto cost = cost_chain(2);
  auto g = make_delta_grid({0.0, 1.0, 2.0}, {0.0, 0.5, 1.0}, TNorm::Min);
  for (GraphKind kind :
       {GraphKind::Ultrafilter, GraphKind::Category, GraphKind::Powerset}) {
    // Adjoint pairs agree with the functor-level probe...
    CHECK(verify_adjunction_equivalence(iota_map(v), pi_map(v), kind).ok());
    CHECK(verify_adjunction_equivalence(o_map(v), iota_map(v), kind).ok());
    CHECK(verify_adjunction_equivalence(sigma_map(cost, g), rho_map(g, cost),
                                        kind)
              .ok());
    // ... and for non-adjoint pairs the probe fails too.
    CHECK(verify_adjunction_equivalence(iota_map(v), o_map(v), kind).ok());
  }
  // The non-adjoint pair (identity, constant top) fails the functor probe
  // with a counit witness.
  MonotoneMap top_map;
  top_map.source = v;
  top_map.target = v;
  top_map.table.assign(v->size(), v->top());
  top_map.name = "const-top";
  CHECK_FALSE(maps_are_adjoint(identity_map(v), top_map));
  auto probe = probe_functor_adjunction(identity_map(v), top_map,
                                        GraphKind::Ultrafilter);
  REQUIRE_FALSE(probe.ok());
  CHECK(probe.violations[0].law == "functor/counit");
  CHECK(verify_adjunction_equivalence(identity_map(v), top_map,
                                      GraphKind::Ultrafilter)
            .ok());
  auto m3 = diamond();
  CHECK_THROWS_AS(verify_adjunction_equivalence(identity_map(m3),
                                                identity_map(m3),
                                                GraphKind::Category),
                  CapabilityError);
}
