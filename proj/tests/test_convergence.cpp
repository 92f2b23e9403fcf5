#include "doctest.h"
#include "vapp/builtins.hpp"
#include "vapp/convergence.hpp"

using namespace vapp;

TEST_CASE("convergence algebras over the two chain are the preorders") {
  auto q = two_chain();
  CHECK(enumerate_convergence_algebras(q, 0).size() == 1);
  CHECK(enumerate_convergence_algebras(q, 1).size() == 1);
  CHECK(enumerate_convergence_algebras(q, 2).size() == 4);
  CHECK(enumerate_convergence_algebras(q, 3).size() == 29);
}

TEST_CASE("sampled convergence algebras satisfy the axioms") {
  for (QPtr q : {two_chain(), chain_frame(3), cost_chain(2)})
    for (const auto& l : sample_convergence_algebras(q, 3, 25, 11))
      CHECK(check_convergence_algebra(l).ok());
}

TEST_CASE("induced structures translate between the presentations") {
  auto q = chain_frame(3);
  for (const auto& l : sample_convergence_algebras(q, 3, 25, 3)) {
    auto c = induced_distance(l);
    CHECK(check_approach(c).ok());
    CHECK(induced_convergence(c) == l);
  }
}

TEST_CASE("a non-transitive table is rejected") {
  auto q = chain_frame(3);
  ConvergenceStructure l(q, 3);
  for (int x = 0; x < 3; ++x) l.at(x, x) = q->unit;
  l.at(0, 1) = 2;
  l.at(1, 2) = 2;
  // 0 converges to 1 and 1 to 2 at the top, but 0 not to 2.
  auto rep = check_convergence_algebra(l);
  REQUIRE_FALSE(rep.ok());
  CHECK(rep.violations[0].law == "convergence/transitivity");
}

TEST_CASE("main equivalence, exhaustively on tiny carriers") {
  MainTheoremOptions opt;
  for (int n = 0; n <= 2; ++n) {
    CHECK(verify_main_theorem(two_chain(), n, opt).ok());
    CHECK(verify_main_theorem(chain_frame(3), n, opt).ok());
  }
}

TEST_CASE("main equivalence by sampling on three points") {
  MainTheoremOptions opt;
  opt.exhaustive = false;
  opt.samples = 40;
  CHECK(verify_main_theorem(chain_frame(3), 3, opt).ok());
  CHECK(verify_main_theorem(cost_chain(2), 3, opt).ok());
}

TEST_CASE("the equivalence needs complete distributivity") {
  // The diamond with the meet tensor is not ccd.
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
  MainTheoremOptions opt;
  CHECK_THROWS_AS(verify_main_theorem(q, 2, opt), CapabilityError);
}

TEST_CASE("membership relation is a morphism of extensions") {
  for (QPtr q : {two_chain(), chain_frame(3), cost_chain(2)}) {
    CAPTURE(q->name);
    CHECK(check_membership_morphism(q, 2).ok());
  }
  CHECK(check_membership_morphism(two_chain(), 3).ok());
}

TEST_CASE("probabilistic convergence structures") {
  auto g = make_delta_grid({0.0, 1.0}, {0.0, 0.5, 1.0}, TNorm::Min);
  for (const auto& l : sample_convergence_algebras(g.q, 2, 30, 23))
    CHECK(check_probapp_convergence(l).ok());
  ConvergenceStructure bad(g.q, 2);
  CHECK_FALSE(check_probapp_convergence(bad).ok());
}
