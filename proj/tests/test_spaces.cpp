#include <algorithm>
#include <random>

#include "doctest.h"
#include "vapp/builtins.hpp"
#include "vapp/spaces.hpp"

using namespace vapp;

namespace {

DistanceStructure discrete(QPtr q, int n) {
  DistanceStructure c(q, n);
  for (Mask A = 0; A < (1u << n); ++A)
    for (int x = 0; x < n; ++x)
      if (mask_has(A, x)) c.at(A, x) = q->unit;
  return c;
}

// Every table whatsoever, for cross-checking the pruned enumeration.
std::vector<DistanceStructure> naive_closure_enum(QPtr q, int n) {
  std::vector<DistanceStructure> out;
  const int cells = (1 << n) * n;
  std::vector<Elt> cur(cells, 0);
  for (;;) {
    DistanceStructure c(q, n);
    c.tab = cur;
    if (check_closure(c).ok()) out.push_back(std::move(c));
    int i = 0;
    while (i < cells && cur[i] == q->size() - 1) cur[i++] = 0;
    if (i == cells) break;
    ++cur[i];
  }
  return out;
}

}  // namespace

TEST_CASE("the discrete structure is an approach structure") {
  for (QPtr q : {two_chain(), chain_frame(3), cost_chain(2)}) {
    auto c = discrete(q, 3);
    CHECK(check_approach(c).ok());
    auto t = to_tower(c);
    CHECK(check_tower(t, TowerMode::Closure).ok());
    CHECK(check_tower(t, TowerMode::Approach).ok());
    CHECK(check_tower(t, TowerMode::CoprimeApproach).ok());
  }
}

TEST_CASE("approach structure counts over the two chain are the topology "
          "counts") {
  auto q = two_chain();
  CHECK(enumerate_approach_structures(q, 0).size() == 1);
  CHECK(enumerate_approach_structures(q, 1).size() == 1);
  CHECK(enumerate_approach_structures(q, 2).size() == 4);
  CHECK(enumerate_approach_structures(q, 3).size() == 29);
}

TEST_CASE("pruned closure enumeration agrees with the naive scan") {
  for (QPtr q : {two_chain(), chain_frame(3)}) {
    for (int n = 0; n <= 2; ++n) {
      std::vector<std::vector<Elt>> fast, naive;
      for (const auto& c : enumerate_closure_structures(q, n))
        fast.push_back(c.tab);
      for (const auto& c : naive_closure_enum(q, n))
        naive.push_back(c.tab);
      std::sort(fast.begin(), fast.end());
      std::sort(naive.begin(), naive.end());
      CHECK(fast == naive);
    }
  }
}

TEST_CASE("tower round trip on every small closure structure") {
  auto q = chain_frame(3);
  for (const auto& c : enumerate_closure_structures(q, 2)) {
    auto t = to_tower(c);
    CHECK(check_tower(t, TowerMode::Closure).ok());
    CHECK(from_tower(t) == c);
  }
}

TEST_CASE("approach extras match the approach-mode tower axioms") {
  auto q = chain_frame(3);
  int approaches = 0;
  for (const auto& c : enumerate_closure_structures(q, 2)) {
    auto t = to_tower(c);
    bool extras = check_approach_extras(c).ok();
    CHECK(extras == check_tower(t, TowerMode::Approach).ok());
    CHECK(extras == check_tower(t, TowerMode::CoprimeApproach).ok());
    if (extras) ++approaches;
  }
  CHECK(approaches == static_cast<int>(
                          enumerate_approach_structures(q, 2).size()));
}

TEST_CASE("sampled structures are valid approach structures") {
  for (QPtr q : {two_chain(), chain_frame(3), cost_chain(2)}) {
    for (const auto& c : sample_approach_structures(q, 3, 25, 42)) {
      CHECK(check_closure(c).ok());
      CHECK(check_approach_extras(c).ok());
    }
  }
  auto g = make_delta_grid({0.0, 1.0}, {0.0, 0.5, 1.0}, TNorm::Min);
  for (const auto& c : sample_approach_structures(g.q, 2, 25, 42))
    CHECK(check_approach(c).ok());
}

TEST_CASE("contractivity coincides with tower continuity") {
  auto q = chain_frame(3);
  std::mt19937_64 rng(9);
  auto xs = sample_approach_structures(q, 3, 30, 5);
  auto ys = sample_approach_structures(q, 3, 30, 6);
  int agree_contractive = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    std::vector<int> f(3);
    for (auto& v : f) v = static_cast<int>(rng() % 3);
    bool m = check_contractive(xs[i], ys[i], f).ok();
    bool cont = check_continuity(to_tower(xs[i]), to_tower(ys[i]), f).ok();
    CHECK(m == cont);
    if (m) ++agree_contractive;
  }
  // The sample should exercise both outcomes.
  CHECK(agree_contractive > 0);
  CHECK(agree_contractive < static_cast<int>(xs.size()));
}

TEST_CASE("probabilistic axioms on the distance grid") {
  auto g = make_delta_grid({0.0, 1.0}, {0.0, 0.5, 1.0}, TNorm::Min);
  for (const auto& c : sample_approach_structures(g.q, 2, 40, 17)) {
    CHECK(check_probapp(c).ok());
    CHECK(is_approach(c));
  }
  // Breaking additivity breaks the axioms.
  auto c = discrete(g.q, 2);
  c.at(0b11, 0) = g.q->bot();
  CHECK_FALSE(check_probapp(c).ok());
  CHECK_FALSE(is_approach(c));
}

TEST_CASE("layer idempotence matches its mixed form on every table") {
  auto q = two_chain();
  const int n = 2;
  const int cells = (1 << n) * n;
  std::vector<Elt> cur(cells, 0);
  for (;;) {
    DistanceStructure c(q, n);
    c.tab = cur;
    auto t = to_tower(c);
    bool layered = true;
    for (Elt u = 0; u < q->size() && layered; ++u)
      for (Elt v = 0; v < q->size() && layered; ++v)
        for (Mask A = 0; A < 4 && layered; ++A)
          if (t.ops[u][t.ops[v][A]] & ~t.ops[q->tensor(v, u)][A])
            layered = false;
    CHECK(layered == check_mixed_idempotence(c).ok());
    int i = 0;
    while (i < cells && cur[i] == q->size() - 1) cur[i++] = 0;
    if (i == cells) break;
    ++cur[i];
  }
}

TEST_CASE("identity layers with a constant bottom layer form a tower") {
  // Identity on every layer above bottom; the bottom layer must be the
  // whole carrier.
  auto q = chain_frame(3);
  Tower t;
  t.q = q;
  t.n = 2;
  t.ops.assign(q->size(), std::vector<Mask>(4));
  for (Elt v = 0; v < q->size(); ++v)
    for (Mask A = 0; A < 4; ++A)
      t.ops[v][A] = (v == q->bot()) ? full_mask(2) : A;
  CHECK(check_tower(t, TowerMode::Closure).ok());
  CHECK(check_tower(t, TowerMode::Approach).ok());
  // Making the bottom layer the identity too violates layer coherence.
  t.ops[q->bot()][0b01] = 0b01;
  CHECK_FALSE(check_tower(t, TowerMode::Closure).ok());
}
