#include "vapp/suites.hpp"

#include <atomic>
#include <random>
#include <thread>

#include "vapp/base_change.hpp"
#include "vapp/builtins.hpp"
#include "vapp/convergence.hpp"
#include "vapp/finite_set.hpp"
#include "vapp/monotone_map.hpp"
#include "vapp/quantale.hpp"
#include "vapp/spaces.hpp"
#include "vapp/vrel.hpp"

namespace vapp {

namespace {

QPtr small_grid(TNorm t) {
  return make_delta_grid({0.0, 1.0}, {0.0, 0.5, 1.0}, t).q;
}

/// Three-chain with the middle element as unit: the stock example of a
/// non-integral quantale.
QPtr middle_unit_chain() {
  auto q = std::make_shared<Quantale>();
  q->name = "three_chain_mid";
  q->labels = {"0", "1", "2"};
  q->leq_tab.assign(9, 0);
  for (int a = 0; a < 3; ++a)
    for (int b = a; b < 3; ++b) q->leq_tab[a * 3 + b] = 1;
  q->finalize();
  q->tensor_tab.assign(9, 0);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      q->tensor_tab[a * 3 + b] =
          (a == 0 || b == 0) ? 0 : (a == 1 ? b : (b == 1 ? a : 2));
  q->unit = 1;
  return q;
}

/// Every distance table over q on n points, via an odometer.
template <typename F>
void for_each_table(QPtr q, int n, F&& f) {
  const int cells = (1 << n) * n;
  DistanceStructure c(q, n);
  for (auto& v : c.tab) v = 0;
  for (;;) {
    f(c);
    int i = 0;
    while (i < cells && c.tab[i] == q->size() - 1) c.tab[i++] = 0;
    if (i == cells) break;
    ++c.tab[i];
  }
}

bool layer_idempotent(const Tower& t) {
  const Quantale& q = *t.q;
  const Mask np = Mask{1} << t.n;
  for (Elt u = 0; u < q.size(); ++u)
    for (Elt v = 0; v < q.size(); ++v)
      for (Mask A = 0; A < np; ++A)
        if (t.ops[u][t.ops[v][A]] & ~t.ops[q.tensor(v, u)][A]) return false;
  return true;
}

SuiteResult suite_quantale_laws(const WorkbenchConfig&) {
  SuiteResult res{"quantale-laws", {}, {}};
  struct Case {
    std::string name;
    QPtr q;
  };
  std::vector<Case> cases = {
      {"two_chain", two_chain()},
      {"chain_frame:3", chain_frame(3)},
      {"cost_chain:3", cost_chain(3)},
      {"unit_grid:4:lukasiewicz", unit_grid(4, TNorm::Lukasiewicz)},
      {"delta_grid:0,1:0,0.5,1:lukasiewicz", small_grid(TNorm::Lukasiewicz)},
      {"downset:chain_frame:3", make_downset(chain_frame(3)).q},
  };
  for (const auto& c : cases) {
    LawReport rep = check_quantale(*c.q);
    res.report.merge(rep);
    bool ccd = is_ccd(*c.q);
    bool integral = is_integral(*c.q);
    res.fact(c.name + ".laws", rep.ok() ? "ok" : rep.summary());
    res.fact(c.name + ".ccd", ccd ? "true" : "false");
    res.fact(c.name + ".integral", integral ? "true" : "false");
    if (!ccd) res.report.add("suite/ccd-expected", c.name);
    if (!integral) res.report.add("suite/integral-expected", c.name);
  }
  // Downsets inherit integrality from the base, and only from the base.
  auto non_integral = make_downset(middle_unit_chain());
  res.fact("downset:three_chain_mid.integral",
           is_integral(*non_integral.q) ? "true" : "false");
  if (is_integral(*non_integral.q))
    res.report.add("suite/downset-integrality", "non-integral base");
  return res;
}

SuiteResult suite_lax_laws(const WorkbenchConfig& cfg) {
  SuiteResult res{"lax-laws", {}, {}};
  LaxLawOptions opt;
  opt.max_exhaustive = std::min(cfg.max_exhaustive_size, 2);
  opt.samples = cfg.sample_count;
  opt.seed = cfg.seed;
  for (QPtr q : {two_chain(), chain_frame(3)}) {
    LawReport p = check_lax_law_powerset(q, opt);
    LawReport u = check_lax_law_ultra(q, opt);
    res.fact(q->name + ".powerset", p.ok() ? "ok" : p.summary());
    res.fact(q->name + ".ultrafilter", u.ok() ? "ok" : u.summary());
    res.report.merge(p);
    res.report.merge(u);
  }
  // A law that forgets the unit condition must be flagged.
  AlphaEval broken = [](const Quantale& q, const std::vector<VFun>&,
                        Mask) { return q.bot(); };
  LawReport bad = check_lax_law_powerset(two_chain(), opt, &broken);
  res.fact("corrupted-law-caught", bad.ok() ? "false" : "true");
  if (bad.ok()) res.report.add("suite/corrupted-law-not-caught", "alpha");
  return res;
}

SuiteResult suite_tower_bijection(const WorkbenchConfig& cfg) {
  SuiteResult res{"tower-bijection", {}, {}};
  const int n = std::min(cfg.max_exhaustive_size, 2);
  for (QPtr q : {two_chain(), chain_frame(3)}) {
    int closures = 0;
    for_each_table(q, n, [&](const DistanceStructure& c) {
      if (!res.report.ok()) return;
      Tower t = to_tower(c);
      bool closure = check_closure(c).ok();
      bool tower_ok = check_tower(t, TowerMode::Closure).ok();
      if (closure != tower_ok)
        res.report.add("bijection/axiom-transfer", q->name);
      if (closure) {
        ++closures;
        if (!(from_tower(t) == c))
          res.report.add("bijection/distance-round-trip", q->name);
      }
      if (layer_idempotent(t) != check_mixed_idempotence(c).ok())
        res.report.add("bijection/c3-equivalence", q->name);
    });
    // All towers: the bottom layer is forced to the whole carrier, the
    // rest ranges freely.
    const Mask np = Mask{1} << n;
    int valid_towers = 0;
    Tower t;
    t.q = q;
    t.n = n;
    t.ops.assign(q->size(), std::vector<Mask>(np, 0));
    for (Mask A = 0; A < np; ++A) t.ops[q->bot()][A] = full_mask(n);
    std::vector<int> free_levels;
    for (Elt v = 0; v < q->size(); ++v)
      if (v != q->bot()) free_levels.push_back(v);
    const int cells = static_cast<int>(free_levels.size()) * np;
    std::vector<int> odo(cells, 0);
    for (;;) {
      for (int i = 0; i < cells; ++i)
        t.ops[free_levels[i / np]][i % np] = static_cast<Mask>(odo[i]);
      if (check_tower(t, TowerMode::Closure).ok()) {
        ++valid_towers;
        DistanceStructure c = from_tower(t);
        if (!check_closure(c).ok())
          res.report.add("bijection/from-tower-not-closure", q->name);
        Tower back = to_tower(c);
        if (back.ops != t.ops)
          res.report.add("bijection/tower-round-trip", q->name);
      }
      int i = 0;
      while (i < cells && odo[i] == static_cast<int>(np) - 1) odo[i++] = 0;
      if (i == cells) break;
      ++odo[i];
    }
    if (valid_towers != closures)
      res.report.add("bijection/count-mismatch",
                     q->name + " towers=" + std::to_string(valid_towers) +
                         " closures=" + std::to_string(closures));
    res.fact(q->name + ".closure-structures", std::to_string(closures));
    res.fact(q->name + ".valid-towers", std::to_string(valid_towers));
  }
  return res;
}

SuiteResult suite_approach_equivalence(const WorkbenchConfig& cfg) {
  SuiteResult res{"approach-equivalence", {}, {}};
  const int n = std::min(cfg.max_exhaustive_size, 2);
  for (QPtr q : {two_chain(), chain_frame(3)}) {
    int approaches = 0;
    for (const auto& c : enumerate_closure_structures(q, n)) {
      Tower t = to_tower(c);
      bool extras = check_approach_extras(c).ok();
      bool ll = check_tower(t, TowerMode::Approach).ok();
      bool cp = check_tower(t, TowerMode::CoprimeApproach).ok();
      if (extras != ll || extras != cp) {
        res.report.add("approach/characterization-mismatch", q->name);
        break;
      }
      if (extras) ++approaches;
    }
    if (approaches !=
        static_cast<int>(enumerate_approach_structures(q, n).size()))
      res.report.add("approach/count-mismatch", q->name);
    res.fact(q->name + ".approach-structures", std::to_string(approaches));
  }
  return res;
}

SuiteResult suite_topology_counts(const WorkbenchConfig&) {
  SuiteResult res{"topology-counts", {}, {}};
  const int expected[4] = {1, 1, 4, 29};
  auto q = two_chain();
  for (int n = 0; n <= 3; ++n) {
    int via_approach =
        static_cast<int>(enumerate_approach_structures(q, n).size());
    int via_convergence =
        static_cast<int>(enumerate_convergence_algebras(q, n).size());
    // Independent oracle: raw scan over all subset operators for the
    // Kuratowski axioms.
    int via_kuratowski = 0;
    const Mask np = Mask{1} << n;
    std::vector<Mask> cl(np, 0);
    for (;;) {
      bool ok = cl[0] == 0;
      for (Mask A = 0; ok && A < np; ++A) ok = (A & ~cl[A]) == 0;
      for (Mask A = 0; ok && A < np; ++A)
        for (Mask B = 0; ok && B < np; ++B)
          ok = cl[A | B] == (cl[A] | cl[B]);
      for (Mask A = 0; ok && A < np; ++A) ok = cl[cl[A]] == cl[A];
      if (ok) ++via_kuratowski;
      Mask i = 0;
      while (i < np && cl[i] == np - 1) cl[i++] = 0;
      if (i == np) break;
      ++cl[i];
    }
    res.fact("n=" + std::to_string(n),
             std::to_string(via_approach) + "/" +
                 std::to_string(via_convergence) + "/" +
                 std::to_string(via_kuratowski));
    if (via_approach != expected[n] || via_convergence != expected[n] ||
        via_kuratowski != expected[n])
      res.report.add("counts/mismatch", "n=" + std::to_string(n));
  }
  return res;
}

SuiteResult suite_main_theorem(const WorkbenchConfig& cfg) {
  SuiteResult res{"main-theorem", {}, {}};
  MainTheoremOptions opt;
  opt.samples = cfg.sample_count;
  opt.seed = cfg.seed;
  for (int n = 0; n <= 3; ++n) {
    LawReport r = verify_main_theorem(two_chain(), n, opt);
    res.report.merge(r);
  }
  res.fact("two_chain.exhaustive", res.report.ok() ? "ok" : "violated");
  for (QPtr q :
       {chain_frame(3), cost_chain(2), small_grid(TNorm::Lukasiewicz)}) {
    LawReport agg;
    for (int n = 0; n <= 2; ++n) {
      opt.exhaustive = true;
      agg.merge(verify_main_theorem(q, n, opt));
    }
    opt.exhaustive = false;
    agg.merge(verify_main_theorem(q, 3, opt));
    opt.exhaustive = true;
    res.fact(q->name, agg.ok() ? "ok" : agg.summary());
    res.report.merge(agg);
  }
  // A concrete non-approach closure structure whose round trip through
  // convergence is strictly smaller.
  bool found = false;
  for (const auto& c : enumerate_closure_structures(chain_frame(3), 2)) {
    if (is_approach(c)) continue;
    found = true;
    DistanceStructure back = induced_distance(induced_convergence(c));
    bool smaller = !(back == c);
    for (std::size_t i = 0; smaller && i < c.tab.size(); ++i)
      if (!c.q->leq(back.tab[i], c.tab[i])) smaller = false;
    if (!smaller)
      res.report.add("main/coreflection-not-strict", "chain_frame:3 n=2");
    break;
  }
  res.fact("strict-coreflection-witness", found ? "found" : "missing");
  if (!found)
    res.report.add("main/no-non-approach-witness", "chain_frame:3 n=2");
  return res;
}

SuiteResult suite_reflector(const WorkbenchConfig& cfg) {
  SuiteResult res{"reflector", {}, {}};
  const int n = std::min(cfg.max_exhaustive_size, 2);
  for (QPtr q : {two_chain(), chain_frame(3)}) {
    for (auto [kind, label] :
         {std::pair{GraphKind::Ultrafilter, ".ultrafilter"},
          std::pair{GraphKind::Category, ".category"},
          std::pair{GraphKind::Powerset, ".powerset"}}) {
      LawReport r = check_reflect_minimal(q, kind, n, cfg.sample_count,
                                          cfg.seed);
      res.fact(q->name + label, r.ok() ? "ok" : r.summary());
      res.report.merge(r);
    }
  }
  return res;
}

SuiteResult suite_base_change(const WorkbenchConfig& cfg) {
  SuiteResult res{"base-change", {}, {}};
  auto v = chain_frame(3);
  auto cost = cost_chain(1);
  auto grid = make_delta_grid({0.0, 1.0}, {0.0, 0.5, 1.0}, TNorm::Min);
  auto dq = make_downset(chain_frame(3));
  MonotoneMap i = iota_map(v), p = pi_map(v), o = o_map(v);
  MonotoneMap s = sigma_map(cost, grid), r = rho_map(grid, cost),
              l = lambda_map(grid, cost);
  MonotoneMap dn = down_map(dq), sp = sup_map(dq), tb = totally_below_map(dq);
  struct Chain {
    const char* name;
    const MonotoneMap* left;
    const MonotoneMap* right;
  };
  for (const Chain& a : {Chain{"o -| iota", &o, &i}, {"iota -| pi", &i, &p},
                         {"lambda -| sigma", &l, &s},
                         {"sigma -| rho", &s, &r},
                         {"tot-below -| sup", &tb, &sp},
                         {"sup -| down", &sp, &dn}}) {
    bool ok = maps_are_adjoint(*a.left, *a.right);
    res.fact(a.name, ok ? "true" : "false");
    if (!ok) res.report.add("cob/expected-adjunction", a.name);
  }
  res.report.merge(verify_change_of_base_adjunction(
      i, p, GraphKind::Ultrafilter, 3, 10, cfg.seed));
  res.report.merge(verify_change_of_base_adjunction(
      i, p, GraphKind::Powerset, 2, 10, cfg.seed));
  for (GraphKind kind : {GraphKind::Ultrafilter, GraphKind::Category,
                         GraphKind::Powerset}) {
    res.report.merge(verify_adjunction_equivalence(i, p, kind));
    res.report.merge(verify_adjunction_equivalence(o, i, kind));
  }
  // Negative case: the identity paired with the constant top map is not an
  // adjunction, and the probe exhibits the failing instance.
  MonotoneMap top_map;
  top_map.source = v;
  top_map.target = v;
  top_map.table.assign(v->size(), v->top());
  top_map.name = "const-top";
  LawReport probe =
      probe_functor_adjunction(identity_map(v), top_map,
                               GraphKind::Ultrafilter);
  if (probe.ok()) {
    res.report.add("cob/negative-case-undetected", "id -| const-top");
  } else {
    res.fact("negative-counterexample",
             probe.violations[0].law + " " + probe.violations[0].witness);
  }
  res.report.merge(verify_adjunction_equivalence(identity_map(v), top_map,
                                                 GraphKind::Ultrafilter));
  // Both retractions of the embedding, on every topology with at most
  // three points.
  int topologies = 0;
  for (int n = 0; n <= 3; ++n)
    for (const auto& alg : enumerate_convergence_algebras(two_chain(), n)) {
      ++topologies;
      BaseGraph g = BaseGraph::from_convergence(alg);
      BaseGraph lifted = change_base(i, g);
      if (!(change_base(p, lifted) == g))
        res.report.add("cob/coreflection-retract", "n=" + std::to_string(n));
      if (!(change_base_reflected(o, lifted) == g))
        res.report.add("cob/reflection-retract", "n=" + std::to_string(n));
    }
  res.fact("retraction-checked-topologies", std::to_string(topologies));
  // rho after sigma is the identity, entrywise on sampled structures.
  for (const auto& alg :
       sample_convergence_algebras(cost, 3, 50, cfg.seed + 2)) {
    BaseGraph g = BaseGraph::from_convergence(alg);
    if (!(change_base(r, change_base(s, g)) == g)) {
      res.report.add("cob/rho-sigma-not-identity", "sampled structure");
      break;
    }
  }
  res.report.merge(
      verify_embedding_corollaries(v, GraphKind::Ultrafilter, 3, 15,
                                   cfg.seed));
  res.report.merge(
      verify_embedding_corollaries(v, GraphKind::Powerset, 2, 15, cfg.seed));
  return res;
}

SuiteResult suite_probapp(const WorkbenchConfig& cfg) {
  SuiteResult res{"probapp", {}, {}};
  auto g = make_delta_grid({0.0, 1.0}, {0.0, 0.5, 1.0}, TNorm::Lukasiewicz);
  int positives = 0;
  for_each_table(g.q, 1, [&](const DistanceStructure& c) {
    bool pa = check_probapp(c).ok();
    bool app = check_closure(c).ok() && check_approach_extras(c).ok();
    if (pa != app) res.report.add("probapp/mismatch", "n=1 full scan");
    if (pa) ++positives;
  });
  res.fact("n=1.structures", std::to_string(positives));
  std::mt19937_64 rng(cfg.seed);
  for (int trial = 0; trial < cfg.sample_count; ++trial) {
    DistanceStructure c(g.q, 2);
    for (auto& val : c.tab) val = static_cast<Elt>(rng() % g.q->size());
    bool pa = check_probapp(c).ok();
    bool app = check_closure(c).ok() && check_approach_extras(c).ok();
    if (pa != app) {
      res.report.add("probapp/mismatch", "trial=" + std::to_string(trial));
      break;
    }
  }
  int round_trips = 0;
  for (const auto& c :
       sample_approach_structures(g.q, 2, cfg.sample_count, cfg.seed + 1)) {
    if (!check_probapp(c).ok()) {
      res.report.add("probapp/approach-sample-rejected", "sampled");
      break;
    }
    LawReport conv = check_probapp_convergence(induced_convergence(c));
    if (!conv.ok()) {
      res.report.merge(conv);
      break;
    }
    if (!(induced_distance(induced_convergence(c)) == c)) {
      res.report.add("probapp/round-trip", "sampled");
      break;
    }
    ++round_trips;
  }
  res.fact("n=2.round-trips", std::to_string(round_trips));
  return res;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "quantale-laws",  "lax-laws",  "tower-bijection",
      "approach-equivalence", "main-theorem", "topology-counts",
      "reflector", "base-change", "probapp"};
  return names;
}

SuiteResult run_suite(const std::string& name, const WorkbenchConfig& cfg) {
  if (name == "quantale-laws") return suite_quantale_laws(cfg);
  if (name == "lax-laws") return suite_lax_laws(cfg);
  if (name == "tower-bijection") return suite_tower_bijection(cfg);
  if (name == "approach-equivalence") return suite_approach_equivalence(cfg);
  if (name == "main-theorem") return suite_main_theorem(cfg);
  if (name == "topology-counts") return suite_topology_counts(cfg);
  if (name == "reflector") return suite_reflector(cfg);
  if (name == "base-change") return suite_base_change(cfg);
  if (name == "probapp") return suite_probapp(cfg);
  throw StructuralError("unknown suite '" + name + "'");
}

std::vector<SuiteResult> run_all_suites(const WorkbenchConfig& cfg) {
  const auto& names = suite_names();
  std::vector<SuiteResult> out(names.size());
  const int workers =
      std::max(1, std::min<int>(cfg.workers, static_cast<int>(names.size())));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= names.size()) break;
      out[i] = run_suite(names[i], cfg);
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < workers; ++i) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  return out;
}

}  // namespace vapp
