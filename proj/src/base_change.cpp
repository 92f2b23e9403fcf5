#include "vapp/base_change.hpp"

#include <random>
#include <string>

#include "vapp/finite_set.hpp"

namespace vapp {

namespace {

std::size_t cells_of(GraphKind kind, int n) {
  return kind == GraphKind::Powerset ? (std::size_t{1} << n) * n
                                     : std::size_t(n) * n;
}

BaseGraph blank_graph(GraphKind kind, QPtr q, int n) {
  BaseGraph g;
  g.kind = kind;
  g.q = std::move(q);
  g.n = n;
  g.tab.assign(cells_of(kind, n), g.q->bot());
  return g;
}

bool graph_leq(const BaseGraph& a, const BaseGraph& b) {
  for (std::size_t i = 0; i < a.tab.size(); ++i)
    if (!a.q->leq(a.tab[i], b.tab[i])) return false;
  return true;
}

BaseGraph random_graph(GraphKind kind, QPtr q, int n, std::mt19937_64& rng) {
  BaseGraph g = blank_graph(kind, std::move(q), n);
  for (auto& v : g.tab) v = static_cast<Elt>(rng() % g.q->size());
  return g;
}

// The sampling helpers always produce valid algebras of their kind.
std::vector<BaseGraph> sample_algebras(GraphKind kind, QPtr q, int n,
                                       int count, std::uint64_t seed) {
  std::vector<BaseGraph> out;
  if (kind == GraphKind::Powerset) {
    for (const auto& c : sample_approach_structures(q, n, count, seed))
      out.push_back(BaseGraph::from_distance(c));
  } else {
    for (const auto& l : sample_convergence_algebras(q, n, count, seed)) {
      auto g = BaseGraph::from_convergence(l);
      g.kind = kind;
      out.push_back(std::move(g));
    }
  }
  return out;
}

LawReport check_category(const BaseGraph& g) {
  LawReport rep;
  const Quantale& q = *g.q;
  const int n = g.n;
  for (int x = 0; x < n; ++x)
    if (!q.leq(q.unit, g.tab[x * n + x]))
      rep.add("category/reflexivity", "x=" + std::to_string(x));
  for (int x = 0; x < n && rep.ok(); ++x)
    for (int y = 0; y < n && rep.ok(); ++y)
      for (int z = 0; z < n && rep.ok(); ++z)
        if (!q.leq(q.tensor(g.tab[x * n + y], g.tab[y * n + z]),
                   g.tab[x * n + z]))
          rep.add("category/transitivity",
                  "x=" + std::to_string(x) + " y=" + std::to_string(y) +
                      " z=" + std::to_string(z));
  return rep;
}

}  // namespace

BaseGraph BaseGraph::from_distance(const DistanceStructure& c) {
  BaseGraph g;
  g.kind = GraphKind::Powerset;
  g.q = c.q;
  g.n = c.n;
  g.tab = c.tab;
  return g;
}

BaseGraph BaseGraph::from_convergence(const ConvergenceStructure& l) {
  BaseGraph g;
  g.kind = GraphKind::Ultrafilter;
  g.q = l.q;
  g.n = l.n;
  g.tab = l.ell;
  return g;
}

DistanceStructure BaseGraph::to_distance() const {
  DistanceStructure c(q, n);
  c.tab = tab;
  return c;
}

ConvergenceStructure BaseGraph::to_convergence() const {
  ConvergenceStructure l(q, n);
  l.ell = tab;
  return l;
}

LawReport check_graph_algebra(const BaseGraph& g) {
  switch (g.kind) {
    case GraphKind::Powerset:
      return check_closure(g.to_distance());
    case GraphKind::Ultrafilter:
      return check_convergence_algebra(g.to_convergence());
    case GraphKind::Category:
      return check_category(g);
  }
  return {};
}

LawReport check_graph_map(const BaseGraph& gx, const BaseGraph& gy,
                          const std::vector<int>& f) {
  switch (gx.kind) {
    case GraphKind::Powerset:
      return check_contractive(gx.to_distance(), gy.to_distance(), f);
    case GraphKind::Ultrafilter:
      return check_convergent_map(gx.to_convergence(), gy.to_convergence(),
                                  f);
    case GraphKind::Category:
      break;
  }
  LawReport rep;
  const int n = gx.n, m = gy.n;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (!gy.q->leq(gx.tab[x * n + y], gy.tab[f[x] * m + f[y]]))
        rep.add("map/category",
                "x=" + std::to_string(x) + " y=" + std::to_string(y));
  return rep;
}

BaseGraph change_base(const MonotoneMap& phi, const BaseGraph& g) {
  BaseGraph out = g;
  out.q = phi.target;
  for (auto& v : out.tab) v = phi(v);
  return out;
}

BaseGraph reflect(const BaseGraph& g) {
  if (g.kind == GraphKind::Powerset && g.n > 4)
    throw CapabilityError("reflect: powerset carrier too large");
  BaseGraph c = g;
  const Quantale& q = *c.q;
  const int n = c.n;
  bool changed = true;
  auto raise = [&](Elt& cell, Elt v) {
    Elt j = q.join(cell, v);
    if (j != cell) {
      cell = j;
      changed = true;
    }
  };
  while (changed) {
    changed = false;
    if (c.kind == GraphKind::Powerset) {
      const Mask np = Mask{1} << n;
      for (int x = 0; x < n; ++x)
        raise(c.tab[(Mask{1} << x) * n + x], q.unit);
      for (Mask fam = 0; fam < (Mask{1} << np); ++fam) {
        Mask uni = 0;
        for (Mask A = 0; A < np; ++A)
          if (mask_has(fam, static_cast<int>(A))) uni |= A;
        for (Mask B = 0; B < np; ++B) {
          Elt u = q.top();
          for (int y = 0; y < n && u != q.bot(); ++y) {
            if (!mask_has(B, y)) continue;
            Elt best = q.bot();
            for (Mask A = 0; A < np; ++A)
              if (mask_has(fam, static_cast<int>(A)))
                best = q.join(best, c.tab[A * n + y]);
            u = q.meet(u, best);
          }
          if (u == q.bot()) continue;
          for (int z = 0; z < n; ++z)
            raise(c.tab[uni * n + z], q.tensor(u, c.tab[B * n + z]));
        }
      }
    } else {
      for (int x = 0; x < n; ++x) raise(c.tab[x * n + x], q.unit);
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          for (int z = 0; z < n; ++z)
            raise(c.tab[x * n + z],
                  q.tensor(c.tab[x * n + y], c.tab[y * n + z]));
    }
  }
  return c;
}

BaseGraph change_base_reflected(const MonotoneMap& phi, const BaseGraph& g) {
  return reflect(change_base(phi, g));
}

LawReport check_reflect_minimal(QPtr q, GraphKind kind, int n, int count,
                                std::uint64_t seed) {
  LawReport rep;
  std::vector<BaseGraph> all;
  if (kind == GraphKind::Powerset) {
    for (const auto& c : enumerate_closure_structures(q, n))
      all.push_back(BaseGraph::from_distance(c));
  } else {
    // Square-table algebras: scan every table.
    double total = 1;
    for (int i = 0; i < n * n; ++i) total *= q->size();
    if (total > double(1 << 22))
      throw CapabilityError("check_reflect_minimal: table space too large");
    BaseGraph g = blank_graph(kind, q, n);
    for (;;) {
      if (check_graph_algebra(g).ok()) all.push_back(g);
      int i = 0;
      while (i < n * n && g.tab[i] == q->size() - 1) g.tab[i++] = q->bot();
      if (i == n * n) break;
      ++g.tab[i];
    }
  }
  std::mt19937_64 rng(seed);
  // The two extreme graphs come first, then the random sample.
  for (int trial = -2; trial < count; ++trial) {
    BaseGraph g;
    std::string tag;
    if (trial == -2) {
      g = blank_graph(kind, q, n);
      tag = "all-bottom";
    } else if (trial == -1) {
      g = blank_graph(kind, q, n);
      for (auto& v : g.tab) v = q->top();
      tag = "all-top";
    } else {
      g = random_graph(kind, q, n, rng);
      tag = "trial=" + std::to_string(trial);
    }
    BaseGraph r = reflect(g);
    if (!check_graph_algebra(r).ok()) rep.add("reflect/not-algebra", tag);
    if (!graph_leq(g, r)) rep.add("reflect/not-inflationary", tag);
    if (!(reflect(r) == r)) rep.add("reflect/not-idempotent", tag);
    // Monotonicity against a larger graph.
    BaseGraph h = random_graph(kind, q, n, rng);
    for (std::size_t i = 0; i < h.tab.size(); ++i)
      h.tab[i] = q->join(h.tab[i], g.tab[i]);
    if (!graph_leq(r, reflect(h))) rep.add("reflect/not-monotone", tag);
    // Oracle: meet of every valid structure above g.
    BaseGraph oracle = blank_graph(kind, q, n);
    for (auto& v : oracle.tab) v = q->top();
    bool any = false;
    for (const auto& s : all) {
      if (!graph_leq(g, s)) continue;
      any = true;
      for (std::size_t i = 0; i < oracle.tab.size(); ++i)
        oracle.tab[i] = q->meet(oracle.tab[i], s.tab[i]);
    }
    if (!any || !(oracle == r)) rep.add("reflect/not-least", tag);
    if (!rep.ok()) break;
  }
  return rep;
}

bool maps_are_adjoint(const MonotoneMap& phi, const MonotoneMap& psi) {
  if (!is_monotone(phi) || !is_monotone(psi)) return false;
  if (phi.target->size() != psi.source->size() ||
      phi.source->size() != psi.target->size())
    return false;
  for (Elt a = 0; a < phi.source->size(); ++a)
    for (Elt b = 0; b < phi.target->size(); ++b)
      if (phi.target->leq(phi(a), b) != phi.source->leq(a, psi(b)))
        return false;
  return true;
}

LawReport verify_change_of_base_adjunction(const MonotoneMap& phi,
                                           const MonotoneMap& psi,
                                           GraphKind kind, int n, int samples,
                                           std::uint64_t seed) {
  LawReport rep;
  if (!maps_are_adjoint(phi, psi)) {
    rep.add("cob/maps-not-adjoint", phi.name + " -| " + psi.name);
    return rep;
  }
  if (!classify_hom(psi).lax) {
    rep.add("cob/psi-not-lax", psi.name);
    return rep;
  }
  QPtr v = phi.source, w = phi.target;
  auto as = sample_algebras(kind, v, n, samples, seed);
  auto bs = sample_algebras(kind, w, n, samples, seed + 1);
  const std::size_t pairs = std::min(as.size(), bs.size());
  for (std::size_t i = 0; i < pairs && rep.ok(); ++i) {
    const std::string tag = "sample=" + std::to_string(i);
    const BaseGraph& a = as[i];
    const BaseGraph& b = bs[i];
    BaseGraph la = change_base_reflected(phi, a);
    BaseGraph rb = change_base(psi, b);
    if (!check_graph_algebra(la).ok())
      rep.add("cob/left-functor-not-algebra", tag);
    if (!check_graph_algebra(rb).ok())
      rep.add("cob/right-functor-not-algebra", tag);
    if (!graph_leq(a, change_base(psi, la))) rep.add("cob/unit", tag);
    if (!graph_leq(change_base_reflected(phi, change_base(psi, b)), b))
      rep.add("cob/counit", tag);
    // Hom-sets agree: f is a map la -> b iff it is a map a -> rb.
    std::vector<int> f(n, 0);
    for (;;) {
      bool upper = check_graph_map(la, b, f).ok();
      bool lower = check_graph_map(a, rb, f).ok();
      if (upper != lower) {
        std::string wf = tag + " f=";
        for (int x : f) wf += std::to_string(x);
        rep.add("cob/hom-mismatch", wf);
        break;
      }
      int j = 0;
      while (j < n && f[j] == n - 1) f[j++] = 0;
      if (j == n) break;
      ++f[j];
    }
  }
  return rep;
}

LawReport probe_functor_adjunction(const MonotoneMap& phi,
                                   const MonotoneMap& psi, GraphKind kind) {
  LawReport rep;
  QPtr v = phi.source, w = phi.target;
  if (!classify_hom(psi).lax) {
    rep.add("functor/psi-not-lax", psi.name);
    return rep;
  }
  // The two-point symmetric structure with the given off-diagonal value.
  auto two_point = [&](QPtr q, Elt off) {
    BaseGraph g = blank_graph(kind, q, 2);
    if (kind == GraphKind::Powerset) {
      DistanceStructure c(q, 2);
      for (Mask A = 1; A < 4; ++A)
        for (int x = 0; x < 2; ++x)
          c.at(A, x) = mask_has(A, x) ? q->unit : off;
      g.tab = c.tab;
    } else {
      g.tab = {q->unit, off, off, q->unit};
    }
    return g;
  };
  for (Elt u = 0; u < v->size() && rep.ok(); ++u) {
    BaseGraph a = two_point(v, u);
    if (!graph_leq(a, change_base(psi, change_base_reflected(phi, a))))
      rep.add("functor/unit", "off-diagonal " + v->label(u));
  }
  for (Elt t = 0; t < w->size() && rep.ok(); ++t) {
    BaseGraph b = two_point(w, t);
    if (!check_graph_algebra(change_base(psi, b)).ok())
      rep.add("functor/psi-image-not-algebra", "off-diagonal " + w->label(t));
    else if (!graph_leq(change_base_reflected(phi, change_base(psi, b)), b))
      rep.add("functor/counit", "off-diagonal " + w->label(t));
  }
  return rep;
}

LawReport verify_adjunction_equivalence(const MonotoneMap& phi,
                                        const MonotoneMap& psi,
                                        GraphKind kind) {
  QPtr v = phi.source, w = phi.target;
  if (!is_integral(*v) || !is_integral(*w) || !is_ccd(*v) || !is_ccd(*w))
    throw CapabilityError(
        "adjunction equivalence needs integral ccd quantales");
  LawReport rep;
  const bool adj = maps_are_adjoint(phi, psi);
  LawReport probe = probe_functor_adjunction(phi, psi, kind);
  if (adj && !probe.ok())
    rep.add("equivalence/maps-adjoint-but-functors-not",
            probe.violations[0].law + " at " + probe.violations[0].witness);
  if (!adj && probe.ok())
    rep.add("equivalence/functors-adjoint-but-maps-not",
            phi.name + " -| " + psi.name);
  return rep;
}

MonotoneMap iota_map(QPtr v) {
  MonotoneMap f;
  f.source = two_chain();
  f.target = std::move(v);
  f.table = {f.target->bot(), f.target->unit};
  f.name = "iota";
  return f;
}

MonotoneMap pi_map(QPtr v) {
  MonotoneMap f;
  f.source = v;
  f.target = two_chain();
  f.table.resize(v->size());
  for (Elt a = 0; a < v->size(); ++a)
    f.table[a] = v->leq(v->unit, a) ? f.target->top() : f.target->bot();
  f.name = "pi";
  return f;
}

MonotoneMap o_map(QPtr v) {
  if (!is_integral(*v))
    throw CapabilityError("o_map needs an integral quantale");
  MonotoneMap f;
  f.source = v;
  f.target = two_chain();
  f.table.resize(v->size());
  for (Elt a = 0; a < v->size(); ++a)
    f.table[a] = a == v->bot() ? f.target->bot() : f.target->top();
  f.name = "o";
  return f;
}

namespace {

void require_matching_times(QPtr cost, const DeltaGrid& g) {
  const int m = static_cast<int>(g.times.size());
  if (cost->size() != m + 1)
    throw StructuralError("cost chain and time grid sizes differ");
  for (int i = 0; i < m; ++i)
    if (g.times[i] != double(i))
      throw StructuralError("time grid must be 0,1,...,m-1 to pair with a "
                            "cost chain");
}

}  // namespace

MonotoneMap sigma_map(QPtr cost, const DeltaGrid& g) {
  require_matching_times(cost, g);
  const int m = static_cast<int>(g.times.size());
  MonotoneMap f;
  f.source = std::move(cost);
  f.target = g.q;
  f.table.resize(m + 1);
  for (int i = 0; i <= m; ++i) f.table[i] = g.sigma(i);
  f.name = "sigma";
  return f;
}

MonotoneMap rho_map(const DeltaGrid& g, QPtr cost) {
  require_matching_times(cost, g);
  const int m = static_cast<int>(g.times.size());
  const int one = static_cast<int>(g.values.size()) - 1;
  MonotoneMap f;
  f.source = g.q;
  f.target = std::move(cost);
  f.table.resize(g.q->size());
  for (Elt e = 0; e < g.q->size(); ++e) {
    const auto& vec = g.elems[e];
    int j = m;
    while (j > 0 && vec[j - 1] == one) --j;
    // Every interval from j on has value 1; j == m means it never does.
    f.table[e] = j;
  }
  f.name = "rho";
  return f;
}

MonotoneMap lambda_map(const DeltaGrid& g, QPtr cost) {
  require_matching_times(cost, g);
  const int m = static_cast<int>(g.times.size());
  MonotoneMap f;
  f.source = g.q;
  f.target = std::move(cost);
  f.table.resize(g.q->size());
  for (Elt e = 0; e < g.q->size(); ++e) {
    const auto& vec = g.elems[e];
    int j = 0;
    while (j < m && vec[j] == 0) ++j;
    // The function is 0 up to and including time j; j == m means always.
    f.table[e] = j;
  }
  f.name = "lambda";
  return f;
}

MonotoneMap down_map(const DownsetQuantale& d) {
  MonotoneMap f;
  f.source = d.base;
  f.target = d.q;
  f.table.resize(d.base->size());
  for (Elt v = 0; v < d.base->size(); ++v) {
    std::uint32_t mask = 0;
    for (Elt u = 0; u < d.base->size(); ++u)
      if (d.base->leq(u, v)) mask |= std::uint32_t{1} << u;
    f.table[v] = d.index_of(mask);
  }
  f.name = "down";
  return f;
}

MonotoneMap sup_map(const DownsetQuantale& d) {
  MonotoneMap f;
  f.source = d.q;
  f.target = d.base;
  f.table.resize(d.q->size());
  for (Elt a = 0; a < d.q->size(); ++a) {
    Elt acc = d.base->bot();
    for (Elt u = 0; u < d.base->size(); ++u)
      if (d.elem_masks[a] & (std::uint32_t{1} << u))
        acc = d.base->join(acc, u);
    f.table[a] = acc;
  }
  f.name = "sup";
  return f;
}

MonotoneMap totally_below_map(const DownsetQuantale& d) {
  MonotoneMap f;
  f.source = d.base;
  f.target = d.q;
  f.table.resize(d.base->size());
  for (Elt v = 0; v < d.base->size(); ++v) {
    std::uint32_t mask = 0;
    for (Elt u = 0; u < d.base->size(); ++u)
      if (totally_below(*d.base, u, v)) mask |= std::uint32_t{1} << u;
    f.table[v] = d.index_of(mask);
  }
  f.name = "tot-below";
  return f;
}

LawReport verify_embedding_corollaries(QPtr v, GraphKind kind, int n,
                                       int samples, std::uint64_t seed) {
  LawReport rep;
  MonotoneMap iota = iota_map(v);
  MonotoneMap pi = pi_map(v);
  const bool integral = is_integral(*v);
  auto gs = sample_algebras(kind, two_chain(), n, samples, seed);
  for (std::size_t i = 0; i < gs.size() && rep.ok(); ++i) {
    const std::string tag = "sample=" + std::to_string(i);
    BaseGraph lifted = change_base(iota, gs[i]);
    if (!check_graph_algebra(lifted).ok()) rep.add("embed/not-algebra", tag);
    if (!(change_base(pi, lifted) == gs[i]))
      rep.add("embed/coreflection-retract", tag);
    if (integral &&
        !(change_base_reflected(o_map(v), lifted) == gs[i]))
      rep.add("embed/reflection-retract", tag);
  }
  // Fullness and faithfulness: the same maps are morphisms before and
  // after lifting.
  for (std::size_t i = 0; i + 1 < gs.size() && rep.ok(); ++i) {
    BaseGraph la = change_base(iota, gs[i]);
    BaseGraph lb = change_base(iota, gs[i + 1]);
    std::vector<int> f(n, 0);
    for (;;) {
      if (check_graph_map(gs[i], gs[i + 1], f).ok() !=
          check_graph_map(la, lb, f).ok()) {
        std::string wf = "pair=" + std::to_string(i) + " f=";
        for (int x : f) wf += std::to_string(x);
        rep.add("embed/not-full", wf);
        break;
      }
      int j = 0;
      while (j < n && f[j] == n - 1) f[j++] = 0;
      if (j == n) break;
      ++f[j];
    }
  }
  return rep;
}

}  // namespace vapp
