#include "vapp/spaces.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace vapp {

namespace {

std::string pt(const DistanceStructure& c, Mask A, int x) {
  return mask_label(A, default_point_names(c.n)) + ",x" + std::to_string(x);
}

}  // namespace

LawReport check_closure(const DistanceStructure& c) {
  LawReport rep;
  const auto& q = *c.q;
  if (c.n > 4) throw CapabilityError("carrier too large for the family scan");
  for (int x = 0; x < c.n; ++x)
    if (!q.leq(q.unit, c.at(Mask{1} << x, x))) {
      rep.add("closure/reflexivity", "x" + std::to_string(x));
      return rep;
    }
  const int np = 1 << c.n;
  std::vector<Elt> g(c.n);
  for (std::uint64_t fam = 0; fam < (1ull << np); ++fam) {
    Mask uni = 0;
    for (int x = 0; x < c.n; ++x) g[x] = q.bot();
    for (int A = 0; A < np; ++A) {
      if (!((fam >> A) & 1)) continue;
      uni |= static_cast<Mask>(A);
      for (int x = 0; x < c.n; ++x) g[x] = q.join(g[x], c.at(A, x));
    }
    for (Mask B = 0; B < static_cast<Mask>(np); ++B) {
      Elt m = q.top();
      for (int y = 0; y < c.n; ++y)
        if (mask_has(B, y)) m = q.meet(m, g[y]);
      for (int z = 0; z < c.n; ++z)
        if (!q.leq(q.tensor(m, c.at(B, z)), c.at(uni, z))) {
          rep.add("closure/transitivity",
                  "family=" + std::to_string(fam) + "," + pt(c, B, z));
          return rep;
        }
    }
  }
  return rep;
}

LawReport check_approach_extras(const DistanceStructure& c) {
  LawReport rep;
  const auto& q = *c.q;
  for (int x = 0; x < c.n; ++x)
    if (c.at(0, x) != q.bot()) {
      rep.add("approach/empty-set", "x" + std::to_string(x));
      return rep;
    }
  const Mask np = 1u << c.n;
  for (Mask A = 0; A < np; ++A)
    for (Mask B = 0; B < np; ++B)
      for (int x = 0; x < c.n; ++x)
        if (c.at(A | B, x) != q.join(c.at(A, x), c.at(B, x))) {
          rep.add("approach/additivity", pt(c, A | B, x));
          return rep;
        }
  return rep;
}

LawReport check_approach(const DistanceStructure& c) {
  LawReport rep = check_closure(c);
  rep.merge(check_approach_extras(c));
  return rep;
}

bool is_approach(const DistanceStructure& c) { return check_approach(c).ok(); }

LawReport check_contractive(const DistanceStructure& cx,
                            const DistanceStructure& cy,
                            const std::vector<int>& f) {
  LawReport rep;
  const auto& q = *cx.q;
  for (Mask A = 0; A < (1u << cx.n); ++A) {
    Mask fa = 0;
    for (int x = 0; x < cx.n; ++x)
      if (mask_has(A, x)) fa |= 1u << f[x];
    for (int x = 0; x < cx.n; ++x)
      if (!q.leq(cx.at(A, x), cy.at(fa, f[x]))) {
        rep.add("map/contractivity", pt(cx, A, x));
        return rep;
      }
  }
  return rep;
}

Tower to_tower(const DistanceStructure& c) {
  Tower t;
  t.q = c.q;
  t.n = c.n;
  const int nv = c.q->size();
  const Mask np = 1u << c.n;
  t.ops.assign(nv, std::vector<Mask>(np, 0));
  for (Elt v = 0; v < nv; ++v)
    for (Mask A = 0; A < np; ++A)
      for (int x = 0; x < c.n; ++x)
        if (c.q->leq(v, c.at(A, x))) t.ops[v][A] |= 1u << x;
  return t;
}

DistanceStructure from_tower(const Tower& t) {
  DistanceStructure c(t.q, t.n);
  for (Elt v = 0; v < t.q->size(); ++v)
    for (Mask A = 0; A < (1u << t.n); ++A)
      for (int x = 0; x < t.n; ++x)
        if (mask_has(t.ops[v][A], x)) c.at(A, x) = t.q->join(c.at(A, x), v);
  return c;
}

LawReport check_tower(const Tower& t, TowerMode mode) {
  LawReport rep;
  const auto& q = *t.q;
  const int nv = q.size();
  const Mask np = 1u << t.n;
  if (nv > 16)
    throw CapabilityError("quantale too large for the layer-subset scan");
  auto lay = [&](Elt v, Mask A) { return t.ops[v][A]; };

  // Layer monotonicity.
  for (Elt v = 0; v < nv; ++v)
    for (Mask A = 0; A < np; ++A)
      for (Mask B = A;; B = (B - 1) & A) {
        if ((lay(v, B) & ~lay(v, A)) != 0) {
          rep.add("tower/monotone", q.label(v));
          return rep;
        }
        if (B == 0) break;
      }

  // Layer coherence: a layer below a join of layers contains their
  // intersection.  The empty collection forces the bottom layer to be
  // the whole carrier.
  for (std::uint32_t U = 0; U < (1u << nv); ++U) {
    std::vector<Elt> us;
    for (Elt u = 0; u < nv; ++u)
      if ((U >> u) & 1) us.push_back(u);
    Elt vj = q.join_all(us);
    for (Mask A = 0; A < np; ++A) {
      Mask inter = full_mask(t.n);
      for (Elt u : us) inter &= lay(u, A);
      for (Elt v = 0; v < nv; ++v)
        if (q.leq(v, vj) && (inter & ~lay(v, A)) != 0) {
          rep.add("tower/coherence", q.label(v));
          return rep;
        }
    }
  }

  // Extensivity at the unit layer.
  for (Mask A = 0; A < np; ++A)
    if ((A & ~lay(q.unit, A)) != 0) {
      rep.add("tower/extensive", mask_label(A, default_point_names(t.n)));
      return rep;
    }

  // Idempotence across layers.
  for (Elt u = 0; u < nv; ++u)
    for (Elt v = 0; v < nv; ++v)
      for (Mask A = 0; A < np; ++A)
        if ((lay(u, lay(v, A)) & ~lay(q.tensor(v, u), A)) != 0) {
          rep.add("tower/idempotent", q.pair_label(u, v));
          return rep;
        }

  if (mode == TowerMode::Approach) {
    if (!is_ccd(q))
      throw CapabilityError(
          "approach-mode tower axioms need a completely distributive "
          "quantale");
    for (Elt v = 0; v < nv; ++v) {
      if (v == q.bot()) continue;
      if (lay(v, 0) != 0) {
        rep.add("tower/empty-layer", q.label(v));
        return rep;
      }
      std::vector<Elt> tb;
      for (Elt u = 0; u < nv; ++u)
        if (totally_below(q, u, v)) tb.push_back(u);
      for (Mask A = 0; A < np; ++A)
        for (Mask B = 0; B < np; ++B) {
          Mask rhs = full_mask(t.n);
          for (Elt u : tb) rhs &= lay(u, A) | lay(u, B);
          if (lay(v, A | B) != rhs) {
            rep.add("tower/union-layer", q.label(v));
            return rep;
          }
        }
    }
  } else if (mode == TowerMode::CoprimeApproach) {
    if (!is_ccd(q))
      throw CapabilityError(
          "coprime-mode tower axioms need a completely distributive "
          "quantale");
    for (Elt p : coprimes(q).elements) {
      if (lay(p, 0) != 0) {
        rep.add("tower/empty-layer", q.label(p));
        return rep;
      }
      for (Mask A = 0; A < np; ++A)
        for (Mask B = 0; B < np; ++B)
          if (lay(p, A | B) != (lay(p, A) | lay(p, B))) {
            rep.add("tower/union-layer", q.label(p));
            return rep;
          }
    }
  }
  return rep;
}

LawReport check_mixed_idempotence(const DistanceStructure& c) {
  LawReport rep;
  const Quantale& q = *c.q;
  const Mask np = Mask{1} << c.n;
  for (Elt v = 0; v < q.size(); ++v)
    for (Mask A = 0; A < np; ++A) {
      Mask layer = 0;
      for (int y = 0; y < c.n; ++y)
        if (q.leq(v, c.at(A, y))) layer |= Mask{1} << y;
      for (int x = 0; x < c.n; ++x)
        if (!q.leq(q.tensor(v, c.at(layer, x)), c.at(A, x))) {
          rep.add("tower/mixed-idempotence",
                  "v=" + q.label(v) + " A=" +
                      mask_label(A, default_point_names(c.n)) +
                      " x=x" + std::to_string(x));
          return rep;
        }
    }
  return rep;
}

LawReport check_continuity(const Tower& tx, const Tower& ty,
                           const std::vector<int>& f) {
  LawReport rep;
  for (Elt v = 0; v < tx.q->size(); ++v)
    for (Mask A = 0; A < (1u << tx.n); ++A) {
      Mask fa = 0, fc = 0;
      for (int x = 0; x < tx.n; ++x) {
        if (mask_has(A, x)) fa |= 1u << f[x];
        if (mask_has(tx.ops[v][A], x)) fc |= 1u << f[x];
      }
      if ((fc & ~ty.ops[v][fa]) != 0) {
        rep.add("map/continuity", tx.q->label(v));
        return rep;
      }
    }
  return rep;
}

DistanceStructure approach_from_matrix(const VRelation& m) {
  DistanceStructure c(m.q, m.nx);
  for (Mask A = 0; A < (1u << m.nx); ++A)
    for (int x = 0; x < m.nx; ++x) {
      Elt acc = m.q->bot();
      for (int y = 0; y < m.nx; ++y)
        if (mask_has(A, y)) acc = m.q->join(acc, m.at(y, x));
      c.at(A, x) = acc;
    }
  return c;
}

std::vector<DistanceStructure> enumerate_approach_structures(QPtr q, int n) {
  const int nv = q->size();
  double total = 1;
  for (int i = 0; i < n * n; ++i) total *= nv;
  if (total > double{1 << 22})
    throw CapabilityError("too many point matrices to enumerate");
  std::vector<DistanceStructure> out;
  std::vector<Elt> cells(n * n, 0);
  for (;;) {
    bool reflexive = true;
    for (int x = 0; x < n && reflexive; ++x)
      if (!q->leq(q->unit, cells[x * n + x])) reflexive = false;
    if (reflexive) {
      VRelation m(q, n, n);
      m.tab = cells;
      auto c = approach_from_matrix(m);
      if (check_closure(c).ok()) out.push_back(std::move(c));
    }
    int i = 0;
    while (i < n * n && cells[i] == nv - 1) cells[i++] = 0;
    if (i == n * n) break;
    ++cells[i];
  }
  if (n == 0) {
    // The loop above ran once with an empty cell vector; keep exactly the
    // unique empty structure.
    out.clear();
    out.emplace_back(q, 0);
  }
  return out;
}

namespace {

void enumerate_closure_rec(QPtr q, int n,
                           const std::vector<Mask>& order, std::size_t idx,
                           const std::vector<VFun>& rows,
                           std::vector<int>& chosen,
                           std::vector<DistanceStructure>& out) {
  if (idx == order.size()) {
    DistanceStructure c(q, n);
    for (std::size_t i = 0; i < order.size(); ++i)
      for (int x = 0; x < n; ++x) c.at(order[i], x) = rows[chosen[i]][x];
    if (check_closure(c).ok()) out.push_back(std::move(c));
    return;
  }
  Mask A = order[idx];
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const VFun& row = rows[r];
    bool ok = true;
    // Reflexivity on singletons.
    if (mask_size(A) == 1) {
      int x = mask_elems(A)[0];
      if (!q->leq(q->unit, row[x])) ok = false;
    }
    // Monotonicity against already chosen strict subsets.
    for (std::size_t j = 0; j < idx && ok; ++j) {
      if ((order[j] & ~A) != 0) continue;
      const VFun& sub = rows[chosen[j]];
      for (int x = 0; x < n && ok; ++x)
        if (!q->leq(sub[x], row[x])) ok = false;
    }
    if (!ok) continue;
    chosen[idx] = static_cast<int>(r);
    enumerate_closure_rec(q, n, order, idx + 1, rows, chosen, out);
  }
}

}  // namespace

std::vector<DistanceStructure> enumerate_closure_structures(QPtr q, int n) {
  if (n > 3) throw CapabilityError("carrier too large to enumerate");
  auto rows = enumerate_vfuns(*q, n, 1u << 10);
  std::vector<Mask> order;
  for (Mask A = 0; A < (1u << n); ++A) order.push_back(A);
  std::sort(order.begin(), order.end(), [](Mask a, Mask b) {
    return mask_size(a) != mask_size(b) ? mask_size(a) < mask_size(b) : a < b;
  });
  std::vector<int> chosen(order.size(), 0);
  std::vector<DistanceStructure> out;
  enumerate_closure_rec(q, n, order, 0, rows, chosen, out);
  return out;
}

std::vector<DistanceStructure> sample_approach_structures(QPtr q, int n,
                                                          int count,
                                                          std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> d(0, q->size() - 1);
  std::vector<DistanceStructure> out;
  for (int t = 0; t < count; ++t) {
    VRelation m(q, n, n);
    for (auto& v : m.tab) v = d(rng);
    for (int x = 0; x < n; ++x)
      m.at(x, x) = q->join(m.at(x, x), q->unit);
    // Transitive closure: compose until the matrix is stable, which makes
    // the induced distance structure a valid closure structure.
    for (;;) {
      bool changed = false;
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          for (int z = 0; z < n; ++z) {
            Elt w = q->join(m.at(x, z), q->tensor(m.at(x, y), m.at(y, z)));
            if (w != m.at(x, z)) {
              m.at(x, z) = w;
              changed = true;
            }
          }
      if (!changed) break;
    }
    out.push_back(approach_from_matrix(m));
  }
  return out;
}

LawReport check_probapp(const DistanceStructure& c) {
  LawReport rep;
  const auto& q = *c.q;
  const Mask np = 1u << c.n;
  for (int x = 0; x < c.n; ++x) {
    if (c.at(Mask{1} << x, x) != q.unit) {
      rep.add("probapp/self-distance", "x" + std::to_string(x));
      return rep;
    }
    if (c.at(0, x) != q.bot()) {
      rep.add("probapp/empty-set", "x" + std::to_string(x));
      return rep;
    }
  }
  for (Mask A = 0; A < np; ++A)
    for (Mask B = 0; B < np; ++B)
      for (int x = 0; x < c.n; ++x)
        if (c.at(A | B, x) != q.join(c.at(A, x), c.at(B, x))) {
          rep.add("probapp/additivity", pt(c, A | B, x));
          return rep;
        }
  // Triangle condition through the phi-neighborhood of A.
  for (Mask A = 0; A < np; ++A)
    for (Elt phi = 0; phi < q.size(); ++phi) {
      Mask aphi = 0;
      for (int y = 0; y < c.n; ++y)
        if (q.leq(phi, c.at(A, y))) aphi |= 1u << y;
      for (int x = 0; x < c.n; ++x)
        if (!q.leq(q.tensor(c.at(aphi, x), phi), c.at(A, x))) {
          rep.add("probapp/triangle", pt(c, A, x) + "," + q.label(phi));
          return rep;
        }
    }
  return rep;
}

}  // namespace vapp
