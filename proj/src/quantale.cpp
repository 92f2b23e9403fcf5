#include "vapp/quantale.hpp"

#include <algorithm>
#include <set>

namespace vapp {

namespace {

// Least element of `cands` w.r.t. q.leq, or -1 if there is none.
Elt least_of(const Quantale& q, const std::vector<Elt>& cands) {
  for (Elt c : cands) {
    bool below_all = true;
    for (Elt d : cands) {
      if (!q.leq(c, d)) {
        below_all = false;
        break;
      }
    }
    if (below_all) return c;
  }
  return -1;
}

Elt greatest_of(const Quantale& q, const std::vector<Elt>& cands) {
  for (Elt c : cands) {
    bool above_all = true;
    for (Elt d : cands) {
      if (!q.leq(d, c)) {
        above_all = false;
        break;
      }
    }
    if (above_all) return c;
  }
  return -1;
}

}  // namespace

void Quantale::finalize() {
  const int n = size();
  join_tab_.assign(n * n, -1);
  meet_tab_.assign(n * n, -1);
  bot_ = top_ = -1;

  std::vector<Elt> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  bot_ = least_of(*this, all);
  top_ = greatest_of(*this, all);

  std::vector<Elt> ub, lb;
  for (Elt a = 0; a < n; ++a) {
    for (Elt b = 0; b < n; ++b) {
      ub.clear();
      lb.clear();
      for (Elt c = 0; c < n; ++c) {
        if (leq(a, c) && leq(b, c)) ub.push_back(c);
        if (leq(c, a) && leq(c, b)) lb.push_back(c);
      }
      join_tab_[a * n + b] = ub.empty() ? -1 : least_of(*this, ub);
      meet_tab_[a * n + b] = lb.empty() ? -1 : greatest_of(*this, lb);
    }
  }
}

LawReport check_quantale(const Quantale& q) {
  LawReport rep;
  const int n = q.size();

  // Structural scan first; the lattice scans assume in-range tables.
  {
    std::set<std::string> seen;
    for (const auto& l : q.labels) {
      if (!seen.insert(l).second)
        rep.add("structure/duplicate-label", l);
    }
    if (static_cast<int>(q.leq_tab.size()) != n * n)
      rep.add("structure/leq-table-size", std::to_string(q.leq_tab.size()));
    if (static_cast<int>(q.tensor_tab.size()) != n * n)
      rep.add("structure/tensor-table-size",
              std::to_string(q.tensor_tab.size()));
    else {
      for (Elt a = 0; a < n; ++a)
        for (Elt b = 0; b < n; ++b) {
          Elt t = q.tensor(a, b);
          if (t < 0 || t >= n) {
            rep.add("structure/tensor-entry", q.pair_label(a, b));
            return rep;
          }
        }
    }
    if (q.unit < 0 || q.unit >= n) {
      rep.add("structure/unit", std::to_string(q.unit));
      return rep;
    }
    if (!rep.ok()) return rep;
  }

  // Partial order.
  for (Elt a = 0; a < n; ++a)
    if (!q.leq(a, a)) rep.add("order/reflexivity", q.label(a));
  for (Elt a = 0; a < n; ++a)
    for (Elt b = 0; b < n; ++b)
      if (a != b && q.leq(a, b) && q.leq(b, a))
        rep.add("order/antisymmetry", q.pair_label(a, b));
  for (Elt a = 0; a < n; ++a)
    for (Elt b = 0; b < n; ++b)
      for (Elt c = 0; c < n; ++c)
        if (q.leq(a, b) && q.leq(b, c) && !q.leq(a, c))
          rep.add("order/transitivity",
                  q.label(a) + "," + q.label(b) + "," + q.label(c));
  if (!rep.ok()) return rep;

  // Complete lattice: on a finite carrier this is bottom, top and all
  // binary joins/meets.
  if (q.bot() < 0) rep.add("lattice/bottom", "none");
  if (q.top() < 0) rep.add("lattice/top", "none");
  for (Elt a = 0; a < n; ++a)
    for (Elt b = 0; b < n; ++b) {
      if (q.join(a, b) < 0) rep.add("lattice/join", q.pair_label(a, b));
      if (q.meet(a, b) < 0) rep.add("lattice/meet", q.pair_label(a, b));
    }
  if (!rep.ok()) return rep;

  // Monoid.
  for (Elt a = 0; a < n; ++a) {
    if (q.tensor(q.unit, a) != a)
      rep.add("monoid/left-unit", q.label(a));
    if (q.tensor(a, q.unit) != a)
      rep.add("monoid/right-unit", q.label(a));
  }
  for (Elt a = 0; a < n; ++a)
    for (Elt b = 0; b < n; ++b)
      for (Elt c = 0; c < n; ++c)
        if (q.tensor(q.tensor(a, b), c) != q.tensor(a, q.tensor(b, c)))
          rep.add("monoid/associativity",
                  q.label(a) + "," + q.label(b) + "," + q.label(c));

  // Join preservation in each argument.  On a finite lattice, binary joins
  // plus bottom cover all joins.
  for (Elt a = 0; a < n; ++a) {
    if (q.tensor(a, q.bot()) != q.bot())
      rep.add("tensor/right-bottom", q.label(a));
    if (q.tensor(q.bot(), a) != q.bot())
      rep.add("tensor/left-bottom", q.label(a));
  }
  for (Elt a = 0; a < n; ++a)
    for (Elt b = 0; b < n; ++b)
      for (Elt c = 0; c < n; ++c) {
        Elt bc = q.join(b, c);
        if (q.tensor(a, bc) != q.join(q.tensor(a, b), q.tensor(a, c)))
          rep.add("tensor/right-join",
                  q.label(a) + "," + q.label(b) + "," + q.label(c));
        if (q.tensor(bc, a) != q.join(q.tensor(b, a), q.tensor(c, a)))
          rep.add("tensor/left-join",
                  q.label(a) + "," + q.label(b) + "," + q.label(c));
      }
  return rep;
}

namespace {

bool totally_below_over(const Quantale& q, Elt u, Elt v,
                        const std::vector<Elt>& gen) {
  const int m = static_cast<int>(gen.size());
  for (std::uint32_t dm = 0; dm < (1u << m); ++dm) {
    std::vector<Elt> d;
    for (int i = 0; i < m; ++i)
      if (dm & (1u << i)) d.push_back(gen[i]);
    if (!q.leq(v, q.join_all(d))) continue;
    bool dominated = false;
    for (Elt x : d)
      if (q.leq(u, x)) {
        dominated = true;
        break;
      }
    if (!dominated) return false;
  }
  return true;
}

}  // namespace

std::vector<Elt> join_irreducibles(const Quantale& q) {
  std::vector<Elt> out;
  const int n = q.size();
  for (Elt v = 0; v < n; ++v) {
    if (v == q.bot()) continue;
    std::vector<Elt> below;
    for (Elt u = 0; u < n; ++u)
      if (q.leq(u, v) && u != v) below.push_back(u);
    if (q.join_all(below) != v) out.push_back(v);
  }
  return out;
}

bool totally_below(const Quantale& q, Elt u, Elt v) {
  if (q.size() <= 16) {
    std::vector<Elt> all(q.size());
    for (int i = 0; i < q.size(); ++i) all[i] = i;
    return totally_below_over(q, u, v, all);
  }
  return totally_below_over(q, u, v, join_irreducibles(q));
}

bool is_ccd(const Quantale& q) {
  const int n = q.size();
  for (Elt v = 0; v < n; ++v) {
    std::vector<Elt> tb;
    for (Elt u = 0; u < n; ++u)
      if (totally_below(q, u, v)) tb.push_back(u);
    if (q.join_all(tb) != v) return false;
  }
  return true;
}

bool is_integral(const Quantale& q) { return q.unit == q.top(); }

CoprimeResult coprimes(const Quantale& q) {
  CoprimeResult res;
  const int n = q.size();
  for (Elt p = 0; p < n; ++p) {
    if (p == q.bot()) continue;
    bool prime = true;
    for (Elt u = 0; u < n && prime; ++u)
      for (Elt v = 0; v < n && prime; ++v)
        if (q.leq(p, q.join(u, v)) && !q.leq(p, u) && !q.leq(p, v))
          prime = false;
    if (prime) res.elements.push_back(p);
  }
  if (is_ccd(q)) {
    res.decomposition_checked = true;
    for (Elt v = 0; v < n; ++v) {
      std::vector<Elt> below;
      for (Elt p : res.elements)
        if (q.leq(p, v)) below.push_back(p);
      if (q.join_all(below) != v) {
        res.decomposition_holds = false;
        res.witness = v;
        break;
      }
    }
  }
  return res;
}

}  // namespace vapp
