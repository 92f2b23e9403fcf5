#include "vapp/monotone_map.hpp"

namespace vapp {

bool is_monotone(const MonotoneMap& f) {
  const int n = f.source->size();
  for (Elt a = 0; a < n; ++a)
    for (Elt b = 0; b < n; ++b)
      if (f.source->leq(a, b) && !f.target->leq(f(a), f(b))) return false;
  return true;
}

namespace {

bool verify_adjunction(const MonotoneMap& l, const MonotoneMap& r) {
  // l -| r : l(b) <= a iff b <= r(a), quantified over both carriers.
  const int na = l.target->size();
  const int nb = l.source->size();
  for (Elt b = 0; b < nb; ++b)
    for (Elt a = 0; a < na; ++a)
      if (l.target->leq(l(b), a) != l.source->leq(b, r(a))) return false;
  return true;
}

}  // namespace

std::optional<MonotoneMap> left_adjoint(const MonotoneMap& f) {
  if (!is_monotone(f)) return std::nullopt;
  // g(b) = meet{a : b <= f(a)}; must itself land in the set.
  const auto& V = *f.source;
  const auto& W = *f.target;
  MonotoneMap g{f.target, f.source, std::vector<Elt>(W.size(), -1),
                f.name + "^L"};
  for (Elt b = 0; b < W.size(); ++b) {
    std::vector<Elt> cand;
    for (Elt a = 0; a < V.size(); ++a)
      if (W.leq(b, f(a))) cand.push_back(a);
    Elt m = V.meet_all(cand);
    if (!W.leq(b, f(m))) return std::nullopt;
    g.table[b] = m;
  }
  if (!verify_adjunction(g, f)) return std::nullopt;
  return g;
}

std::optional<MonotoneMap> right_adjoint(const MonotoneMap& f) {
  if (!is_monotone(f)) return std::nullopt;
  // g(b) = join{a : f(a) <= b}.
  const auto& V = *f.source;
  const auto& W = *f.target;
  MonotoneMap g{f.target, f.source, std::vector<Elt>(W.size(), -1),
                f.name + "^R"};
  for (Elt b = 0; b < W.size(); ++b) {
    std::vector<Elt> cand;
    for (Elt a = 0; a < V.size(); ++a)
      if (W.leq(f(a), b)) cand.push_back(a);
    Elt j = V.join_all(cand);
    if (!W.leq(f(j), b)) return std::nullopt;
    g.table[b] = j;
  }
  if (!verify_adjunction(f, g)) return std::nullopt;
  return g;
}

HomClassification classify_hom(const MonotoneMap& f) {
  HomClassification c;
  const auto& V = *f.source;
  const auto& W = *f.target;
  c.monotone = is_monotone(f);
  if (!c.monotone) {
    c.detail = "not monotone";
    return c;
  }
  c.lax = true;
  c.strict = true;
  if (!W.leq(W.unit, f(V.unit))) {
    c.lax = false;
    c.detail = "unit not lax-preserved";
  }
  if (f(V.unit) != W.unit) c.strict = false;
  for (Elt a = 0; a < V.size(); ++a)
    for (Elt b = 0; b < V.size(); ++b) {
      Elt lhs = W.tensor(f(a), f(b));
      Elt rhs = f(V.tensor(a, b));
      if (!W.leq(lhs, rhs)) {
        c.lax = false;
        if (c.detail.empty())
          c.detail = "tensor not lax-preserved at " + V.pair_label(a, b);
      }
      if (lhs != rhs) c.strict = false;
    }
  if (c.strict) {
    // Strict also asks the unit on the nose and join preservation; join
    // preservation is exactly having a right adjoint on finite lattices,
    // recorded separately below.
    c.strict = (f(V.unit) == W.unit);
  }
  c.has_left_adjoint = left_adjoint(f).has_value();
  c.has_right_adjoint = right_adjoint(f).has_value();
  return c;
}

MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f) {
  MonotoneMap h{f.source, g.target, std::vector<Elt>(f.source->size()),
                g.name + "." + f.name};
  for (Elt a = 0; a < f.source->size(); ++a) h.table[a] = g(f(a));
  return h;
}

MonotoneMap identity_map(QPtr q) {
  MonotoneMap f{q, q, std::vector<Elt>(q->size()), "id"};
  for (Elt a = 0; a < q->size(); ++a) f.table[a] = a;
  return f;
}

}  // namespace vapp
