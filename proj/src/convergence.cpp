#include "vapp/convergence.hpp"

#include <random>
#include <string>

namespace vapp {

LawReport check_convergence_algebra(const ConvergenceStructure& l) {
  LawReport rep;
  const auto& q = *l.q;
  for (int x = 0; x < l.n; ++x)
    if (!q.leq(q.unit, l.at(x, x))) {
      rep.add("convergence/reflexivity", "x" + std::to_string(x));
      return rep;
    }
  auto ext = ultra_extension(l.as_relation());
  for (int w = 0; w < l.n; ++w)
    for (int y = 0; y < l.n; ++y)
      for (int z = 0; z < l.n; ++z)
        if (!q.leq(q.tensor(ext.at(w, y), l.at(y, z)), l.at(w, z))) {
          rep.add("convergence/transitivity",
                  "x" + std::to_string(w) + ",x" + std::to_string(y) + ",x" +
                      std::to_string(z));
          return rep;
        }
  return rep;
}

LawReport check_convergent_map(const ConvergenceStructure& lx,
                               const ConvergenceStructure& ly,
                               const std::vector<int>& f) {
  LawReport rep;
  for (int w = 0; w < lx.n; ++w)
    for (int y = 0; y < lx.n; ++y)
      if (!lx.q->leq(lx.at(w, y), ly.at(f[w], f[y]))) {
        rep.add("map/convergence",
                "x" + std::to_string(w) + ",x" + std::to_string(y));
        return rep;
      }
  return rep;
}

DistanceStructure induced_distance(const ConvergenceStructure& l) {
  DistanceStructure c(l.q, l.n);
  for (Mask A = 0; A < (1u << l.n); ++A)
    for (int x = 0; x < l.n; ++x) {
      Elt acc = l.q->bot();
      for (int w = 0; w < l.n; ++w)
        if (mask_has(A, w)) acc = l.q->join(acc, l.at(w, x));
      c.at(A, x) = acc;
    }
  return c;
}

ConvergenceStructure induced_convergence(const DistanceStructure& c) {
  ConvergenceStructure l(c.q, c.n);
  for (int w = 0; w < c.n; ++w)
    for (int x = 0; x < c.n; ++x) {
      Elt acc = c.q->top();
      for (Mask A = 0; A < (1u << c.n); ++A)
        if (mask_has(A, w)) acc = c.q->meet(acc, c.at(A, x));
      l.at(w, x) = acc;
    }
  return l;
}

std::vector<ConvergenceStructure> enumerate_convergence_algebras(QPtr q,
                                                                 int n) {
  const int nv = q->size();
  double total = 1;
  for (int i = 0; i < n * n; ++i) total *= nv;
  if (total > double{1 << 22})
    throw CapabilityError("too many convergence tables to enumerate");
  std::vector<ConvergenceStructure> out;
  ConvergenceStructure l(q, n);
  std::fill(l.ell.begin(), l.ell.end(), 0);
  for (;;) {
    bool plausible = true;
    for (int x = 0; x < n && plausible; ++x)
      if (!q->leq(q->unit, l.at(x, x))) plausible = false;
    if (plausible && check_convergence_algebra(l).ok()) out.push_back(l);
    int i = 0;
    while (i < n * n && l.ell[i] == nv - 1) l.ell[i++] = 0;
    if (i == n * n) break;
    ++l.ell[i];
  }
  return out;
}

std::vector<ConvergenceStructure> sample_convergence_algebras(
    QPtr q, int n, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> d(0, q->size() - 1);
  std::vector<ConvergenceStructure> out;
  for (int t = 0; t < count; ++t) {
    ConvergenceStructure l(q, n);
    for (auto& v : l.ell) v = d(rng);
    for (int x = 0; x < n; ++x)
      l.at(x, x) = q->join(l.at(x, x), q->unit);
    for (;;) {
      bool changed = false;
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          for (int z = 0; z < n; ++z) {
            Elt w = q->join(l.at(x, z), q->tensor(l.at(x, y), l.at(y, z)));
            if (w != l.at(x, z)) {
              l.at(x, z) = w;
              changed = true;
            }
          }
      if (!changed) break;
    }
    out.push_back(std::move(l));
  }
  return out;
}

LawReport verify_main_theorem(QPtr q, int n, const MainTheoremOptions& opt) {
  LawReport rep;
  if (!is_ccd(*q))
    throw CapabilityError(
        "the equivalence needs a completely distributive quantale");

  std::vector<ConvergenceStructure> algebras;
  std::vector<DistanceStructure> closures;
  if (opt.exhaustive) {
    algebras = enumerate_convergence_algebras(q, n);
    closures = enumerate_closure_structures(q, n);
  } else {
    algebras = sample_convergence_algebras(q, n, opt.samples, opt.seed);
    closures = sample_approach_structures(q, n, opt.samples, opt.seed + 1);
  }

  // The induced distance of an algebra is an approach structure, and
  // re-inducing convergence gives the algebra back.
  for (const auto& l : algebras) {
    auto c = induced_distance(l);
    if (!check_approach(c).ok()) {
      rep.add("main/induced-distance-not-approach", "algebra");
      return rep;
    }
    if (!(induced_convergence(c) == l)) {
      rep.add("main/algebra-round-trip", "algebra");
      return rep;
    }
  }

  int fixed = 0, approach = 0;
  for (const auto& c : closures) {
    auto l = induced_convergence(c);
    if (!check_convergence_algebra(l).ok()) {
      rep.add("main/induced-convergence-not-algebra", "closure");
      return rep;
    }
    auto back = induced_distance(l);
    // The round trip shrinks distances, and fixes exactly the approach
    // structures.
    bool leq_all = true;
    for (std::size_t i = 0; i < c.tab.size(); ++i)
      if (!q->leq(back.tab[i], c.tab[i])) leq_all = false;
    if (!leq_all) {
      rep.add("main/round-trip-not-smaller", "closure");
      return rep;
    }
    bool is_fixed = back == c;
    bool is_app = is_approach(c);
    if (is_fixed != is_app) {
      rep.add("main/fixed-points-are-approach", "closure");
      return rep;
    }
    fixed += is_fixed;
    approach += is_app;
  }
  if (opt.exhaustive && n >= 1 &&
      fixed == static_cast<int>(closures.size())) {
    // With at least one point there are closure structures that are not
    // approach structures, so the coreflection must move something.
    rep.add("main/coreflection-never-strict", "enumeration");
    return rep;
  }

  // Hom-set bijection of the adjunction: a map out of an algebra's induced
  // space is contractive precisely when it is a convergence morphism into
  // the closure space's induced algebra.
  std::mt19937_64 rng(opt.seed + 2);
  std::size_t pairs =
      opt.exhaustive ? algebras.size() * closures.size()
                     : std::min<std::size_t>(opt.samples,
                                             algebras.size() * closures.size());
  std::size_t nmaps = 1;
  for (int i = 0; i < n; ++i) nmaps *= n;
  for (std::size_t pi = 0; pi < pairs; ++pi) {
    const auto& l =
        opt.exhaustive ? algebras[pi % algebras.size()]
                       : algebras[rng() % algebras.size()];
    const auto& c =
        opt.exhaustive ? closures[pi / algebras.size()]
                       : closures[rng() % closures.size()];
    auto cl = induced_distance(l);
    auto lc = induced_convergence(c);
    for (std::size_t mi = 0; mi < nmaps; ++mi) {
      std::vector<int> f(n);
      std::size_t t = mi;
      for (int i = 0; i < n; ++i) {
        f[i] = static_cast<int>(t % n);
        t /= n;
      }
      bool as_spaces = check_contractive(cl, c, f).ok();
      bool as_algebras = check_convergent_map(l, lc, f).ok();
      if (as_spaces != as_algebras) {
        rep.add("main/adjunction-homs", "pair");
        return rep;
      }
    }
  }
  return rep;
}

namespace {

// Graph of a map as a V-relation.
VRelation graph(QPtr q, const std::vector<int>& f, int ny) {
  VRelation r(q, static_cast<int>(f.size()), ny);
  for (int x = 0; x < r.nx; ++x) r.at(x, f[x]) = q->unit;
  return r;
}

}  // namespace

LawReport check_membership_morphism(QPtr q, int n, int rel_samples,
                                    std::uint64_t seed) {
  LawReport rep;
  const int np = 1 << n;
  // Membership as a V-relation from subsets to (principal) ultrafilters.
  VRelation eps(q, np, n);
  for (Mask A = 0; A < static_cast<Mask>(np); ++A)
    for (int w = 0; w < n; ++w)
      if (mask_has(A, w)) eps.at(A, w) = q->unit;

  // a. Lax naturality against every self-map.
  std::size_t nmaps = 1;
  for (int i = 0; i < n; ++i) nmaps *= n;
  for (std::size_t mi = 0; mi < nmaps; ++mi) {
    std::vector<int> f(n);
    std::size_t t = mi;
    for (int i = 0; i < n; ++i) {
      f[i] = static_cast<int>(t % n);
      t /= n;
    }
    auto uf = graph(q, f, n);
    std::vector<int> pf(np);
    for (Mask A = 0; A < static_cast<Mask>(np); ++A) {
      Mask img = 0;
      for (int x = 0; x < n; ++x)
        if (mask_has(A, x)) img |= 1u << f[x];
      pf[A] = static_cast<int>(img);
    }
    auto pfg = graph(q, pf, np);
    if (!rel_leq(rel_compose(uf, eps), rel_compose(eps, pfg))) {
      rep.add("membership/(a)-naturality", "map " + std::to_string(mi));
      return rep;
    }
  }

  // b. Lax unit law: the point-to-principal graph factors through
  // singletons and membership.
  {
    std::vector<int> idf(n);
    for (int i = 0; i < n; ++i) idf[i] = i;
    auto e = graph(q, idf, n);  // X to UX, principal embedding
    std::vector<int> singl(n);
    for (int x = 0; x < n; ++x) singl[x] = 1 << x;
    auto sg = graph(q, singl, np);  // X to PX
    if (!rel_leq(e, rel_compose(eps, sg))) {
      rep.add("membership/(b)-unit", "");
      return rep;
    }
  }

  // c. Lax multiplication law, through the powerset extension of the
  // membership relation and the union map.
  {
    auto phat_eps = powerset_extension(eps);  // PPX to P(UX)
    VRelation eps_u(q, np, n);                // P(UX) to UUX, membership again
    for (Mask B = 0; B < static_cast<Mask>(np); ++B)
      for (int w = 0; w < n; ++w)
        if (mask_has(B, w)) eps_u.at(B, w) = q->unit;
    std::vector<int> idn(n);
    for (int i = 0; i < n; ++i) idn[i] = i;
    auto m = graph(q, idn, n);  // UUX to UX, identity on principals
    std::vector<int> uni(std::size_t{1} << np);
    for (std::size_t cal = 0; cal < uni.size(); ++cal) {
      Mask u = 0;
      for (int A = 0; A < np; ++A)
        if ((cal >> A) & 1) u |= static_cast<Mask>(A);
      uni[cal] = static_cast<int>(u);
    }
    auto ung = graph(q, uni, np);  // PPX to PX
    auto lhs = rel_compose(m, rel_compose(eps_u, phat_eps));
    auto rhs = rel_compose(eps, ung);
    if (!rel_leq(lhs, rhs)) {
      rep.add("membership/(c)-multiplication", "");
      return rep;
    }
  }

  // d, e. Compatibility with arbitrary relations, sampled.
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> d(0, q->size() - 1);
  for (int t = 0; t < rel_samples; ++t) {
    VRelation r(q, n, n);
    for (auto& v : r.tab) v = d(rng);
    auto lhs = rel_compose(eps, powerset_extension(r));
    auto rhs = rel_compose(ultra_extension(r), eps);
    if (!rel_leq(lhs, rhs)) {
      rep.add("membership/(d)-compatibility", "sample " + std::to_string(t));
      return rep;
    }

    VRelation a(q, n, n);  // UX to X
    for (auto& v : a.tab) v = d(rng);
    auto lhs2 = powerset_extension(rel_compose(a, eps));
    auto rhs2 = rel_compose(powerset_extension(a), powerset_extension(eps));
    if (!rel_leq(lhs2, rhs2)) {
      rep.add("membership/(e)-strictness", "sample " + std::to_string(t));
      return rep;
    }
  }
  return rep;
}

LawReport check_probapp_convergence(const ConvergenceStructure& l) {
  LawReport rep = check_convergence_algebra(l);
  if (!rep.ok()) return rep;
  auto c = induced_distance(l);
  rep.merge(check_probapp(c));
  if (!rep.ok()) return rep;
  if (!(induced_convergence(c) == l))
    rep.add("probapp/convergence-round-trip", "");
  return rep;
}

}  // namespace vapp
