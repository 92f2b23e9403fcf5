#include "vapp/vrel.hpp"

#include <random>
#include <string>

namespace vapp {

VRelation rel_compose(const VRelation& s, const VRelation& r) {
  const auto& q = *r.q;
  VRelation out(r.q, r.nx, s.ny);
  for (int x = 0; x < r.nx; ++x)
    for (int z = 0; z < s.ny; ++z) {
      Elt acc = q.bot();
      for (int y = 0; y < r.ny; ++y)
        acc = q.join(acc, q.tensor(s.at(y, z), r.at(x, y)));
      out.at(x, z) = acc;
    }
  return out;
}

bool rel_leq(const VRelation& a, const VRelation& b) {
  for (std::size_t i = 0; i < a.tab.size(); ++i)
    if (!a.q->leq(a.tab[i], b.tab[i])) return false;
  return true;
}

std::vector<VFun> enumerate_vfuns(const Quantale& q, int n,
                                  std::size_t limit) {
  const int nv = q.size();
  std::size_t count = 1;
  for (int i = 0; i < n; ++i) {
    if (count > limit / nv + 1) throw CapabilityError("V^X too large");
    count *= nv;
  }
  if (count > limit) throw CapabilityError("V^X too large");
  std::vector<VFun> out;
  out.reserve(count);
  VFun cur(n, 0);
  for (;;) {
    out.push_back(cur);
    int i = 0;
    while (i < n && cur[i] == nv - 1) cur[i++] = 0;
    if (i == n) break;
    ++cur[i];
  }
  return out;
}

VFun yoneda(const Quantale& q, int n, int x) {
  VFun f(n, q.bot());
  f[x] = q.unit;
  return f;
}

VFun pushforward(const Quantale& q, const std::vector<int>& f, int ny,
                 const VFun& sigma) {
  VFun out(ny, q.bot());
  for (int x = 0; x < static_cast<int>(f.size()); ++x)
    out[f[x]] = q.join(out[f[x]], sigma[x]);
  return out;
}

VFun multiplication(const Quantale& q, const std::vector<VFun>& funs,
                    const std::vector<Elt>& Sigma) {
  const int n = funs.empty() ? 0 : static_cast<int>(funs[0].size());
  VFun out(n, q.bot());
  for (std::size_t i = 0; i < funs.size(); ++i)
    for (int x = 0; x < n; ++x)
      out[x] = q.join(out[x], q.tensor(Sigma[i], funs[i][x]));
  return out;
}

Elt alpha_eval(const Quantale& q, const std::vector<VFun>& S, Mask A) {
  Elt acc = q.top();
  for (int x = 0; A >> x; ++x) {
    if (!mask_has(A, x)) continue;
    Elt j = q.bot();
    for (const auto& sigma : S) j = q.join(j, sigma[x]);
    acc = q.meet(acc, j);
  }
  return acc;
}

Elt beta_literal(const Quantale& q, const std::vector<VFun>& funs,
                 int sigma_idx, int n, int x) {
  const int nf = static_cast<int>(funs.size());
  Elt acc = q.top();
  for (Mask S = 0; S < (1u << nf); ++S) {
    if (!mask_has(S, sigma_idx)) continue;
    for (Mask A = 0; A < (1u << n); ++A) {
      if (!mask_has(A, x)) continue;
      Elt j = q.bot();
      for (int i = 0; i < nf; ++i)
        if (mask_has(S, i))
          for (int y = 0; y < n; ++y)
            if (mask_has(A, y)) j = q.join(j, funs[i][y]);
      acc = q.meet(acc, j);
    }
  }
  return acc;
}

VRelation powerset_extension(const VRelation& r) {
  const auto& q = *r.q;
  VRelation out(r.q, 1 << r.nx, 1 << r.ny);
  for (Mask A = 0; A < (1u << r.nx); ++A)
    for (Mask B = 0; B < (1u << r.ny); ++B) {
      Elt acc = q.top();
      for (int y = 0; y < r.ny; ++y) {
        if (!mask_has(B, y)) continue;
        Elt j = q.bot();
        for (int x = 0; x < r.nx; ++x)
          if (mask_has(A, x)) j = q.join(j, r.at(x, y));
        acc = q.meet(acc, j);
      }
      out.at(A, B) = acc;
    }
  return out;
}

Elt ubar_literal(const VRelation& r, int x, int y) {
  const auto& q = *r.q;
  Elt acc = q.top();
  for (Mask A = 0; A < (1u << r.nx); ++A) {
    if (!mask_has(A, x)) continue;
    for (Mask B = 0; B < (1u << r.ny); ++B) {
      if (!mask_has(B, y)) continue;
      Elt j = q.bot();
      for (int x2 = 0; x2 < r.nx; ++x2)
        if (mask_has(A, x2))
          for (int y2 = 0; y2 < r.ny; ++y2)
            if (mask_has(B, y2)) j = q.join(j, r.at(x2, y2));
      acc = q.meet(acc, j);
    }
  }
  return acc;
}

VRelation ultra_extension(const VRelation& r) {
  VRelation out(r.q, r.nx, r.ny);
  bool literal = r.nx <= 8 && r.ny <= 8;
  for (int x = 0; x < r.nx; ++x)
    for (int y = 0; y < r.ny; ++y)
      out.at(x, y) = literal ? ubar_literal(r, x, y) : r.at(x, y);
  return out;
}

Elt law_from_powerset_extension(const Quantale& q,
                                const std::vector<VFun>& funs,
                                const std::vector<VFun>& S, Mask A) {
  const int nf = static_cast<int>(funs.size());
  if (nf > 16) throw CapabilityError("V^X too large for the round trip");
  const int n = funs.empty() ? 0 : static_cast<int>(funs[0].size());
  VRelation eps(std::make_shared<Quantale>(q), nf, n);
  for (int i = 0; i < nf; ++i)
    for (int x = 0; x < n; ++x) eps.at(i, x) = funs[i][x];
  auto ext = powerset_extension(eps);
  Mask smask = 0;
  for (const auto& sigma : S)
    for (int i = 0; i < nf; ++i)
      if (funs[i] == sigma) smask |= 1u << i;
  return ext.at(smask, A);
}

namespace {

struct CheckCtx {
  const Quantale& q;
  const LaxLawOptions& opt;
  std::mt19937_64 rng;
  LawReport rep;

  CheckCtx(const Quantale& q_, const LaxLawOptions& o)
      : q(q_), opt(o), rng(o.seed) {}

  // Subsets of {0..nf-1} as index lists: all of them when feasible,
  // otherwise a random sample (sound for checking inequalities whose
  // left side only grows with more subsets).
  std::vector<std::vector<int>> subsets(int nf) {
    std::vector<std::vector<int>> out;
    if (nf <= 12 && (std::size_t{1} << nf) <= opt.subset_budget) {
      for (Mask m = 0; m < (1u << nf); ++m) {
        std::vector<int> s;
        for (int i = 0; i < nf; ++i)
          if (mask_has(m, i)) s.push_back(i);
        out.push_back(std::move(s));
      }
    } else {
      out.push_back({});
      for (int t = 0; t < opt.samples; ++t) {
        std::vector<int> s;
        for (int i = 0; i < nf; ++i)
          if (rng() & 1) s.push_back(i);
        out.push_back(std::move(s));
      }
    }
    return out;
  }

  std::vector<Elt> random_vec(std::size_t len) {
    std::uniform_int_distribution<int> d(0, q.size() - 1);
    std::vector<Elt> v(len);
    for (auto& e : v) e = d(rng);
    return v;
  }
};

std::string size_tag(int n) { return "|X|=" + std::to_string(n); }

std::vector<VFun> pick(const std::vector<VFun>& funs,
                       const std::vector<int>& idx) {
  std::vector<VFun> out;
  out.reserve(idx.size());
  for (int i : idx) out.push_back(funs[i]);
  return out;
}

}  // namespace

LawReport check_lax_law_powerset(QPtr qp, const LaxLawOptions& opt,
                                 const AlphaEval* custom) {
  const Quantale& q = *qp;
  AlphaEval ev = custom ? *custom : AlphaEval(alpha_eval);
  CheckCtx ctx(q, opt);

  for (int nx = 0; nx <= opt.max_exhaustive; ++nx) {
    std::vector<VFun> funs;
    try {
      funs = enumerate_vfuns(q, nx);
    } catch (const CapabilityError&) {
      continue;
    }
    const int nf = static_cast<int>(funs.size());
    auto ssets = ctx.subsets(nf);

    // (a) lax naturality, against every map into a carrier of size ny.
    for (int ny = 0; ny <= opt.max_exhaustive; ++ny) {
      if (ny == 0 && nx > 0) continue;  // no maps to the empty carrier
      std::size_t nmaps = 1;
      for (int i = 0; i < nx; ++i) nmaps *= ny;
      for (std::size_t mi = 0; mi < nmaps; ++mi) {
        std::vector<int> f(nx);
        std::size_t t = mi;
        for (int i = 0; i < nx; ++i) {
          f[i] = static_cast<int>(t % ny);
          t /= ny;
        }
        for (const auto& sidx : ssets) {
          auto S = pick(funs, sidx);
          std::vector<VFun> fS;
          for (const auto& sigma : S)
            fS.push_back(pushforward(q, f, ny, sigma));
          for (Mask B = 0; B < (1u << ny); ++B) {
            Elt lhs = q.bot();
            for (Mask A = 0; A < (1u << nx); ++A) {
              Mask img = 0;
              for (int x = 0; x < nx; ++x)
                if (mask_has(A, x)) img |= 1u << f[x];
              if (img == B) lhs = q.join(lhs, ev(q, S, A));
            }
            Elt rhs = ev(q, fS, B);
            if (!q.leq(lhs, rhs)) {
              ctx.rep.add("lax-law/(a)-naturality",
                          size_tag(nx) + ",|Y|=" + std::to_string(ny));
              return ctx.rep;
            }
          }
        }
      }
    }

    // (b) lax unit law of the V-powerset monad.
    for (Mask B = 0; B < (1u << nx); ++B) {
      std::vector<VFun> S;
      for (int x = 0; x < nx; ++x)
        if (mask_has(B, x)) S.push_back(yoneda(q, nx, x));
      if (!q.leq(q.unit, ev(q, S, B))) {
        ctx.rep.add("lax-law/(b)-unit", size_tag(nx));
        return ctx.rep;
      }
    }

    // (c) lax multiplication law of the V-powerset monad, sampled in the
    // higher-order argument.
    for (int t = 0; t < opt.samples; ++t) {
      int count = 1 + static_cast<int>(ctx.rng() % 3);
      std::vector<std::vector<Elt>> Sigmas;
      for (int i = 0; i < count; ++i) Sigmas.push_back(ctx.random_vec(nf));
      for (Mask A = 0; A < (1u << nx); ++A) {
        Elt rhs = q.top();
        for (int x = 0; x < nx; ++x) {
          if (!mask_has(A, x)) continue;
          Elt j = q.bot();
          for (const auto& Sg : Sigmas)
            j = q.join(j, multiplication(q, funs, Sg)[x]);
          rhs = q.meet(rhs, j);
        }
        Elt lhs = q.bot();
        for (const auto& sidx : ssets) {
          Elt inner = q.top();
          for (int i : sidx) {
            Elt j = q.bot();
            for (const auto& Sg : Sigmas) j = q.join(j, Sg[i]);
            inner = q.meet(inner, j);
          }
          lhs = q.join(lhs, q.tensor(inner, ev(q, pick(funs, sidx), A)));
        }
        if (!q.leq(lhs, rhs)) {
          ctx.rep.add("lax-law/(c)-multiplication", size_tag(nx));
          return ctx.rep;
        }
      }
    }

    // (d) lax unit law of the outer monad.
    for (const auto& sigma : funs)
      for (int x = 0; x < nx; ++x)
        if (!q.leq(sigma[x], ev(q, {sigma}, Mask{1} << x))) {
          ctx.rep.add("lax-law/(d)-outer-unit", size_tag(nx));
          return ctx.rep;
        }

    // (e) lax multiplication law of the outer monad, sampled in the set of
    // sets of functions; the cover enumeration over subsets of PX is exact.
    if (nx <= 4) {
      const int np = 1 << nx;  // |PX|
      for (int t = 0; t < opt.samples; ++t) {
        int count = 1 + static_cast<int>(ctx.rng() % 3);
        std::vector<std::vector<int>> SS;
        for (int i = 0; i < count; ++i) {
          std::vector<int> s;
          for (int j = 0; j < nf; ++j)
            if (ctx.rng() & 1) s.push_back(j);
          SS.push_back(std::move(s));
        }
        std::vector<int> all;
        {
          std::vector<char> in(nf, 0);
          for (const auto& s : SS)
            for (int i : s) in[i] = 1;
          for (int i = 0; i < nf; ++i)
            if (in[i]) all.push_back(i);
        }
        for (Mask A = 0; A < (1u << nx); ++A) {
          Elt lhs = q.bot();
          for (std::uint64_t cal = 0; cal < (1ull << np); ++cal) {
            Mask u = 0;
            for (int ai = 0; ai < np; ++ai)
              if ((cal >> ai) & 1) u |= static_cast<Mask>(ai);
            if (u != A) continue;
            Elt val = q.top();
            for (int ai = 0; ai < np; ++ai) {
              if (!((cal >> ai) & 1)) continue;
              Elt j = q.bot();
              for (const auto& s : SS)
                j = q.join(j, ev(q, pick(funs, s), static_cast<Mask>(ai)));
              val = q.meet(val, j);
            }
            lhs = q.join(lhs, val);
          }
          Elt rhs = ev(q, pick(funs, all), A);
          if (!q.leq(lhs, rhs)) {
            ctx.rep.add("lax-law/(e)-outer-multiplication", size_tag(nx));
            return ctx.rep;
          }
        }
      }
    }

    // (f) monotonicity: growing the set grows the value.
    for (const auto& sidx : ssets) {
      std::vector<int> bigger = sidx;
      for (int i = 0; i < nf; ++i)
        if (ctx.rng() % 4 == 0) bigger.push_back(i);
      for (Mask A = 0; A < (1u << nx); ++A)
        if (!q.leq(ev(q, pick(funs, sidx), A), ev(q, pick(funs, bigger), A))) {
          ctx.rep.add("lax-law/(f)-monotonicity", size_tag(nx));
          return ctx.rep;
        }
    }
  }
  return ctx.rep;
}

LawReport check_lax_law_ultra(QPtr qp, const LaxLawOptions& opt) {
  const Quantale& q = *qp;
  CheckCtx ctx(q, opt);

  for (int nx = 0; nx <= opt.max_exhaustive; ++nx) {
    std::vector<VFun> funs;
    try {
      funs = enumerate_vfuns(q, nx);
    } catch (const CapabilityError&) {
      continue;
    }
    const int nf = static_cast<int>(funs.size());
    bool literal = nf <= 10 && nx <= 4;
    auto b = [&](const VFun& sigma, int x) -> Elt {
      if (!literal) return beta_fast(sigma, x);
      for (int i = 0; i < nf; ++i)
        if (funs[i] == sigma) return beta_literal(q, funs, i, nx, x);
      return beta_fast(sigma, x);
    };

    // (a) lax naturality.
    for (int ny = 0; ny <= opt.max_exhaustive; ++ny) {
      if (ny == 0 && nx > 0) continue;
      std::size_t nmaps = 1;
      for (int i = 0; i < nx; ++i) nmaps *= ny;
      for (std::size_t mi = 0; mi < nmaps; ++mi) {
        std::vector<int> f(nx);
        std::size_t t = mi;
        for (int i = 0; i < nx; ++i) {
          f[i] = static_cast<int>(t % ny);
          t /= ny;
        }
        for (const auto& sigma : funs) {
          auto fs = pushforward(q, f, ny, sigma);
          for (int y = 0; y < ny; ++y) {
            Elt lhs = q.bot();
            for (int x = 0; x < nx; ++x)
              if (f[x] == y) lhs = q.join(lhs, b(sigma, x));
            if (!q.leq(lhs, beta_fast(fs, y))) {
              ctx.rep.add("lax-law/(a)-naturality", size_tag(nx));
              return ctx.rep;
            }
          }
        }
      }
    }

    // (b) lax unit law of the V-powerset monad.
    for (int x = 0; x < nx; ++x)
      if (!q.leq(q.unit, b(yoneda(q, nx, x), x))) {
        ctx.rep.add("lax-law/(b)-unit", size_tag(nx));
        return ctx.rep;
      }

    // (c) lax multiplication law, sampled in Sigma.
    for (int t = 0; t < opt.samples; ++t) {
      auto Sigma = ctx.random_vec(nf);
      auto s = multiplication(q, funs, Sigma);
      for (int x = 0; x < nx; ++x) {
        Elt lhs = q.bot();
        for (int i = 0; i < nf; ++i)
          lhs = q.join(lhs, q.tensor(Sigma[i], b(funs[i], x)));
        if (!q.leq(lhs, b(s, x))) {
          ctx.rep.add("lax-law/(c)-multiplication", size_tag(nx));
          return ctx.rep;
        }
      }
    }

    // (d) lax unit law of the ultrafilter monad.
    for (const auto& sigma : funs)
      for (int x = 0; x < nx; ++x)
        if (!q.leq(sigma[x], b(sigma, x))) {
          ctx.rep.add("lax-law/(d)-outer-unit", size_tag(nx));
          return ctx.rep;
        }

    // (e) lax multiplication law of the ultrafilter monad: applying the
    // law twice never exceeds applying it once.
    for (const auto& sigma : funs) {
      VFun once(nx);
      for (int x = 0; x < nx; ++x) once[x] = b(sigma, x);
      for (int x = 0; x < nx; ++x)
        if (!q.leq(b(once, x), b(sigma, x))) {
          ctx.rep.add("lax-law/(e)-outer-multiplication", size_tag(nx));
          return ctx.rep;
        }
    }

    // (f) monotonicity.
    for (int i = 0; i < nf; ++i)
      for (int j = 0; j < nf; ++j) {
        bool le = true;
        for (int x = 0; x < nx; ++x)
          if (!q.leq(funs[i][x], funs[j][x])) le = false;
        if (!le) continue;
        for (int x = 0; x < nx; ++x)
          if (!q.leq(b(funs[i], x), b(funs[j], x))) {
            ctx.rep.add("lax-law/(f)-monotonicity", size_tag(nx));
            return ctx.rep;
          }
      }
  }
  return ctx.rep;
}

}  // namespace vapp
