#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "vapp/finite_set.hpp"
#include "vapp/quantale.hpp"

namespace vapp {

/// An element of V^X for a finite carrier: one quantale value per point.
using VFun = std::vector<Elt>;

/// A V-valued relation r : X -|-> Y.
struct VRelation {
  QPtr q;
  int nx = 0, ny = 0;
  std::vector<Elt> tab;  // nx*ny, row-major

  VRelation() = default;
  VRelation(QPtr q_, int nx_, int ny_)
      : q(std::move(q_)), nx(nx_), ny(ny_), tab(nx_ * ny_, 0) {
    for (auto& v : tab) v = q->bot();
  }
  Elt at(int x, int y) const { return tab[x * ny + y]; }
  Elt& at(int x, int y) { return tab[x * ny + y]; }
};

/// (s . r)(x,z) = \/_y  r(x,y) tensor ... ordered as s after r:
/// r : X -|-> Y, s : Y -|-> Z, value \/_y s(y,z) tensor r(x,y).
VRelation rel_compose(const VRelation& s, const VRelation& r);

/// Pointwise order of relations of equal shape.
bool rel_leq(const VRelation& a, const VRelation& b);

/// All |V|^n functions X -> V, in lexicographic order.  Throws
/// CapabilityError when the count would exceed `limit`.
std::vector<VFun> enumerate_vfuns(const Quantale& q, int n,
                                  std::size_t limit = 1u << 20);

// V-powerset monad components on a finite carrier.
VFun yoneda(const Quantale& q, int n, int x);
VFun pushforward(const Quantale& q, const std::vector<int>& f, int ny,
                 const VFun& sigma);
/// s_X applied to Sigma given as values indexed like `funs`.
VFun multiplication(const Quantale& q, const std::vector<VFun>& funs,
                    const std::vector<Elt>& Sigma);

/// The lax distributive law of the powerset monad: alpha_X(S)(A) =
/// /\_{x in A} \/_{sigma in S} sigma(x).
Elt alpha_eval(const Quantale& q, const std::vector<VFun>& S, Mask A);

/// The lax distributive law of the (principal) ultrafilter monad, evaluated
/// literally: the meet over all sets S containing sigma (subsets of `funs`)
/// and all A containing x of \/_{tau in S, x' in A} tau(x').  On a finite
/// carrier every ultrafilter is principal, and the literal value collapses
/// to sigma(x); beta_fast returns that directly.
Elt beta_literal(const Quantale& q, const std::vector<VFun>& funs,
                 int sigma_idx, int n, int x);
inline Elt beta_fast(const VFun& sigma, int x) { return sigma[x]; }

/// Lax extension of the powerset monad along alpha:
/// Phat(r)(A,B) = /\_{y in B} \/_{x in A} r(x,y), a relation on masks.
VRelation powerset_extension(const VRelation& r);

/// Lax extension of the ultrafilter monad along beta, on principal
/// ultrafilters (identified with points): Ubar(r)(x,y) = r(x,y), which is
/// the literal /\_{A owns x, B owns y} \/_{x' in A, y' in B} r(x',y').
VRelation ultra_extension(const VRelation& r);
Elt ubar_literal(const VRelation& r, int x, int y);

/// Recovers the law from its extension via the evaluation relation
/// eps : V^X -|-> X, eps(sigma,x) = sigma(x): lambda(S)(A) is the extension
/// applied to eps at (S, A).  For the powerset extension this returns
/// exactly alpha_eval; exposed so the round trip can be tested.
Elt law_from_powerset_extension(const Quantale& q,
                                const std::vector<VFun>& funs,
                                const std::vector<VFun>& S, Mask A);

struct LaxLawOptions {
  int max_exhaustive = 2;   // carrier sizes checked exhaustively, from 0
  int samples = 200;        // samples for higher-order inputs
  std::uint64_t seed = 1;
  std::size_t subset_budget = 1u << 12;  // max enumerated subsets of V^X
};

/// Evaluator signature for the powerset law, so deliberately corrupted
/// candidates can be pushed through the same checks.
using AlphaEval =
    std::function<Elt(const Quantale&, const std::vector<VFun>&, Mask)>;

/// Checks conditions (a)-(f) of a lax distributive law for the powerset
/// monad with the given evaluator (alpha_eval by default).
LawReport check_lax_law_powerset(QPtr q, const LaxLawOptions& opt,
                                 const AlphaEval* custom = nullptr);

/// Same for the ultrafilter monad with the principal-ultrafilter law.
LawReport check_lax_law_ultra(QPtr q, const LaxLawOptions& opt);

}  // namespace vapp
