#pragma once

#include <cstdint>
#include <vector>

#include "vapp/quantale.hpp"
#include "vapp/spaces.hpp"
#include "vapp/vrel.hpp"

namespace vapp {

/// An ultrafilter convergence structure on a finite carrier.  Every
/// ultrafilter on a finite set is principal, so the structure is a square
/// table: ell[w*n+y] measures how well the principal ultrafilter at w
/// converges to y.
struct ConvergenceStructure {
  QPtr q;
  int n = 0;
  std::vector<Elt> ell;  // n*n

  ConvergenceStructure() = default;
  ConvergenceStructure(QPtr q_, int n_)
      : q(std::move(q_)), n(n_), ell(n_ * n_, 0) {
    for (auto& v : ell) v = q->bot();
  }
  Elt at(int w, int y) const { return ell[w * n + y]; }
  Elt& at(int w, int y) { return ell[w * n + y]; }
  bool operator==(const ConvergenceStructure& o) const {
    return ell == o.ell;
  }
  VRelation as_relation() const {
    VRelation r(q, n, n);
    r.tab = ell;
    return r;
  }
};

/// Convergence algebra axioms: the principal ultrafilter at a point
/// converges to it at least at the unit, and convergence composes.  The
/// composite on the left is evaluated through the literal ultrafilter
/// extension when the carrier is small enough.
LawReport check_convergence_algebra(const ConvergenceStructure& l);

/// Morphism axiom for f between convergence structures.
LawReport check_convergent_map(const ConvergenceStructure& lx,
                               const ConvergenceStructure& ly,
                               const std::vector<int>& f);

/// Distance structure induced by a convergence structure: the distance of
/// x to A is the best convergence to x among ultrafilters containing A.
DistanceStructure induced_distance(const ConvergenceStructure& l);

/// Convergence structure induced by a distance structure: an ultrafilter
/// converges to x as well as every one of its sets is close to x.
ConvergenceStructure induced_convergence(const DistanceStructure& c);

std::vector<ConvergenceStructure> enumerate_convergence_algebras(QPtr q,
                                                                 int n);
std::vector<ConvergenceStructure> sample_convergence_algebras(
    QPtr q, int n, int count, std::uint64_t seed);

struct MainTheoremOptions {
  bool exhaustive = true;  // enumerate all structures if true, else sample
  int samples = 200;
  std::uint64_t seed = 1;
};

/// The equivalence between approach structures and convergence algebras:
/// induced_distance always lands in approach structures, the two induced-
/// structure maps are inverse on approach structures and algebras, the
/// hom-sets of the underlying adjunction agree along them, and on
/// non-approach closure structures the round trip is strictly smaller.
LawReport verify_main_theorem(QPtr q, int n, const MainTheoremOptions& opt);

/// The five conditions making the membership relation between subsets and
/// ultrafilters a morphism of lax extensions, checked on explicit finite
/// relation tables.
LawReport check_membership_morphism(QPtr q, int n,
                                    int rel_samples = 25,
                                    std::uint64_t seed = 7);

/// Probabilistic convergence: on a distance grid quantale the convergence
/// algebras correspond exactly to the probabilistic approach structures.
LawReport check_probapp_convergence(const ConvergenceStructure& l);

}  // namespace vapp
