#pragma once

#include <cstdint>
#include <vector>

#include "vapp/builtins.hpp"
#include "vapp/finite_set.hpp"
#include "vapp/quantale.hpp"
#include "vapp/vrel.hpp"

namespace vapp {

/// A point-set distance structure on a finite carrier: one quantale value
/// per (subset, point) pair.
struct DistanceStructure {
  QPtr q;
  int n = 0;
  std::vector<Elt> tab;  // (1<<n)*n, tab[A*n+x]

  DistanceStructure() = default;
  DistanceStructure(QPtr q_, int n_)
      : q(std::move(q_)), n(n_), tab((std::size_t{1} << n_) * n_, 0) {
    for (auto& v : tab) v = q->bot();
  }
  Elt at(Mask A, int x) const { return tab[A * n + x]; }
  Elt& at(Mask A, int x) { return tab[A * n + x]; }
  bool operator==(const DistanceStructure& o) const { return tab == o.tab; }
};

/// A V-indexed family of subset operators, one per quantale element.
struct Tower {
  QPtr q;
  int n = 0;
  std::vector<std::vector<Mask>> ops;  // ops[v][A]
};

/// Closure axioms: reflexivity (the unit bounds every point's distance to
/// its own singleton) and transitivity over all families of subsets.
/// Carriers above size 4 are rejected (the family scan is exhaustive).
LawReport check_closure(const DistanceStructure& c);

/// The two extra axioms of approach structures: the empty set is at
/// distance bottom from everywhere, and distances are finitely additive.
LawReport check_approach_extras(const DistanceStructure& c);

/// Closure axioms plus the approach extras.
LawReport check_approach(const DistanceStructure& c);
bool is_approach(const DistanceStructure& c);

/// Contractivity of f : X -> Y between distance structures.
LawReport check_contractive(const DistanceStructure& cx,
                            const DistanceStructure& cy,
                            const std::vector<int>& f);

Tower to_tower(const DistanceStructure& c);
DistanceStructure from_tower(const Tower& t);

enum class TowerMode {
  Closure,          // layer axioms of closure spaces
  Approach,         // adds empty-set and union layers via totally-below
  CoprimeApproach,  // adds the simpler layers indexed by coprimes
};

/// Tower axioms in the chosen mode.  The approach modes need the quantale
/// to be (constructively) completely distributive; CapabilityError if not.
LawReport check_tower(const Tower& t, TowerMode mode);

/// The mixed form of tower idempotence: v tensor c(c^v A)(x) <= c(A)(x),
/// where c^v A collects the points with c(A) at least v.  Equivalent to
/// the layer form on every distance table.
LawReport check_mixed_idempotence(const DistanceStructure& c);

/// Continuity of f between towers: f(t^v A) inside s^v(f(A)) for every v.
LawReport check_continuity(const Tower& tx, const Tower& ty,
                           const std::vector<int>& f);

/// Distance structure generated by a point matrix m (m.at(y,x) = distance
/// of x to {y}): distances to a set are the join over its points.  The
/// result always satisfies the approach extras.
DistanceStructure approach_from_matrix(const VRelation& m);

/// Every approach structure on a finite carrier arises this way; this
/// enumerates all point matrices and keeps those whose induced structure
/// satisfies the closure axioms.
std::vector<DistanceStructure> enumerate_approach_structures(QPtr q, int n);

/// All closure structures, by backtracking over rows in subset-size order
/// with monotonicity pruning and a full axiom check on the leaves.
std::vector<DistanceStructure> enumerate_closure_structures(QPtr q, int n);

/// Random valid approach structures: a random reflexive point matrix is
/// closed under transitive composition, which makes the induced structure
/// a closure (hence approach) structure.
std::vector<DistanceStructure> sample_approach_structures(QPtr q, int n,
                                                          int count,
                                                          std::uint64_t seed);

/// The axioms of probabilistic approach structures for a distance grid:
/// each point is at unit distance from its own singleton, the empty set is
/// at bottom, distances are finitely additive, and the triangle condition
/// delta(x,A) >= delta(x, A^phi) (*) phi holds for every grid element phi,
/// where A^phi collects the points within distance phi of A.
LawReport check_probapp(const DistanceStructure& c);

}  // namespace vapp
