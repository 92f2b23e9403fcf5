#pragma once

#include <cstdint>
#include <vector>

#include "vapp/builtins.hpp"
#include "vapp/convergence.hpp"
#include "vapp/monotone_map.hpp"
#include "vapp/quantale.hpp"
#include "vapp/spaces.hpp"

namespace vapp {

/// The three table shapes a structure can take: subset-indexed distance
/// tables, ultrafilter convergence tables, and plain point-to-point
/// category tables.  A graph is such a table with no axioms imposed.
enum class GraphKind { Powerset, Ultrafilter, Category };

struct BaseGraph {
  GraphKind kind = GraphKind::Category;
  QPtr q;
  int n = 0;
  std::vector<Elt> tab;  // Powerset: (1<<n)*n, otherwise n*n

  static BaseGraph from_distance(const DistanceStructure& c);
  static BaseGraph from_convergence(const ConvergenceStructure& l);
  DistanceStructure to_distance() const;
  ConvergenceStructure to_convergence() const;
  bool operator==(const BaseGraph& o) const { return tab == o.tab; }
};

/// The lax-algebra axioms of the graph's kind.
LawReport check_graph_algebra(const BaseGraph& g);

/// Structure-compatibility of f between graphs of the same kind.
LawReport check_graph_map(const BaseGraph& gx, const BaseGraph& gy,
                          const std::vector<int>& f);

/// Postcomposition with a monotone map between quantales.
BaseGraph change_base(const MonotoneMap& phi, const BaseGraph& g);

/// The least structure above g satisfying the kind's algebra axioms,
/// computed as an inflationary fixpoint of the axiom closures.
BaseGraph reflect(const BaseGraph& g);

/// Change of base followed by reflection into the algebras.
BaseGraph change_base_reflected(const MonotoneMap& phi, const BaseGraph& g);

/// Reflection minimality against a brute-force oracle: the reflection of a
/// random graph equals the meet of all enumerated structures above it.
LawReport check_reflect_minimal(QPtr q, GraphKind kind, int n, int count,
                                std::uint64_t seed);

/// phi -| psi, verified pointwise on the finite carriers.
bool maps_are_adjoint(const MonotoneMap& phi, const MonotoneMap& psi);

/// For an adjoint pair with psi a lax homomorphism: both change-of-base
/// functors land in the algebras, the unit and counit inequalities hold,
/// and hom-sets agree along the adjunction, over sampled structures.
LawReport verify_change_of_base_adjunction(const MonotoneMap& phi,
                                           const MonotoneMap& psi,
                                           GraphKind kind, int n, int samples,
                                           std::uint64_t seed);

/// Functor-level adjointness probed on the two-point symmetric structures:
/// psi must be lax and carry algebras to algebras on the family, and the
/// unit and counit inequalities must hold there.  For non-adjoint maps the
/// report carries the failing instance.
LawReport probe_functor_adjunction(const MonotoneMap& phi,
                                   const MonotoneMap& psi, GraphKind kind);

/// The two-point test family from which adjointness of the change-of-base
/// functors is equivalent to adjointness of the maps: reports a violation
/// exactly when one of the two adjointness statements holds and the other
/// fails.  Needs integral, completely distributive quantales.
LawReport verify_adjunction_equivalence(const MonotoneMap& phi,
                                        const MonotoneMap& psi,
                                        GraphKind kind);

// Standard maps between the built-in quantales.
MonotoneMap iota_map(QPtr v);  // two-chain into v: bot to bot, top to unit
MonotoneMap pi_map(QPtr v);    // v onto the two-chain: top iff above unit
MonotoneMap o_map(QPtr v);     // left adjoint of iota; v must be integral

/// The jump embedding of a cost chain into a distance grid whose time grid
/// matches the chain's finite values, its right adjoint (the first moment
/// the function reaches 1) and its left adjoint (the last moment it is
/// still 0).
MonotoneMap sigma_map(QPtr cost, const DeltaGrid& g);
MonotoneMap rho_map(const DeltaGrid& g, QPtr cost);
MonotoneMap lambda_map(const DeltaGrid& g, QPtr cost);

MonotoneMap down_map(const DownsetQuantale& d);           // principal downset
MonotoneMap sup_map(const DownsetQuantale& d);            // join of a downset
MonotoneMap totally_below_map(const DownsetQuantale& d);  // all u below v

/// The embedding of two-chain structures (preorders or topologies,
/// depending on the kind) into structures over v: the embedding lands in
/// the algebras, is retracted by both the coreflector and (for integral v)
/// the reflector, and is full.
LawReport verify_embedding_corollaries(QPtr v, GraphKind kind, int n,
                                       int samples, std::uint64_t seed);

}  // namespace vapp
