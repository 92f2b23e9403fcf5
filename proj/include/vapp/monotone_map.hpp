#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vapp/quantale.hpp"

namespace vapp {

/// A map between quantale carriers, given by its value table.
struct MonotoneMap {
  QPtr source;
  QPtr target;
  std::vector<Elt> table;  // indexed by source element
  std::string name;

  Elt operator()(Elt a) const { return table[a]; }
};

bool is_monotone(const MonotoneMap& f);

/// Left/right adjoints, when they exist.  Computed pointwise on the finite
/// carriers and then verified against the adjunction inequalities; nullopt
/// when either step fails.
std::optional<MonotoneMap> left_adjoint(const MonotoneMap& f);
std::optional<MonotoneMap> right_adjoint(const MonotoneMap& f);

/// How a map between quantales interacts with the monoid structure.
struct HomClassification {
  bool monotone = false;
  bool lax = false;     // f(a) tensor f(b) <= f(a tensor b), unit <= f(unit)
  bool strict = false;  // equalities instead
  bool has_left_adjoint = false;
  bool has_right_adjoint = false;
  std::string detail;   // first failing condition, for reporting
};

HomClassification classify_hom(const MonotoneMap& f);

MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f);
MonotoneMap identity_map(QPtr q);

}  // namespace vapp
