#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "vapp/base_change.hpp"
#include "vapp/builtins.hpp"
#include "vapp/convergence.hpp"
#include "vapp/monotone_map.hpp"
#include "vapp/quantale.hpp"
#include "vapp/spaces.hpp"

namespace vapp {

using Json = nlohmann::ordered_json;

/// A quantale together with the extra structure some built-ins carry and
/// the descriptor it was built from (empty for explicit tables).
struct ParsedQuantale {
  QPtr q;
  std::optional<DeltaGrid> grid;
  std::optional<DownsetQuantale> downset;
  std::string descriptor;
};

/// Builtin descriptors, colon-separated:
///   terminal | two_chain | chain_frame:N | cost_chain:N |
///   unit_grid:M:min|lukasiewicz |
///   delta_grid:T1,T2,...:V1,V2,...:min|lukasiewicz |
///   downset:<inner descriptor>
ParsedQuantale parse_builtin(const std::string& spec);

/// Reads a whole JSON document; parse failures become StructuralError with
/// the position in the message.
Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

/// A quantale document: {"type":"quantale", "builtin": descriptor} or the
/// explicit form with "elements", "leq" pairs, "tensor" triples and "unit",
/// all by element label.
ParsedQuantale quantale_from_json(const Json& j);
Json quantale_to_json(const ParsedQuantale& pq);

/// A space document: quantale reference, point labels, presentation
/// "distance" (table rows keyed by sorted subset label lists) or "tower"
/// (layer table per quantale element).
struct SpaceDoc {
  DistanceStructure c;
  std::vector<std::string> points;
  ParsedQuantale pq;
  std::string presentation;  // as read; saving always offers both
};
SpaceDoc space_from_json(const Json& j);
Json space_to_json(const DistanceStructure& c, const ParsedQuantale& pq,
                   const std::vector<std::string>& points,
                   const std::string& presentation = "distance");

/// A convergence document: table keyed by generator point, then point.
struct ConvergenceDoc {
  ConvergenceStructure l;
  std::vector<std::string> points;
  ParsedQuantale pq;
};
ConvergenceDoc convergence_from_json(const Json& j);
Json convergence_to_json(const ConvergenceStructure& l,
                         const ParsedQuantale& pq,
                         const std::vector<std::string>& points);

/// A map document: source and target quantale references plus the value
/// table by label.
struct MapDoc {
  MonotoneMap f;
  ParsedQuantale source;
  ParsedQuantale target;
};
MapDoc map_from_json(const Json& j);
Json map_to_json(const MonotoneMap& f, const ParsedQuantale& src,
                 const ParsedQuantale& dst);

/// Builtin map names: iota, pi, o, sigma, tau, rho, lambda, downset.up,
/// downset.sup, downset.down.  Source and target supply the quantales (and
/// grid or downset structure where needed); mismatches raise
/// StructuralError.
MonotoneMap builtin_map(const std::string& name, const ParsedQuantale& src,
                        const ParsedQuantale& dst);

}  // namespace vapp
