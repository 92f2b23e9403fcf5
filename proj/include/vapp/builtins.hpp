#pragma once

#include <cstdint>
#include <vector>

#include "vapp/quantale.hpp"

namespace vapp {

enum class TNorm { Min, Lukasiewicz };

/// One-element quantale; unit = bottom = top.
QPtr terminal_quantale();

/// {bot < top} with tensor = meet, unit = top.
QPtr two_chain();

/// n-element chain 0 < 1 < ... < n-1 with tensor = min, unit = top.
QPtr chain_frame(int n);

/// Finite model of the extended half-line: carrier {0,...,max_finite,inf},
/// quantale order = reversed numeric order (so bot = inf, top = unit = 0),
/// tensor = addition truncated to inf above max_finite.
QPtr cost_chain(int max_finite);

/// Finite model of the unit interval: carrier {0, 1/m, ..., 1} with the
/// natural order, the chosen t-norm as tensor and unit 1.  The ordinary
/// product t-norm is not offered: it does not keep the grid closed.
QPtr unit_grid(int m, TNorm t);

/// Finite model of the quantale of distance distribution functions.
///
/// Elements are step functions constant on the half-open intervals cut out
/// by the time grid {t_0 = 0 < ... < t_{m-1}, inf}: entry k is the value on
/// (t_k, t_{k+1}] (last interval unbounded).  Stored as non-decreasing
/// vectors of value-grid indices; left-continuity is automatic for such
/// step functions.  Tensor is the grid convolution
///   (f * g)[k] = max{ tnorm(f[i], g[j]) : t_i + t_j <= t_k },
/// unit is the constant-1 function.
struct DeltaGrid {
  QPtr q;
  std::vector<double> times;   // finite left endpoints, ascending, t_0 = 0
  std::vector<double> values;  // ascending, contains 0 and 1
  TNorm tnorm = TNorm::Min;
  std::vector<std::vector<int>> elems;  // value-index vectors, length m

  int index_of(const std::vector<int>& vec) const;

  /// Single-jump embeddings: sigma(t) jumps from 0 to 1 at time t (by time
  /// grid index; m = the index of "inf" maps to bottom); tau(u) has the
  /// constant value u on every interval.
  Elt sigma(int time_idx) const;  // time_idx in [0, m]; m means inf
  Elt tau(int value_idx) const;
};

/// Both grids must be closed: times under truncated addition (sums beyond
/// the last finite time are fine), values under the t-norm.  Violations
/// raise StructuralError naming the offending pair.
DeltaGrid make_delta_grid(std::vector<double> finite_times,
                          std::vector<double> values, TNorm t);

/// Quantale of down-closed subsets of a base quantale, ordered by inclusion,
/// with A * B = down-closure of {a tensor b} and unit = down-closure of the
/// base unit.
struct DownsetQuantale {
  QPtr q;
  QPtr base;
  std::vector<std::uint32_t> elem_masks;  // bitmask over base elements

  int index_of(std::uint32_t mask) const;
};

DownsetQuantale make_downset(QPtr base);

}  // namespace vapp
