#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace vapp {

/// Subsets of a finite carrier {0,...,n-1}, n <= 20, as bitmasks.
using Mask = std::uint32_t;

inline int mask_size(Mask m) { return std::popcount(m); }
inline bool mask_has(Mask m, int x) { return (m >> x) & 1u; }
inline Mask full_mask(int n) { return (n == 32) ? ~0u : (1u << n) - 1u; }

inline std::vector<int> mask_elems(Mask m) {
  std::vector<int> out;
  for (int x = 0; m >> x; ++x)
    if (mask_has(m, x)) out.push_back(x);
  return out;
}

inline std::string mask_label(Mask m, const std::vector<std::string>& names) {
  std::string s = "{";
  bool first = true;
  for (int x = 0; x < static_cast<int>(names.size()); ++x)
    if (mask_has(m, x)) {
      if (!first) s += ",";
      s += names[x];
      first = false;
    }
  return s + "}";
}

/// Default point names "x0","x1",... for a carrier of size n.
inline std::vector<std::string> default_point_names(int n) {
  std::vector<std::string> out(n);
  for (int i = 0; i < n; ++i) out[i] = "x" + std::to_string(i);
  return out;
}

}  // namespace vapp
