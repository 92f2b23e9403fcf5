#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "vapp/report.hpp"

namespace vapp {

using Elt = int;

/// A finite quantale: a complete lattice carrier with an associative tensor
/// preserving joins in each argument, and a two-sided unit.
///
/// Tables are index-based; labels exist only for reporting and I/O.  Derived
/// data (bottom, top, binary joins and meets) is filled in by finalize().
/// Derived entries stay -1 where the declared order fails to provide them;
/// check_quantale turns such gaps into law violations instead of asserting,
/// so deliberately broken tables can be inspected.
class Quantale {
 public:
  std::string name;
  std::vector<std::string> labels;
  std::vector<std::uint8_t> leq_tab;  // n*n, leq_tab[a*n+b] = (a <= b)
  std::vector<Elt> tensor_tab;        // n*n
  Elt unit = -1;

  int size() const { return static_cast<int>(labels.size()); }
  bool leq(Elt a, Elt b) const { return leq_tab[a * size() + b] != 0; }
  Elt tensor(Elt a, Elt b) const { return tensor_tab[a * size() + b]; }

  Elt bot() const { return bot_; }
  Elt top() const { return top_; }

  /// Binary join/meet; -1 when the declared order has none.
  Elt join(Elt a, Elt b) const { return join_tab_[a * size() + b]; }
  Elt meet(Elt a, Elt b) const { return meet_tab_[a * size() + b]; }

  Elt join_all(const std::vector<Elt>& xs) const {
    Elt acc = bot_;
    for (Elt x : xs) acc = join(acc, x);
    return acc;
  }
  Elt meet_all(const std::vector<Elt>& xs) const {
    Elt acc = top_;
    for (Elt x : xs) acc = meet(acc, x);
    return acc;
  }

  const std::string& label(Elt a) const { return labels[a]; }
  std::string pair_label(Elt a, Elt b) const {
    return labels[a] + "," + labels[b];
  }

  /// Computes bot/top and the binary join/meet tables.  Called by every
  /// constructor path; safe on broken orders (gaps become -1).
  void finalize();

  bool finalized() const { return !join_tab_.empty(); }

 private:
  Elt bot_ = -1, top_ = -1;
  std::vector<Elt> join_tab_, meet_tab_;
};

using QPtr = std::shared_ptr<const Quantale>;

/// Scans every quantale law; empty report iff the tables form a quantale.
/// Structural problems (out-of-range entries, duplicate labels) are reported
/// with laws prefixed "structure/" and suppress the dependent lattice scans.
LawReport check_quantale(const Quantale& q);

/// u is totally below v: every subset D with v <= \/D contains some d >= u.
/// Checked against the all-subsets definition for carriers up to 16 elements,
/// and over subsets of join-irreducibles beyond that (equivalent on finite
/// lattices, since any join-cover refines to one by join-irreducibles).
bool totally_below(const Quantale& q, Elt u, Elt v);

/// Constructive complete distributivity: v = \/{u | u totally below v}.
bool is_ccd(const Quantale& q);

/// The tensor unit is the top element.
bool is_integral(const Quantale& q);

/// Elements not expressible as a join of strictly smaller elements
/// (bottom excluded).
std::vector<Elt> join_irreducibles(const Quantale& q);

struct CoprimeResult {
  std::vector<Elt> elements;
  // When the quantale is ccd, the decomposition v = \/{p coprime, p <= v}
  // is verified for every v; `witness` carries the failing v if any.
  bool decomposition_checked = false;
  bool decomposition_holds = true;
  Elt witness = -1;
};

/// All p > bot such that p <= \/D (D finite) forces p <= d for some d in D.
CoprimeResult coprimes(const Quantale& q);

}  // namespace vapp
