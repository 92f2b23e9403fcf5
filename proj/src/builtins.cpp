#include "vapp/builtins.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <memory>
#include <string>

namespace vapp {

namespace {

std::shared_ptr<Quantale> blank(int n, std::string name) {
  auto q = std::make_shared<Quantale>();
  q->name = std::move(name);
  q->labels.resize(n);
  q->leq_tab.assign(n * n, 0);
  q->tensor_tab.assign(n * n, -1);
  return q;
}

std::string num_label(double v) {
  if (std::isinf(v)) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

double tnorm_apply(TNorm t, double a, double b) {
  switch (t) {
    case TNorm::Min:
      return std::min(a, b);
    case TNorm::Lukasiewicz:
      return std::max(0.0, a + b - 1.0);
  }
  return 0.0;
}

}  // namespace

QPtr terminal_quantale() {
  auto q = blank(1, "terminal");
  q->labels[0] = "*";
  q->leq_tab[0] = 1;
  q->tensor_tab[0] = 0;
  q->unit = 0;
  q->finalize();
  return q;
}

QPtr two_chain() {
  auto q = blank(2, "two_chain");
  q->labels = {"bot", "top"};
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      q->leq_tab[a * 2 + b] = (a <= b);
      q->tensor_tab[a * 2 + b] = std::min(a, b);
    }
  q->unit = 1;
  q->finalize();
  return q;
}

QPtr chain_frame(int n) {
  if (n < 1) throw StructuralError("chain_frame: need n >= 1");
  auto q = blank(n, "chain_frame(" + std::to_string(n) + ")");
  for (int i = 0; i < n; ++i) q->labels[i] = std::to_string(i);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      q->leq_tab[a * n + b] = (a <= b);
      q->tensor_tab[a * n + b] = std::min(a, b);
    }
  q->unit = n - 1;
  q->finalize();
  return q;
}

QPtr cost_chain(int max_finite) {
  if (max_finite < 0) throw StructuralError("cost_chain: need max >= 0");
  const int n = max_finite + 2;  // 0..max plus inf
  auto q = blank(n, "cost_chain(" + std::to_string(max_finite) + ")");
  for (int i = 0; i <= max_finite; ++i) q->labels[i] = std::to_string(i);
  q->labels[n - 1] = "inf";
  // index i carries numeric value i; index n-1 is inf.  Quantale order is
  // the reversed numeric order, so larger numbers sit lower.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      q->leq_tab[a * n + b] = (a >= b);
      int sum = (a == n - 1 || b == n - 1) ? n - 1 : a + b;
      if (sum > max_finite) sum = n - 1;
      q->tensor_tab[a * n + b] = sum;
    }
  q->unit = 0;
  q->finalize();
  return q;
}

QPtr unit_grid(int m, TNorm t) {
  if (m < 1) throw StructuralError("unit_grid: need m >= 1");
  const int n = m + 1;
  std::string tn = (t == TNorm::Min) ? "min" : "lukasiewicz";
  auto q = blank(n, "unit_grid(" + std::to_string(m) + "," + tn + ")");
  for (int i = 0; i < n; ++i)
    q->labels[i] = num_label(static_cast<double>(i) / m);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      q->leq_tab[a * n + b] = (a <= b);
      double v = tnorm_apply(t, static_cast<double>(a) / m,
                             static_cast<double>(b) / m);
      int idx = static_cast<int>(std::lround(v * m));
      q->tensor_tab[a * n + b] = idx;
    }
  q->unit = n - 1;
  q->finalize();
  return q;
}

int DeltaGrid::index_of(const std::vector<int>& vec) const {
  for (int i = 0; i < static_cast<int>(elems.size()); ++i)
    if (elems[i] == vec) return i;
  return -1;
}

Elt DeltaGrid::sigma(int time_idx) const {
  const int m = static_cast<int>(times.size());
  const int one = static_cast<int>(values.size()) - 1;
  std::vector<int> vec(m, 0);
  for (int k = 0; k < m; ++k)
    if (time_idx < m && k >= time_idx) vec[k] = one;
  return index_of(vec);
}

Elt DeltaGrid::tau(int value_idx) const {
  std::vector<int> vec(times.size(), value_idx);
  return index_of(vec);
}

DeltaGrid make_delta_grid(std::vector<double> finite_times,
                          std::vector<double> values, TNorm t) {
  DeltaGrid g;
  g.times = std::move(finite_times);
  g.values = std::move(values);
  g.tnorm = t;
  const int m = static_cast<int>(g.times.size());
  const int nv = static_cast<int>(g.values.size());
  if (m == 0 || g.times[0] != 0.0)
    throw StructuralError("delta_grid: time grid must start at 0");
  if (!std::is_sorted(g.times.begin(), g.times.end()) ||
      !std::is_sorted(g.values.begin(), g.values.end()))
    throw StructuralError("delta_grid: grids must be ascending");
  if (g.values.front() != 0.0 || g.values.back() != 1.0)
    throw StructuralError("delta_grid: value grid must contain 0 and 1");

  auto value_index = [&](double v) {
    for (int i = 0; i < nv; ++i)
      if (std::abs(g.values[i] - v) < 1e-9) return i;
    return -1;
  };
  // Closure of the grids.
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      double s = g.times[i] + g.times[j];
      if (s > g.times.back() + 1e-9) continue;  // truncates past the grid
      bool found = false;
      for (double tv : g.times)
        if (std::abs(tv - s) < 1e-9) found = true;
      if (!found)
        throw StructuralError("delta_grid: time grid not closed at " +
                              num_label(g.times[i]) + "+" +
                              num_label(g.times[j]));
    }
  for (int i = 0; i < nv; ++i)
    for (int j = 0; j < nv; ++j)
      if (value_index(tnorm_apply(t, g.values[i], g.values[j])) < 0)
        throw StructuralError("delta_grid: value grid not closed at " +
                              num_label(g.values[i]) + "," +
                              num_label(g.values[j]));

  // All non-decreasing value-index vectors of length m.
  std::vector<int> cur(m, 0);
  std::vector<std::vector<int>> elems;
  auto rec = [&](auto&& self, int pos, int low) -> void {
    if (pos == m) {
      elems.push_back(cur);
      return;
    }
    for (int v = low; v < nv; ++v) {
      cur[pos] = v;
      self(self, pos + 1, v);
    }
  };
  rec(rec, 0, 0);
  g.elems = std::move(elems);

  const int n = static_cast<int>(g.elems.size());
  std::string tn = (t == TNorm::Min) ? "min" : "lukasiewicz";
  auto q = blank(n, "delta_grid(" + std::to_string(m) + "," +
                        std::to_string(nv) + "," + tn + ")");
  for (int i = 0; i < n; ++i) {
    std::string l = "(";
    for (int k = 0; k < m; ++k) {
      if (k) l += ",";
      l += num_label(g.values[g.elems[i][k]]);
    }
    q->labels[i] = l + ")";
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      bool le = true;
      for (int k = 0; k < m; ++k)
        if (g.elems[a][k] > g.elems[b][k]) le = false;
      q->leq_tab[a * n + b] = le;
      // Grid convolution.
      std::vector<int> conv(m, 0);
      for (int k = 0; k < m; ++k) {
        double best = 0.0;
        for (int i = 0; i < m; ++i)
          for (int j = 0; j < m; ++j) {
            if (g.times[i] + g.times[j] > g.times[k] + 1e-9) continue;
            best = std::max(best, tnorm_apply(t, g.values[g.elems[a][i]],
                                              g.values[g.elems[b][j]]));
          }
        conv[k] = value_index(best);
      }
      int ci = -1;
      for (int i2 = 0; i2 < n; ++i2)
        if (g.elems[i2] == conv) ci = i2;
      q->tensor_tab[a * n + b] = ci;
    }
  std::vector<int> unit_vec(m, nv - 1);
  g.q = q;
  q->unit = g.index_of(unit_vec);
  q->finalize();
  return g;
}

int DownsetQuantale::index_of(std::uint32_t mask) const {
  for (int i = 0; i < static_cast<int>(elem_masks.size()); ++i)
    if (elem_masks[i] == mask) return i;
  return -1;
}

DownsetQuantale make_downset(QPtr base) {
  const int bn = base->size();
  if (bn > 12) throw StructuralError("downset: base carrier too large");
  DownsetQuantale d;
  d.base = base;
  for (std::uint32_t m = 0; m < (1u << bn); ++m) {
    bool closed = true;
    for (int x = 0; x < bn && closed; ++x)
      if (m & (1u << x))
        for (int y = 0; y < bn; ++y)
          if (base->leq(y, x) && !(m & (1u << y))) closed = false;
    if (closed) d.elem_masks.push_back(m);
  }
  const int n = static_cast<int>(d.elem_masks.size());
  auto q = blank(n, "downset(" + base->name + ")");
  auto down_close = [&](std::uint32_t m) {
    std::uint32_t out = 0;
    for (int x = 0; x < bn; ++x)
      if (m & (1u << x))
        for (int y = 0; y < bn; ++y)
          if (base->leq(y, x)) out |= 1u << y;
    return out;
  };
  for (int i = 0; i < n; ++i) {
    std::string l = "{";
    bool first = true;
    for (int x = 0; x < bn; ++x)
      if (d.elem_masks[i] & (1u << x)) {
        if (!first) l += ",";
        l += base->label(x);
        first = false;
      }
    q->labels[i] = l + "}";
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      q->leq_tab[a * n + b] =
          (d.elem_masks[a] & ~d.elem_masks[b]) == 0;
      std::uint32_t prod = 0;
      for (int x = 0; x < bn; ++x)
        if (d.elem_masks[a] & (1u << x))
          for (int y = 0; y < bn; ++y)
            if (d.elem_masks[b] & (1u << y))
              prod |= 1u << base->tensor(x, y);
      q->tensor_tab[a * n + b] = d.index_of(down_close(prod));
    }
  q->unit = d.index_of(down_close(1u << base->unit));
  q->finalize();
  d.q = q;
  return d;
}

}  // namespace vapp
