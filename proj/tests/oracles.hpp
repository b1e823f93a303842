#pragma once

// Brute-force reference computations used only by tests. Nothing here calls
// into the library's algorithms; each function restates a definition and
// checks it by exhaustion.

#include <functional>
#include <optional>
#include <vector>

#include "specsl/core.hpp"

namespace oracle {

using specsl::SpecSemilattice;

inline bool leq(const SpecSemilattice& s, int a, int b) { return s.join(a, b) == b; }

/// (a,b) ~ (c,d), with the witness pair (a1, c1) searched over all of S x S.
inline bool sim(const SpecSemilattice& s, int a, int b, int c, int d) {
  if (!(s.sq(b, d) && s.sq(d, b))) return false;
  for (int a1 = 0; a1 < s.size(); ++a1)
    for (int c1 = 0; c1 < s.size(); ++c1)
      if (s.sq(a1, b) && s.sq(c1, d) && leq(s, a, s.join(c, c1)) &&
          leq(s, c, s.join(a, a1)))
        return true;
  return false;
}

/// Class labels of all pairs p = a*n + b, assuming sim is an equivalence:
/// label = least related pair, then renumbered in order of appearance.
inline std::vector<int> pair_classes(const SpecSemilattice& s) {
  const int n = s.size();
  const int pairs = n * n;
  std::vector<int> least(pairs);
  for (int p = 0; p < pairs; ++p)
    for (int q = 0; q < pairs; ++q)
      if (sim(s, p / n, p % n, q / n, q % n)) {
        least[p] = q;
        break;
      }
  std::vector<int> number(pairs, -1), out(pairs);
  int next = 0;
  for (int p = 0; p < pairs; ++p) {
    if (number[least[p]] < 0) number[least[p]] = next++;
    out[p] = number[least[p]];
  }
  return out;
}

/// An element of {b : b [= a} that is >= every other member, by scanning.
inline std::optional<int> closure(const SpecSemilattice& s, int a) {
  for (int m = 0; m < s.size(); ++m) {
    if (!s.sq(m, a)) continue;
    bool top = true;
    for (int b = 0; b < s.size() && top; ++b)
      if (s.sq(b, a) && !leq(s, b, m)) top = false;
    if (top) return m;
  }
  return std::nullopt;
}

inline bool is_hom(const SpecSemilattice& s, const SpecSemilattice& t,
                   const std::vector<int>& f) {
  for (int a = 0; a < s.size(); ++a)
    for (int b = 0; b < s.size(); ++b) {
      if (f[s.join(a, b)] != t.join(f[a], f[b])) return false;
      if (s.sq(a, b) && !t.sq(f[a], f[b])) return false;
    }
  return true;
}

inline bool is_khom(const SpecSemilattice& s, const SpecSemilattice& t,
                    const std::vector<int>& f) {
  if (!is_hom(s, t, f)) return false;
  for (int a = 0; a < s.size(); ++a)
    if (f[*closure(s, a)] != *closure(t, f[a])) return false;
  return true;
}

/// Visits every map [n] -> [m] in lexicographic order.
inline void for_each_map(int n, int m, const std::function<void(const std::vector<int>&)>& visit) {
  if (m == 0) {
    if (n == 0) visit({});
    return;
  }
  std::vector<int> f(n, 0);
  while (true) {
    visit(f);
    int i = n - 1;
    while (i >= 0 && f[i] == m - 1) f[i--] = 0;
    if (i < 0) return;
    ++f[i];
  }
}

inline std::vector<std::vector<int>> all_maps_where(
    int n, int m, const std::function<bool(const std::vector<int>&)>& keep) {
  std::vector<std::vector<int>> out;
  for_each_map(n, m, [&](const std::vector<int>& f) {
    if (keep(f)) out.push_back(f);
  });
  return out;
}

/// Like all_maps_where, but pins[i] >= 0 fixes f[i]; only free entries vary.
inline std::vector<std::vector<int>> all_pinned_maps_where(
    const std::vector<int>& pins, int m,
    const std::function<bool(const std::vector<int>&)>& keep) {
  std::vector<int> free;
  for (int i = 0; i < static_cast<int>(pins.size()); ++i)
    if (pins[i] < 0) free.push_back(i);
  std::vector<std::vector<int>> out;
  std::vector<int> f = pins;
  for_each_map(static_cast<int>(free.size()), m, [&](const std::vector<int>& g) {
    for (std::size_t k = 0; k < free.size(); ++k) f[free[k]] = g[k];
    if (keep(f)) out.push_back(f);
  });
  return out;
}

}  // namespace oracle
