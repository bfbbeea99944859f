#pragma once

// Test-only oracles, independent of the library's computation paths.

#include <cstdint>
#include <set>
#include <vector>

#include "pnbd/context.hpp"
#include "pnbd/filter.hpp"
#include "pnbd/lattice.hpp"
#include "pnbd/system.hpp"

namespace pnbd::oracle {

// All monotone extensional endomaps found by filtering every raw value
// vector (size^size candidates; keep lattices tiny).
inline std::vector<std::vector<Elem>> brute_force_endomaps(const FiniteLattice& L,
                                                           bool grounded) {
  std::vector<std::vector<Elem>> out;
  const int n = L.size();
  std::vector<Elem> v(static_cast<std::size_t>(n), 0);
  for (;;) {
    bool ok = true;
    for (Elem x = 0; x < n && ok; ++x)
      if (!L.leq(x, v[static_cast<std::size_t>(x)])) ok = false;
    for (Elem x = 0; x < n && ok; ++x)
      for (Elem y = 0; y < n && ok; ++y)
        if (L.leq(x, y) &&
            !L.leq(v[static_cast<std::size_t>(x)], v[static_cast<std::size_t>(y)]))
          ok = false;
    if (ok && grounded && v[static_cast<std::size_t>(L.bottom())] != L.bottom())
      ok = false;
    if (ok) out.push_back(v);
    int k = 0;
    for (; k < n; ++k) {
      if (++v[static_cast<std::size_t>(k)] < n) break;
      v[static_cast<std::size_t>(k)] = 0;
    }
    if (k == n) break;
  }
  return out;
}

// Filters of a finite lattice materialized as up-closed, meet-closed,
// nonempty element sets.
inline std::vector<std::set<Elem>> all_filter_sets(const FiniteLattice& L) {
  std::vector<std::set<Elem>> out;
  const int n = L.size();
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::set<Elem> s;
    for (Elem e = 0; e < n; ++e)
      if (mask & (1u << e)) s.insert(e);
    bool ok = true;
    for (Elem a : s) {
      for (Elem b = 0; b < n && ok; ++b)
        if (L.leq(a, b) && !s.count(b)) ok = false;
      for (Elem b : s)
        if (!s.count(L.meet(a, b))) ok = false;
    }
    if (ok) out.push_back(std::move(s));
  }
  return out;
}

// The element set denoted by a principal filter.
inline std::set<Elem> filter_as_set(const Filter& f) {
  std::set<Elem> s;
  for (Elem e = 0; e < f.lattice->size(); ++e)
    if (f.contains(e)) s.insert(e);
  return s;
}

// Topologies on an n-point set (n <= 3): families of subsets containing
// empty and full, closed under union and intersection.
inline long long count_topologies(int n) {
  const int subsets = 1 << n;
  const int full = subsets - 1;
  long long count = 0;
  for (std::uint32_t fam = 0; fam < (1u << subsets); ++fam) {
    if (!(fam & 1u) || !(fam & (1u << full))) continue;
    bool ok = true;
    for (int a = 0; a < subsets && ok; ++a) {
      if (!(fam & (1u << a))) continue;
      for (int b = a; b < subsets && ok; ++b) {
        if (!(fam & (1u << b))) continue;
        if (!(fam & (1u << (a | b))) || !(fam & (1u << (a & b)))) ok = false;
      }
    }
    if (ok) ++count;
  }
  return count;
}

// Direct closure sweep from the defining join, quantifying over the full
// materialized filter of each subobject.
inline Elem closure_sweep(const PreNbdSystem& s, Elem p) {
  const auto& L = s.lat();
  Elem acc = L.bottom();
  for (Elem x = 0; x < L.size(); ++x) {
    if (x == L.top()) continue;
    bool qualifies = true;
    for (Elem u = 0; u < L.size() && qualifies; ++u)
      if (L.leq(s.g(x), u) && L.meet(u, p) == L.bottom()) qualifies = false;
    if (qualifies) acc = L.join(acc, x);
  }
  return acc;
}

}  // namespace pnbd::oracle
