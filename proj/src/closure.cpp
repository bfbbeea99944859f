#include "pnbd/closure.hpp"

#include <algorithm>

namespace pnbd {

Elem closure(const PreNbdSystem& s, Elem p, ClsMode mode) {
  const auto& L = s.lat();
  const Elem bot = L.bottom(), top = L.top();
  if (mode == ClsMode::Fast)
    return L.join_where([&](Elem x) {
      return x != top && L.meet(s.g(x), p) != bot;
    });
  return L.join_where([&](Elem x) {
    if (x == top) return false;
    for (Elem u = 0; u < L.size(); ++u)
      if (L.leq(s.g(x), u) && L.meet(u, p) == bot) return false;
    return true;
  });
}

bool is_closed_sub(const PreNbdSystem& s, Elem p) { return closure(s, p) == p; }

bool is_dense_sub(const PreNbdSystem& s, Elem p) {
  return closure(s, p) == s.lat().top();
}

bool is_open_sub(const PreNbdSystem& s, Elem x) { return s.lat().leq(s.g(x), x); }

Elem interior(const PreNbdSystem& s, Elem x) {
  const auto& L = s.lat();
  return L.join_where([&](Elem u) { return is_open_sub(s, u) && L.leq(u, x); });
}

ClosureReport closed_open_sets(const PreNbdSystem& s) {
  const auto& L = s.lat();
  if (L.size() > kClosureReportMax)
    throw CapacityError("closed_open_sets: lattice too large for full tables");
  ClosureReport r;
  r.cls.resize(static_cast<std::size_t>(L.size()));
  r.interior.resize(static_cast<std::size_t>(L.size()));
  for (Elem p = 0; p < L.size(); ++p) {
    r.cls[static_cast<std::size_t>(p)] = closure(s, p);
    r.interior[static_cast<std::size_t>(p)] = interior(s, p);
    if (r.cls[static_cast<std::size_t>(p)] == p) r.mc.push_back(p);
    if (is_open_sub(s, p)) r.mo.push_back(p);
  }
  // closed subobjects are closed under binary meets
  for (Elem a : r.mc)
    for (Elem b : r.mc) {
      Elem m = L.meet(a, b);
      if (std::find(r.mc.begin(), r.mc.end(), m) == r.mc.end())
        throw ValidationError("closed_open_sets: closed sets not meet-closed at " +
                              L.label(a) + "," + L.label(b));
    }
  return r;
}

std::vector<Elem> closed_subobjects(const PreNbdSystem& s) {
  const auto& L = s.lat();
  if (L.size() > kClosureReportMax)
    throw CapacityError("closed_subobjects: lattice too large");
  std::vector<Elem> mc;
  for (Elem p = 0; p < L.size(); ++p)
    if (closure(s, p) == p) mc.push_back(p);
  return mc;
}

bool idempotence_join_seam(const PreNbdSystem& s, Elem p) {
  const auto& L = s.lat();
  Elem c = closure(s, p);
  for (Elem x = 0; x < L.size(); ++x) {
    if (x == L.top() || L.meet(s.g(x), c) == L.bottom()) continue;
    for (Elem y = 0; y < L.size(); ++y) {
      if (y == L.top() || L.meet(s.g(y), p) == L.bottom()) continue;
      if (L.join(x, y) == L.top()) return true;
    }
  }
  return false;
}

Elem star_join(const PreNbdSystem& s, Elem p) {
  const auto& L = s.lat();
  return L.join_where(
      [&](Elem u) { return u != L.top() && L.meet(u, p) != L.bottom(); });
}

std::vector<Elem> star_set(const PreNbdSystem& s, Elem p) {
  const auto& L = s.lat();
  std::vector<Elem> st;
  for (Elem u = 0; u < L.size(); ++u)
    if (L.meet(u, p) != L.bottom()) st.push_back(u);
  return st;
}

Elem gmext_closure(const PreNbdSystem& s, const EndoMap& c, Elem p, GmextVariant v) {
  const auto& L = s.lat();
  if (!L.structurally_equal(*c.lattice))
    throw DomainError("gmext_closure: lattices differ");
  EndoMapProfile prof = endomap_profile(c);
  Elem dc = prof.dense_join;
  Elem acc;
  if (v == GmextVariant::Phi) {
    acc = L.join_where([&](Elem x) {
      return x != L.top() && c(x) == x && L.meet(x, p) != L.bottom();
    });
  } else {
    Elem clsp = closure(s, p);
    acc = L.join_where(
        [&](Elem x) { return x != L.top() && c(x) == x && L.leq(x, clsp); });
  }
  return L.join(acc, dc);
}

bool gmext_closed(const PreNbdSystem& s, const EndoMap& c, Elem p, GmextVariant v) {
  const auto& L = s.lat();
  if (v == GmextVariant::Phi) {
    for (Elem x = 0; x < L.size(); ++x) {
      if (x == L.top()) continue;
      if (L.meet(c(x), p) != L.bottom() && !L.leq(x, p)) return false;
    }
    return true;
  }
  Elem clsp = closure(s, p);
  for (Elem x = 0; x < L.size(); ++x) {
    if (x == L.top()) continue;
    bool premise = (c(x) == L.top()) || (c(x) == x && L.leq(x, clsp));
    if (premise && !L.leq(x, p)) return false;
  }
  return true;
}

bool pseudocomplement_characterization(const PreNbdSystem& s, Elem x, Elem p) {
  const auto& L = s.lat();
  if (x == L.bottom() || x == L.top() || p == L.bottom() || p == L.top())
    throw DomainError("pseudocomplement_characterization: arguments must be strictly "
                      "between bottom and top");
  auto pc = pseudocomplement(L, p);
  if (!pc) throw DomainError("pseudocomplement_characterization: no pseudocomplement");
  bool lhs = L.leq(x, closure(s, p));
  bool rhs = !s.mu(x).contains(*pc);
  return lhs == rhs;
}

Elem product_closure_rhs(const ProductSpace& space,
                         const std::vector<PreNbdSystem>& factors, Elem p) {
  const std::size_t n = factors.size();
  if (n == 0 || n > 3) throw DomainError("product_closure_rhs: need 1..3 factors");
  for (const auto& f : factors)
    if (f.object->carrier_size() == 0)
      throw DomainError("product_closure_rhs: empty factor, projections leave the "
                        "surjection class");
  const auto& L = space.system.lat();
  Elem acc = L.top();
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    if (idx.size() == n) {
      acc = L.meet(acc, closure(space.system, p));
      continue;
    }
    std::vector<PreNbdSystem> sub;
    std::vector<MorphismInstance> legs;
    for (auto i : idx) {
      sub.push_back(factors[i]);
      legs.push_back(space.prod.projections[i]);
    }
    if (idx.size() == 1) {
      Elem c = closure(sub[0], image_sub(legs[0], p));
      acc = L.meet(acc, preimage_sub(legs[0], c));
      continue;
    }
    ProductSpace sp = product_space(sub);
    MorphismInstance pj = pairing(sp.prod, legs);
    Elem c = closure(sp.system, image_sub(pj, p));
    acc = L.meet(acc, preimage_sub(pj, c));
  }
  return acc;
}

}  // namespace pnbd
