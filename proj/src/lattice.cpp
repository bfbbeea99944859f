#include "pnbd/lattice.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

namespace pnbd {

namespace {

int popcount64(std::uint64_t v) { return std::popcount(v); }

}  // namespace

std::string subset_label(const std::vector<std::string>& points, std::uint64_t mask) {
  std::string out;
  for (std::size_t i = 0; i < points.size(); ++i)
    if (mask & (std::uint64_t{1} << i)) out += points[i];
  return out;
}

FiniteLattice FiniteLattice::powerset(std::vector<std::string> points) {
  std::sort(points.begin(), points.end());
  for (const auto& p : points)
    if (p.empty()) throw ValidationError("powerset: empty point name");
  if (std::adjacent_find(points.begin(), points.end()) != points.end())
    throw ValidationError("powerset: duplicate point name");
  if (static_cast<int>(points.size()) > kMaxPoints)
    throw CapacityError("powerset: more than " + std::to_string(kMaxPoints) + " points");

  FiniteLattice L;
  L.kind_ = Kind::Powerset;
  L.points_ = static_cast<int>(points.size());
  L.point_names_ = std::move(points);
  L.size_ = 1 << L.points_;
  L.bottom_ = 0;
  L.top_ = L.size_ - 1;
  if (L.points_ <= 12) {
    for (Elem e = 0; e < L.size_; ++e) {
      auto lbl = subset_label(L.point_names_, static_cast<std::uint64_t>(e));
      if (!L.label_index_.emplace(lbl, e).second)
        throw ValidationError("powerset: ambiguous point names, label \"" + lbl +
                              "\" is not unique");
    }
  } else {
    for (const auto& p : L.point_names_)
      if (p.size() != 1)
        throw CapacityError("powerset: >12 points require single-character names");
  }
  return L;
}

FiniteLattice FiniteLattice::from_order(std::vector<std::string> labels,
                                        const std::vector<std::vector<bool>>& leq) {
  const int n = static_cast<int>(labels.size());
  if (n == 0) throw ValidationError("from_order: empty lattice");
  if (n > 64) throw CapacityError("from_order: supports at most 64 elements");
  if (static_cast<int>(leq.size()) != n)
    throw ValidationError("from_order: order matrix shape mismatch");

  FiniteLattice L;
  L.kind_ = Kind::Explicit;
  L.size_ = n;
  L.labels_ = std::move(labels);
  L.leq_.assign(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) L.leq_[a][b] = leq[a][b];

  for (int a = 0; a < n; ++a) {
    if (!L.leq_[a][a]) throw ValidationError("from_order: not reflexive at " + L.labels_[a]);
    for (int b = 0; b < n; ++b) {
      if (L.leq_[a][b] && L.leq_[b][a] && a != b)
        throw ValidationError("from_order: not antisymmetric at " + L.labels_[a]);
      for (int c = 0; c < n; ++c)
        if (L.leq_[a][b] && L.leq_[b][c] && !L.leq_[a][c])
          throw ValidationError("from_order: not transitive at " + L.labels_[a]);
    }
  }

  L.meet_tab_.assign(static_cast<std::size_t>(n) * n, -1);
  L.join_tab_.assign(static_cast<std::size_t>(n) * n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      Elem glb = -1, lub = -1;
      for (int c = 0; c < n; ++c) {
        if (L.leq_[c][a] && L.leq_[c][b] && (glb < 0 || L.leq_[glb][c])) glb = c;
        if (L.leq_[a][c] && L.leq_[b][c] && (lub < 0 || L.leq_[c][lub])) lub = c;
      }
      // verify the candidates really bound every competitor
      for (int c = 0; c < n; ++c) {
        if (L.leq_[c][a] && L.leq_[c][b] && (glb < 0 || !L.leq_[c][glb]))
          throw ValidationError("from_order: no meet for " + L.labels_[a] + "," + L.labels_[b]);
        if (L.leq_[a][c] && L.leq_[b][c] && (lub < 0 || !L.leq_[lub][c]))
          throw ValidationError("from_order: no join for " + L.labels_[a] + "," + L.labels_[b]);
      }
      L.meet_tab_[static_cast<std::size_t>(a) * n + b] = glb;
      L.join_tab_[static_cast<std::size_t>(a) * n + b] = lub;
    }
  }

  Elem bot = 0, top = 0;
  for (int a = 0; a < n; ++a) {
    if (L.leq_[a][bot]) bot = a;
    if (L.leq_[top][a]) top = a;
  }
  for (int a = 0; a < n; ++a)
    if (!L.leq_[bot][a] || !L.leq_[a][top])
      throw ValidationError("from_order: no global bottom/top");
  L.bottom_ = bot;
  L.top_ = top;
  for (int a = 0; a < n; ++a)
    if (!L.label_index_.emplace(L.labels_[a], a).second)
      throw ValidationError("from_order: duplicate label " + L.labels_[a]);
  return L;
}

FiniteLattice FiniteLattice::subgroups(std::vector<std::uint64_t> masks,
                                       std::vector<std::string> labels,
                                       int group_order,
                                       std::vector<std::uint8_t> mult) {
  if (group_order > kMaxGroupOrder)
    throw CapacityError("subgroup lattice: group order above " +
                        std::to_string(kMaxGroupOrder));
  const int n = static_cast<int>(masks.size());
  if (n == 0) throw ValidationError("subgroup lattice: empty");
  if (n > kMaxExplicit) throw CapacityError("subgroup lattice: too many subgroups");

  FiniteLattice L;
  L.kind_ = Kind::Subgroup;
  L.size_ = n;
  L.masks_ = std::move(masks);
  L.labels_ = std::move(labels);
  L.group_order_ = group_order;
  L.mult_ = std::move(mult);
  for (Elem e = 0; e < n; ++e) {
    L.mask_index_.emplace(L.masks_[static_cast<std::size_t>(e)], e);
    L.label_index_.emplace(L.labels_[static_cast<std::size_t>(e)], e);
  }
  // masks come sorted by (popcount, value): bottom first, top last
  L.bottom_ = 0;
  L.top_ = n - 1;
  return L;
}

bool FiniteLattice::leq(Elem a, Elem b) const {
  switch (kind_) {
    case Kind::Powerset:
      return (a & ~b) == 0;
    case Kind::Explicit:
      return leq_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    case Kind::Subgroup: {
      auto ma = masks_[static_cast<std::size_t>(a)], mb = masks_[static_cast<std::size_t>(b)];
      return (ma & ~mb) == 0;
    }
  }
  return false;
}

Elem FiniteLattice::meet(Elem a, Elem b) const {
  switch (kind_) {
    case Kind::Powerset:
      return a & b;
    case Kind::Explicit:
      return meet_tab_[static_cast<std::size_t>(a) * size_ + b];
    case Kind::Subgroup: {
      auto m = masks_[static_cast<std::size_t>(a)] & masks_[static_cast<std::size_t>(b)];
      return mask_index_.at(m);  // subgroup intersections are subgroups
    }
  }
  return 0;
}

Elem FiniteLattice::join(Elem a, Elem b) const {
  switch (kind_) {
    case Kind::Powerset:
      return a | b;
    case Kind::Explicit:
      return join_tab_[static_cast<std::size_t>(a) * size_ + b];
    case Kind::Subgroup: {
      auto m = masks_[static_cast<std::size_t>(a)] | masks_[static_cast<std::size_t>(b)];
      return mask_index_.at(close_mask(m));
    }
  }
  return 0;
}

Elem FiniteLattice::join_where(const std::function<bool(Elem)>& pred) const {
  if (kind_ == Kind::Powerset || kind_ == Kind::Subgroup) {
    std::uint64_t acc = 0;
    bool any = false;
    for (Elem e = 0; e < size_; ++e)
      if (pred(e)) {
        acc |= mask_of(e);
        any = true;
      }
    if (!any) return bottom_;
    if (kind_ == Kind::Powerset) return static_cast<Elem>(acc);
    return mask_index_.at(close_mask(acc));
  }
  Elem acc = bottom_;
  for (Elem e = 0; e < size_; ++e)
    if (pred(e)) acc = join(acc, e);
  return acc;
}

Elem FiniteLattice::meet_where(const std::function<bool(Elem)>& pred) const {
  if (kind_ == Kind::Powerset || kind_ == Kind::Subgroup) {
    std::uint64_t acc = mask_of(top_);
    for (Elem e = 0; e < size_; ++e)
      if (pred(e)) acc &= mask_of(e);
    if (kind_ == Kind::Powerset) return static_cast<Elem>(acc);
    return mask_index_.at(acc);  // intersection of subgroups
  }
  Elem acc = top_;
  for (Elem e = 0; e < size_; ++e)
    if (pred(e)) acc = meet(acc, e);
  return acc;
}

std::string FiniteLattice::label(Elem e) const {
  if (kind_ == Kind::Powerset)
    return subset_label(point_names_, static_cast<std::uint64_t>(e));
  return labels_[static_cast<std::size_t>(e)];
}

std::optional<Elem> FiniteLattice::find_label(const std::string& lbl) const {
  if (kind_ == Kind::Powerset && label_index_.empty()) {
    // >12 points: single-character names, decode directly
    std::uint64_t mask = 0;
    for (char c : lbl) {
      auto it = std::find(point_names_.begin(), point_names_.end(), std::string(1, c));
      if (it == point_names_.end()) return std::nullopt;
      mask |= std::uint64_t{1} << (it - point_names_.begin());
    }
    if (subset_label(point_names_, mask) != lbl) return std::nullopt;
    return static_cast<Elem>(mask);
  }
  auto it = label_index_.find(lbl);
  if (it == label_index_.end()) return std::nullopt;
  return it->second;
}

std::uint64_t FiniteLattice::mask_of(Elem e) const {
  if (kind_ == Kind::Powerset) return static_cast<std::uint64_t>(e);
  if (kind_ == Kind::Subgroup) return masks_[static_cast<std::size_t>(e)];
  throw DomainError("mask_of: explicit lattice has no masks");
}

std::optional<Elem> FiniteLattice::elem_of_mask(std::uint64_t m) const {
  if (kind_ == Kind::Powerset) {
    if (m >= static_cast<std::uint64_t>(size_)) return std::nullopt;
    return static_cast<Elem>(m);
  }
  if (kind_ == Kind::Subgroup) {
    auto it = mask_index_.find(m);
    if (it == mask_index_.end()) return std::nullopt;
    return it->second;
  }
  return std::nullopt;
}

std::uint64_t FiniteLattice::close_mask(std::uint64_t seed) const {
  if (kind_ != Kind::Subgroup) throw DomainError("close_mask: not a subgroup lattice");
  std::uint64_t cur = seed | 1;  // identity is element 0 of the group
  for (;;) {
    std::uint64_t next = cur;
    for (int a = 0; a < group_order_; ++a) {
      if (!(cur & (std::uint64_t{1} << a))) continue;
      for (int b = 0; b < group_order_; ++b) {
        if (!(cur & (std::uint64_t{1} << b))) continue;
        next |= std::uint64_t{1}
                << mult_[static_cast<std::size_t>(a) * group_order_ + b];
      }
    }
    if (next == cur) return cur;
    cur = next;
  }
}

std::vector<Elem> FiniteLattice::lower_covers(Elem e) const {
  std::vector<Elem> below;
  for (Elem x = 0; x < size_; ++x)
    if (x != e && leq(x, e)) below.push_back(x);
  std::vector<Elem> covers;
  for (Elem x : below) {
    bool maximal = true;
    for (Elem y : below)
      if (y != x && leq(x, y)) {
        maximal = false;
        break;
      }
    if (maximal) covers.push_back(x);
  }
  return covers;
}

void FiniteLattice::build_extension() const {
  std::vector<std::pair<long long, Elem>> keyed;
  keyed.reserve(static_cast<std::size_t>(size_));
  for (Elem e = 0; e < size_; ++e) {
    long long rank;
    if (kind_ == Kind::Explicit) {
      rank = 0;
      for (Elem x = 0; x < size_; ++x)
        if (x != e && leq(x, e)) ++rank;
    } else {
      rank = popcount64(mask_of(e));
    }
    keyed.emplace_back((rank << 32) | static_cast<long long>(e), e);
  }
  std::sort(keyed.begin(), keyed.end());
  extension_.clear();
  extension_.reserve(keyed.size());
  for (auto& [k, e] : keyed) extension_.push_back(e);
}

const std::vector<Elem>& FiniteLattice::linear_extension() const {
  if (extension_.empty() && size_ > 0) build_extension();
  return extension_;
}

void FiniteLattice::for_each_cover(const std::function<void(Elem, Elem)>& fn) const {
  if (kind_ == Kind::Powerset) {
    for (Elem e = 0; e < size_; ++e)
      for (int b = 0; b < points_; ++b)
        if (!(e & (1 << b))) fn(e, e | (1 << b));
    return;
  }
  for (Elem e = 0; e < size_; ++e)
    for (Elem c : lower_covers(e)) fn(c, e);
}

bool FiniteLattice::structurally_equal(const FiniteLattice& other) const {
  if (this == &other) return true;
  if (kind_ != other.kind_ || size_ != other.size_) return false;
  for (Elem e = 0; e < size_; ++e)
    if (label(e) != other.label(e)) return false;
  if (kind_ == Kind::Powerset) return point_names_ == other.point_names_;
  if (kind_ == Kind::Subgroup) return masks_ == other.masks_ && mult_ == other.mult_;
  return leq_ == other.leq_;
}

bool EndoMap::is_extensional() const {
  for (Elem x = 0; x < lattice->size(); ++x)
    if (!lattice->leq(x, values[static_cast<std::size_t>(x)])) return false;
  return true;
}

bool EndoMap::is_monotone() const {
  bool ok = true;
  lattice->for_each_cover([&](Elem lo, Elem hi) {
    if (ok && !lattice->leq(values[static_cast<std::size_t>(lo)],
                            values[static_cast<std::size_t>(hi)]))
      ok = false;
  });
  return ok;
}

bool EndoMap::is_grounded() const {
  return values[static_cast<std::size_t>(lattice->bottom())] == lattice->bottom();
}

bool EndoMap::is_idempotent() const {
  for (Elem x = 0; x < lattice->size(); ++x) {
    Elem v = values[static_cast<std::size_t>(x)];
    if (values[static_cast<std::size_t>(v)] != v) return false;
  }
  return true;
}

bool EndoMap::preserves_binary_joins() const {
  const int n = lattice->size();
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a; b < n; ++b) {
      Elem lhs = values[static_cast<std::size_t>(lattice->join(a, b))];
      Elem rhs = lattice->join(values[static_cast<std::size_t>(a)],
                               values[static_cast<std::size_t>(b)]);
      if (lhs != rhs) return false;
    }
  return true;
}

EndoMap identity_endomap(LatticePtr lat) {
  EndoMap c{std::move(lat), {}};
  c.values.resize(static_cast<std::size_t>(c.lattice->size()));
  for (Elem e = 0; e < c.lattice->size(); ++e) c.values[static_cast<std::size_t>(e)] = e;
  return c;
}

EndoMapProfile endomap_profile(const EndoMap& c) {
  if (!c.is_extensional())
    throw ValidationError("endomap_profile: map is not extensional");
  if (!c.is_monotone()) throw ValidationError("endomap_profile: map is not monotone");
  EndoMapProfile p;
  p.idempotent = c.is_idempotent();
  p.join_preserving = c.preserves_binary_joins();
  p.grounded = c.is_grounded();
  const auto& L = *c.lattice;
  for (Elem x = 0; x < L.size(); ++x)
    if (c(x) == x) p.fixed_points.push_back(x);
  p.dense_join = L.join_where([&](Elem x) { return x != L.top() && c(x) == L.top(); });
  p.weakly_cofinal_dense = (p.dense_join == L.top());
  return p;
}

std::optional<Elem> pseudocomplement(const FiniteLattice& lat, Elem x) {
  Elem j = lat.join_where([&](Elem y) { return lat.meet(x, y) == lat.bottom(); });
  if (lat.meet(x, j) == lat.bottom()) return j;
  return std::nullopt;
}

bool is_pseudocomplemented(const FiniteLattice& lat) {
  if (lat.kind() == FiniteLattice::Kind::Powerset) return true;
  for (Elem x = 0; x < lat.size(); ++x)
    if (!pseudocomplement(lat, x)) return false;
  return true;
}

bool is_join_prime(const FiniteLattice& lat, Elem a) {
  const int n = lat.size();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = x; y < n; ++y)
      if (lat.leq(a, lat.join(x, y)) && !lat.leq(a, x) && !lat.leq(a, y)) return false;
  return true;
}

PrimeExtension prime_extension(const FiniteLattice& lat, Elem filter_generator) {
  PrimeExtension out;
  if (filter_generator == lat.bottom()) return out;  // improper filter
  for (Elem b = 0; b < lat.size(); ++b) {
    if (b == lat.bottom()) continue;
    if (!lat.leq(b, filter_generator)) continue;
    if (is_join_prime(lat, b)) {
      out.exists = true;
      out.witness_generator = b;
      return out;
    }
  }
  return out;
}

namespace {

struct EndoDfs {
  const FiniteLattice& L;
  const std::vector<Elem>& order;
  std::vector<std::vector<Elem>> covers;  // lower covers per element
  std::vector<Elem> values;
  EndoMap out;
  const std::function<bool(const EndoMap&)>& fn;
  std::size_t emitted = 0;
  std::size_t budget;
  bool stopped = false;

  bool rec(std::size_t pos) {
    if (stopped) return false;
    if (pos == order.size()) {
      if (emitted >= budget)
        throw EnumerationError("endomap enumeration budget exceeded", emitted);
      ++emitted;
      out.values = values;
      if (!fn(out)) stopped = true;
      return !stopped;
    }
    Elem x = order[pos];
    Elem lb = x;
    for (Elem c : covers[static_cast<std::size_t>(x)])
      lb = L.join(lb, values[static_cast<std::size_t>(c)]);
    for (Elem v = 0; v < L.size(); ++v) {
      if (!L.leq(lb, v)) continue;
      values[static_cast<std::size_t>(x)] = v;
      if (!rec(pos + 1)) return false;
    }
    return true;
  }
};

}  // namespace

void enumerate_endomaps(LatticePtr lat, bool require_grounded,
                        const std::function<bool(const EndoMap&)>& fn,
                        const EnumBudget& budget) {
  if (lat->size() > budget.max_elements)
    throw EnumerationError("endomap enumeration: lattice too large", 0);
  const auto& order = lat->linear_extension();
  EndoDfs dfs{*lat, order, {}, {}, EndoMap{lat, {}}, fn, 0, budget.max_results, false};
  dfs.covers.resize(static_cast<std::size_t>(lat->size()));
  for (Elem e = 0; e < lat->size(); ++e)
    dfs.covers[static_cast<std::size_t>(e)] = lat->lower_covers(e);
  dfs.values.assign(static_cast<std::size_t>(lat->size()), 0);
  if (require_grounded) {
    // bottom is first in the linear extension; pin it and recurse past it
    dfs.values[static_cast<std::size_t>(lat->bottom())] = lat->bottom();
    if (order.front() != lat->bottom())
      throw ValidationError("enumerate_endomaps: extension does not start at bottom");
    dfs.rec(1);
    return;
  }
  dfs.rec(0);
}

std::size_t count_endomaps(LatticePtr lat, bool require_grounded, const EnumBudget& budget) {
  std::size_t n = 0;
  enumerate_endomaps(
      lat, require_grounded,
      [&](const EndoMap&) {
        ++n;
        return true;
      },
      budget);
  return n;
}

}  // namespace pnbd
