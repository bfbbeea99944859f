#include "pnbd/context.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>

namespace pnbd {

std::string ctx_name(Ctx c) { return c == Ctx::FinSet ? "finset" : "fingrp"; }

std::optional<Ctx> ctx_from_name(const std::string& s) {
  if (s == "finset") return Ctx::FinSet;
  if (s == "fingrp") return Ctx::FinGrp;
  return std::nullopt;
}

bool is_reflecting_zero_context(Ctx c) { return c == Ctx::FinSet; }
bool is_admissibly_quasi_pointed(Ctx) { return true; }

int GroupTable::inverse(int a) const {
  for (int b = 0; b < order; ++b)
    if (at(a, b) == 0) return b;
  throw ValidationError("group: no inverse for element " + std::to_string(a));
}

GroupTable GroupTable::from_table(const std::vector<std::vector<int>>& table,
                                  std::vector<std::string> labels) {
  GroupTable g;
  g.order = static_cast<int>(table.size());
  if (g.order == 0) throw ValidationError("group: empty table");
  if (g.order > FiniteLattice::kMaxGroupOrder)
    throw CapacityError("group: order above " +
                        std::to_string(FiniteLattice::kMaxGroupOrder));
  g.mult.assign(static_cast<std::size_t>(g.order) * g.order, 0);
  for (int a = 0; a < g.order; ++a) {
    if (static_cast<int>(table[a].size()) != g.order)
      throw ValidationError("group: ragged table row " + std::to_string(a));
    for (int b = 0; b < g.order; ++b) {
      int v = table[a][b];
      if (v < 0 || v >= g.order)
        throw ValidationError("group: entry out of range at (" + std::to_string(a) +
                              "," + std::to_string(b) + ")");
      g.mult[static_cast<std::size_t>(a) * g.order + b] = static_cast<std::uint8_t>(v);
    }
  }
  for (int a = 0; a < g.order; ++a)
    if (g.at(0, a) != a || g.at(a, 0) != a)
      throw ValidationError("group: element 0 is not the identity");
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b)
      for (int c = 0; c < g.order; ++c)
        if (g.at(g.at(a, b), c) != g.at(a, g.at(b, c)))
          throw ValidationError("group: not associative at (" + std::to_string(a) + "," +
                                std::to_string(b) + "," + std::to_string(c) + ")");
  for (int a = 0; a < g.order; ++a) g.inverse(a);  // throws when missing
  if (labels.empty()) {
    for (int a = 0; a < g.order; ++a) labels.push_back(std::to_string(a));
  }
  if (static_cast<int>(labels.size()) != g.order)
    throw ValidationError("group: label count mismatch");
  g.labels = std::move(labels);
  return g;
}

namespace {

GroupTable cyclic(int n) {
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n),
                                  std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return GroupTable::from_table(t);
}

GroupTable direct_sum(const GroupTable& g, const GroupTable& h) {
  int n = g.order * h.order;
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n),
                                  std::vector<int>(static_cast<std::size_t>(n)));
  auto idx = [&](int a, int b) { return a * h.order + b; };
  for (int a1 = 0; a1 < g.order; ++a1)
    for (int b1 = 0; b1 < h.order; ++b1)
      for (int a2 = 0; a2 < g.order; ++a2)
        for (int b2 = 0; b2 < h.order; ++b2)
          t[idx(a1, b1)][idx(a2, b2)] = idx(g.at(a1, a2), h.at(b1, b2));
  return GroupTable::from_table(t);
}

GroupTable symmetric3() {
  // 0:e 1:(012) 2:(021) 3:(01) 4:(02) 5:(12) acting on {0,1,2}; (ab)(x)=a(b(x))
  const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                           {1, 0, 2}, {2, 1, 0}, {0, 2, 1}};
  auto find = [&](const int p[3]) {
    for (int i = 0; i < 6; ++i)
      if (perms[i][0] == p[0] && perms[i][1] == p[1] && perms[i][2] == p[2]) return i;
    return -1;
  };
  std::vector<std::vector<int>> t(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      int c[3];
      for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
      t[a][b] = find(c);
    }
  return GroupTable::from_table(t);
}

GroupTable dihedral4() {
  // r^i s^j with i in 0..3, j in 0..1; index = i + 4j; s r = r^-1 s
  auto idx = [](int i, int j) { return i + 4 * j; };
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int i1 = 0; i1 < 4; ++i1)
    for (int j1 = 0; j1 < 2; ++j1)
      for (int i2 = 0; i2 < 4; ++i2)
        for (int j2 = 0; j2 < 2; ++j2) {
          int i = (i1 + (j1 ? 4 - i2 : i2)) % 4;
          t[idx(i1, j1)][idx(i2, j2)] = idx(i, j1 ^ j2);
        }
  return GroupTable::from_table(t);
}

GroupTable quaternion8() {
  // 0:1 1:-1 2:i 3:-i 4:j 5:-j 6:k 7:-k
  auto enc = [](int sign, int axis) {  // axis 0:1 1:i 2:j 3:k
    int base = axis == 0 ? 0 : 2 * axis;
    return base + (sign < 0 ? 1 : 0);
  };
  auto dec_sign = [](int e) { return (e % 2) ? -1 : 1; };
  auto dec_axis = [](int e) { return e / 2; };
  // axis multiplication with sign: i*j=k etc.
  const int axis_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  const int sign_mul[4][4] = {
      {1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  // sign_mul[a][b]: sign of (axis a)*(axis b): i*i=-1, i*j=+k, j*i=-k, ...
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int sa = dec_sign(a), xa = dec_axis(a);
      int sb = dec_sign(b), xb = dec_axis(b);
      int axis = axis_mul[xa][xb];
      int sign = sa * sb * sign_mul[xa][xb];
      t[a][b] = enc(sign, axis);
    }
  return GroupTable::from_table(t);
}

}  // namespace

GroupTable GroupTable::trivial() { return cyclic(1); }

GroupTable GroupTable::builtin(const std::string& name) {
  if (name == "Z1") return cyclic(1);
  if (name.size() == 2 && name[0] == 'Z' && name[1] >= '2' && name[1] <= '8')
    return cyclic(name[1] - '0');
  if (name == "Z2xZ2") return direct_sum(cyclic(2), cyclic(2));
  if (name == "Z2xZ4") return direct_sum(cyclic(2), cyclic(4));
  if (name == "S3") return symmetric3();
  if (name == "D4") return dihedral4();
  if (name == "Q8") return quaternion8();
  throw DomainError("unknown builtin group: " + name);
}

const std::vector<std::string>& GroupTable::builtin_names() {
  static const std::vector<std::string> names = {"Z2", "Z3",    "Z4",    "Z5",
                                                 "Z6", "Z7",    "Z8",    "Z2xZ2",
                                                 "Z2xZ4", "S3", "D4",    "Q8"};
  return names;
}

std::uint64_t close_subset(const GroupTable& g, std::uint64_t seed) {
  std::uint64_t cur = seed | 1;
  for (;;) {
    std::uint64_t next = cur;
    for (int a = 0; a < g.order; ++a) {
      if (!(cur & (std::uint64_t{1} << a))) continue;
      for (int b = 0; b < g.order; ++b) {
        if (!(cur & (std::uint64_t{1} << b))) continue;
        next |= std::uint64_t{1} << g.at(a, b);
      }
    }
    if (next == cur) return cur;
    cur = next;
  }
}

std::vector<std::uint64_t> enumerate_subgroup_masks(const GroupTable& g) {
  std::set<std::uint64_t> found;
  std::vector<std::uint64_t> frontier;
  std::uint64_t triv = close_subset(g, 1);
  found.insert(triv);
  frontier.push_back(triv);
  while (!frontier.empty()) {
    std::uint64_t s = frontier.back();
    frontier.pop_back();
    for (int x = 0; x < g.order; ++x) {
      if (s & (std::uint64_t{1} << x)) continue;
      std::uint64_t t = close_subset(g, s | (std::uint64_t{1} << x));
      if (found.insert(t).second) frontier.push_back(t);
    }
  }
  std::vector<std::uint64_t> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), [](std::uint64_t a, std::uint64_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  return out;
}

namespace {

std::string subgroup_label(const GroupTable& g, std::uint64_t mask) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < g.order; ++i)
    if (mask & (std::uint64_t{1} << i)) {
      if (!first) out += ",";
      out += g.labels[static_cast<std::size_t>(i)];
      first = false;
    }
  out += "}";
  return out;
}

}  // namespace

int ContextObject::point_index(const std::string& name) const {
  auto it = std::find(points.begin(), points.end(), name);
  return it == points.end() ? -1 : static_cast<int>(it - points.begin());
}

ObjPtr make_finset(std::vector<std::string> points) {
  auto obj = std::make_shared<ContextObject>();
  obj->context = Ctx::FinSet;
  std::sort(points.begin(), points.end());
  obj->points = points;
  obj->sub = std::make_shared<FiniteLattice>(FiniteLattice::powerset(points));
  return obj;
}

ObjPtr make_group_object(GroupTable g) {
  auto obj = std::make_shared<ContextObject>();
  obj->context = Ctx::FinGrp;
  obj->points = g.labels;
  auto masks = enumerate_subgroup_masks(g);
  std::vector<std::string> labels;
  labels.reserve(masks.size());
  for (auto m : masks) labels.push_back(subgroup_label(g, m));
  obj->subgroup_masks = masks;
  obj->sub = std::make_shared<FiniteLattice>(
      FiniteLattice::subgroups(masks, labels, g.order, g.mult));
  obj->group = std::move(g);
  return obj;
}

ObjPtr make_builtin_group(const std::string& name) {
  return make_group_object(GroupTable::builtin(name));
}

ObjPtr terminal_object(Ctx c) {
  if (c == Ctx::FinSet) return make_finset({"pt"});
  return make_group_object(GroupTable::trivial());
}

ObjPtr initial_object(Ctx c) {
  if (c == Ctx::FinSet) return make_finset({});
  return make_group_object(GroupTable::trivial());
}

bool objects_equal(const ObjPtr& a, const ObjPtr& b) {
  if (a == b) return true;
  if (a->context != b->context || a->points != b->points) return false;
  if (a->context == Ctx::FinGrp) return a->group.mult == b->group.mult;
  return true;
}

bool MorphismInstance::is_injective() const {
  std::vector<bool> seen(static_cast<std::size_t>(cod->carrier_size()), false);
  for (int v : map) {
    if (seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

bool MorphismInstance::is_surjective() const {
  std::vector<bool> seen(static_cast<std::size_t>(cod->carrier_size()), false);
  for (int v : map) seen[static_cast<std::size_t>(v)] = true;
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

MorphismInstance make_morphism(ObjPtr dom, ObjPtr cod, std::vector<int> map) {
  if (dom->context != cod->context)
    throw DomainError("morphism: mixed contexts");
  if (static_cast<int>(map.size()) != dom->carrier_size())
    throw ValidationError("morphism: map is not total");
  for (int v : map)
    if (v < 0 || v >= cod->carrier_size())
      throw ValidationError("morphism: image out of range");
  MorphismInstance f{std::move(dom), std::move(cod), std::move(map)};
  if (f.dom->context == Ctx::FinGrp) {
    const auto& g = f.dom->group;
    const auto& h = f.cod->group;
    for (int a = 0; a < g.order; ++a)
      for (int b = 0; b < g.order; ++b)
        if (f(g.at(a, b)) != h.at(f(a), f(b)))
          throw ValidationError("morphism: not a homomorphism at (" +
                                g.labels[static_cast<std::size_t>(a)] + "," +
                                g.labels[static_cast<std::size_t>(b)] + ")");
  }
  return f;
}

MorphismInstance identity_morphism(ObjPtr obj) {
  std::vector<int> map(static_cast<std::size_t>(obj->carrier_size()));
  for (int i = 0; i < obj->carrier_size(); ++i) map[static_cast<std::size_t>(i)] = i;
  return MorphismInstance{obj, obj, std::move(map)};
}

MorphismInstance compose(const MorphismInstance& g, const MorphismInstance& f) {
  if (!objects_equal(f.cod, g.dom)) throw DomainError("compose: shape mismatch");
  std::vector<int> map(f.map.size());
  for (std::size_t i = 0; i < f.map.size(); ++i)
    map[i] = g.map[static_cast<std::size_t>(f.map[i])];
  return MorphismInstance{f.dom, g.cod, std::move(map)};
}

MorphismInstance unique_to_terminal(ObjPtr obj, ObjPtr term) {
  std::vector<int> map(static_cast<std::size_t>(obj->carrier_size()), 0);
  return MorphismInstance{obj, term, std::move(map)};
}

bool morphisms_equal(const MorphismInstance& a, const MorphismInstance& b) {
  return objects_equal(a.dom, b.dom) && objects_equal(a.cod, b.cod) && a.map == b.map;
}

Elem image_sub(const MorphismInstance& f, Elem x) {
  std::uint64_t xm = f.dom->carrier_mask(x);
  std::uint64_t ym = 0;
  for (int i = 0; i < f.dom->carrier_size(); ++i)
    if (xm & (std::uint64_t{1} << i)) ym |= std::uint64_t{1} << f(i);
  auto e = f.cod->elem_for_mask(ym);
  if (!e) throw ValidationError("image_sub: image is not admissible");
  return *e;
}

Elem preimage_sub(const MorphismInstance& f, Elem y) {
  std::uint64_t ym = f.cod->carrier_mask(y);
  std::uint64_t xm = 0;
  for (int i = 0; i < f.dom->carrier_size(); ++i)
    if (ym & (std::uint64_t{1} << f(i))) xm |= std::uint64_t{1} << i;
  auto e = f.dom->elem_for_mask(xm);
  if (!e) throw ValidationError("preimage_sub: preimage is not admissible");
  return *e;
}

Subobject subobject_of(ObjPtr parent, Elem m) {
  std::uint64_t mask = parent->carrier_mask(m);
  if (parent->context == Ctx::FinSet) {
    std::vector<std::string> pts;
    std::vector<int> embed;
    for (int i = 0; i < parent->carrier_size(); ++i)
      if (mask & (std::uint64_t{1} << i)) {
        pts.push_back(parent->points[static_cast<std::size_t>(i)]);
        embed.push_back(i);
      }
    auto obj = make_finset(pts);  // parent points sorted, order preserved
    return Subobject{obj, MorphismInstance{obj, parent, std::move(embed)}, m};
  }
  // subgroup as a group in its own right, labels inherited
  std::vector<int> members;
  for (int i = 0; i < parent->carrier_size(); ++i)
    if (mask & (std::uint64_t{1} << i)) members.push_back(i);
  std::vector<int> rank(static_cast<std::size_t>(parent->carrier_size()), -1);
  for (std::size_t k = 0; k < members.size(); ++k)
    rank[static_cast<std::size_t>(members[k])] = static_cast<int>(k);
  std::vector<std::vector<int>> table(members.size(), std::vector<int>(members.size()));
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < members.size(); ++a) {
    labels.push_back(parent->points[static_cast<std::size_t>(members[a])]);
    for (std::size_t b = 0; b < members.size(); ++b)
      table[a][b] = rank[static_cast<std::size_t>(
          parent->group.at(members[a], members[b]))];
  }
  auto obj = make_group_object(GroupTable::from_table(table, labels));
  return Subobject{obj, MorphismInstance{obj, parent, std::move(members)}, m};
}

Factorization factorize(const MorphismInstance& f) {
  std::uint64_t im = 0;
  for (int v : f.map) im |= std::uint64_t{1} << v;
  auto e = f.cod->elem_for_mask(im);
  if (!e) throw ValidationError("factorize: image not admissible");
  Subobject s = subobject_of(f.cod, *e);
  // corestrict f onto the image carrier
  std::vector<int> back(static_cast<std::size_t>(f.cod->carrier_size()), -1);
  for (std::size_t k = 0; k < s.embed.map.size(); ++k)
    back[static_cast<std::size_t>(s.embed.map[k])] = static_cast<int>(k);
  std::vector<int> emap(f.map.size());
  for (std::size_t i = 0; i < f.map.size(); ++i)
    emap[i] = back[static_cast<std::size_t>(f.map[i])];
  return Factorization{s.obj, MorphismInstance{f.dom, s.obj, std::move(emap)}, s.embed};
}

PullbackData pullback(const MorphismInstance& f, const MorphismInstance& h) {
  if (!objects_equal(f.cod, h.cod)) throw DomainError("pullback: codomains differ");
  const auto& X = *f.dom;
  const auto& T = *h.dom;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < X.carrier_size(); ++i)
    for (int j = 0; j < T.carrier_size(); ++j)
      if (f(i) == h(j)) pairs.emplace_back(i, j);

  if (X.context == Ctx::FinSet) {
    std::vector<std::string> labels;
    labels.reserve(pairs.size());
    for (auto& [i, j] : pairs)
      labels.push_back(X.points[static_cast<std::size_t>(i)] + "|" +
                       T.points[static_cast<std::size_t>(j)]);
    auto obj = make_finset(labels);
    std::vector<int> p1(pairs.size()), p2(pairs.size());
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      auto& [i, j] = pairs[k];
      int idx = obj->point_index(X.points[static_cast<std::size_t>(i)] + "|" +
                                 T.points[static_cast<std::size_t>(j)]);
      p1[static_cast<std::size_t>(idx)] = i;
      p2[static_cast<std::size_t>(idx)] = j;
    }
    return PullbackData{obj, MorphismInstance{obj, f.dom, std::move(p1)},
                        MorphismInstance{obj, h.dom, std::move(p2)}};
  }

  if (static_cast<int>(pairs.size()) > FiniteLattice::kMaxGroupOrder)
    throw CapacityError("pullback: group order above " +
                        std::to_string(FiniteLattice::kMaxGroupOrder));
  std::map<std::pair<int, int>, int> idx;
  for (std::size_t k = 0; k < pairs.size(); ++k) idx[pairs[k]] = static_cast<int>(k);
  std::vector<std::vector<int>> table(pairs.size(), std::vector<int>(pairs.size()));
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < pairs.size(); ++a) {
    labels.push_back(X.points[static_cast<std::size_t>(pairs[a].first)] + "|" +
                     T.points[static_cast<std::size_t>(pairs[a].second)]);
    for (std::size_t b = 0; b < pairs.size(); ++b) {
      std::pair<int, int> prod{X.group.at(pairs[a].first, pairs[b].first),
                               T.group.at(pairs[a].second, pairs[b].second)};
      table[a][b] = idx.at(prod);
    }
  }
  auto obj = make_group_object(GroupTable::from_table(table, labels));
  std::vector<int> p1(pairs.size()), p2(pairs.size());
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    p1[k] = pairs[k].first;
    p2[k] = pairs[k].second;
  }
  return PullbackData{obj, MorphismInstance{obj, f.dom, std::move(p1)},
                      MorphismInstance{obj, h.dom, std::move(p2)}};
}

ProductData product(const std::vector<ObjPtr>& factors) {
  if (factors.size() > 3) throw CapacityError("product: at most 3 factors");
  if (factors.empty()) {
    return ProductData{terminal_object(Ctx::FinSet), {}};
  }
  ProductData acc{factors[0], {identity_morphism(factors[0])}};
  for (std::size_t k = 1; k < factors.size(); ++k) {
    Ctx c = factors[k]->context;
    auto term = terminal_object(c);
    auto pb = pullback(unique_to_terminal(acc.obj, term),
                       unique_to_terminal(factors[k], term));
    std::vector<MorphismInstance> projs;
    for (auto& p : acc.projections) projs.push_back(compose(p, pb.to_dom_f));
    projs.push_back(pb.to_dom_h);
    acc = ProductData{pb.obj, std::move(projs)};
  }
  return acc;
}

MorphismInstance pairing(const ProductData& prod,
                         const std::vector<MorphismInstance>& legs) {
  if (legs.empty()) throw DomainError("pairing: no legs");
  if (legs.size() != prod.projections.size())
    throw DomainError("pairing: leg count mismatch");
  const auto& dom = legs[0].dom;
  std::vector<int> map(static_cast<std::size_t>(dom->carrier_size()));
  for (int x = 0; x < dom->carrier_size(); ++x) {
    std::string lbl;
    for (std::size_t k = 0; k < legs.size(); ++k) {
      if (k) lbl += "|";
      lbl += legs[k].cod->points[static_cast<std::size_t>(legs[k](x))];
    }
    int idx = prod.obj->point_index(lbl);
    if (idx < 0) throw DomainError("pairing: tuple " + lbl + " missing in product");
    map[static_cast<std::size_t>(x)] = idx;
  }
  return make_morphism(dom, prod.obj, std::move(map));
}

KernelPairData kernel_pair(const MorphismInstance& f) {
  auto pb = pullback(f, f);
  std::vector<int> diag(static_cast<std::size_t>(f.dom->carrier_size()));
  for (int x = 0; x < f.dom->carrier_size(); ++x) {
    const std::string& p = f.dom->points[static_cast<std::size_t>(x)];
    int idx = pb.obj->point_index(p + "|" + p);
    if (idx < 0) throw ValidationError("kernel_pair: missing diagonal point");
    diag[static_cast<std::size_t>(x)] = idx;
  }
  return KernelPairData{pb, make_morphism(f.dom, pb.obj, std::move(diag))};
}

Corestriction corestriction(const MorphismInstance& f, Elem n) {
  Subobject cod_sub = subobject_of(f.cod, n);
  Subobject dom_sub = subobject_of(f.dom, preimage_sub(f, n));
  std::vector<int> back(static_cast<std::size_t>(f.cod->carrier_size()), -1);
  for (std::size_t k = 0; k < cod_sub.embed.map.size(); ++k)
    back[static_cast<std::size_t>(cod_sub.embed.map[k])] = static_cast<int>(k);
  std::vector<int> map(dom_sub.embed.map.size());
  for (std::size_t i = 0; i < dom_sub.embed.map.size(); ++i)
    map[i] = back[static_cast<std::size_t>(f(dom_sub.embed.map[i]))];
  auto f_n = make_morphism(dom_sub.obj, cod_sub.obj, std::move(map));
  return Corestriction{std::move(dom_sub), std::move(cod_sub), std::move(f_n)};
}

bool is_formally_surjective(const MorphismInstance& f) {
  const auto& L = *f.cod->sub;
  for (Elem y = 0; y < L.size(); ++y)
    if (image_sub(f, preimage_sub(f, y)) != y) return false;
  return true;
}

bool reflects_zero(const MorphismInstance& f) {
  return preimage_sub(f, f.cod->sigma()) == f.dom->sigma();
}

Elem normal_closure(const ObjPtr& g_obj, Elem h) {
  if (g_obj->context != Ctx::FinGrp)
    throw DomainError("normal_closure: requires a group object");
  const auto& g = g_obj->group;
  std::uint64_t hm = g_obj->carrier_mask(h);
  std::uint64_t conj = 0;
  for (int a = 0; a < g.order; ++a) {
    if (!(hm & (std::uint64_t{1} << a))) continue;
    for (int x = 0; x < g.order; ++x)
      conj |= std::uint64_t{1} << g.at(g.at(x, a), g.inverse(x));
  }
  auto e = g_obj->elem_for_mask(close_subset(g, conj));
  if (!e) throw ValidationError("normal_closure: closure not in lattice");
  return *e;
}

namespace {

std::vector<int> greedy_generators(const GroupTable& g) {
  std::vector<int> gens;
  std::uint64_t closed = close_subset(g, 1);
  for (int x = 0; x < g.order; ++x) {
    if (closed & (std::uint64_t{1} << x)) continue;
    gens.push_back(x);
    closed = close_subset(g, closed | (std::uint64_t{1} << x));
  }
  return gens;
}

std::vector<MorphismInstance> all_homomorphisms(ObjPtr dom, ObjPtr cod) {
  const auto& g = dom->group;
  const auto& h = cod->group;
  auto gens = greedy_generators(g);
  // express every element as prior * generator in BFS order
  std::vector<std::pair<int, int>> expr(static_cast<std::size_t>(g.order), {-1, -1});
  std::vector<int> bfs{0};
  std::vector<bool> seen(static_cast<std::size_t>(g.order), false);
  seen[0] = true;
  for (std::size_t q = 0; q < bfs.size(); ++q) {
    int x = bfs[q];
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      int y = g.at(x, gens[gi]);
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = true;
        expr[static_cast<std::size_t>(y)] = {x, static_cast<int>(gi)};
        bfs.push_back(y);
      }
    }
  }
  std::vector<MorphismInstance> out;
  std::vector<int> assign(gens.size(), 0);
  for (;;) {
    std::vector<int> map(static_cast<std::size_t>(g.order), -1);
    map[0] = 0;
    for (std::size_t q = 1; q < bfs.size(); ++q) {
      int y = bfs[q];
      auto [x, gi] = expr[static_cast<std::size_t>(y)];
      map[static_cast<std::size_t>(y)] =
          h.at(map[static_cast<std::size_t>(x)], assign[static_cast<std::size_t>(gi)]);
    }
    bool ok = true;
    for (int a = 0; a < g.order && ok; ++a)
      for (int b = 0; b < g.order && ok; ++b)
        if (map[static_cast<std::size_t>(g.at(a, b))] !=
            h.at(map[static_cast<std::size_t>(a)], map[static_cast<std::size_t>(b)]))
          ok = false;
    if (ok) out.push_back(MorphismInstance{dom, cod, map});
    // odometer over generator images
    std::size_t k = 0;
    for (; k < assign.size(); ++k) {
      if (++assign[k] < h.order) break;
      assign[k] = 0;
    }
    if (k == assign.size()) break;
    if (assign.empty()) break;
  }
  return out;
}

}  // namespace

ObjPtr with_default_labels(const ObjPtr& obj) {
  if (obj->context != Ctx::FinGrp) return obj;
  bool numeric = true;
  for (int i = 0; i < obj->carrier_size() && numeric; ++i)
    if (obj->points[static_cast<std::size_t>(i)] != std::to_string(i)) numeric = false;
  if (numeric) return obj;
  const auto& g = obj->group;
  std::vector<std::vector<int>> table(static_cast<std::size_t>(g.order),
                                      std::vector<int>(static_cast<std::size_t>(g.order)));
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b)
      table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = g.at(a, b);
  return make_group_object(GroupTable::from_table(table));
}

std::vector<MorphismInstance> all_morphisms(ObjPtr dom, ObjPtr cod) {
  if (dom->context != cod->context) throw DomainError("all_morphisms: mixed contexts");
  if (dom->context == Ctx::FinGrp) return all_homomorphisms(dom, cod);
  const int n = dom->carrier_size(), m = cod->carrier_size();
  std::vector<MorphismInstance> out;
  if (n == 0) {
    out.push_back(MorphismInstance{dom, cod, {}});
    return out;
  }
  if (m == 0) return out;
  double total = 1;
  for (int i = 0; i < n; ++i) total *= m;
  if (total > 1e6) throw EnumerationError("all_morphisms: too many functions", 0);
  std::vector<int> map(static_cast<std::size_t>(n), 0);
  for (;;) {
    out.push_back(MorphismInstance{dom, cod, map});
    int k = 0;
    for (; k < n; ++k) {
      if (++map[static_cast<std::size_t>(k)] < m) break;
      map[static_cast<std::size_t>(k)] = 0;
    }
    if (k == n) break;
  }
  return out;
}

}  // namespace pnbd
