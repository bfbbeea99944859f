#include "pnbd/system.hpp"

#include <algorithm>

#include "pnbd/closure.hpp"

namespace pnbd {

void validate_system(const PreNbdSystem& s) {
  const auto& L = s.lat();
  if (static_cast<int>(s.gen.size()) != L.size())
    throw ValidationError("system: generator table size mismatch");
  for (Elem x = 0; x < L.size(); ++x) {
    Elem v = s.g(x);
    if (v < 0 || v >= L.size())
      throw ValidationError("system: generator out of range at " + L.label(x));
    if (!L.leq(x, v))
      throw ValidationError("system: not extensional at element \"" + L.label(x) +
                            "\" (value \"" + L.label(v) + "\")");
  }
  bool mono = true;
  std::string culprit;
  L.for_each_cover([&](Elem lo, Elem hi) {
    if (mono && !L.leq(s.g(lo), s.g(hi))) {
      mono = false;
      culprit = "pair (" + L.label(lo) + " <= " + L.label(hi) + ")";
    }
  });
  if (!mono) throw ValidationError("system: not monotone at " + culprit);
}

PreNbdSystem make_system(ObjPtr obj, std::vector<Elem> gen) {
  PreNbdSystem s{std::move(obj), std::move(gen)};
  validate_system(s);
  return s;
}

SystemKind classify_system(const PreNbdSystem& s) {
  validate_system(s);
  EndoMap c{s.object->sub, s.gen};
  SystemKind k;
  k.grounded = c.is_grounded();
  k.is_weak = c.is_idempotent();
  k.is_nbd = k.is_weak && k.grounded && c.preserves_binary_joins();
  return k;
}

PreNbdSystem canonical_system(ObjPtr obj, CanonicalKind kind) {
  const auto& L = *obj->sub;
  std::vector<Elem> gen(static_cast<std::size_t>(L.size()));
  for (Elem x = 0; x < L.size(); ++x) {
    if (kind == CanonicalKind::Discrete)
      gen[static_cast<std::size_t>(x)] = x;
    else
      gen[static_cast<std::size_t>(x)] = (x == L.bottom()) ? L.bottom() : L.top();
  }
  return PreNbdSystem{std::move(obj), std::move(gen)};
}

PreNbdSystem phi(ObjPtr obj, const EndoMap& c) {
  if (!obj->sub->structurally_equal(*c.lattice))
    throw DomainError("phi: endomap lives on a different lattice");
  if (!c.is_extensional() || !c.is_monotone())
    throw ValidationError("phi: endomap must be monotone extensional");
  return PreNbdSystem{std::move(obj), c.values};
}

EndoMap psi(const PreNbdSystem& s) { return EndoMap{s.object->sub, s.gen}; }

PreNbdSystem compose_endomap(const PreNbdSystem& s, const EndoMap& c) {
  if (!s.lat().structurally_equal(*c.lattice))
    throw DomainError("compose_endomap: lattices differ");
  if (!c.is_extensional() || !c.is_monotone())
    throw ValidationError("compose_endomap: endomap must be monotone extensional");
  std::vector<Elem> gen(s.gen.size());
  for (Elem x = 0; x < s.lat().size(); ++x)
    gen[static_cast<std::size_t>(x)] = s.g(c(x));
  return make_system(s.object, std::move(gen));
}

namespace {

void require_same_object(const PreNbdSystem& a, const PreNbdSystem& b,
                         const char* who) {
  if (!objects_equal(a.object, b.object))
    throw DomainError(std::string(who) + ": systems on different objects");
}

}  // namespace

bool system_leq(const PreNbdSystem& a, const PreNbdSystem& b) {
  require_same_object(a, b, "system_leq");
  for (Elem x = 0; x < a.lat().size(); ++x)
    if (!a.lat().leq(b.g(x), a.g(x))) return false;
  return true;
}

PreNbdSystem system_meet(const PreNbdSystem& a, const PreNbdSystem& b) {
  require_same_object(a, b, "system_meet");
  std::vector<Elem> gen(a.gen.size());
  for (Elem x = 0; x < a.lat().size(); ++x)
    gen[static_cast<std::size_t>(x)] = a.lat().join(a.g(x), b.g(x));
  return make_system(a.object, std::move(gen));
}

PreNbdSystem system_join(const PreNbdSystem& a, const PreNbdSystem& b) {
  require_same_object(a, b, "system_join");
  std::vector<Elem> gen(a.gen.size());
  for (Elem x = 0; x < a.lat().size(); ++x)
    gen[static_cast<std::size_t>(x)] = a.lat().meet(a.g(x), b.g(x));
  return make_system(a.object, std::move(gen));
}

RestrictedSpace restriction_system(const PreNbdSystem& s, Elem m) {
  Subobject so = subobject_of(s.object, m);
  const auto& lm = *so.obj->sub;
  std::vector<Elem> gen(static_cast<std::size_t>(lm.size()));
  for (Elem a = 0; a < lm.size(); ++a) {
    Elem up = image_sub(so.embed, a);
    Elem v = s.lat().meet(s.g(up), m);
    gen[static_cast<std::size_t>(a)] = preimage_sub(so.embed, v);
  }
  auto sys = make_system(so.obj, std::move(gen));
  return RestrictedSpace{std::move(so), std::move(sys)};
}

PullbackSpace pullback_space(const MorphismInstance& f, const MorphismInstance& h,
                             const PreNbdSystem& mu, const PreNbdSystem& tau) {
  if (!objects_equal(f.cod, h.cod))
    throw DomainError("pullback_space: codomains differ");
  if (!objects_equal(mu.object, f.dom) || !objects_equal(tau.object, h.dom))
    throw DomainError("pullback_space: systems on wrong objects");
  auto pb = pullback(f, h);
  const auto& lp = *pb.obj->sub;
  std::vector<Elem> gen(static_cast<std::size_t>(lp.size()));
  for (Elem w = 0; w < lp.size(); ++w) {
    Elem a = preimage_sub(pb.to_dom_f, mu.g(image_sub(pb.to_dom_f, w)));
    Elem b = preimage_sub(pb.to_dom_h, tau.g(image_sub(pb.to_dom_h, w)));
    gen[static_cast<std::size_t>(w)] = lp.meet(a, b);
  }
  auto sys = make_system(pb.obj, std::move(gen));
  return PullbackSpace{std::move(pb), std::move(sys)};
}

ProductSpace product_space(const std::vector<PreNbdSystem>& factors) {
  if (factors.empty()) {
    auto term = terminal_object(Ctx::FinSet);
    return ProductSpace{ProductData{term, {}},
                        canonical_system(term, CanonicalKind::Indiscrete)};
  }
  ProductSpace acc{ProductData{factors[0].object, {identity_morphism(factors[0].object)}},
                   factors[0]};
  for (std::size_t k = 1; k < factors.size(); ++k) {
    Ctx c = factors[k].object->context;
    auto term = terminal_object(c);
    auto ps = pullback_space(unique_to_terminal(acc.prod.obj, term),
                             unique_to_terminal(factors[k].object, term), acc.system,
                             factors[k]);
    std::vector<MorphismInstance> projs;
    for (auto& p : acc.prod.projections) projs.push_back(compose(p, ps.pb.to_dom_f));
    projs.push_back(ps.pb.to_dom_h);
    acc = ProductSpace{ProductData{ps.pb.obj, std::move(projs)}, std::move(ps.system)};
  }
  return acc;
}

PreNbdSystem product_system_direct(const ProductData& prod,
                                   const std::vector<PreNbdSystem>& factors) {
  if (prod.projections.size() != factors.size())
    throw DomainError("product_system_direct: factor count mismatch");
  const auto& lp = *prod.obj->sub;
  std::vector<Elem> gen(static_cast<std::size_t>(lp.size()));
  for (Elem w = 0; w < lp.size(); ++w) {
    Elem acc = lp.top();
    for (std::size_t i = 0; i < factors.size(); ++i) {
      const auto& pi = prod.projections[i];
      acc = lp.meet(acc, preimage_sub(pi, factors[i].g(image_sub(pi, w))));
    }
    gen[static_cast<std::size_t>(w)] = acc;
  }
  return make_system(prod.obj, std::move(gen));
}

PreNbdSystem hat_system(const PreNbdSystem& s) {
  const auto& L = s.lat();
  if (!is_pseudocomplemented(L))
    throw DomainError("hat_system: lattice is not pseudocomplemented");
  std::vector<Elem> closed;
  for (Elem y = 0; y < L.size(); ++y)
    if (closure(s, y) == y) closed.push_back(y);
  std::vector<Elem> stars(closed.size());
  for (std::size_t i = 0; i < closed.size(); ++i)
    stars[i] = *pseudocomplement(L, closed[i]);
  std::vector<Elem> gen(static_cast<std::size_t>(L.size()));
  for (Elem x = 0; x < L.size(); ++x) {
    Elem acc = L.top();
    for (std::size_t i = 0; i < closed.size(); ++i)
      if (L.leq(x, stars[i])) acc = L.meet(acc, stars[i]);
    gen[static_cast<std::size_t>(x)] = acc;
  }
  return make_system(s.object, std::move(gen));
}

InfMeetReport infmeet_condition(const PreNbdSystem& s, const EndoMap& c) {
  const auto& L = s.lat();
  if (!L.structurally_equal(*c.lattice))
    throw DomainError("infmeet_condition: lattices differ");
  PreNbdSystem phic = phi(s.object, c);
  if (!system_leq(s, phic))
    throw DomainError("infmeet_condition: system is not below the endomap system");
  InfMeetReport rep{true, true};
  for (Elem x = 0; x < L.size() && (rep.literal || rep.reduced); ++x) {
    if (x == L.top()) continue;
    for (Elem p = 0; p < L.size(); ++p) {
      if (L.meet(c(x), p) != L.bottom()) continue;
      if (L.meet(s.g(x), p) != L.bottom()) rep.reduced = false;
      bool some_u_misses = false;
      for (Elem u = 0; u < L.size() && !some_u_misses; ++u)
        if (L.leq(s.g(x), u) && L.meet(u, p) == L.bottom()) some_u_misses = true;
      if (!some_u_misses) rep.literal = false;
    }
  }
  if (rep.literal != rep.reduced)
    throw ValidationError("infmeet_condition: quantifier sweep disagrees with reduction");
  return rep;
}

PreNbdSystem nu_system(ObjPtr obj) {
  if (obj->context != Ctx::FinGrp)
    throw DomainError("nu_system: requires a group object");
  const auto& L = *obj->sub;
  std::vector<Elem> gen(static_cast<std::size_t>(L.size()));
  for (Elem a = 0; a < L.size(); ++a)
    gen[static_cast<std::size_t>(a)] = normal_closure(obj, a);
  return make_system(std::move(obj), std::move(gen));
}

PreNbdSystem transport_system(const PreNbdSystem& s, const MorphismInstance& iso) {
  if (!objects_equal(iso.dom, s.object))
    throw DomainError("transport_system: iso domain mismatch");
  if (!iso.is_iso()) throw DomainError("transport_system: morphism is not iso");
  const auto& lt = *iso.cod->sub;
  std::vector<Elem> gen(static_cast<std::size_t>(lt.size()));
  for (Elem y = 0; y < lt.size(); ++y)
    gen[static_cast<std::size_t>(y)] = image_sub(iso, s.g(preimage_sub(iso, y)));
  return make_system(iso.cod, std::move(gen));
}

void enumerate_systems(ObjPtr obj, bool grounded_only,
                       const std::function<bool(const PreNbdSystem&)>& fn,
                       const EnumBudget& budget) {
  enumerate_endomaps(
      obj->sub, grounded_only,
      [&](const EndoMap& c) { return fn(PreNbdSystem{obj, c.values}); }, budget);
}

std::vector<PreNbdSystem> all_systems(ObjPtr obj, bool grounded_only,
                                      const EnumBudget& budget) {
  std::vector<PreNbdSystem> out;
  enumerate_systems(
      obj, grounded_only,
      [&](const PreNbdSystem& s) {
        out.push_back(s);
        return true;
      },
      budget);
  return out;
}

}  // namespace pnbd
