#include "pnbd/classify.hpp"

#include <algorithm>

namespace pnbd {

PnbdCheck is_pnbd_morphism(const MorphismInstance& f, const PreNbdSystem& mu,
                           const PreNbdSystem& phi) {
  if (!objects_equal(f.dom, mu.object) || !objects_equal(f.cod, phi.object))
    throw DomainError("is_pnbd_morphism: systems do not match the morphism ends");
  const auto& lx = *f.dom->sub;
  const auto& ly = *f.cod->sub;
  PnbdCheck out;
  out.ok = true;
  for (Elem u = 0; u < ly.size(); ++u) {
    Elem pre = preimage_sub(f, u);
    if (!lx.leq(mu.g(pre), preimage_sub(f, phi.g(u)))) {
      out.ok = false;
      out.witness_label = ly.label(u);
      break;
    }
  }
  // the three transport formulations
  out.cond_invfil = true;
  for (Elem y = 0; y < ly.size() && out.cond_invfil; ++y) {
    Filter lhs = invfil(f, phi.mu(y));
    if (!lhs.subset_of(mu.mu(preimage_sub(f, y)))) out.cond_invfil = false;
  }
  out.cond_imgfil = true;
  for (Elem y = 0; y < ly.size() && out.cond_imgfil; ++y) {
    Filter rhs = imgfil(f, mu.mu(preimage_sub(f, y)));
    if (!phi.mu(y).subset_of(rhs)) out.cond_imgfil = false;
  }
  out.cond_image = true;
  for (Elem x = 0; x < lx.size() && out.cond_image; ++x) {
    Filter lhs = invfil(f, phi.mu(image_sub(f, x)));
    if (!lhs.subset_of(mu.mu(x))) out.cond_image = false;
  }
  if (out.cond_invfil != out.ok || out.cond_imgfil != out.ok || out.cond_image != out.ok)
    throw ValidationError("is_pnbd_morphism: transport conditions disagree");
  return out;
}

void require_pnbd(const MorphismInstance& f, const PreNbdSystem& mu,
                  const PreNbdSystem& phi, const char* who) {
  if (!is_pnbd_morphism(f, mu, phi).ok)
    throw DomainError(std::string(who) + ": not a preneighbourhood morphism");
}

bool is_continuous(const MorphismInstance& f, const PreNbdSystem& mu,
                   const PreNbdSystem& phi) {
  require_pnbd(f, mu, phi, "is_continuous");
  const auto& lx = *f.dom->sub;
  const auto& ly = *f.cod->sub;
  bool fwd = true;
  for (Elem x = 0; x < lx.size() && fwd; ++x)
    if (!ly.leq(image_sub(f, closure(mu, x)), closure(phi, image_sub(f, x)))) fwd = false;
  bool bwd = true;
  for (Elem y = 0; y < ly.size() && bwd; ++y)
    if (!lx.leq(closure(mu, preimage_sub(f, y)), preimage_sub(f, closure(phi, y))))
      bwd = false;
  if (fwd != bwd)
    throw ValidationError("is_continuous: image and preimage forms disagree");
  return fwd;
}

bool covering_qualifier_seam(const MorphismInstance& f, const PreNbdSystem& mu,
                             Elem p) {
  const auto& lx = *f.dom->sub;
  const Elem top_y = f.cod->sub->top();
  for (Elem x = 0; x < lx.size(); ++x) {
    if (x == lx.top()) continue;
    if (lx.meet(mu.g(x), p) == lx.bottom()) continue;
    if (image_sub(f, x) == top_y) return true;
  }
  return false;
}

bool continuous_at(const MorphismInstance& f, const PreNbdSystem& mu,
                   const PreNbdSystem& phi, Elem p) {
  return f.cod->sub->leq(image_sub(f, closure(mu, p)), closure(phi, image_sub(f, p)));
}

ClosedCheck closed_check(const MorphismInstance& f, const PreNbdSystem& mu,
                         const PreNbdSystem& phi) {
  const auto& lx = *f.dom->sub;
  const auto& ly = *f.cod->sub;
  ClosedCheck out;
  out.definitional = true;
  for (Elem p = 0; p < lx.size(); ++p) {
    if (closure(mu, p) != p) continue;
    Elem ip = image_sub(f, p);
    if (closure(phi, ip) != ip) {
      out.definitional = false;
      out.witness_label = lx.label(p);
      break;
    }
  }
  out.alt = true;
  for (Elem p = 0; p < lx.size() && out.alt; ++p)
    if (!ly.leq(closure(phi, image_sub(f, p)), image_sub(f, closure(mu, p))))
      out.alt = false;
  Elem im = image_sub(f, lx.top());
  out.image_closed = (closure(phi, im) == im);
  if (out.definitional != out.alt) {
    // the two forms can only come apart when a top fails to be closed
    out.degenerate_top = closure(mu, lx.top()) != lx.top() ||
                         closure(phi, ly.top()) != ly.top();
  }
  return out;
}

bool is_closed_morphism(const MorphismInstance& f, const PreNbdSystem& mu,
                        const PreNbdSystem& phi) {
  return closed_check(f, mu, phi).definitional;
}

bool is_closed_embedding(const PreNbdSystem& phi, Elem m) {
  return closure(phi, m) == m;
}

DenseCheck dense_check(const MorphismInstance& f, const PreNbdSystem& mu,
                       const PreNbdSystem& phi) {
  require_pnbd(f, mu, phi, "dense_check");
  const auto& ly = *f.cod->sub;
  Elem im = image_sub(f, f.dom->sub->top());
  DenseCheck out;
  out.definitional = true;
  for (Elem m = 0; m < ly.size(); ++m)
    if (ly.leq(im, m) && closure(phi, m) == m && m != ly.top()) {
      out.definitional = false;
      break;
    }
  out.criterion = (closure(phi, im) == ly.top());
  out.degenerate_gap = (out.definitional != out.criterion);
  return out;
}

bool is_dense_morphism(const MorphismInstance& f, const PreNbdSystem& mu,
                       const PreNbdSystem& phi) {
  return dense_check(f, mu, phi).definitional;
}

DenseClosedFactorization dense_closed_factorize(const MorphismInstance& f,
                                                const PreNbdSystem& mu,
                                                const PreNbdSystem& phi) {
  if (!is_reflecting_zero_context(f.dom->context))
    throw DomainError("dense_closed_factorize: context does not reflect zero");
  require_pnbd(f, mu, phi, "dense_closed_factorize");
  Elem im = image_sub(f, f.dom->sub->top());
  Elem closed = closure(phi, im);
  if (!f.cod->sub->leq(im, closed))
    throw DomainError("dense_closed_factorize: the closure does not contain the "
                      "image (degenerate top)");
  RestrictedSpace target = restriction_system(phi, closed);
  // corestrict f onto the closure of its image
  std::vector<int> back(static_cast<std::size_t>(f.cod->carrier_size()), -1);
  for (std::size_t k = 0; k < target.sub.embed.map.size(); ++k)
    back[static_cast<std::size_t>(target.sub.embed.map[k])] = static_cast<int>(k);
  std::vector<int> dmap(f.map.size());
  for (std::size_t i = 0; i < f.map.size(); ++i) {
    if (back[static_cast<std::size_t>(f.map[i])] < 0)
      throw ValidationError("dense_closed_factorize: image escapes its closure");
    dmap[i] = back[static_cast<std::size_t>(f.map[i])];
  }
  MorphismInstance dense_part{f.dom, target.sub.obj, std::move(dmap)};
  return DenseClosedFactorization{std::move(target), std::move(dense_part), closed};
}

std::string verdict_status_name(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::HoldsExact: return "holds(exact)";
    case VerdictStatus::Fails: return "fails";
    case VerdictStatus::HoldsUpToBound: return "holds(bounded)";
  }
  return "?";
}

namespace {

bool carrier_iso_of_spaces(const MorphismInstance& f, const PreNbdSystem& mu,
                           const PreNbdSystem& phi) {
  if (!f.is_iso()) return false;
  // inverse must also be a preneighbourhood morphism
  std::vector<int> inv(f.map.size());
  for (std::size_t i = 0; i < f.map.size(); ++i)
    inv[static_cast<std::size_t>(f.map[i])] = static_cast<int>(i);
  MorphismInstance finv{f.cod, f.dom, std::move(inv)};
  return is_pnbd_morphism(finv, phi, mu).ok;
}

void for_each_finset_probe(int max_points,
                           const std::function<bool(const PreNbdSystem&)>& fn) {
  static const char* kNames[] = {"a", "b", "c"};
  bool go = true;
  for (int n = 0; n <= max_points && go; ++n) {
    std::vector<std::string> pts(kNames, kNames + n);
    auto obj = make_finset(pts);
    enumerate_systems(obj, false, [&](const PreNbdSystem& s) {
      go = fn(s);
      return go;
    });
  }
}

void for_each_fingrp_probe(int max_order,
                           const std::function<bool(const PreNbdSystem&)>& fn) {
  static const std::vector<std::vector<std::string>> by_order = {
      {"Z1"}, {"Z2"}, {"Z3"}, {"Z4", "Z2xZ2"}};
  bool go = true;
  for (int n = 1; n <= max_order && go; ++n) {
    if (n > static_cast<int>(by_order.size())) break;
    for (const auto& name : by_order[static_cast<std::size_t>(n - 1)]) {
      if (!go) break;
      auto obj = make_builtin_group(name);
      enumerate_systems(obj, false, [&](const PreNbdSystem& s) {
        go = fn(s);
        return go;
      });
    }
  }
}

Witness probe_witness(const MorphismInstance& f, const PreNbdSystem& mu,
                      const PreNbdSystem& phi, const PreNbdSystem& tau,
                      const MorphismInstance& h, const std::string& note,
                      int probe_bound) {
  Witness w;
  w.instance.context = f.dom->context;
  witness_add_system(w.instance, "mu", "X", mu);
  witness_add_system(w.instance, "phi", "Y", phi);
  witness_add_system(w.instance, "tau", "T", tau);
  witness_add_morphism(w.instance, "f", "X", "Y", f);
  witness_add_morphism(w.instance, "h", "T", "Y", h);
  w.replay_args = {"classify-mor",  "<file>", "--mor", "f", "--src", "mu", "--dst",
                   "phi", "--check", "proper", "--probe-bound",
                   std::to_string(probe_bound), "--expect-pass"};
  w.note = note;
  return w;
}

Witness simple_morphism_witness(const MorphismInstance& f, const PreNbdSystem& mu,
                                const PreNbdSystem& phi, const std::string& check,
                                const std::string& note, int probe_bound) {
  Witness w;
  w.instance.context = f.dom->context;
  witness_add_system(w.instance, "mu", "X", mu);
  witness_add_system(w.instance, "phi", "Y", phi);
  witness_add_morphism(w.instance, "f", "X", "Y", f);
  w.replay_args = {"classify-mor", "<file>", "--mor", "f", "--src", "mu", "--dst", "phi",
                   "--check", check, "--probe-bound", std::to_string(probe_bound),
                   "--expect-pass"};
  w.note = note;
  return w;
}

// Probe properness: pull back along every morphism from every bounded probe
// space and require the corestriction to stay closed.
std::optional<Witness> probe_proper(const MorphismInstance& f, const PreNbdSystem& mu,
                                    const PreNbdSystem& phi, int probe_bound) {
  std::optional<Witness> found;
  auto try_probe = [&](const PreNbdSystem& tau) {
    for (const auto& h : all_morphisms(tau.object, f.cod)) {
      if (!is_pnbd_morphism(h, tau, phi).ok) continue;
      auto ps = pullback_space(f, h, mu, tau);
      auto check = closed_check(ps.pb.to_dom_h, ps.system, tau);
      if (!check.definitional) {
        found = probe_witness(f, mu, phi, tau, h,
                              "pullback along h is not closed at subobject " +
                                  check.witness_label,
                              probe_bound);
        return false;
      }
    }
    return true;
  };
  if (f.dom->context == Ctx::FinSet)
    for_each_finset_probe(probe_bound, try_probe);
  else
    for_each_fingrp_probe(probe_bound, try_probe);
  return found;
}

}  // namespace

void for_each_probe_space(Ctx ctx, int max_points,
                          const std::function<bool(const PreNbdSystem&)>& fn) {
  if (ctx == Ctx::FinSet)
    for_each_finset_probe(max_points, fn);
  else
    for_each_fingrp_probe(max_points, fn);
}

Verdict is_proper(const MorphismInstance& f, const PreNbdSystem& mu,
                  const PreNbdSystem& phi, int probe_bound) {
  require_pnbd(f, mu, phi, "is_proper");
  if (probe_bound < 0 || probe_bound > kMaxProbeBound)
    throw DomainError("is_proper: probe bound out of range");
  Verdict v;
  if (carrier_iso_of_spaces(f, mu, phi)) {
    v.status = VerdictStatus::HoldsExact;
    v.detail = "isomorphism";
    return v;
  }
  const bool rzc = is_reflecting_zero_context(f.dom->context);
  auto check = closed_check(f, mu, phi);
  if (rzc && f.is_injective()) {
    // closed embeddings are proper; a mono that is not one fails already at
    // the identity pullback
    if (check.image_closed && check.definitional) {
      v.status = VerdictStatus::HoldsExact;
      v.detail = "closed embedding";
      return v;
    }
    v.status = VerdictStatus::Fails;
    std::string note = check.image_closed
                           ? "closed subobject " + check.witness_label +
                                 " has a non-closed image"
                           : "image subobject is not closed";
    v.witness = simple_morphism_witness(f, mu, phi, "proper", note, probe_bound);
    return v;
  }
  if (!check.definitional) {
    v.status = VerdictStatus::Fails;
    v.witness = simple_morphism_witness(
        f, mu, phi, "proper",
        "not closed at subobject " + check.witness_label + " (identity pullback)",
        probe_bound);
    return v;
  }
  if (auto w = probe_proper(f, mu, phi, probe_bound)) {
    v.status = VerdictStatus::Fails;
    v.witness = std::move(w);
    return v;
  }
  v.status = VerdictStatus::HoldsUpToBound;
  v.bound = probe_bound;
  return v;
}

Verdict is_separated(const MorphismInstance& f, const PreNbdSystem& mu,
                     const PreNbdSystem& phi, int probe_bound) {
  require_pnbd(f, mu, phi, "is_separated");
  Verdict v;
  if (f.is_injective()) {
    v.status = VerdictStatus::HoldsExact;
    v.detail = "monomorphism";
    return v;
  }
  auto ks = pullback_space(f, f, mu, mu);
  std::vector<int> diag(static_cast<std::size_t>(f.dom->carrier_size()));
  for (int x = 0; x < f.dom->carrier_size(); ++x) {
    const std::string& p = f.dom->points[static_cast<std::size_t>(x)];
    int idx = ks.pb.obj->point_index(p + "|" + p);
    if (idx < 0) throw ValidationError("is_separated: missing diagonal point");
    diag[static_cast<std::size_t>(x)] = idx;
  }
  auto d_f = make_morphism(f.dom, ks.pb.obj, std::move(diag));
  Verdict inner = is_proper(d_f, mu, ks.system, probe_bound);
  inner.detail = inner.detail.empty() ? "diagonal" : "diagonal " + inner.detail;
  if (inner.status == VerdictStatus::Fails && inner.witness) {
    // witness shape: rebuild against the original morphism for replay
    inner.witness =
        simple_morphism_witness(f, mu, phi, "separated",
                                "diagonal into the kernel pair is not proper: " +
                                    inner.witness->note,
                                probe_bound);
  }
  return inner;
}

Verdict is_perfect(const MorphismInstance& f, const PreNbdSystem& mu,
                   const PreNbdSystem& phi, int probe_bound) {
  auto retag = [](Witness& w) {
    for (std::size_t i = 0; i + 1 < w.replay_args.size(); ++i)
      if (w.replay_args[i] == "--check") w.replay_args[i + 1] = "perfect";
  };
  Verdict p = is_proper(f, mu, phi, probe_bound);
  if (p.status == VerdictStatus::Fails) {
    if (p.witness) retag(*p.witness);
    return p;
  }
  Verdict s = is_separated(f, mu, phi, probe_bound);
  if (s.status == VerdictStatus::Fails) {
    if (s.witness) retag(*s.witness);
    return s;
  }
  Verdict v;
  if (p.exact() && s.exact()) {
    v.status = VerdictStatus::HoldsExact;
  } else {
    v.status = VerdictStatus::HoldsUpToBound;
    v.bound = probe_bound;
  }
  return v;
}

Verdict is_hausdorff(const PreNbdSystem& space, int probe_bound) {
  auto term = terminal_object(space.object->context);
  auto bang = unique_to_terminal(space.object, term);
  auto nabla = canonical_system(term, CanonicalKind::Indiscrete);
  auto chk = is_pnbd_morphism(bang, space, nabla);
  if (!chk.ok) {
    Verdict v;
    v.status = VerdictStatus::Fails;
    Witness w;
    w.instance.context = space.object->context;
    witness_add_system(w.instance, "mu", "X", space);
    w.replay_args = {"space", "<file>", "--system", "mu", "--check", "hausdorff",
                     "--probe-bound", std::to_string(probe_bound), "--expect-pass"};
    w.note = "the morphism to the terminal space is not a preneighbourhood morphism "
             "(system not grounded)";
    v.detail = w.note;
    v.witness = std::move(w);
    return v;
  }
  Verdict v = is_separated(bang, space, nabla, probe_bound);
  if (v.status == VerdictStatus::Fails) {
    Witness w;
    w.instance.context = space.object->context;
    witness_add_system(w.instance, "mu", "X", space);
    w.replay_args = {"space", "<file>", "--system", "mu", "--check", "hausdorff",
                     "--probe-bound", std::to_string(probe_bound), "--expect-pass"};
    w.note = v.witness ? v.witness->note : "diagonal not proper";
    v.detail = w.note;
    v.witness = std::move(w);
  }
  return v;
}

Verdict is_compact(const PreNbdSystem& space, int probe_bound) {
  auto term = terminal_object(space.object->context);
  auto bang = unique_to_terminal(space.object, term);
  auto nabla = canonical_system(term, CanonicalKind::Indiscrete);
  auto chk = is_pnbd_morphism(bang, space, nabla);
  Verdict v;
  if (!chk.ok) {
    v.status = VerdictStatus::Fails;
    Witness w;
    w.instance.context = space.object->context;
    witness_add_system(w.instance, "mu", "X", space);
    w.replay_args = {"space", "<file>", "--system", "mu", "--check", "compact",
                     "--probe-bound", std::to_string(probe_bound), "--expect-pass"};
    w.note = "the morphism to the terminal space is not a preneighbourhood morphism "
             "(system not grounded)";
    v.witness = std::move(w);
    v.detail = w.note;
    return v;
  }
  std::optional<Witness> found;
  for_each_probe_space(space.object->context, probe_bound, [&](const PreNbdSystem& tau) {
    auto ps = product_space({space, tau});
    const auto& proj2 = ps.prod.projections[1];
    auto check = closed_check(proj2, ps.system, tau);
    if (!check.definitional) {
      Witness w;
      w.instance.context = space.object->context;
      witness_add_system(w.instance, "mu", "X", space);
      witness_add_system(w.instance, "tau", "T", tau);
      w.replay_args = {"space", "<file>", "--system", "mu", "--check", "compact",
                       "--probe-bound", std::to_string(probe_bound), "--expect-pass"};
      w.note = "projection to the probe space is not closed at subobject " +
               check.witness_label;
      found = std::move(w);
      return false;
    }
    return true;
  });
  if (found) {
    v.status = VerdictStatus::Fails;
    v.witness = std::move(found);
    return v;
  }
  v.status = VerdictStatus::HoldsUpToBound;
  v.bound = probe_bound;
  return v;
}

ClassifiedMorphism classify_morphism(const MorphismInstance& f, const PreNbdSystem& mu,
                                     const PreNbdSystem& phi, int probe_bound) {
  ClassifiedMorphism out;
  out.flags.mono = f.is_injective();
  out.flags.reflects_zero = reflects_zero(f);
  out.flags.formally_surjective = is_formally_surjective(f);
  out.flags.pnbd = is_pnbd_morphism(f, mu, phi).ok;
  if (!out.flags.pnbd) return out;
  out.flags.continuous = is_continuous(f, mu, phi);
  out.flags.closed = is_closed_morphism(f, mu, phi);
  out.flags.dense = is_dense_morphism(f, mu, phi);
  if (out.flags.mono)
    out.flags.closed_embedding = is_closed_embedding(phi, image_sub(f, f.dom->sub->top()));
  out.proper = is_proper(f, mu, phi, probe_bound);
  out.separated = is_separated(f, mu, phi, probe_bound);
  out.perfect = is_perfect(f, mu, phi, probe_bound);
  return out;
}

}  // namespace pnbd
