#include <doctest.h>

#include "oracles.hpp"
#include "pnbd/classify.hpp"

using namespace pnbd;

namespace {

MorphismInstance by_labels(ObjPtr dom, ObjPtr cod,
                           const std::vector<std::pair<std::string, std::string>>& m) {
  std::vector<int> map(static_cast<std::size_t>(dom->carrier_size()), -1);
  for (auto& [from, to] : m)
    map[static_cast<std::size_t>(dom->point_index(from))] = cod->point_index(to);
  return make_morphism(dom, cod, map);
}

PreNbdSystem table_system(ObjPtr obj,
                          const std::vector<std::pair<std::string, std::string>>& t) {
  const auto& L = *obj->sub;
  std::vector<Elem> gen(static_cast<std::size_t>(L.size()), -1);
  for (auto& [from, to] : t)
    gen[static_cast<std::size_t>(*L.find_label(from))] = *L.find_label(to);
  return make_system(obj, std::move(gen));
}

PreNbdSystem sierpinski(ObjPtr X) {
  return table_system(X, {{"", ""}, {"a", "ab"}, {"b", "b"}, {"ab", "ab"}});
}

}  // namespace

TEST_CASE("preneighbourhood morphism checks") {
  auto X = make_finset({"a", "b"});
  auto Y = make_finset({"u", "v"});
  auto disc = canonical_system(X, CanonicalKind::Discrete);
  auto ind = canonical_system(X, CanonicalKind::Indiscrete);

  CHECK(is_pnbd_morphism(identity_morphism(X), disc, disc).ok);
  CHECK(is_pnbd_morphism(identity_morphism(X), ind, ind).ok);

  // discrete to indiscrete along any surjection
  auto discY = canonical_system(Y, CanonicalKind::Discrete);
  auto indY = canonical_system(Y, CanonicalKind::Indiscrete);
  for (const auto& f : all_morphisms(X, Y))
    if (f.is_surjective()) CHECK(is_pnbd_morphism(f, disc, indY).ok);

  // indiscrete to discrete along the identity carrier fails
  auto chk = is_pnbd_morphism(identity_morphism(X), ind, disc);
  CHECK_FALSE(chk.ok);
  CHECK(chk.witness_label == "a");  // first non-bottom proper subobject

  CHECK_THROWS_AS(is_pnbd_morphism(by_labels(X, Y, {{"a", "u"}, {"b", "u"}}), disc, disc),
                  DomainError);
}

TEST_CASE("continuity") {
  auto X = make_finset({"a", "b"});
  auto disc = canonical_system(X, CanonicalKind::Discrete);
  CHECK(is_continuous(identity_morphism(X), disc, disc));

  // rejected upfront when not a preneighbourhood morphism
  auto ind = canonical_system(X, CanonicalKind::Indiscrete);
  CHECK_THROWS_AS(is_continuous(identity_morphism(X), ind, disc), DomainError);

  // finset: continuity can only fail through the covering-qualifier seam
  std::vector<ObjPtr> objs = {make_finset({"a"}), X};
  for (auto& D : objs)
    for (auto& C : objs)
      for (const auto& f : all_morphisms(D, C))
        for (const auto& mu : all_systems(D))
          for (const auto& ph : all_systems(C)) {
            if (!is_pnbd_morphism(f, mu, ph).ok) continue;
            if (is_continuous(f, mu, ph)) continue;
            bool seam = false;
            for (Elem p = 0; p < D->sub->size() && !seam; ++p)
              if (!continuous_at(f, mu, ph, p)) {
                CHECK(covering_qualifier_seam(f, mu, p));
                seam = true;
              }
            CHECK(seam);
          }

  // fingrp: a reflecting-zero failure that turns into a discontinuity.
  // The least witness is Z6 -> Z2 with discrete systems on both sides: the
  // subgroup {0,3} is closed upstairs but maps onto the whole of Z2, whose
  // closure under the discrete system is trivial.
  auto z6 = make_builtin_group("Z6");
  auto z2 = make_builtin_group("Z2");
  auto mod2 = by_labels(z6, z2, {{"0", "0"}, {"1", "1"}, {"2", "0"},
                                 {"3", "1"}, {"4", "0"}, {"5", "1"}});
  CHECK_FALSE(reflects_zero(mod2));
  auto up6 = canonical_system(z6, CanonicalKind::Discrete);
  auto up2 = canonical_system(z2, CanonicalKind::Discrete);
  CHECK(is_pnbd_morphism(mod2, up6, up2).ok);
  CHECK_FALSE(is_continuous(mod2, up6, up2));
  // the failure is again a covering-qualifier seam
  auto s03 = *z6->sub->find_label("{0,3}");
  CHECK_FALSE(continuous_at(mod2, up6, up2, s03));
  CHECK(covering_qualifier_seam(mod2, up6, s03));

  // Z4 -> Z2 admits no such witness: its subgroup lattice is a chain and
  // every preneighbourhood morphism over it is continuous
  auto z4 = make_builtin_group("Z4");
  auto m42 = by_labels(z4, z2, {{"0", "0"}, {"1", "1"}, {"2", "0"}, {"3", "1"}});
  for (const auto& mu : all_systems(z4))
    for (const auto& ph : all_systems(z2))
      if (is_pnbd_morphism(m42, mu, ph).ok) CHECK(is_continuous(m42, mu, ph));
}

TEST_CASE("closed morphisms") {
  auto X = make_finset({"a", "b"});
  auto sier = sierpinski(X);

  // isomorphisms are closed
  for (const auto& mu : all_systems(X))
    CHECK(is_closed_morphism(identity_morphism(X), mu, mu));

  // a surjection between grounded endomap systems, closed (image of each
  // closed subobject closed); verified instance
  auto Y = make_finset({"u", "v"});
  auto f = by_labels(X, Y, {{"a", "u"}, {"b", "v"}});
  auto discX = canonical_system(X, CanonicalKind::Discrete);
  auto discY = canonical_system(Y, CanonicalKind::Discrete);
  CHECK(is_formally_surjective(f));
  CHECK(is_closed_morphism(f, discX, discY));

  // inclusion of "b": the image of the domain top is not closed; the
  // definitional sweep is vacuous there (degenerate top), reported as such
  auto rb = restriction_system(sier, *X->sub->find_label("b"));
  auto cb = closed_check(rb.sub.embed, rb.system, sier);
  CHECK_FALSE(cb.image_closed);
  CHECK(cb.definitional);  // vacuously: the subspace top is not closed inside
  CHECK_FALSE(cb.alt);
  CHECK(cb.degenerate_top);

  // inclusion of "a": image closed, sweep passes
  auto ra = restriction_system(sier, *X->sub->find_label("a"));
  auto ca = closed_check(ra.sub.embed, ra.system, sier);
  CHECK(ca.image_closed);
  CHECK(ca.definitional);
}

TEST_CASE("closed embeddings") {
  auto X = make_finset({"a", "b"});
  auto sier = sierpinski(X);
  CHECK(is_closed_embedding(sier, *X->sub->find_label("a")));
  CHECK_FALSE(is_closed_embedding(sier, *X->sub->find_label("b")));
  CHECK(is_closed_embedding(sier, X->top()));  // cls(top) = top here
}

TEST_CASE("dense morphisms") {
  auto X = make_finset({"a", "b"});
  auto A = make_finset({"a"});
  auto sier = sierpinski(X);
  auto ind = canonical_system(X, CanonicalKind::Indiscrete);
  auto discA = canonical_system(A, CanonicalKind::Discrete);

  // surjections are dense
  auto Y = make_finset({"u"});
  for (const auto& mu : all_systems(X))
    for (const auto& ph : all_systems(Y)) {
      auto f = by_labels(X, Y, {{"a", "u"}, {"b", "u"}});
      if (is_pnbd_morphism(f, mu, ph).ok) CHECK(is_dense_morphism(f, mu, ph));
    }

  // {a} into the indiscrete 2-point space is dense
  auto inc = by_labels(A, X, {{"a", "a"}});
  CHECK(is_dense_morphism(inc, discA, ind));

  // {a} into the Sierpinski-like space is not (its image is closed proper)
  auto rsA = restriction_system(sier, *X->sub->find_label("a"));
  CHECK_FALSE(is_dense_morphism(rsA.sub.embed, rsA.system, sier));

  // definitional and closure forms agree away from degenerate tops...
  auto dc = dense_check(inc, discA, ind);
  CHECK(dc.definitional == dc.criterion);
  // ...and come apart on the discrete singleton identity
  auto idA = identity_morphism(A);
  auto gap = dense_check(idA, discA, discA);
  CHECK(gap.definitional);
  CHECK_FALSE(gap.criterion);
  CHECK(gap.degenerate_gap);
}

TEST_CASE("dense-closed factorization") {
  auto X = make_finset({"a", "b"});
  auto sier = sierpinski(X);
  auto A = make_finset({"a"});

  // f : {a} -> Sierpinski-like with a -> b: cls(b) = top, so f is dense and
  // the closed part is the whole space
  auto f = by_labels(A, X, {{"a", "b"}});
  auto muA = restriction_system(sier, *X->sub->find_label("b")).system;
  // transport onto A's own carrier (same one-point shape)
  auto muA2 = table_system(A, {{"", muA.lat().label(muA.g(0))}, {"a", "a"}});
  auto fac = dense_closed_factorize(f, muA2, sier);
  CHECK(fac.closed_image == X->top());
  CHECK(is_dense_morphism(fac.dense_part, muA2, fac.target.system));
  CHECK(is_closed_embedding(sier, fac.closed_image));
  CHECK(morphisms_equal(compose(fac.target.sub.embed, fac.dense_part), f));

  // an already-dense morphism factors through the top
  auto ind = canonical_system(X, CanonicalKind::Indiscrete);
  auto discA = canonical_system(A, CanonicalKind::Discrete);
  auto inc = by_labels(A, X, {{"a", "a"}});
  auto fd = dense_closed_factorize(inc, discA, ind);
  CHECK(fd.closed_image == X->top());

  // a closed embedding factors as an isomorphism onto its image
  auto rsA = restriction_system(sier, *X->sub->find_label("a"));
  auto fc = dense_closed_factorize(rsA.sub.embed, rsA.system, sier);
  CHECK(fc.closed_image == *X->sub->find_label("a"));
  CHECK(fc.dense_part.is_iso());

  // unsupported outside reflecting-zero contexts
  auto z4 = make_builtin_group("Z4");
  auto nu = nu_system(z4);
  CHECK_THROWS_AS(dense_closed_factorize(identity_morphism(z4), nu, nu), DomainError);
}

TEST_CASE("proper verdicts") {
  auto X = make_finset({"a", "b"});
  auto sier = sierpinski(X);

  for (const auto& mu : all_systems(X)) {
    auto v = is_proper(identity_morphism(X), mu, mu, 2);
    CHECK(v.status == VerdictStatus::HoldsExact);  // isomorphism
  }

  auto ra = restriction_system(sier, *X->sub->find_label("a"));
  auto va = is_proper(ra.sub.embed, ra.system, sier, 2);
  CHECK(va.status == VerdictStatus::HoldsExact);
  CHECK(va.detail == "closed embedding");

  auto rb = restriction_system(sier, *X->sub->find_label("b"));
  auto vb = is_proper(rb.sub.embed, rb.system, sier, 2);
  CHECK(vb.status == VerdictStatus::Fails);
  REQUIRE(vb.witness.has_value());
  CHECK(vb.witness->note == "image subobject is not closed");

  CHECK_THROWS_AS(is_proper(identity_morphism(X),
                            canonical_system(X, CanonicalKind::Indiscrete),
                            canonical_system(X, CanonicalKind::Discrete), 2),
                  DomainError);
}

TEST_CASE("separated verdicts") {
  auto X = make_finset({"a", "b"});
  auto U = make_finset({"u"});
  auto disc = canonical_system(X, CanonicalKind::Discrete);
  auto discU = canonical_system(U, CanonicalKind::Discrete);

  // injective maps are separated outright
  for (const auto& mu : all_systems(X)) {
    auto v = is_separated(identity_morphism(X), mu, mu, 2);
    CHECK(v.status == VerdictStatus::HoldsExact);
  }

  // constant map from the discrete 2-point space: the diagonal closure in
  // the kernel pair is the whole square, an exact failure
  auto f = by_labels(X, U, {{"a", "u"}, {"b", "u"}});
  auto v = is_separated(f, disc, discU, 2);
  CHECK(v.status == VerdictStatus::Fails);
  REQUIRE(v.witness.has_value());
}

TEST_CASE("perfect verdicts") {
  auto X = make_finset({"a", "b"});
  auto sier = sierpinski(X);
  for (const auto& mu : all_systems(X))
    CHECK(is_perfect(identity_morphism(X), mu, mu, 2).status ==
          VerdictStatus::HoldsExact);

  auto ra = restriction_system(sier, *X->sub->find_label("a"));
  CHECK(is_perfect(ra.sub.embed, ra.system, sier, 2).status ==
        VerdictStatus::HoldsExact);

  auto rb = restriction_system(sier, *X->sub->find_label("b"));
  auto vb = is_perfect(rb.sub.embed, rb.system, sier, 2);
  CHECK(vb.status == VerdictStatus::Fails);
  REQUIRE(vb.witness.has_value());
  // the witness replays through the perfect check
  bool retagged = false;
  for (std::size_t i = 0; i + 1 < vb.witness->replay_args.size(); ++i)
    if (vb.witness->replay_args[i] == "--check")
      retagged = (vb.witness->replay_args[i + 1] == "perfect");
  CHECK(retagged);
}

TEST_CASE("hausdorff and compact spaces") {
  auto S = make_finset({"s"});
  auto sd = canonical_system(S, CanonicalKind::Discrete);
  CHECK(is_hausdorff(sd, 2).status == VerdictStatus::HoldsExact);
  CHECK(is_compact(sd, 2).status == VerdictStatus::HoldsUpToBound);
  CHECK(is_compact(sd, 2).bound == 2);

  auto term = terminal_object(Ctx::FinSet);
  auto tn = canonical_system(term, CanonicalKind::Indiscrete);
  CHECK(is_hausdorff(tn, 2).status == VerdictStatus::HoldsExact);
  CHECK(is_compact(tn, 2).status == VerdictStatus::HoldsUpToBound);

  // no 2-point finset space is internally Hausdorff, or compact at bound 2
  auto X = make_finset({"a", "b"});
  enumerate_systems(X, false, [&](const PreNbdSystem& s) {
    CHECK(is_hausdorff(s, 2).status == VerdictStatus::Fails);
    CHECK(is_compact(s, 2).status == VerdictStatus::Fails);
    return true;
  });

  // discrete 2-point space fails through the diagonal
  auto disc = canonical_system(X, CanonicalKind::Discrete);
  auto vh = is_hausdorff(disc, 2);
  REQUIRE(vh.witness.has_value());
  CHECK(vh.witness->note.find("not closed") != std::string::npos);

  // non-grounded systems are rejected for want of a morphism to the point
  auto ng = table_system(X, {{"", "a"}, {"a", "a"}, {"b", "ab"}, {"ab", "ab"}});
  auto vng = is_hausdorff(ng, 2);
  CHECK(vng.status == VerdictStatus::Fails);
  CHECK(vng.detail.find("not a preneighbourhood morphism") != std::string::npos);

  // the empty space is compact and Hausdorff
  auto E = make_finset({});
  auto es = canonical_system(E, CanonicalKind::Discrete);
  CHECK(is_hausdorff(es, 2).status == VerdictStatus::HoldsExact);
  CHECK(is_compact(es, 2).status == VerdictStatus::HoldsUpToBound);

  // groups: bounded verdicts only
  auto z2 = make_builtin_group("Z2");
  auto z2d = canonical_system(z2, CanonicalKind::Discrete);
  CHECK(is_hausdorff(z2d, 2).status == VerdictStatus::HoldsUpToBound);
  CHECK(is_compact(z2d, 2).status == VerdictStatus::Fails);
}

TEST_CASE("classified morphism record") {
  auto X = make_finset({"a", "b"});
  auto sier = sierpinski(X);
  auto ra = restriction_system(sier, *X->sub->find_label("a"));
  auto c = classify_morphism(ra.sub.embed, ra.system, sier, 2);
  CHECK(c.flags.pnbd);
  CHECK(c.flags.mono);
  CHECK(c.flags.closed_embedding);
  CHECK(c.flags.reflects_zero);
  CHECK_FALSE(c.flags.formally_surjective);
  CHECK(c.proper.exact());
  CHECK(c.separated.exact());
  CHECK(c.perfect.exact());

  // non-preneighbourhood morphisms are rejected upfront: only flags remain
  auto ind = canonical_system(X, CanonicalKind::Indiscrete);
  auto disc = canonical_system(X, CanonicalKind::Discrete);
  auto c2 = classify_morphism(identity_morphism(X), ind, disc, 2);
  CHECK_FALSE(c2.flags.pnbd);
  CHECK_FALSE(c2.proper.holds());
}

TEST_CASE("witness instances serialize and reparse") {
  auto X = make_finset({"a", "b"});
  auto U = make_finset({"u"});
  auto f = by_labels(X, U, {{"a", "u"}, {"b", "u"}});
  auto disc = canonical_system(X, CanonicalKind::Discrete);
  auto discU = canonical_system(U, CanonicalKind::Discrete);
  auto v = is_separated(f, disc, discU, 2);
  REQUIRE(v.witness.has_value());
  auto text = serialize_instance_text(v.witness->instance);
  auto parsed = parse_instance_text(text);
  CHECK(parsed.context == Ctx::FinSet);
  CHECK(parsed.morphisms.count("f") == 1);
  CHECK(parsed.systems.count("mu") == 1);
  // canonical serialization round-trips byte-identically
  CHECK(serialize_instance_text(parsed) == text);
}
