#include <doctest.h>

#include "oracles.hpp"
#include "pnbd/filter.hpp"

using namespace pnbd;

namespace {

MorphismInstance by_labels(ObjPtr dom, ObjPtr cod,
                           const std::vector<std::pair<std::string, std::string>>& m) {
  std::vector<int> map(static_cast<std::size_t>(dom->carrier_size()), -1);
  for (auto& [from, to] : m)
    map[static_cast<std::size_t>(dom->point_index(from))] = cod->point_index(to);
  return make_morphism(dom, cod, map);
}

}  // namespace

TEST_CASE("filter combine") {
  auto X = make_finset({"a", "b"});
  auto L = X->sub;
  Filter fa{L, *L->find_label("a")};
  Filter fb{L, *L->find_label("b")};
  CHECK(filter_combine(FilterCombine::Join, fa, fb).generator == L->bottom());
  CHECK(L->label(filter_combine(FilterCombine::Intersect, fa, fb).generator) == "ab");
  CHECK(filter_combine(FilterCombine::Join, fa, fa).generator == fa.generator);

  auto Y = make_finset({"u", "v"});
  Filter fu{Y->sub, 0};
  CHECK_THROWS_AS(filter_combine(FilterCombine::Join, fa, fu), DomainError);

  // combine agrees with the set-level operations
  for (Elem a = 0; a < L->size(); ++a)
    for (Elem b = 0; b < L->size(); ++b) {
      Filter A{L, a}, B{L, b};
      auto sa = oracle::filter_as_set(A);
      auto sb = oracle::filter_as_set(B);
      std::set<Elem> inter;
      for (Elem e : sa)
        if (sb.count(e)) inter.insert(e);
      CHECK(oracle::filter_as_set(filter_combine(FilterCombine::Intersect, A, B)) ==
            inter);
      // the join filter is the smallest filter containing both
      auto sj = oracle::filter_as_set(filter_combine(FilterCombine::Join, A, B));
      for (Elem e : sa) CHECK(sj.count(e) == 1);
      for (Elem e : sb) CHECK(sj.count(e) == 1);
    }
}

TEST_CASE("filter transport against the set-level oracle") {
  auto X = make_finset({"a", "b"});
  auto Y = make_finset({"u", "v"});
  auto f = by_labels(X, Y, {{"a", "u"}, {"b", "u"}});

  Filter A{X->sub, *X->sub->find_label("a")};
  CHECK(Y->sub->label(imgfil(f, A).generator) == "u");
  Filter B{Y->sub, *Y->sub->find_label("u")};
  CHECK(X->sub->label(invfil(f, B).generator) == "ab");

  auto idX = identity_morphism(X);
  for (Elem g = 0; g < X->sub->size(); ++g) {
    CHECK(imgfil(idX, Filter{X->sub, g}).generator == g);
    CHECK(invfil(idX, Filter{X->sub, g}).generator == g);
  }

  // improper filters transport to improper filters
  CHECK(imgfil(f, Filter{X->sub, X->sigma()}).generator == Y->sigma());
  CHECK(invfil(f, Filter{Y->sub, Y->sigma()}).generator == X->sigma());

  // oracle: materialize filters as sets on every function between 2-point sets
  for (const auto& g : all_morphisms(X, Y)) {
    for (Elem a = 0; a < X->sub->size(); ++a) {
      Filter A2{X->sub, a};
      auto as = oracle::filter_as_set(A2);
      std::set<Elem> img;
      for (Elem y = 0; y < Y->sub->size(); ++y)
        if (as.count(preimage_sub(g, y))) img.insert(y);
      CHECK(oracle::filter_as_set(imgfil(g, A2)) == img);
    }
    for (Elem b = 0; b < Y->sub->size(); ++b) {
      Filter B2{Y->sub, b};
      auto bs = oracle::filter_as_set(B2);
      std::set<Elem> inv;
      for (Elem x = 0; x < X->sub->size(); ++x)
        for (Elem y : bs)
          if (X->sub->leq(preimage_sub(g, y), x)) inv.insert(x);
      CHECK(oracle::filter_as_set(invfil(g, B2)) == inv);
    }
  }
}

TEST_CASE("transport adjunction and monotonicity, exhaustively on small sets") {
  std::vector<ObjPtr> objs = {make_finset({"a"}), make_finset({"a", "b"}),
                              make_finset({"a", "b", "c"})};
  for (auto& X : objs)
    for (auto& Y : objs) {
      for (const auto& f : all_morphisms(X, Y)) {
        // Galois connection: invfil is left adjoint to imgfil
        for (Elem a = 0; a < X->sub->size(); ++a)
          for (Elem b = 0; b < Y->sub->size(); ++b) {
            Filter A{X->sub, a}, B{Y->sub, b};
            CHECK(invfil(f, B).subset_of(A) == B.subset_of(imgfil(f, A)));
          }
        for (Elem a = 0; a < X->sub->size(); ++a)
          for (Elem a2 = 0; a2 < X->sub->size(); ++a2) {
            Filter A{X->sub, a}, A2{X->sub, a2};
            if (A.subset_of(A2))
              CHECK(imgfil(f, A).subset_of(imgfil(f, A2)));
          }
        for (Elem b = 0; b < Y->sub->size(); ++b)
          for (Elem b2 = 0; b2 < Y->sub->size(); ++b2) {
            Filter B{Y->sub, b}, B2{Y->sub, b2};
            if (B.subset_of(B2))
              CHECK(invfil(f, B).subset_of(invfil(f, B2)));
          }
      }
    }
}
