#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "pnbd/lattice.hpp"

using namespace pnbd;

namespace {

LatticePtr pw(std::vector<std::string> pts) {
  return std::make_shared<FiniteLattice>(FiniteLattice::powerset(std::move(pts)));
}

LatticePtr chain(int n) {
  std::vector<std::string> labels;
  std::vector<std::vector<bool>> leq(static_cast<std::size_t>(n),
                                     std::vector<bool>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) {
    labels.push_back("c" + std::to_string(i));
    for (int j = i; j < n; ++j) leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
  }
  return std::make_shared<FiniteLattice>(FiniteLattice::from_order(labels, leq));
}

// 0 < a,b,c < 1 (the diamond with three atoms)
LatticePtr m3() {
  std::vector<std::string> labels{"0", "a", "b", "c", "1"};
  std::vector<std::vector<bool>> leq(5, std::vector<bool>(5, false));
  for (int i = 0; i < 5; ++i) leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = true;
  for (int i = 0; i < 5; ++i) {
    leq[0][static_cast<std::size_t>(i)] = true;
    leq[static_cast<std::size_t>(i)][4] = true;
  }
  return std::make_shared<FiniteLattice>(FiniteLattice::from_order(labels, leq));
}

}  // namespace

TEST_CASE("powerset lattice basics") {
  auto L = pw({"b", "a"});
  CHECK(L->size() == 4);
  CHECK(L->label(L->bottom()) == "");
  CHECK(L->label(L->top()) == "ab");
  auto a = *L->find_label("a");
  auto b = *L->find_label("b");
  CHECK(L->meet(a, b) == L->bottom());
  CHECK(L->join(a, b) == L->top());

  auto L3 = pw({"a", "b", "c"});
  CHECK(L3->size() == 8);
  auto ab = *L3->find_label("ab");
  auto bc = *L3->find_label("bc");
  CHECK(L3->label(L3->meet(ab, bc)) == "b");

  auto L0 = pw({});
  CHECK(L0->size() == 1);
  CHECK(L0->bottom() == L0->top());

  CHECK_THROWS_AS(FiniteLattice::powerset(std::vector<std::string>(21, "x")),
                  ValidationError);  // duplicates reported before capacity
  std::vector<std::string> many;
  for (int i = 0; i < 21; ++i) many.push_back(std::string(1, static_cast<char>('a' + i)));
  CHECK_THROWS_AS(FiniteLattice::powerset(many), CapacityError);
}

TEST_CASE("meet and join are the extremal bounds (brute force)") {
  for (auto L : {pw({"a", "b"}), pw({"a", "b", "c"}), chain(4), m3()}) {
    for (Elem a = 0; a < L->size(); ++a)
      for (Elem b = 0; b < L->size(); ++b) {
        Elem m = L->meet(a, b), j = L->join(a, b);
        CHECK(L->leq(m, a));
        CHECK(L->leq(m, b));
        CHECK(L->leq(a, j));
        CHECK(L->leq(b, j));
        for (Elem c = 0; c < L->size(); ++c) {
          if (L->leq(c, a) && L->leq(c, b)) CHECK(L->leq(c, m));
          if (L->leq(a, c) && L->leq(b, c)) CHECK(L->leq(j, c));
        }
      }
  }
}

TEST_CASE("every filter is principal") {
  for (auto L : {pw({"a", "b"}), chain(3), m3()}) {
    auto filters = oracle::all_filter_sets(*L);
    for (const auto& f : filters) {
      Elem gen = L->top();
      for (Elem e : f) gen = L->meet(gen, e);
      CHECK(f.count(gen) == 1);  // the meet itself belongs to the filter
      std::set<Elem> principal;
      for (Elem e = 0; e < L->size(); ++e)
        if (L->leq(gen, e)) principal.insert(e);
      CHECK(principal == f);
    }
    // one filter per element
    CHECK(filters.size() == static_cast<std::size_t>(L->size()));
  }
}

TEST_CASE("pseudocomplements") {
  auto L = pw({"a", "b"});
  auto a = *L->find_label("a");
  CHECK(L->label(*pseudocomplement(*L, a)) == "b");
  CHECK(*pseudocomplement(*L, L->bottom()) == L->top());

  // Boolean lattices: double negation и De Morgan for meets
  auto L3 = pw({"a", "b", "c"});
  for (Elem x = 0; x < L3->size(); ++x) {
    Elem xs = *pseudocomplement(*L3, x);
    CHECK(*pseudocomplement(*L3, xs) == x);
    for (Elem y = 0; y < L3->size(); ++y) {
      Elem ys = *pseudocomplement(*L3, y);
      CHECK(*pseudocomplement(*L3, L3->meet(x, y)) == L3->join(xs, ys));
    }
  }

  CHECK(is_pseudocomplemented(*chain(4)));
  CHECK_FALSE(is_pseudocomplemented(*m3()));
}

TEST_CASE("prime filter extensions") {
  auto L = pw({"a", "b"});
  auto res = prime_extension(*L, L->top());
  CHECK(res.exists);
  CHECK(L->label(res.witness_generator) == "a");

  CHECK_FALSE(prime_extension(*L, L->bottom()).exists);  // improper filter

  auto L1 = pw({"a"});
  auto r1 = prime_extension(*L1, *L1->find_label("a"));
  CHECK(r1.exists);
  CHECK(L1->label(r1.witness_generator) == "a");

  // the diamond has no join-prime elements above bottom
  auto M = m3();
  CHECK_FALSE(prime_extension(*M, M->top()).exists);
}

TEST_CASE("endomap enumeration matches the brute-force oracle") {
  auto L = pw({"a", "b"});
  auto brute = oracle::brute_force_endomaps(*L, false);
  CHECK(brute.size() == 9);
  std::set<std::vector<Elem>> seen;
  enumerate_endomaps(L, false, [&](const EndoMap& c) {
    CHECK(c.is_extensional());
    CHECK(c.is_monotone());
    CHECK(seen.insert(c.values).second);  // no duplicates
    return true;
  });
  CHECK(seen.size() == brute.size());
  for (const auto& v : brute) CHECK(seen.count(v) == 1);

  CHECK(count_endomaps(pw({"a", "b"}), true) ==
        oracle::brute_force_endomaps(*L, true).size());

  // two-element chain: two maps, one grounded
  auto C2 = chain(2);
  CHECK(count_endomaps(C2, false) == 2);
  CHECK(count_endomaps(C2, true) == 1);
  // three-element chain: monotone extensional maps counted by hand
  CHECK(count_endomaps(chain(3), false) == 5);
  // the diamond, against brute force
  CHECK(count_endomaps(m3(), false) == oracle::brute_force_endomaps(*m3(), false).size());
}

TEST_CASE("endomap enumeration budget error carries a partial count") {
  auto L = pw({"a", "b"});
  EnumBudget b;
  b.max_results = 4;
  CHECK_THROWS_AS(count_endomaps(L, false, b), EnumerationError);
  try {
    count_endomaps(L, false, b);
  } catch (const EnumerationError& e) {
    CHECK(e.partial_count == 4);
  }
}

TEST_CASE("endomap profile") {
  auto L = pw({"a", "b"});
  auto id = identity_endomap(L);
  auto p = endomap_profile(id);
  CHECK(p.idempotent);
  CHECK(p.join_preserving);
  CHECK(p.grounded);
  CHECK(p.fixed_points.size() == 4);
  CHECK(p.dense_join == L->bottom());
  CHECK_FALSE(p.weakly_cofinal_dense);

  // c(0)=0, c(a)=ab, c(b)=b, c(ab)=ab
  auto a = *L->find_label("a");
  auto b = *L->find_label("b");
  EndoMap c{L, {0, 0, 0, 0}};
  c.values[static_cast<std::size_t>(a)] = L->top();
  c.values[static_cast<std::size_t>(b)] = b;
  c.values[static_cast<std::size_t>(L->top())] = L->top();
  auto pc = endomap_profile(c);
  CHECK(pc.idempotent);
  CHECK(pc.join_preserving);
  CHECK(pc.fixed_points == std::vector<Elem>{0, b, L->top()});

  // on the 2-element lattice: c(bottom)=top makes bottom dense, but the
  // join of non-top dense elements is still bottom
  auto L1 = pw({"a"});
  EndoMap d{L1, {L1->top(), L1->top()}};
  auto pd = endomap_profile(d);
  CHECK(pd.dense_join == L1->bottom());
  CHECK_FALSE(pd.grounded);

  EndoMap bad{L, {0, 0, 0, 0}};  // not extensional at a
  CHECK_THROWS_AS(endomap_profile(bad), ValidationError);
}
