#pragma once

// Finite complete lattices with three backings: powerset lattices over a
// point set (elements are bitmasks), explicit table lattices for small
// synthetic orders, and subgroup lattices driven by a multiplication table.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "pnbd/errors.hpp"

namespace pnbd {

using Elem = int;

class FiniteLattice {
 public:
  enum class Kind { Powerset, Explicit, Subgroup };

  static constexpr int kMaxPoints = 20;        // powerset carrier cap
  static constexpr int kMaxExplicit = 2048;    // table lattice cap
  static constexpr int kMaxGroupOrder = 64;    // subgroup-mask cap

  // Boolean lattice of all subsets of `points` (must be distinct, nonempty
  // strings; labels are the sorted concatenation of member names).
  static FiniteLattice powerset(std::vector<std::string> points);

  // Explicit lattice from a reflexive order matrix; validates that binary
  // meets and joins exist. Intended for small synthetic test orders.
  static FiniteLattice from_order(std::vector<std::string> labels,
                                  const std::vector<std::vector<bool>>& leq);

  // Subgroup lattice: `masks` lists all subgroups of a group of order
  // `group_order` with multiplication table `mult` (row-major), as bitmasks
  // over group elements. Meets are mask intersections; joins are generated
  // subgroups.
  static FiniteLattice subgroups(std::vector<std::uint64_t> masks,
                                 std::vector<std::string> labels,
                                 int group_order,
                                 std::vector<std::uint8_t> mult);

  Kind kind() const { return kind_; }
  int size() const { return size_; }
  Elem bottom() const { return bottom_; }
  Elem top() const { return top_; }

  bool leq(Elem a, Elem b) const;
  Elem meet(Elem a, Elem b) const;
  Elem join(Elem a, Elem b) const;

  // Join of a predicate-selected subset in one pass; equals bottom() when
  // nothing is selected.
  Elem join_where(const std::function<bool(Elem)>& pred) const;
  Elem meet_where(const std::function<bool(Elem)>& pred) const;

  std::string label(Elem e) const;
  std::optional<Elem> find_label(const std::string& lbl) const;

  int point_count() const { return points_; }  // powerset only
  const std::vector<std::string>& point_names() const { return point_names_; }

  std::uint64_t mask_of(Elem e) const;  // powerset/subgroup kinds
  std::optional<Elem> elem_of_mask(std::uint64_t m) const;

  // Closure of a mask under the group multiplication (Subgroup kind).
  std::uint64_t close_mask(std::uint64_t seed) const;

  // Lower covers of an element, and a fixed linear extension of the order
  // (every element appears after all strictly smaller ones).
  std::vector<Elem> lower_covers(Elem e) const;
  const std::vector<Elem>& linear_extension() const;
  void for_each_cover(const std::function<void(Elem lo, Elem hi)>& fn) const;

  bool structurally_equal(const FiniteLattice& other) const;

 private:
  FiniteLattice() = default;
  void build_extension() const;

  Kind kind_ = Kind::Explicit;
  int size_ = 0;
  Elem bottom_ = 0, top_ = 0;
  int points_ = 0;                          // powerset
  std::vector<std::string> point_names_;    // powerset
  std::vector<std::string> labels_;         // explicit/subgroup
  std::unordered_map<std::string, Elem> label_index_;
  std::vector<std::vector<bool>> leq_;      // explicit
  std::vector<Elem> meet_tab_, join_tab_;   // explicit (size*size)
  std::vector<std::uint64_t> masks_;        // subgroup
  std::unordered_map<std::uint64_t, Elem> mask_index_;
  int group_order_ = 0;                     // subgroup
  std::vector<std::uint8_t> mult_;          // subgroup (row-major)
  mutable std::vector<Elem> extension_;     // lazy linear extension
};

using LatticePtr = std::shared_ptr<const FiniteLattice>;

// Subset label in canonical form: member point names sorted and concatenated.
std::string subset_label(const std::vector<std::string>& points, std::uint64_t mask);

// An endomap of a lattice, stored as the image of every element.
struct EndoMap {
  LatticePtr lattice;
  std::vector<Elem> values;

  Elem operator()(Elem x) const { return values[static_cast<std::size_t>(x)]; }
  bool is_extensional() const;
  bool is_monotone() const;
  bool is_grounded() const;
  bool is_idempotent() const;
  bool preserves_binary_joins() const;
};

EndoMap identity_endomap(LatticePtr lat);

struct EndoMapProfile {
  bool idempotent = false;
  bool join_preserving = false;  // binary joins
  bool grounded = false;
  std::vector<Elem> fixed_points;
  Elem dense_join = 0;             // join of non-top x with c(x) = top
  bool weakly_cofinal_dense = false;  // dense_join == top
};

// Throws ValidationError when c is not monotone extensional.
EndoMapProfile endomap_profile(const EndoMap& c);

// Greatest y with x ∧ y = bottom, when it exists.
std::optional<Elem> pseudocomplement(const FiniteLattice& lat, Elem x);
bool is_pseudocomplemented(const FiniteLattice& lat);

// a is join-prime: a ≤ x ∨ y implies a ≤ x or a ≤ y.
bool is_join_prime(const FiniteLattice& lat, Elem a);

struct PrimeExtension {
  bool exists = false;
  Elem witness_generator = 0;  // principal generator of a prime filter
};

// Least-index join-prime b ≤ generator with b != bottom; a principal filter
// ↑b is prime exactly when it is proper and b is join-prime.
PrimeExtension prime_extension(const FiniteLattice& lat, Elem filter_generator);

struct EnumBudget {
  std::size_t max_results = 5'000'000;
  int max_elements = 4096;
};

// Streams exactly the monotone extensional endomaps of `lat` (grounded ones
// when requested) in a canonical depth-first order. The callback returns
// false to stop early. Throws EnumerationError past the budget.
void enumerate_endomaps(LatticePtr lat, bool require_grounded,
                        const std::function<bool(const EndoMap&)>& fn,
                        const EnumBudget& budget = {});

std::size_t count_endomaps(LatticePtr lat, bool require_grounded,
                           const EnumBudget& budget = {});

}  // namespace pnbd
