#pragma once

// Filters on finite subobject lattices. Every filter here is principal
// (finite lattices admit no others), so a filter is its generator.

#include "pnbd/context.hpp"
#include "pnbd/lattice.hpp"

namespace pnbd {

struct Filter {
  LatticePtr lattice;
  Elem generator;

  bool contains(Elem x) const { return lattice->leq(generator, x); }
  // ↑a ⊆ ↑b  iff  a ≥ b
  bool subset_of(const Filter& other) const {
    return lattice->leq(other.generator, generator);
  }
  bool is_proper() const { return generator != lattice->bottom(); }
};

enum class FilterCombine { Join, Intersect };

// Join of filters is generated by the meet of generators; intersection by
// the join. Throws DomainError on mismatched lattices.
Filter filter_combine(FilterCombine mode, const Filter& a, const Filter& b);

// Forward filter transport along f: the filter of all y whose preimage lies
// in A, returned by its principal generator.
Filter imgfil(const MorphismInstance& f, const Filter& a);

// Backward filter transport: generated by the preimage of the generator.
Filter invfil(const MorphismInstance& f, const Filter& b);

}  // namespace pnbd
