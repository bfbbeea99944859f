#include "pnbd/filter.hpp"

namespace pnbd {

Filter filter_combine(FilterCombine mode, const Filter& a, const Filter& b) {
  if (!a.lattice->structurally_equal(*b.lattice))
    throw DomainError("filter_combine: filters live on different lattices");
  if (mode == FilterCombine::Join)
    return Filter{a.lattice, a.lattice->meet(a.generator, b.generator)};
  return Filter{a.lattice, a.lattice->join(a.generator, b.generator)};
}

Filter imgfil(const MorphismInstance& f, const Filter& a) {
  const auto& ly = *f.cod->sub;
  Elem gen = ly.meet_where([&](Elem y) { return a.contains(preimage_sub(f, y)); });
  return Filter{f.cod->sub, gen};
}

Filter invfil(const MorphismInstance& f, const Filter& b) {
  return Filter{f.dom->sub, preimage_sub(f, b.generator)};
}

}  // namespace pnbd
