#pragma once

// The closure operator induced by a preneighbourhood system: the join of all
// non-top subobjects each of whose neighbourhoods meets the argument.

#include <vector>

#include "pnbd/system.hpp"

namespace pnbd {

enum class ClsMode { Fast, Oracle };

// Fast mode tests the generator only; oracle mode quantifies over the whole
// neighbourhood filter. The two must agree (tested as a law).
Elem closure(const PreNbdSystem& s, Elem p, ClsMode mode = ClsMode::Fast);

bool is_closed_sub(const PreNbdSystem& s, Elem p);
bool is_dense_sub(const PreNbdSystem& s, Elem p);
// x is open when it belongs to its own neighbourhood filter.
bool is_open_sub(const PreNbdSystem& s, Elem x);
Elem interior(const PreNbdSystem& s, Elem x);

struct ClosureReport {
  std::vector<Elem> cls;       // per-element closure
  std::vector<Elem> interior;  // per-element interior
  std::vector<Elem> mc;        // closed subobjects
  std::vector<Elem> mo;        // open subobjects
};
// Full tables; guarded to lattices of at most kClosureReportMax elements.
inline constexpr int kClosureReportMax = 4096;
ClosureReport closed_open_sets(const PreNbdSystem& s);
std::vector<Elem> closed_subobjects(const PreNbdSystem& s);

// The configuration behind every observed idempotence failure: a qualifier
// of the closure of p and a qualifier of p whose join is the top, so the
// top-exclusion cuts the iterated closure argument.
bool idempotence_join_seam(const PreNbdSystem& s, Elem p);

// Join of the non-top part of the star of p (subobjects meeting p); for the
// discrete system this is the closure of any p != bottom.
Elem star_join(const PreNbdSystem& s, Elem p);
std::vector<Elem> star_set(const PreNbdSystem& s, Elem p);

enum class GmextVariant { Compose, Phi };
// Closure computed through the fixed points of a monotone extensional
// endomap: for Phi the system generated by c, for Compose the composite of
// s with c.
Elem gmext_closure(const PreNbdSystem& s, const EndoMap& c, Elem p, GmextVariant v);
// Closed-subobject predicate through the same endomap data.
bool gmext_closed(const PreNbdSystem& s, const EndoMap& c, Elem p, GmextVariant v);

// In a pseudocomplemented lattice, for x,p strictly between bottom and top:
// x below the closure of p exactly when the pseudocomplement of p is not a
// neighbourhood of x. Returns whether the biconditional holds.
bool pseudocomplement_characterization(const PreNbdSystem& s, Elem x, Elem p);

// Meet over all nonempty subsets J of the factors of the preimage of the
// closure of the J-image of p; for nonempty factors this equals the direct
// closure in the product.
Elem product_closure_rhs(const ProductSpace& space,
                         const std::vector<PreNbdSystem>& factors, Elem p);

}  // namespace pnbd
