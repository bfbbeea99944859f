#pragma once

// Preneighbourhood systems stored by their generator endomap g, where the
// neighbourhood filter of x is the principal filter above g(x).

#include <functional>
#include <string>
#include <vector>

#include "pnbd/context.hpp"
#include "pnbd/filter.hpp"
#include "pnbd/lattice.hpp"

namespace pnbd {

struct PreNbdSystem {
  ObjPtr object;
  std::vector<Elem> gen;

  const FiniteLattice& lat() const { return *object->sub; }
  Elem g(Elem x) const { return gen[static_cast<std::size_t>(x)]; }
  Filter mu(Elem x) const { return Filter{object->sub, g(x)}; }
};

// A space is an object together with a system; the system already carries
// its object, so the two are identified.
using SpaceInstance = PreNbdSystem;

// Monotone + extensional, with messages naming the failing elements.
void validate_system(const PreNbdSystem& s);
PreNbdSystem make_system(ObjPtr obj, std::vector<Elem> gen);

struct SystemKind {
  bool is_pre = true;
  bool is_weak = false;   // generator idempotent
  bool is_nbd = false;    // idempotent, binary-join preserving, grounded
  bool grounded = false;
};
SystemKind classify_system(const PreNbdSystem& s);

enum class CanonicalKind { Discrete, Indiscrete };
PreNbdSystem canonical_system(ObjPtr obj, CanonicalKind kind);

PreNbdSystem phi(ObjPtr obj, const EndoMap& c);
EndoMap psi(const PreNbdSystem& s);

// System whose neighbourhood of x is the neighbourhood of c(x).
PreNbdSystem compose_endomap(const PreNbdSystem& s, const EndoMap& c);

// mu <= nu iff every neighbourhood filter of mu is contained in nu's,
// i.e. generators compare the other way around pointwise.
bool system_leq(const PreNbdSystem& a, const PreNbdSystem& b);
PreNbdSystem system_meet(const PreNbdSystem& a, const PreNbdSystem& b);
PreNbdSystem system_join(const PreNbdSystem& a, const PreNbdSystem& b);

struct RestrictedSpace {
  Subobject sub;        // the subobject as an object with embedding
  PreNbdSystem system;  // smallest system making the embedding a morphism
};
RestrictedSpace restriction_system(const PreNbdSystem& s, Elem m);

struct PullbackSpace {
  PullbackData pb;
  PreNbdSystem system;
};
// Smallest system on the pullback making both projections morphisms.
PullbackSpace pullback_space(const MorphismInstance& f, const MorphismInstance& h,
                             const PreNbdSystem& mu, const PreNbdSystem& tau);

struct ProductSpace {
  ProductData prod;
  PreNbdSystem system;
};
ProductSpace product_space(const std::vector<PreNbdSystem>& factors);
// Direct formula over all projections at once; must agree with the
// iterated binary construction.
PreNbdSystem product_system_direct(const ProductData& prod,
                                   const std::vector<PreNbdSystem>& factors);

// Neighbourhoods generated by complements of closed subobjects; requires a
// pseudocomplemented lattice.
PreNbdSystem hat_system(const PreNbdSystem& s);

struct InfMeetReport {
  bool literal = false;  // quantifier sweep over the filters
  bool reduced = false;  // principal-generator reduction
};
// Requires mu <= phi(c); reports whether c(x) missing p forces some
// neighbourhood of x to miss p.
InfMeetReport infmeet_condition(const PreNbdSystem& s, const EndoMap& c);

// Normal-closure system on a group object.
PreNbdSystem nu_system(ObjPtr obj);

// Transport a system along a carrier isomorphism.
PreNbdSystem transport_system(const PreNbdSystem& s, const MorphismInstance& iso);

// All systems on an object, canonical order; wraps endomap enumeration.
void enumerate_systems(ObjPtr obj, bool grounded_only,
                       const std::function<bool(const PreNbdSystem&)>& fn,
                       const EnumBudget& budget = {});
std::vector<PreNbdSystem> all_systems(ObjPtr obj, bool grounded_only = false,
                                      const EnumBudget& budget = {});

}  // namespace pnbd
