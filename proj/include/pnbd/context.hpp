#pragma once

// The two concrete contexts: finite sets with (surjections, injections) and
// finite groups with (regular epis, monos). Objects carry their admissible
// subobject lattice; morphisms are total maps / homomorphism tables.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pnbd/lattice.hpp"

namespace pnbd {

enum class Ctx { FinSet, FinGrp };

std::string ctx_name(Ctx c);
std::optional<Ctx> ctx_from_name(const std::string& s);

// FinSet reflects zero (strict empty set); FinGrp does not (pointed).
bool is_reflecting_zero_context(Ctx c);
// Both implemented contexts have an admissible mono from initial to terminal.
bool is_admissibly_quasi_pointed(Ctx c);

struct GroupTable {
  int order = 0;
  std::vector<std::uint8_t> mult;   // row-major, identity must be index 0
  std::vector<std::string> labels;  // element names

  int at(int a, int b) const {
    return mult[static_cast<std::size_t>(a) * order + b];
  }
  int inverse(int a) const;

  static GroupTable from_table(const std::vector<std::vector<int>>& table,
                               std::vector<std::string> labels = {});
  static GroupTable builtin(const std::string& name);
  static const std::vector<std::string>& builtin_names();  // Z2..Z8, products, S3, D4, Q8
  static GroupTable trivial();
};

class ContextObject;
using ObjPtr = std::shared_ptr<const ContextObject>;

class ContextObject {
 public:
  Ctx context;
  std::vector<std::string> points;         // carrier labels (finset sorted; fingrp element order)
  GroupTable group;                        // fingrp only
  std::vector<std::uint64_t> subgroup_masks;  // fingrp, aligned with lattice elements
  LatticePtr sub;                          // admissible subobject lattice

  int carrier_size() const { return static_cast<int>(points.size()); }
  Elem sigma() const { return sub->bottom(); }
  Elem top() const { return sub->top(); }
  std::uint64_t carrier_mask(Elem e) const { return sub->mask_of(e); }
  // Element of the lattice for a carrier mask: exact for finset; for fingrp
  // the mask must be a subgroup.
  std::optional<Elem> elem_for_mask(std::uint64_t m) const { return sub->elem_of_mask(m); }
  int point_index(const std::string& name) const;  // -1 when absent
};

ObjPtr make_finset(std::vector<std::string> points);
ObjPtr make_group_object(GroupTable g);
ObjPtr make_builtin_group(const std::string& name);
ObjPtr terminal_object(Ctx c);
ObjPtr initial_object(Ctx c);

bool objects_equal(const ObjPtr& a, const ObjPtr& b);

struct MorphismInstance {
  ObjPtr dom, cod;
  std::vector<int> map;  // carrier index -> carrier index

  int operator()(int i) const { return map[static_cast<std::size_t>(i)]; }
  bool is_injective() const;
  bool is_surjective() const;
  bool is_iso() const { return is_injective() && is_surjective(); }
};

// Validates totality and, for groups, the homomorphism property.
MorphismInstance make_morphism(ObjPtr dom, ObjPtr cod, std::vector<int> map);
MorphismInstance identity_morphism(ObjPtr obj);
MorphismInstance compose(const MorphismInstance& g, const MorphismInstance& f);
MorphismInstance unique_to_terminal(ObjPtr obj, ObjPtr term);
bool morphisms_equal(const MorphismInstance& a, const MorphismInstance& b);

Elem image_sub(const MorphismInstance& f, Elem x);
Elem preimage_sub(const MorphismInstance& f, Elem y);

struct Factorization {
  ObjPtr image;
  MorphismInstance e;  // dom ->> image
  MorphismInstance m;  // image >-> cod
};
Factorization factorize(const MorphismInstance& f);

struct Subobject {
  ObjPtr obj;
  MorphismInstance embed;  // obj >-> parent
  Elem elem;               // the subobject in the parent lattice
};
Subobject subobject_of(ObjPtr parent, Elem m);

struct PullbackData {
  ObjPtr obj;
  MorphismInstance to_dom_f;  // P -> X   (projection opposite h)
  MorphismInstance to_dom_h;  // P -> T   (projection opposite f)
};
// Pullback of f : X -> Y along h : T -> Y.
PullbackData pullback(const MorphismInstance& f, const MorphismInstance& h);

struct ProductData {
  ObjPtr obj;
  std::vector<MorphismInstance> projections;
};
ProductData product(const std::vector<ObjPtr>& factors);  // length <= 3

// Pairing <f1,...,fk> : X -> prod for morphisms with common domain.
MorphismInstance pairing(const ProductData& prod, const std::vector<MorphismInstance>& legs);

struct KernelPairData {
  PullbackData pb;           // pullback of f along f
  MorphismInstance diagonal; // d_f : X -> Kerp, x -> (x,x)
};
KernelPairData kernel_pair(const MorphismInstance& f);

struct Corestriction {
  Subobject dom_sub;  // preimage of n as a subobject of f's domain
  Subobject cod_sub;  // n as a subobject of f's codomain
  MorphismInstance f_n;
};
// The corestriction of f onto an admissible subobject n of its codomain.
Corestriction corestriction(const MorphismInstance& f, Elem n);

bool is_formally_surjective(const MorphismInstance& f);
bool reflects_zero(const MorphismInstance& f);

// Smallest normal subgroup containing H (fingrp only).
Elem normal_closure(const ObjPtr& g_obj, Elem h);

// All maps between objects: functions for finset, homomorphisms for fingrp,
// in a canonical order.
std::vector<MorphismInstance> all_morphisms(ObjPtr dom, ObjPtr cod);

// Subgroup machinery shared with object construction.
std::uint64_t close_subset(const GroupTable& g, std::uint64_t seed);
std::vector<std::uint64_t> enumerate_subgroup_masks(const GroupTable& g);

// Same group object with default numeric element labels (carrier order and
// subobject lattice indices unchanged). Identity on finset objects.
ObjPtr with_default_labels(const ObjPtr& obj);

}  // namespace pnbd
