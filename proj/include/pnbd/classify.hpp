#pragma once

// Morphism and space classification: preneighbourhood morphisms, continuity,
// closed/dense morphisms and embeddings, the dense-(closed embedding)
// factorization, and the bounded-probe verdicts for proper, separated,
// perfect, Hausdorff and compact.

#include <optional>
#include <string>
#include <vector>

#include "pnbd/closure.hpp"
#include "pnbd/instance.hpp"
#include "pnbd/system.hpp"

namespace pnbd {

struct PnbdCheck {
  bool ok = false;
  bool cond_invfil = false;   // backward transport below the neighbourhood
  bool cond_imgfil = false;   // neighbourhood below the forward transport
  bool cond_image = false;    // backward transport through images
  std::string witness_label;  // offending subobject when !ok
};
// Primary generator test plus the three equivalent filter-transport
// conditions; their agreement is asserted.
PnbdCheck is_pnbd_morphism(const MorphismInstance& f, const PreNbdSystem& mu,
                           const PreNbdSystem& phi);
void require_pnbd(const MorphismInstance& f, const PreNbdSystem& mu,
                  const PreNbdSystem& phi, const char* who);

// Both image- and preimage-forms evaluated; agreement asserted.
bool is_continuous(const MorphismInstance& f, const PreNbdSystem& mu,
                   const PreNbdSystem& phi);

// The degenerate configuration behind every observed continuity failure of
// zero-reflecting morphisms: some qualifier of p in the closure join (a
// non-top x whose neighbourhood generator meets p) maps onto the whole
// codomain, where the top-exclusion prevents it from entering the closure
// downstairs.
bool covering_qualifier_seam(const MorphismInstance& f, const PreNbdSystem& mu,
                             Elem p);
// Image-form continuity at a single subobject.
bool continuous_at(const MorphismInstance& f, const PreNbdSystem& mu,
                   const PreNbdSystem& phi, Elem p);

struct ClosedCheck {
  bool definitional = false;  // images of closed subobjects are closed
  bool alt = false;           // closure of image below image of closure
  bool image_closed = false;  // image of the whole object is closed
  bool degenerate_top = false;  // forms disagree because a top is not closed
  std::string witness_label;
};
ClosedCheck closed_check(const MorphismInstance& f, const PreNbdSystem& mu,
                         const PreNbdSystem& phi);
// Headline value: the definitional form.
bool is_closed_morphism(const MorphismInstance& f, const PreNbdSystem& mu,
                        const PreNbdSystem& phi);

// A subobject that is a fixed point of the closure.
bool is_closed_embedding(const PreNbdSystem& phi, Elem m);

struct DenseCheck {
  bool definitional = false;  // every closed subobject above the image is top
  bool criterion = false;     // closure of the image is top
  bool degenerate_gap = false;
};
DenseCheck dense_check(const MorphismInstance& f, const PreNbdSystem& mu,
                       const PreNbdSystem& phi);
bool is_dense_morphism(const MorphismInstance& f, const PreNbdSystem& mu,
                       const PreNbdSystem& phi);

struct DenseClosedFactorization {
  RestrictedSpace target;       // closure of the image with restricted system
  MorphismInstance dense_part;  // domain -> target (dense)
  Elem closed_image;            // the closed embedding as a subobject
};
// Reflecting-zero contexts only.
DenseClosedFactorization dense_closed_factorize(const MorphismInstance& f,
                                                const PreNbdSystem& mu,
                                                const PreNbdSystem& phi);

enum class VerdictStatus { HoldsExact, Fails, HoldsUpToBound };

struct Verdict {
  VerdictStatus status = VerdictStatus::Fails;
  std::optional<Witness> witness;  // always present for Fails
  std::optional<int> bound;        // always present for HoldsUpToBound
  std::string detail;

  bool holds() const { return status != VerdictStatus::Fails; }
  bool exact() const { return status == VerdictStatus::HoldsExact; }
};

std::string verdict_status_name(VerdictStatus s);

inline constexpr int kMaxProbeBound = 3;

Verdict is_proper(const MorphismInstance& f, const PreNbdSystem& mu,
                  const PreNbdSystem& phi, int probe_bound = 2);
Verdict is_separated(const MorphismInstance& f, const PreNbdSystem& mu,
                     const PreNbdSystem& phi, int probe_bound = 2);
Verdict is_perfect(const MorphismInstance& f, const PreNbdSystem& mu,
                   const PreNbdSystem& phi, int probe_bound = 2);
Verdict is_hausdorff(const PreNbdSystem& space, int probe_bound = 2);
Verdict is_compact(const PreNbdSystem& space, int probe_bound = 2);

struct MorphismFlags {
  bool pnbd = false;
  bool continuous = false;
  bool reflects_zero = false;
  bool formally_surjective = false;
  bool closed = false;
  bool dense = false;
  bool closed_embedding = false;  // only meaningful for monos
  bool mono = false;
};

struct ClassifiedMorphism {
  MorphismFlags flags;
  Verdict proper, separated, perfect;
};
ClassifiedMorphism classify_morphism(const MorphismInstance& f, const PreNbdSystem& mu,
                                     const PreNbdSystem& phi, int probe_bound = 2);

// Canonical probe enumeration: all spaces of the context with carrier size
// up to `max_points` (sets sized 0.., or groups of the given orders).
void for_each_probe_space(Ctx ctx, int max_points,
                          const std::function<bool(const PreNbdSystem&)>& fn);

}  // namespace pnbd
