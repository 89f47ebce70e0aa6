// Torsion pairs presented by support τ-tilting pairs, canonical sequences,
// approximations, and wide subcategories identified by their simples.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tautilt/twoterm.hpp"

namespace tautilt {

/// Gen M (torsion) or (Gen M)^⊥ (torsion-free) for a support τ-tilting pair.
struct TorsionHandle {
  enum class Role { torsion, torsion_free };
  ShiftedObject pair;
  Role role = Role::torsion;

  static TorsionHandle torsion_class(ModuleCategory& c, ShiftedObject pair);
  static TorsionHandle torsion_free_class(ModuleCategory& c, ShiftedObject pair);
  std::vector<IndecId> generators() const { return module_part(pair); }
};

bool member(ModuleCategory& c, const TorsionHandle& h, const Rep& x);

/// 0 -> tX -> X -> fX -> 0 for the torsion pair (Gen M, M^⊥).
struct CanonicalSeq {
  SubRep torsion;    // tX with its inclusion
  SubRep free_part;  // fX with the projection
};
CanonicalSeq canonical_seq(ModuleCategory& c, const TorsionHandle& h, const Rep& x);

struct Approx {
  Rep target;
  RepMor map;
};
/// Left Gen M-approximation of x: push the left add M-approximation of the
/// projective cover out along the syzygy.
Approx left_torsion_approx(ModuleCategory& c, const TorsionHandle& tc, const Rep& x);
/// Left (T ∩ F)-approximation: left T-approximation followed by the
/// canonical F-quotient of its target.
Approx left_intersection_approx(ModuleCategory& c, const TorsionHandle& tc, const TorsionHandle& fc,
                                const Rep& x);

/// A wide subcategory by its simple objects; `progenerator` lists its
/// indecomposable projectives when known. Equality compares simples only.
struct WideKey {
  std::vector<IndecId> semibrick;
  std::vector<IndecId> progenerator;
  int rank() const { return static_cast<int>(semibrick.size()); }
  friend bool operator==(const WideKey& a, const WideKey& b) { return a.semibrick == b.semibrick; }
  friend auto operator<=>(const WideKey& a, const WideKey& b) { return a.semibrick <=> b.semibrick; }
};

WideKey whole_category(ModuleCategory& c);
WideKey zero_category();

/// S_i = G_i modulo the images of all maps from other G_j and of radical
/// endomorphisms. Output is aligned with the input order.
std::vector<IndecId> simples_of(ModuleCategory& c, const std::vector<IndecId>& progenerator);

/// P^⊥ for a projective module given by summand ids.
WideKey serre(ModuleCategory& c, const std::vector<IndecId>& projectives);

/// W_L(Gen M) = J(M_ns ⊔ P[1]) and W_R((Gen M)^⊥) = J(M_s).
WideKey wl(ModuleCategory& c, const TorsionHandle& tc);
WideKey wr(ModuleCategory& c, const TorsionHandle& fc);

/// X ∈ Filt(semibrick).
bool in_wide(ModuleCategory& c, const WideKey& w, const Rep& x);
/// Every simple of v lies in w.
bool wide_contains(ModuleCategory& c, const WideKey& w, const WideKey& v);

/// Smallest torsion class containing w, among the nodes of a complete
/// exploration; nullopt when the exploration is truncated.
std::optional<TorsionHandle> filt_gen(ModuleCategory& c, const MutationGraph& g, const WideKey& w);
/// Smallest torsion-free class containing w, likewise.
std::optional<TorsionHandle> filt_cogen(ModuleCategory& c, const MutationGraph& g, const WideKey& w);

enum class Finiteness { yes, no, unknown };
std::string to_string(Finiteness f);
Finiteness left_finite(ModuleCategory& c, const MutationGraph& g, const WideKey& w);
Finiteness right_finite(ModuleCategory& c, const MutationGraph& g, const WideKey& w);

std::string describe(ModuleCategory& c, const WideKey& w);
std::string to_json(ModuleCategory& c, const WideKey& w);

}  // namespace tautilt
