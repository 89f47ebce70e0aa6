// Two-term complexes of projectives, support τ-rigid pairs, completions and
// mutation.
#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tautilt/homcalc.hpp"

namespace tautilt {

class TwoTermError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Complex Q1 -> Q0 of projectives in degrees -1, 0.
struct TwoTerm {
  std::vector<int> q1, q0;
  PMap d;
};

/// Minimal presentation for a module summand, (P -> 0) for P[1].
TwoTerm two_term(ModuleCategory& c, const Shifted& x);
TwoTerm two_term(ModuleCategory& c, const ShiftedObject& u);
TwoTerm direct_sum(const BasedAlgebra& a, const std::vector<TwoTerm>& parts);
/// Indecomposable summands of a complex up to homotopy (contractible parts dropped).
ShiftedObject decompose_two_term(ModuleCategory& c, const TwoTerm& x);

/// dim Hom(x, y[shift]) in the homotopy category, shift in {0, 1}.
int hom_upto_homotopy(const BasedAlgebra& a, const TwoTerm& x, const TwoTerm& y, int shift);

/// Shifts in {0, 1}; shifted summands projective; Hom(M, τM) = 0; Hom(P, M) = 0.
bool is_rigid_pair(ModuleCategory& c, const ShiftedObject& u);
/// Number of distinct summands equals the rank of the algebra.
bool is_tau_tilting(ModuleCategory& c, const ShiftedObject& u);

/// A support τ-rigid pair M ⊔ P[1], checked on construction.
class RigidPair {
 public:
  static RigidPair make(ModuleCategory& c, ShiftedObject u);
  const ShiftedObject& object() const { return u_; }
  std::vector<IndecId> modules() const;
  std::vector<IndecId> shifted() const;
  std::size_t rank() const { return u_.size(); }

 private:
  explicit RigidPair(ShiftedObject u) : u_(std::move(u)) {}
  ShiftedObject u_;
};

/// Complement B_U with B_U ⊔ U support τ-tilting and maximal torsion class.
ShiftedObject bongartz(ModuleCategory& c, const ShiftedObject& u);
/// Complement C_U with minimal torsion class (Gen of the result equals Gen M).
ShiftedObject co_bongartz(ModuleCategory& c, const ShiftedObject& u);
/// Reference constructions through the universal extension triangles; the
/// complexes grow quadratically, so these are meant for small cases.
ShiftedObject bongartz_by_extension(ModuleCategory& c, const ShiftedObject& u);
ShiftedObject co_bongartz_by_extension(ModuleCategory& c, const ShiftedObject& u);
/// The other support τ-tilting completion of t without x.
ShiftedObject mutate(ModuleCategory& c, const ShiftedObject& t, const Shifted& x);
/// x is a module not generated by the other module summands, so mutation
/// at x shrinks the torsion class.
bool left_mutable(ModuleCategory& c, const ShiftedObject& t, const Shifted& x);
/// (M ⊔ P[1]) ↦ (Tr M_np ⊔ P*, M_pr*) from mod Λ to mod Λ^op; `to` must be
/// the category of the opposite algebra. Reverses the mutation order.
ShiftedObject dagger(ModuleCategory& from, ModuleCategory& to, const ShiftedObject& u);
/// Whether t is the Bongartz completion of t without x (the larger torsion class).
bool is_bongartz_side(ModuleCategory& c, const ShiftedObject& t, const Shifted& x);

ShiftedObject remove_one(const ShiftedObject& u, const Shifted& x);
ShiftedObject unite(const ShiftedObject& a, const ShiftedObject& b);
std::vector<IndecId> module_part(const ShiftedObject& u);
std::vector<IndecId> shifted_part(const ShiftedObject& u);

/// X ∈ Gen M.
bool in_gen(const Rep& m, const Rep& x);
bool in_gen(ModuleCategory& c, const std::vector<IndecId>& m, IndecId x);

struct SplitNonsplit {
  std::vector<IndecId> split, nonsplit;
};
/// Split and non-split projective summands of the module part of a support
/// τ-tilting pair, from Λ -> T0 -> T1 -> 0 with Λ -> T0 a minimal left
/// add M-approximation.
SplitNonsplit split_nonsplit(ModuleCategory& c, const ShiftedObject& t);

/// Minimal left add(N)-approximation of x, returned as the multiplicity of
/// each N_j and the map into the sum.
struct LeftApprox {
  std::vector<IndecId> targets;  // one entry per copy, grouped by N_j
  Rep sum;
  RepMor map;
};
LeftApprox min_left_approx(ModuleCategory& c, const std::vector<IndecId>& n, const Rep& x);

struct MutationEdge {
  int from = 0, to = 0;
  Shifted removed, added;
  bool from_larger = false;  // Gen(from) ⊋ Gen(to)
};

struct MutationGraph {
  std::vector<ShiftedObject> nodes;
  std::vector<int> depth;
  std::vector<MutationEdge> edges;
  std::map<ShiftedObject, int> index;
  bool complete = false;
};

/// Breadth-first mutation from (Λ, 0), optionally also from (0, Λ[1]).
MutationGraph explore(ModuleCategory& c, int depth, bool from_both_ends = false);
std::string to_dot(ModuleCategory& c, const MutationGraph& g);
std::string to_json(ModuleCategory& c, const MutationGraph& g);

ShiftedObject regular_pair(ModuleCategory& c);  // (Λ, 0)
ShiftedObject shifted_regular(ModuleCategory& c);  // (0, Λ[1])

}  // namespace tautilt
