// τ-perpendicular subcategories J(U), the equivalence J(U) ≃ mod Γ, and the
// reduction bijections E_U with their inverses.
#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "tautilt/widetors.hpp"

namespace tautilt {

class PerpError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// J(U) = (M ⊔ P)^⊥ ∩ ⊥(τM) with its progenerator G = G_1 ⊕ ... ⊕ G_r and
/// Γ = End(G)^op. A Γ basis element is a morphism G_s -> G_t; it has Γ-source
/// t and Γ-target s, and b*c is c∘b.
struct PerpCat {
  ShiftedObject pair;
  AlgebraPtr ambient;
  WideKey key;
  std::vector<IndecId> gens;     // Γ vertex order
  std::vector<Rep> gen_reps;
  std::vector<IndecId> simples;  // aligned with gens
  AlgebraPtr gamma;
  std::vector<RepMor> gamma_maps;  // per Γ basis element
  std::shared_ptr<ModuleCategory> gamma_cat;

  int rank() const { return static_cast<int>(gens.size()); }
};
using PerpPtr = std::shared_ptr<const PerpCat>;

PerpPtr jperp(ModuleCategory& c, const ShiftedObject& u);
/// J^{-1}(M ⊔ I[-1]) = ⊥(M ⊔ I) ∩ (τ^{-1}M)^⊥, computed over the opposite
/// algebra. Only the semibrick is filled in.
WideKey jperp_inv(ModuleCategory& c, const ShiftedObject& u);

/// Definition-level membership tests.
bool in_jperp(ModuleCategory& c, const ShiftedObject& u, const Rep& x);
bool in_jperp_inv(ModuleCategory& c, const ShiftedObject& u, const Rep& x);

/// Hom(G, -): J(U) -> mod Γ and its quasi-inverse (cokernel of the
/// presentation read in add G).
Rep to_gamma(const PerpCat& w, const Rep& x);
Rep from_gamma(const PerpCat& w, const Rep& y);
ShiftedObject to_gamma(ModuleCategory& c, const PerpCat& w, const ShiftedObject& v);
ShiftedObject from_gamma(ModuleCategory& c, const PerpCat& w, const ShiftedObject& v);
/// Ambient key of a wide subcategory of mod Γ.
WideKey key_from_gamma(ModuleCategory& c, const PerpCat& w, const WideKey& k);

/// f_{M^⊥}(X) = X / trace_M(X).
Rep torsion_free_quotient(ModuleCategory& c, const std::vector<IndecId>& m, const Rep& x);

/// E_U(v) for u ⊔ v basic support τ-rigid in mod Λ; the result lives in
/// 𝒞(J(U)): shifted summands are projective in J(U), not in mod Λ.
ShiftedObject emap(ModuleCategory& c, const ShiftedObject& u, const ShiftedObject& v);
/// Preimage under E_U, searched over completions of u reachable within
/// `bound` mutations.
ShiftedObject emap_inv(ModuleCategory& c, const ShiftedObject& u, const ShiftedObject& v, int bound = 64);

/// Relative versions for u, v in 𝒞(W), W = J(w.pair), computed in mod Γ.
bool is_rigid_in(ModuleCategory& c, const PerpCat& w, const ShiftedObject& u);
WideKey jperp_in(ModuleCategory& c, const PerpCat& w, const ShiftedObject& u);
ShiftedObject emap_in(ModuleCategory& c, const PerpCat& w, const ShiftedObject& u, const ShiftedObject& v);
ShiftedObject emap_inv_in(ModuleCategory& c, const PerpCat& w, const ShiftedObject& u, const ShiftedObject& v,
                          int bound = 64);
std::string to_json(ModuleCategory& c, const PerpCat& w);

/// Bounded check that Filt(xs) is wide and differs from every J(u) with u
/// of rank rk(Λ) - |xs| drawn from pairs whose summands have total dimension
/// at most `dim_bound`.
struct NotPerpReport {
  bool hom_orthogonal = false;
  bool bricks = false;
  bool ext_vanishes = false;
  int candidates = 0;
  int matches = 0;
  int max_dim_seen = 0;
  std::vector<std::string> lines;
  bool certified() const { return hom_orthogonal && bricks && ext_vanishes && matches == 0; }
};
NotPerpReport certify_not_tau_perp(ModuleCategory& c, const std::vector<Rep>& xs, int dim_bound);

}  // namespace tautilt
