// Projective presentations, Nakayama functor, AR translates and Ext^1.
#pragma once

#include <compare>
#include <string>
#include <vector>

#include "tautilt/rep.hpp"

namespace tautilt {

/// Direct sum of indecomposable projectives P(tops[0]) ⊕ P(tops[1]) ⊕ ...
struct ProjSum {
  std::vector<int> tops;
  Rep rep;
  std::vector<std::vector<int>> offsets;  // [summand][vertex] start within the vertex space
};

/// Map between projective sums as a matrix of algebra elements:
/// entry (i, j) lies in e_{src[j]} A e_{tgt[i]} and sends the top of the
/// j-th source summand to that element of the i-th target summand.
struct PMap {
  std::vector<int> src, tgt;
  std::vector<std::vector<Vec>> entry;  // [tgt index][src index], dense coordinates
};

ProjSum proj_sum(const AlgebraPtr& a, const std::vector<int>& tops);
PMap zero_pmap(const BasedAlgebra& a, const std::vector<int>& src, const std::vector<int>& tgt);
/// Realize a PMap as a module homomorphism between the projective sums.
RepMor realize(const PMap& f, const ProjSum& src, const ProjSum& tgt);
/// g after f.
PMap compose(const BasedAlgebra& a, const PMap& g, const PMap& f);
/// Basis of Hom(⊕P(src), ⊕P(tgt)).
std::vector<PMap> pmap_basis(const BasedAlgebra& a, const std::vector<int>& src, const std::vector<int>& tgt);
Vec flatten(const PMap& f);
PMap unflatten_pmap(const BasedAlgebra& a, const Vec& v, const std::vector<int>& src, const std::vector<int>& tgt);
/// Block sums.
PMap block_diag(const BasedAlgebra& a, const std::vector<PMap>& parts);
PMap vstack(const BasedAlgebra& a, const PMap& top, const PMap& bottom);   // same source
PMap hstack(const BasedAlgebra& a, const PMap& left, const PMap& right);   // same target

/// Minimal projective presentation P1 -> P0 -> M -> 0.
struct ProjPres {
  ProjSum p1, p0;
  PMap d;             // P1 -> P0
  RepMor cover;       // P0 -> M
  SubRep syzygy;      // kernel of the cover, with inclusion into P0
};
ProjPres min_proj_pres(const Rep& m);
/// Projective cover of a module: generators lifted from the top.
std::pair<ProjSum, RepMor> projective_cover(const Rep& m);

/// ν on projective sums and maps between them.
Rep nakayama(const ProjSum& p);
RepMor nakayama(const PMap& f, const ProjSum& src, const ProjSum& tgt);
Rep tau(const Rep& m);
Rep tau_inv(const Rep& m, const AlgebraPtr& op);
int ext1_dim(const Rep& x, const Rep& y);

/// Hom(N, τM) = 0.
bool as_criterion(const Rep& n, const Rep& m);

/// Indecomposable object of C(mod A)[-1] ⊔ C(mod A): module id with shift.
struct Shifted {
  IndecId id;
  int shift = 0;
  auto operator<=>(const Shifted&) const = default;
};

/// Sorted multiset of shifted indecomposables.
struct ShiftedObject {
  std::vector<Shifted> items;
  void normalize();
  bool empty() const { return items.empty(); }
  std::size_t size() const { return items.size(); }
  bool basic() const;
  friend auto operator<=>(const ShiftedObject&, const ShiftedObject&) = default;
};

/// Cached τ of a registered indecomposable, decomposed (empty for projectives).
std::vector<IndecId> tau_summands(ModuleCategory& c, IndecId x);
const Rep& tau_rep(ModuleCategory& c, IndecId x);
/// τ^{-1} of a registered indecomposable, decomposed.
std::vector<IndecId> tau_inv_summands(ModuleCategory& c, IndecId x);
const ProjPres& presentation(ModuleCategory& c, IndecId x);

/// τ̄: non-projective M -> τM, projective P -> νP[-1], P[1] -> νP.
ShiftedObject tau_bar(ModuleCategory& c, const ShiftedObject& u);
/// Inverse direction: non-injective M -> τ^{-1}M, injective I -> ν^{-1}I[1], I[-1] -> ν^{-1}I.
ShiftedObject tau_bar_inv(ModuleCategory& c, const ShiftedObject& u);

std::string describe(ModuleCategory& c, const ShiftedObject& u);

}  // namespace tautilt
