// The τ-cluster morphism category, explored to a bounded depth.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tautilt/perpred.hpp"

namespace tautilt {

struct CmcObject {
  WideKey key;         // ambient simples
  ShiftedObject pair;  // some U with J(U) = key
  PerpPtr perp;        // jperp(pair)
  bool complete = false;
  int rank() const { return key.rank(); }
};

/// g_U^W: W -> J_W(U). Shifted label summands are projectives of W.
struct CmcMorphism {
  int source = 0, target = 0;
  ShiftedObject label;
  bool is_identity() const { return label.empty(); }
};

struct Composite {
  int second = 0, first = 0;  // second ∘ first
  int result = -1;            // -1 when the composite falls outside the explored region
  ShiftedObject label;
};

struct CmcGraph {
  std::vector<CmcObject> objects;
  std::vector<CmcMorphism> morphisms;
  std::vector<Composite> compositions;
  std::map<WideKey, int> object_index;
  std::map<std::pair<int, ShiftedObject>, int> morphism_index;
  int depth = 0;

  std::optional<int> find_object(const WideKey& k) const;
  std::optional<int> find_morphism(int source, const ShiftedObject& label) const;
  std::vector<int> out_of(int object) const;
};

/// Objects reachable from mod Λ: the fan of each object is every basic
/// support τ-rigid pair found by a mutation walk of the given depth (from
/// both ends) inside its reduced algebra Γ. `max_objects` caps recursion.
CmcGraph build(ModuleCategory& c, int depth, int max_objects = 400);

/// g ∘ h for h: W1 -> W2 and g: W2 -> W3; label U ⊔ E_U^{-1}(V).
CmcMorphism compose(ModuleCategory& c, const CmcGraph& g, const CmcMorphism& second, const CmcMorphism& first);
/// Fills g.compositions for every composable pair.
void compose_all(ModuleCategory& c, CmcGraph& g);

/// Rank-1 morphisms w -> v; both objects complete and rk v + 1 = rk w.
int morphism_count(const CmcGraph& g, int w, int v);

struct CheckResult {
  int checked = 0;
  int failed = 0;
  std::vector<std::string> failures;
  bool ok() const { return failed == 0; }
  void fail(std::string why) {
    ++failed;
    if (failures.size() < 20) failures.push_back(std::move(why));
  }
};

CheckResult check_identities(ModuleCategory& c, const CmcGraph& g);
CheckResult check_associativity(ModuleCategory& c, const CmcGraph& g);
/// Every morphism W1 -> W2 has W2 ⊆ W1, and its target is J_{W1}(label).
CheckResult check_hom_emptiness(ModuleCategory& c, const CmcGraph& g);
/// Rank-1 morphism counts are 2 exactly when the label is projective in the source.
CheckResult check_corank_one(ModuleCategory& c, const CmcGraph& g);
/// For complete W and objects V ⊆ W, V is a target of a morphism out of W.
CheckResult conjecture_search(ModuleCategory& c, const CmcGraph& g);

/// The subgraph of g under object w against build(Γ_w), with Γ-keys and
/// labels transported into mod Λ.
CheckResult check_reduction(ModuleCategory& c, const CmcGraph& g, int w, int depth);

std::string to_dot(ModuleCategory& c, const CmcGraph& g);
std::string to_json(ModuleCategory& c, const CmcGraph& g);

}  // namespace tautilt
