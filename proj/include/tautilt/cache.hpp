// Per-category memo tables. Internal to the library.
#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "tautilt/homcalc.hpp"

namespace tautilt {

struct PerpCat;
struct EmapInvTable;

struct ModuleCategory::Cache {
  std::recursive_mutex mu;
  std::map<int, std::shared_ptr<const ProjPres>> pres;
  std::map<int, Rep> tau;
  std::map<int, std::vector<IndecId>> tau_ids, tau_inv_ids;
  std::map<std::pair<int, int>, int> hom_tau;
  std::map<std::vector<int>, bool> in_gen;
  std::map<ShiftedObject, ShiftedObject> bongartz, co_bongartz;
  std::map<std::pair<ShiftedObject, Shifted>, ShiftedObject> mutations;
  std::map<ShiftedObject, std::shared_ptr<const PerpCat>> jperp;
  std::map<std::pair<ShiftedObject, Shifted>, Shifted> emap_step;
  std::map<ShiftedObject, std::shared_ptr<EmapInvTable>> emap_inv;
};

}  // namespace tautilt
