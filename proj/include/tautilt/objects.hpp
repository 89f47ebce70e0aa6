// Text and JSON input for modules and objects of C(mod Λ).
#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tautilt/homcalc.hpp"

namespace tautilt {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Module from arrow matrices keyed by arrow name; absent arrows act as 0.
Rep module_from_arrows(const AlgebraPtr& a, std::vector<int> dims, const std::map<std::string, Mat>& arrows);

/// {"dims": [1, 1, 0], "arrows": {"a1": [[1]], "b": [["1/2"]]}}
Rep parse_module_json(const AlgebraPtr& a, std::string_view text);

/// Inverse of parse_module_json; integers are written as numbers.
std::string module_to_json(const Rep& x);

/// Sum of named summands:  P(1) + S(2)[1] + I(3)  ("0" is the zero object).
/// A JSON array of {"module": {...}, "shift": k} or a single module is also
/// accepted; modules are decomposed and every summand gets the shift.
ShiftedObject parse_object(ModuleCategory& c, std::string_view text);

}  // namespace tautilt
