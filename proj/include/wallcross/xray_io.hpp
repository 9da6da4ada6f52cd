#pragma once

// JSON interchange for X-rays, invariant tables and circle data.

#include "wallcross/circle.hpp"
#include "wallcross/engine.hpp"
#include "wallcross/validate.hpp"
#include "wallcross/xray.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace wallcross {

/// Parse or structural errors (message names the field), or validation
/// failures (listed in `violations`).
class LoadError : public std::runtime_error {
 public:
  explicit LoadError(const std::string& what, std::vector<Violation> violations = {})
      : std::runtime_error(what), violations_(std::move(violations)) {}
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

/// Canonical text with sorted keys and strata ordered by id.
std::string xray_to_json(const WeightedXray& x);
WeightedXray xray_from_json(const std::string& text, bool unchecked = false);

void save_xray(const WeightedXray& x, const std::string& path);
WeightedXray load_xray(const std::string& path, bool unchecked = false);

/// One row per subchamber; `checks` maps summary names to PASS/FAIL/SKIP.
std::string tables_to_json(const WeightedXray& x, const std::vector<const InvariantTable*>& tables,
                           const std::vector<std::pair<std::string, std::string>>& checks = {});
std::string circle_data_to_json(const CircleFixedData& data);

}  // namespace wallcross
