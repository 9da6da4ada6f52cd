#pragma once

// Cross-checks on propagated invariant tables.  Each returns a report with
// one line per subject checked.

#include "wallcross/arrangement.hpp"
#include "wallcross/engine.hpp"

#include <string>
#include <vector>

namespace wallcross {

enum class CheckStatus { Pass, Fail, Skip };

struct CheckLine {
  std::string subject;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
};

struct CheckReport {
  std::string name;
  std::vector<CheckLine> lines;
  bool hypothesis_met = true;

  bool passed() const;  // no Fail line
  std::size_t count(CheckStatus s) const;
};

std::string to_string(CheckStatus s);

/// Subchambers of structure-free toric strata have value 1 in each table
/// supplied.  Other strata are reported as skipped.
CheckReport delzant_shortcut(const WeightedXray& x, const InvariantTable& sig,
                             const InvariantTable* poin = nullptr, const InvariantTable* euler = nullptr);

/// sig = P(i) on every subchamber, when every seed satisfies it.
CheckReport check_sig_equals_poincare_at_i(const WeightedXray& x, const InvariantTable& sig,
                                           const InvariantTable& poin);

/// For reduced spaces of real dimension 4 with all seeds 1:
/// sig = 2 - b2 and exactly one positive class, p = (sig + b2) / 2 = 1.
CheckReport check_dim4_positivity(const WeightedXray& x, const InvariantTable& poin, const InvariantTable& sig);

/// sig = euler (mod 2), when every seed satisfies it.
CheckReport check_parity(const WeightedXray& x, const InvariantTable& sig, const InvariantTable& euler);

/// Every crossing edge satisfies the wall-crossing relation.
CheckReport check_path_independence(const ChamberComplex& complex, const InvariantTable& table,
                                    const RecursiveInvariantSpec& spec);

/// Forward/backward counts of every separator agree when recomputed from
/// each vertex below the separating stratum.
CheckReport check_vertex_independence(const ChamberComplex& complex);

}  // namespace wallcross
