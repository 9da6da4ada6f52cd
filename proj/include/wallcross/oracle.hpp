#pragma once

// Engine results against the direct circle formulas and the structural
// shortcuts.

#include "wallcross/arrangement.hpp"
#include "wallcross/checks.hpp"

#include <vector>

namespace wallcross {

/// Reports: isolated seeds; for rank 1, engine against the regular and
/// singular circle formulas at every chamber and level; for every crossing
/// edge, the engine jump against its line restriction; Delzant shortcut;
/// sig = P(i).
std::vector<CheckReport> run_oracle(const ChamberComplex& complex);

}  // namespace wallcross
