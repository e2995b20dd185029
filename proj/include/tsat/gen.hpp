#pragma once

#include <random>

#include "tsat/classify.hpp"
#include "tsat/formula.hpp"

namespace tsat {

// Random formula over the fragment, for harness sampling. Deterministic for
// a fixed generator state.
FormulaPtr random_formula(std::mt19937& rng, const FragmentSpec& spec, int max_nodes,
                          int num_vars);

}  // namespace tsat
