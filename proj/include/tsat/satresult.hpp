#pragma once

#include <optional>

#include "tsat/classify.hpp"
#include "tsat/lasso.hpp"

namespace tsat {

struct SatResult {
  bool satisfiable = false;
  std::optional<Witness> witness;  // present for SAT when the method yields one
  Strategy method = Strategy::Tableau;
};

}  // namespace tsat
