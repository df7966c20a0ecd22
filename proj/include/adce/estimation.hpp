#pragma once

#include <vector>

#include "adce/common.hpp"

namespace adce {

// Outcome of any channel estimator: a dense delay-grid vector plus the
// support the estimator committed to.
struct EstimationResult {
  cvec estimate;
  std::vector<int> support;
  bool converged = true;
};

}  // namespace adce
