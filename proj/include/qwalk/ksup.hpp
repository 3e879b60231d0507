#pragma once

#include <functional>

#include "qwalk/kernels.hpp"

namespace qwalk {

struct KSup {
  double value = 0.0;
  double k = 0.0;
};

/// sup over k in [0, 2 pi) of a continuous periodic f.
///
/// Evaluates a uniform grid of `coarse` points, then runs golden-section
/// maximization inside the bracket of each of the `candidates` largest local
/// maxima. Absolute accuracy is about 1e-6 for the smooth functions used here
/// (k-resolution of the refinement is 1e-10).
KSup sup_over_k(const std::function<double(double)>& f, Execution exec = Execution::parallel,
                int coarse = 1024, int candidates = 4);

}  // namespace qwalk
