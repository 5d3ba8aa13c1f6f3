#pragma once

#include <functional>

namespace owa::numerics {

struct QuadratureSpec {
  double abs_tolerance = 1e-8;
  int max_depth = 30;

  /// Throws ValidationError unless tolerance > 0 and depth >= 1.
  void validate() const;
};

/// Adaptive Simpson estimate of the integral of f over [a, b].
///
/// The tolerance is split in half at every subdivision and each accepted
/// panel gets the usual (S2 - S1)/15 Richardson correction. If any panel
/// reaches max_depth without meeting its share of the tolerance and the
/// accumulated error bound exceeds the requested tolerance, a ConvergenceError
/// is thrown carrying the best estimate and that bound. Jump discontinuities
/// land in this regime: the offending panel stops at max_depth, and the call
/// succeeds only if the panel is narrow enough for the jump not to matter.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureSpec& spec = {});

}  // namespace owa::numerics
