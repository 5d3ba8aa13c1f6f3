#include "owa/numerics.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "owa/errors.hpp"

namespace owa::numerics {

namespace {

// Panels shallower than this are always split; a single Simpson panel can
// agree with its halves by accident on functions with a symmetric kink.
constexpr int kMinDepth = 2;

struct Panel {
  double a, fa, m, fm, b, fb, whole;
};

struct Accumulator {
  double error_bound = 0.0;
  bool exhausted = false;
};

double simpson(double a, double fa, double fm, double b, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double refine(const std::function<double(double)>& f, const Panel& p, double tol, int depth,
              int max_depth, Accumulator& acc) {
  const double lm = 0.5 * (p.a + p.m);
  const double rm = 0.5 * (p.m + p.b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson(p.a, p.fa, flm, p.m, p.fm);
  const double right = simpson(p.m, p.fm, frm, p.b, p.fb);
  const double delta = left + right - p.whole;

  if (depth >= kMinDepth && std::abs(delta) <= 15.0 * tol) {
    acc.error_bound += std::abs(delta) / 15.0;
    return left + right + delta / 15.0;
  }
  if (depth >= max_depth) {
    acc.exhausted = true;
    acc.error_bound += std::abs(delta) / 15.0;
    return left + right + delta / 15.0;
  }
  const Panel lp{p.a, p.fa, lm, flm, p.m, p.fm, left};
  const Panel rp{p.m, p.fm, rm, frm, p.b, p.fb, right};
  return refine(f, lp, 0.5 * tol, depth + 1, max_depth, acc) +
         refine(f, rp, 0.5 * tol, depth + 1, max_depth, acc);
}

}  // namespace

void QuadratureSpec::validate() const {
  if (!(abs_tolerance > 0.0)) throw ValidationError("quadrature tolerance must be positive");
  if (max_depth < 1) throw ValidationError("quadrature depth must be at least 1");
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureSpec& spec) {
  spec.validate();
  if (!(a <= b)) throw DomainError("integration bounds must satisfy a <= b");
  if (a == b) return 0.0;

  const double m = 0.5 * (a + b);
  const double fa = f(a);
  const double fm = f(m);
  const double fb = f(b);
  const Panel root{a, fa, m, fm, b, fb, simpson(a, fa, fm, b, fb)};

  Accumulator acc;
  const double estimate = refine(f, root, spec.abs_tolerance, 0, spec.max_depth, acc);
  if (!std::isfinite(estimate)) {
    throw ConvergenceError("integrand is not finite on the interval", estimate,
                           std::numeric_limits<double>::infinity());
  }
  if (acc.exhausted && acc.error_bound > spec.abs_tolerance) {
    throw ConvergenceError("adaptive Simpson exhausted depth " +
                               std::to_string(spec.max_depth) + " (error bound " +
                               std::to_string(acc.error_bound) + ")",
                           estimate, acc.error_bound);
  }
  return estimate;
}

}  // namespace owa::numerics
