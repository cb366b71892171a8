#pragma once

#include <cmath>
#include <string>
#include <utility>

#include "tvdlab/errors.hpp"

namespace tvdlab {

struct RootOptions {
  double growth = 2.0;          // geometric bracketing factor
  int max_expansions = 64;      // bracket never leaves [growth^-64, growth^64]
  double rel_width = 1e-13;     // bisection stops at width rel_width * x
  int max_newton_steps = 5;
};

struct RootResult {
  double x;
  double residual;  // f(x) at the returned root
  int evaluations;
};

/// Root of a strictly increasing function on (0, inf).
///
/// `fn(x)` returns {f(x), f'(x)}.  The bracket is grown geometrically from
/// x = 1, then bisected down to a relative width of `rel_width` and finally
/// polished with at most `max_newton_steps` Newton steps that are kept inside
/// the bracket.  Throws ConvergenceError when no sign change is found inside
/// the expansion cap or an evaluation overflows while bracketing.
template <class Fn>
RootResult solve_increasing(Fn&& fn, const RootOptions& opt = {}) {
  int evals = 0;
  auto eval = [&](double x) {
    ++evals;
    return fn(x);
  };

  std::pair<double, double> f1 = eval(1.0);
  if (f1.first == 0.0) return {1.0, 0.0, evals};

  double lo = 1.0;
  double hi = 1.0;
  double flo = f1.first;
  double fhi = f1.first;
  try {
    if (f1.first < 0.0) {
      int k = 0;
      while (fhi < 0.0) {
        if (++k > opt.max_expansions) throw ConvergenceError("root not bracketed above");
        lo = hi;
        flo = fhi;
        hi *= opt.growth;
        fhi = eval(hi).first;
      }
    } else {
      int k = 0;
      while (flo > 0.0) {
        if (++k > opt.max_expansions) throw ConvergenceError("root not bracketed below");
        hi = lo;
        fhi = flo;
        lo /= opt.growth;
        flo = eval(lo).first;
      }
    }
  } catch (const OverflowError& e) {
    throw ConvergenceError(std::string("bracket expansion overflowed: ") + e.what());
  }
  if (flo == 0.0) return {lo, 0.0, evals};
  if (fhi == 0.0) return {hi, 0.0, evals};

  while (hi - lo > opt.rel_width * 0.5 * (lo + hi)) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = eval(mid).first;
    if (fm == 0.0) return {mid, 0.0, evals};
    if (fm < 0.0) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
      fhi = fm;
    }
  }

  double x = std::abs(flo) < std::abs(fhi) ? lo : hi;
  std::pair<double, double> fx = eval(x);
  for (int i = 0; i < opt.max_newton_steps && fx.first != 0.0; ++i) {
    if (!(fx.second > 0.0)) break;
    const double next = x - fx.first / fx.second;
    if (!(next >= lo && next <= hi) || next == x) break;
    const std::pair<double, double> fn_next = eval(next);
    if (std::abs(fn_next.first) >= std::abs(fx.first)) break;
    x = next;
    fx = fn_next;
  }
  return {x, fx.first, evals};
}

}  // namespace tvdlab
