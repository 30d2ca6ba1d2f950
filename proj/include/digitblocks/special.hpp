#pragma once

// Real log-gamma and digamma, plus closed forms for three classical series.
//
// Accuracy: |error| <= 1e-13 * max(1, |f(x)|) for x in (0, 1e6]. Relative
// accuracy is not promised at the zeros of log Gamma (x = 1, 2) or of the
// digamma function (x ~ 1.4616).

#include <cstdint>
#include <vector>

namespace digitblocks::special {

/// log Gamma(x) for x > 0. Throws std::domain_error otherwise.
double log_gamma(double x);

/// Psi(x) = Gamma'(x)/Gamma(x) for x > 0. Throws std::domain_error otherwise.
double digamma(double x);

enum class GaussTermKind { EulerGamma, Log, Cot, CosLogSin };

struct GaussTerm {
  GaussTermKind kind;
  std::int64_t k;  // summation index for CosLogSin, 0 otherwise
  double value;
};

struct GaussDigamma {
  double value;
  std::vector<GaussTerm> terms;
};

/// Psi(p/q) for 0 < p < q from Gauss's digamma theorem:
///   -gamma - log(2q) - (pi/2) cot(pi p/q) + 2 sum_{1<=k<=(q-1)/2} cos(2 pi k p/q) log sin(pi k/q).
/// p/q need not be in lowest terms; it is reduced first.
GaussDigamma gauss_digamma(std::int64_t p, std::int64_t q);

/// sum_{n>=1} (1/(an) - 1/(an+b)) = 1/b + (gamma + Psi(b/a))/a,  a, b > 0.
double reciprocal_diff_sum(double a, double b);

/// sum_{r>=1} (x/r - log(1 + x/r)) = log x + gamma x + log Gamma(x),  x > 0.
double weierstrass_sum(double x);

/// Sum of (1/m - log((m+1)/m)) over m = an + b.
///   b = 0: n >= 1, value log Gamma(1/a) + gamma/a - log a.
///   b > 0: n >= 0, value log Gamma((b+1)/a) - log Gamma(b/a) - Psi(b/a)/a.
double a_tail_sum(double a, double b);

}  // namespace digitblocks::special
