#include "digitblocks/special.hpp"

#include <array>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "digitblocks/constants.hpp"

namespace digitblocks::special {

namespace {

using namespace digitblocks::constants;

// Below this the argument is shifted up with the recurrence.
constexpr double kAsymptoticThreshold = 8.0;

// B_{2k} / (2k (2k-1)), k = 1..7.
constexpr std::array<double, 7> kLogGammaCoeff = {
    1.0 / 12.0,   -1.0 / 360.0, 1.0 / 1260.0,         -1.0 / 1680.0,
    1.0 / 1188.0, -691.0 / 360360.0, 1.0 / 156.0,
};

// B_{2k} / (2k), k = 1..7.
constexpr std::array<double, 7> kDigammaCoeff = {
    1.0 / 12.0,  -1.0 / 120.0,      1.0 / 252.0, -1.0 / 240.0,
    1.0 / 132.0, -691.0 / 32760.0, 1.0 / 12.0,
};

void require_positive(double x, const char* what) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw std::domain_error(std::string(what) + ": argument must be positive and finite, got " +
                            std::to_string(x));
  }
}

double log_gamma_asymptotic(double x) {
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double series = 0.0;
  for (auto it = kLogGammaCoeff.rbegin(); it != kLogGammaCoeff.rend(); ++it) {
    series = series * inv2 + *it;
  }
  return (x - 0.5) * std::log(x) - x + kHalfLog2Pi + series * inv;
}

double digamma_asymptotic(double x) {
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double series = 0.0;
  for (auto it = kDigammaCoeff.rbegin(); it != kDigammaCoeff.rend(); ++it) {
    series = series * inv2 + *it;
  }
  return std::log(x) - 0.5 * inv - series * inv2;
}

}  // namespace

double log_gamma(double x) {
  require_positive(x, "log_gamma");
  if (x >= kAsymptoticThreshold) return log_gamma_asymptotic(x);

  // Gamma(x) = Gamma(x + m) / (x (x+1) ... (x+m-1)); the factors from x+1 on
  // are at least 1, so their product stays well inside double range.
  const int m = static_cast<int>(std::ceil(kAsymptoticThreshold - x));
  double product = 1.0;
  for (int j = 1; j < m; ++j) product *= x + j;
  return log_gamma_asymptotic(x + m) - std::log(product) - std::log(x);
}

double digamma(double x) {
  require_positive(x, "digamma");
  if (x >= kAsymptoticThreshold) return digamma_asymptotic(x);

  const int m = static_cast<int>(std::ceil(kAsymptoticThreshold - x));
  double shift = 0.0;
  for (int j = m - 1; j >= 0; --j) shift += 1.0 / (x + j);
  return digamma_asymptotic(x + m) - shift;
}

GaussDigamma gauss_digamma(std::int64_t p, std::int64_t q) {
  if (p <= 0 || q <= 0 || p >= q) {
    throw std::invalid_argument("gauss_digamma: need 0 < p < q, got p=" + std::to_string(p) +
                                ", q=" + std::to_string(q));
  }
  const std::int64_t g = std::gcd(p, q);
  p /= g;
  q /= g;

  GaussDigamma out{0.0, {}};
  out.terms.push_back({GaussTermKind::EulerGamma, 0, -kEulerGamma});
  out.terms.push_back({GaussTermKind::Log, 0, -std::log(2.0 * static_cast<double>(q))});
  const double angle = kPi * static_cast<double>(p) / static_cast<double>(q);
  out.terms.push_back({GaussTermKind::Cot, 0, -0.5 * kPi / std::tan(angle)});
  for (std::int64_t k = 1; 2 * k <= q - 1; ++k) {
    // Reduce k*p mod q before scaling so the cosine argument stays in [0, 2pi).
    const double c = std::cos(2.0 * kPi * static_cast<double>((k * p) % q) / static_cast<double>(q));
    const double s = std::sin(kPi * static_cast<double>(k) / static_cast<double>(q));
    out.terms.push_back({GaussTermKind::CosLogSin, k, 2.0 * c * std::log(s)});
  }
  double sum = 0.0;
  for (const auto& t : out.terms) sum += t.value;
  out.value = sum;
  return out;
}

double reciprocal_diff_sum(double a, double b) {
  require_positive(a, "reciprocal_diff_sum(a)");
  require_positive(b, "reciprocal_diff_sum(b)");
  return 1.0 / b + (kEulerGamma + digamma(b / a)) / a;
}

double weierstrass_sum(double x) {
  require_positive(x, "weierstrass_sum");
  return std::log(x) + kEulerGamma * x + log_gamma(x);
}

double a_tail_sum(double a, double b) {
  require_positive(a, "a_tail_sum(a)");
  if (!(b >= 0.0) || !std::isfinite(b)) {
    throw std::domain_error("a_tail_sum: b must be nonnegative and finite");
  }
  if (b == 0.0) return log_gamma(1.0 / a) + kEulerGamma / a - std::log(a);
  return log_gamma((b + 1.0) / a) - log_gamma(b / a) - digamma(b / a) / a;
}

}  // namespace digitblocks::special
