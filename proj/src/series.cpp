#include "digitblocks/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>
#include <vector>

namespace digitblocks::series {

void CompensatedSum::add(double x) noexcept {
  const double t = sum_ + x;
  if (std::fabs(sum_) >= std::fabs(x)) comp_ += (sum_ - t) + x;
  else comp_ += (x - t) + sum_;
  sum_ = t;
}

void CompensatedSum::add(const CompensatedSum& other) noexcept {
  add(other.sum_);
  add(other.comp_);
}

double a_term(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("a_term: n must be >= 1");
  const double x = 1.0 / static_cast<double>(n);
  if (n < 8) {
    // Cancellation costs about four bits here; extended precision absorbs it.
    const long double xl = 1.0L / static_cast<long double>(n);
    return static_cast<double>(xl - std::log1pl(xl));
  }
  // x - log(1+x) = x^2/2 - x^3/3 + x^4/4 - ...
  double term = x * x;
  double sum = 0.0;
  for (int j = 2; j < 40; ++j) {
    const double t = term / j;
    sum += (j % 2 == 0) ? t : -t;
    if (t < 1e-18 * sum) break;
    term *= x;
  }
  return sum;
}

double ak_term(std::uint64_t n, std::uint64_t k) {
  if (n == 0) throw std::invalid_argument("ak_term: n must be >= 1");
  if (k == 0) return a_term(n);
  // 1/(n+k) - 1/n + A_n
  const double nd = static_cast<double>(n);
  const double kd = static_cast<double>(k);
  return a_term(n) - kd / (nd * (nd + kd));
}

double q_base(std::uint64_t n, unsigned base) {
  require_base(base);
  if (n == 0) throw std::invalid_argument("q_base: n must be >= 1");
  const double bn = static_cast<double>(base) * static_cast<double>(n);
  double sum = 0.0;
  for (unsigned j = 1; j < base; ++j) sum += j / (bn * (bn + j));
  return sum;
}

Kernel Kernel::qbase(unsigned b) {
  require_base(b);
  return {KernelType::QBase, b, 0};
}

double Kernel::operator()(std::uint64_t n) const {
  const double nd = static_cast<double>(n);
  switch (type) {
    case KernelType::Deg2: return 1.0 / ((2.0 * nd) * (2.0 * nd + 1.0));
    case KernelType::Deg3: return 1.0 / ((2.0 * nd) * (2.0 * nd + 1.0) * (2.0 * nd + 2.0));
    case KernelType::NN1: return 1.0 / (nd * (nd + 1.0));
    case KernelType::QBase: return q_base(n, base);
    case KernelType::QK: {
      // The logarithms in A^(k)_n - A^(k)_{2n} - A^(k)_{2n+1} cancel exactly:
      //   1/(n+k) - 1/(2n+k) - 1/(2n+k+1) = (n(1-2k) - k^2) / ((n+k)(2n+k)(2n+k+1)).
      const double kd = static_cast<double>(k);
      const double numer = nd * (1.0 - 2.0 * kd) - kd * kd;
      return numer / ((nd + kd) * (2.0 * nd + kd) * (2.0 * nd + kd + 1.0));
    }
  }
  return 0.0;
}

double Kernel::tail_sum_bound(double m) const {
  // sum_{n>=m} 1/n^2 <= 1/(m - 1/2) and sum_{n>=m} 1/n^3 <= 1/(2 (m - 1/2)^2),
  // both by convexity.
  const double h = m - 0.5;
  switch (type) {
    case KernelType::Deg2: return 0.25 / h;
    case KernelType::Deg3:
      // 1/(2n(2n+1)(2n+2)) <= 1/((2n-1)(2n+1)(2n+3)), which telescopes.
      return 1.0 / (4.0 * (2.0 * m - 1.0) * (2.0 * m + 1.0));
    case KernelType::NN1: return 1.0 / m;
    case KernelType::QBase: return (base - 1.0) / (2.0 * base) / h;
    case KernelType::QK: {
      if (k == 0) return 0.25 / h;
      // |Q^(k)(n)| <= ((2k-1) n + k^2) / (4 n^3)
      const double kd = static_cast<double>(k);
      return (2.0 * kd - 1.0) / (4.0 * h) + kd * kd / (8.0 * h * h);
    }
  }
  return std::numeric_limits<double>::infinity();
}

std::string Kernel::type_name() const {
  switch (type) {
    case KernelType::Deg2: return "deg2";
    case KernelType::Deg3: return "deg3";
    case KernelType::NN1: return "nn1";
    case KernelType::QBase: return "qbase";
    case KernelType::QK: return "qk";
  }
  return "?";
}

Kernel parse_kernel(const std::string& name, unsigned base, std::uint64_t k) {
  if (name == "deg2") return Kernel::deg2();
  if (name == "deg3") return Kernel::deg3();
  if (name == "nn1") return Kernel::nn1();
  if (name == "qbase") return Kernel::qbase(base);
  if (name == "qk") return Kernel::qk(k);
  throw std::invalid_argument("unknown kernel '" + name + "'");
}

std::string mode_name(Mode m) { return m == Mode::Sequential ? "sequential" : "parallel"; }

double tail_bound(const Kernel& kernel, unsigned base, std::uint64_t terms) {
  require_base(base);
  const double m = static_cast<double>(terms) + 1.0;
  double total = static_cast<double>(digit_count(terms + 1, base)) * kernel.tail_sum_bound(m);

  // Jumps of g above m. Each U(B^j) is less than 1/B times the previous one,
  // so once the terms are negligible the rest is at most last/(B-1).
  double power = 1.0;
  while (power <= m) power *= base;
  double last = 0.0;
  for (int guard = 0; guard < 2000 && std::isfinite(power); ++guard, power *= base) {
    last = kernel.tail_sum_bound(power);
    total += last;
    if (last < 1e-20 * total) break;
  }
  return total + last / (base - 1.0);
}

namespace {

CompensatedSum sum_range(const Word& w, const Kernel& kernel, std::uint64_t lo, std::uint64_t hi) {
  CompensatedSum acc;
  for (std::uint64_t n = lo; n <= hi; ++n) {
    const auto c = count_block(n, w);
    if (c != 0) acc.add(static_cast<double>(c) * kernel(n));
  }
  return acc;
}

}  // namespace

PartialSumResult partial_sum(const Word& w, const Kernel& kernel, std::uint64_t terms, Mode mode,
                             unsigned threads) {
  if (terms == 0) throw std::invalid_argument("partial_sum: terms must be >= 1");
  if (w.base() != kernel.word_base()) {
    throw std::invalid_argument("kernel " + kernel.type_name() + " needs base-" +
                                std::to_string(kernel.word_base()) + " words, got " + w.to_string());
  }

  CompensatedSum total;
  if (mode == Mode::Sequential) {
    total = sum_range(w, kernel, 1, terms);
  } else {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, terms));
    std::vector<CompensatedSum> parts(threads);
    std::vector<std::thread> pool;
    const std::uint64_t chunk = terms / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::uint64_t lo = 1 + t * chunk;
      const std::uint64_t hi = (t + 1 == threads) ? terms : lo + chunk - 1;
      pool.emplace_back([&, t, lo, hi] { parts[t] = sum_range(w, kernel, lo, hi); });
    }
    for (auto& th : pool) th.join();
    for (const auto& p : parts) total.add(p);
  }
  return {total.value(), terms, tail_bound(kernel, w.base(), terms), w, kernel, mode};
}

ExpansionCheck a_expansion_check(std::uint64_t n, unsigned levels) {
  if (n == 0) throw std::invalid_argument("a_expansion_check: n must be >= 1");
  if (levels < 1 || levels > 30) throw std::invalid_argument("a_expansion_check: K must be in [1, 30]");
  if (n + 1 > (std::numeric_limits<std::uint64_t>::max() >> levels)) {
    throw std::overflow_error("a_expansion_check: 2^K * n overflows 64 bits");
  }
  CompensatedSum acc;
  for (unsigned k = 1; k <= levels; ++k) {
    const std::uint64_t base = n << k;
    const std::uint64_t count = std::uint64_t{1} << (k - 1);
    for (std::uint64_t m = 0; m < count; ++m) {
      const double d = static_cast<double>(base + 2 * m);
      acc.add(1.0 / (d * (d + 1.0)));
    }
  }
  return {acc.value(), std::ldexp(1.0, -static_cast<int>(levels))};
}

}  // namespace digitblocks::series
