#pragma once

// Term kernels and brute-force partial sums of N_{w,B}(n) * kernel(n).
//
// The partial sums are the numeric oracle for every closed form in the
// library, so they are kept deliberately simple: ascending n, one
// compensated accumulator, and a rigorous (if loose) bound on the omitted
// tail.

#include <cstdint>
#include <string>

#include "digitblocks/digits.hpp"

namespace digitblocks::series {

/// Neumaier's variant of Kahan summation.
class CompensatedSum {
public:
  void add(double x) noexcept;
  void add(const CompensatedSum& other) noexcept;
  double value() const noexcept { return sum_ + comp_; }

private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// A_n = 1/n - log((n+1)/n), n >= 1. Evaluated without cancellation.
double a_term(std::uint64_t n);

/// A^(k)_n = 1/(n+k) - log((n+1)/n), n >= 1.
double ak_term(std::uint64_t n, std::uint64_t k);

/// Q(n,B) = sum_{j=1}^{B-1} j/(Bn(Bn+j)) = A_n - A_{Bn} - ... - A_{Bn+B-1}.
double q_base(std::uint64_t n, unsigned base);

enum class KernelType { Deg2, Deg3, NN1, QBase, QK };

struct Kernel {
  KernelType type = KernelType::Deg2;
  unsigned base = 2;    // QBase only
  std::uint64_t k = 0;  // QK only

  static Kernel deg2() { return {KernelType::Deg2, 2, 0}; }
  static Kernel deg3() { return {KernelType::Deg3, 2, 0}; }
  static Kernel nn1() { return {KernelType::NN1, 2, 0}; }
  static Kernel qbase(unsigned b);
  static Kernel qk(std::uint64_t k) { return {KernelType::QK, 2, k}; }

  /// Base of the words this kernel is summed against.
  unsigned word_base() const noexcept { return type == KernelType::QBase ? base : 2; }

  /// kernel(n), n >= 1.
  double operator()(std::uint64_t n) const;

  /// An upper bound for sum_{n >= m} |kernel(n)|, m >= 1.
  double tail_sum_bound(double m) const;

  /// "deg2", "deg3", "nn1", "qbase", "qk".
  std::string type_name() const;

  friend bool operator==(const Kernel&, const Kernel&) = default;
};

/// Parses "deg2" | "deg3" | "nn1" | "qbase" | "qk"; base and k fill in the
/// parameters of the last two.
Kernel parse_kernel(const std::string& name, unsigned base, std::uint64_t k);

enum class Mode { Sequential, Parallel };

std::string mode_name(Mode m);

struct PartialSumResult {
  double value;
  std::uint64_t terms;
  double tail_bound;
  Word word;
  Kernel kernel;
  Mode mode;
};

/// Upper bound for sum_{n > terms} N_{w,B}(n) |kernel(n)| valid for every
/// word over `base`.
///
/// Uses N_{w,B}(n) <= g(n) := floor(log_B n) + 1 and summation by parts over
/// the unit jumps of g at n = B^j:
///   sum_{n >= m} g(n) K(n) <= g(m) U(m) + sum_{B^j > m} U(B^j),
/// with U(m) the kernel's tail_sum_bound.
double tail_bound(const Kernel& kernel, unsigned base, std::uint64_t terms);

/// sum_{n=1}^{terms} N_{w,B}(n) kernel(n).
///
/// Sequential mode is bit-reproducible. Parallel mode splits [1, terms] into
/// contiguous chunks (threads = 0 picks the hardware concurrency) and agrees
/// with the sequential value to about 1e-12.
PartialSumResult partial_sum(const Word& w, const Kernel& kernel, std::uint64_t terms,
                             Mode mode = Mode::Sequential, unsigned threads = 0);

struct ExpansionCheck {
  double partial;
  double remainder_bound;
};

/// Level-K truncation of the dyadic expansion
///   A_n = sum_{k>=1} sum_{0<=m<2^{k-1}} 1/((2^k n + 2m)(2^k n + 2m + 1)),
/// whose omitted part is below 2^{-K}. Requires 1 <= K <= 30 and
/// 2^K (n+1) < 2^64.
ExpansionCheck a_expansion_check(std::uint64_t n, unsigned levels);

}  // namespace digitblocks::series
