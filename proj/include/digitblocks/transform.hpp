#pragma once

// The dyadic transform between sequences (r_n) and (R_i):
//   R_i = sum_{k>=0} r_{floor(i/2^k)}   <=>   r_n = R_n - R_{floor(n/2)},
// with r_0 = R_0 = 0, and the weighted sums it links:
//   sum_n r_n (1/n - log((n+1)/n)) = sum_i R_i / (2i(2i+1)).

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "digitblocks/digits.hpp"
#include "digitblocks/symbolic.hpp"

namespace digitblocks::transform {

/// Values at indices 1..M; element i-1 holds entry i.
using Sequence = std::vector<Rational>;

/// A real-valued sequence given by a rule, indexed from 1.
using SequenceRule = std::function<double(std::uint64_t)>;

/// R_i = r_i + R_{floor(i/2)}, O(M).
Sequence forward(const Sequence& r);

/// r_n = R_n - R_{floor(n/2)}.
Sequence inverse(const Sequence& R);

/// A pair (r, R) related by the transform.
class SequencePair {
public:
  static SequencePair from_r(Sequence r);
  static SequencePair from_R(Sequence R);

  const Sequence& r() const noexcept { return r_; }
  const Sequence& R() const noexcept { return R_; }
  std::size_t size() const noexcept { return r_.size(); }

  /// Re-checks R_i = sum_k r_{floor(i/2^k)} term by term.
  bool consistent() const;

private:
  SequencePair(Sequence r, Sequence R) : r_(std::move(r)), R_(std::move(R)) {}
  Sequence r_;
  Sequence R_;
};

/// An ultimately periodic sequence: r_1..r_p = preperiod, then the period
/// repeats forever.
struct PeriodicRule {
  Sequence preperiod;
  Sequence period;  // non-empty

  Rational at(std::uint64_t n) const;
  /// First M entries.
  Sequence table(std::size_t M) const;
  /// n -> double(r_n).
  SequenceRule rule() const;
  /// i -> R_i of the forward transform, O(log i) per call.
  SequenceRule forward_rule() const;

  friend bool operator==(const PeriodicRule&, const PeriodicRule&) = default;
};

/// sum_{n=1}^{N} r_n A_n, compensated.
double weighted_sum_lhs(const SequenceRule& r, std::uint64_t terms);

/// sum_{i=1}^{N} R_i / (2i(2i+1)), compensated.
double weighted_sum_rhs(const SequenceRule& R, std::uint64_t terms);

/// Exact value of sum_{n>=1} r_n A_n for an ultimately periodic r, written
/// with log Gamma / Psi atoms through the sums of A over arithmetic
/// progressions. Makes no use of block counting.
SymbolicConstant periodic_weighted_sum(const PeriodicRule& rule);

/// Finds the minimal (preperiod, period) of r_n = N_{w,2}(n) - N_{w,2}(floor(n/2))
/// over 1 <= n <= limit, with period length at most 2^{|w|+1}, preperiod at
/// most limit/2 and at least two full periods observed after the preperiod. std::nullopt if none fits.
/// Throws std::invalid_argument if limit < 4 * 2^{|w|} or w is not binary.
std::optional<PeriodicRule> periodic_r_for_word(const Word& w, std::uint64_t limit);

}  // namespace digitblocks::transform
