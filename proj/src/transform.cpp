#include "digitblocks/transform.hpp"

#include <stdexcept>

#include "digitblocks/series.hpp"

namespace digitblocks::transform {

Sequence forward(const Sequence& r) {
  Sequence R(r.size());
  for (std::size_t i = 1; i <= r.size(); ++i) {
    R[i - 1] = r[i - 1];
    if (i / 2 >= 1) R[i - 1] += R[i / 2 - 1];
  }
  return R;
}

Sequence inverse(const Sequence& R) {
  Sequence r(R.size());
  for (std::size_t n = 1; n <= R.size(); ++n) {
    r[n - 1] = R[n - 1];
    if (n / 2 >= 1) r[n - 1] -= R[n / 2 - 1];
  }
  return r;
}

SequencePair SequencePair::from_r(Sequence r) {
  if (r.empty()) throw std::invalid_argument("SequencePair: length must be >= 1");
  auto R = forward(r);
  return SequencePair(std::move(r), std::move(R));
}

SequencePair SequencePair::from_R(Sequence R) {
  if (R.empty()) throw std::invalid_argument("SequencePair: length must be >= 1");
  auto r = inverse(R);
  return SequencePair(std::move(r), std::move(R));
}

bool SequencePair::consistent() const {
  if (r_.size() != R_.size()) return false;
  for (std::size_t i = 1; i <= R_.size(); ++i) {
    Rational s = 0;
    for (std::size_t j = i; j >= 1; j /= 2) s += r_[j - 1];
    if (s != R_[i - 1]) return false;
  }
  return true;
}

Rational PeriodicRule::at(std::uint64_t n) const {
  if (n == 0) return 0;
  if (period.empty()) throw std::invalid_argument("PeriodicRule: empty period");
  if (n <= preperiod.size()) return preperiod[n - 1];
  return period[(n - 1 - preperiod.size()) % period.size()];
}

Sequence PeriodicRule::table(std::size_t M) const {
  Sequence out;
  out.reserve(M);
  for (std::size_t n = 1; n <= M; ++n) out.push_back(at(n));
  return out;
}

namespace {

struct DoubleRule {
  std::vector<double> pre;
  std::vector<double> per;

  explicit DoubleRule(const PeriodicRule& r) {
    if (r.period.empty()) throw std::invalid_argument("PeriodicRule: empty period");
    for (const auto& x : r.preperiod) pre.push_back(x.convert_to<double>());
    for (const auto& x : r.period) per.push_back(x.convert_to<double>());
  }

  double operator()(std::uint64_t n) const {
    if (n == 0) return 0.0;
    if (n <= pre.size()) return pre[n - 1];
    return per[(n - 1 - pre.size()) % per.size()];
  }
};

}  // namespace

SequenceRule PeriodicRule::rule() const { return DoubleRule(*this); }

SequenceRule PeriodicRule::forward_rule() const {
  return [r = DoubleRule(*this)](std::uint64_t i) {
    double s = 0.0;
    for (; i >= 1; i /= 2) s += r(i);
    return s;
  };
}

double weighted_sum_lhs(const SequenceRule& r, std::uint64_t terms) {
  series::CompensatedSum acc;
  for (std::uint64_t n = 1; n <= terms; ++n) {
    const double c = r(n);
    if (c != 0.0) acc.add(c * series::a_term(n));
  }
  return acc.value();
}

double weighted_sum_rhs(const SequenceRule& R, std::uint64_t terms) {
  series::CompensatedSum acc;
  for (std::uint64_t i = 1; i <= terms; ++i) {
    const double c = R(i);
    if (c != 0.0) {
      const double id = static_cast<double>(i);
      acc.add(c / ((2.0 * id) * (2.0 * id + 1.0)));
    }
  }
  return acc.value();
}

SymbolicConstant periodic_weighted_sum(const PeriodicRule& rule) {
  if (rule.period.empty()) throw std::invalid_argument("PeriodicRule: empty period");
  SymbolicConstant out;
  // A_n = 1/n - log((n+1)/n) for the preperiod entries.
  for (std::size_t n = 1; n <= rule.preperiod.size(); ++n) {
    const Rational& c = rule.preperiod[n - 1];
    if (c == 0) continue;
    const Rational nn(static_cast<long long>(n));
    out += (SymbolicConstant::rational(1 / nn) - SymbolicConstant::log((nn + 1) / nn)) * c;
  }
  // n = q m + (p + j), m >= 0, j = 1..q.
  const BigInt q = rule.period.size();
  const BigInt p = rule.preperiod.size();
  for (std::size_t j = 1; j <= rule.period.size(); ++j) {
    const Rational& c = rule.period[j - 1];
    if (c == 0) continue;
    out += a_progression_sum(q, p + j) * c;
  }
  return out;
}

std::optional<PeriodicRule> periodic_r_for_word(const Word& w, std::uint64_t limit) {
  if (w.base() != 2) throw std::invalid_argument("periodic_r_for_word: base-2 word required");
  if (w.length() > 40) throw std::invalid_argument("periodic_r_for_word: word too long");
  const std::uint64_t block = std::uint64_t{1} << w.length();
  if (limit < 4 * block) {
    throw std::invalid_argument("periodic_r_for_word: limit must be at least 4 * 2^|w| = " +
                                std::to_string(4 * block));
  }
  std::vector<std::int64_t> r(limit + 1, 0);
  for (std::uint64_t n = 1; n <= limit; ++n) {
    r[n] = static_cast<std::int64_t>(count_block(n, w)) - static_cast<std::int64_t>(count_block(n / 2, w));
  }

  const std::uint64_t max_period = 2 * block;
  for (std::uint64_t q = 1; q <= max_period; ++q) {
    // Smallest p with r_n = r_{n+q} for all p < n <= limit - q.
    std::uint64_t p = 0;
    for (std::uint64_t n = limit - q; n >= 1; --n) {
      if (r[n] != r[n + q]) {
        p = n;
        break;
      }
    }
    // The preperiod may use at most half the window, and the periodic part
    // must show two full periods.
    if (p > limit / 2 || limit - p < 2 * q) continue;
    PeriodicRule rule;
    for (std::uint64_t n = 1; n <= p; ++n) rule.preperiod.emplace_back(r[n]);
    for (std::uint64_t n = p + 1; n <= p + q; ++n) rule.period.emplace_back(r[n]);
    return rule;
  }
  return std::nullopt;
}

}  // namespace digitblocks::transform
