#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"

#include "digitblocks/closedform.hpp"
#include "digitblocks/constants.hpp"
#include "digitblocks/transform.hpp"

using namespace digitblocks;
using namespace digitblocks::transform;
using SC = SymbolicConstant;

namespace {

Word bin(const char* d) { return Word::from_digits(d, 2); }

// R_i as the explicit finite sum over i, i/2, i/4, ...
Sequence forward_oracle(const Sequence& r) {
  Sequence R(r.size());
  for (std::size_t i = 1; i <= r.size(); ++i) {
    Rational s = 0;
    for (std::size_t j = i; j > 0; j /= 2) s += r[j - 1];
    R[i - 1] = s;
  }
  return R;
}

Sequence random_sequence(std::mt19937_64& rng, std::size_t len) {
  Sequence s(len);
  for (auto& x : s) x = Rational(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 6));
  return s;
}

}  // namespace

TEST_CASE("forward and inverse examples") {
  const Sequence ones(5, Rational(1));
  CHECK(forward(ones)[4] == 3);
  Sequence alt;
  for (int n = 1; n <= 6; ++n) alt.push_back(n % 2 ? 1 : -1);
  CHECK(forward(alt)[5] == 1);
  CHECK(forward({Rational(7, 3)}) == Sequence{Rational(7, 3)});
  const Sequence r{3, -1, 7, 0, 2};
  CHECK(inverse(forward(r)) == r);

  Sequence R;
  for (std::uint64_t i = 1; i <= 64; ++i) R.emplace_back(count_block(i, bin("1")));
  const auto lastbit = inverse(R);
  for (std::uint64_t n = 1; n <= 64; ++n) REQUIRE(lastbit[n - 1] == Rational(n % 2));

  Sequence diff;
  for (std::uint64_t i = 1; i <= 256; ++i)
    diff.emplace_back(static_cast<long>(count_block(i, bin("1"))) - static_cast<long>(count_block(i, bin("0"))));
  const auto alt_back = inverse(diff);
  for (std::uint64_t n = 1; n <= 256; ++n) REQUIRE(alt_back[n - 1] == Rational(n % 2 ? 1 : -1));

  CHECK(forward({}).empty());
}

TEST_CASE("round trips on random sequences") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 10'000; ++t) {
    const std::size_t len = 1 + rng() % (t < 200 ? 1000 : 40);
    const auto r = random_sequence(rng, len);
    const auto R = forward(r);
    REQUIRE(inverse(R) == r);
    REQUIRE(forward(inverse(r)) == r);
    if (t < 200) REQUIRE(R == forward_oracle(r));
  }
}

TEST_CASE("sequence pairs") {
  const auto p = SequencePair::from_r({1, 2, 3});
  CHECK(p.R() == Sequence{1, 3, 4});
  CHECK(p.consistent());
  CHECK(SequencePair::from_R({1, 3, 4}).r() == Sequence{1, 2, 3});
  CHECK_THROWS_AS(SequencePair::from_r({}), std::invalid_argument);
}

TEST_CASE("periodic rules") {
  const PeriodicRule rule{{Rational(5)}, {Rational(1), Rational(-1)}};
  CHECK(rule.at(1) == 5);
  CHECK(rule.at(2) == 1);
  CHECK(rule.at(3) == -1);
  CHECK(rule.at(1001) == -1);
  CHECK(rule.at(0) == 0);  // r_0 = 0 by convention
  const auto table = rule.table(300);
  const auto R = forward(table);
  const auto Rf = rule.forward_rule();
  const auto rf = rule.rule();
  for (std::uint64_t i = 1; i <= 300; ++i) {
    REQUIRE(Rf(i) == R[i - 1].convert_to<double>());
    REQUIRE(rf(i) == table[i - 1].convert_to<double>());
  }
  CHECK_THROWS_AS(PeriodicRule({}, {}).at(1), std::invalid_argument);
}

TEST_CASE("weighted sums") {
  const PeriodicRule ones{{}, {Rational(1)}};
  CHECK(std::fabs(weighted_sum_lhs(ones.rule(), 10'000'000) - constants::kEulerGamma) <= 2e-7);
  const PeriodicRule alt{{}, {Rational(1), Rational(-1)}};
  const double log4pi = 2 * constants::kLog2 - constants::kLogPi;
  CHECK(std::fabs(weighted_sum_lhs(alt.rule(), 1'000'000) - log4pi) <= 1e-4);
  CHECK(std::fabs(weighted_sum_rhs(alt.forward_rule(), 1'000'000) - log4pi) <= 1e-4);
  const PeriodicRule zero{{}, {Rational(0)}};
  CHECK(weighted_sum_lhs(zero.rule(), 1000) == 0.0);
  CHECK(weighted_sum_rhs(zero.forward_rule(), 1000) == 0.0);

  CHECK(periodic_weighted_sum(ones) == SC::euler_gamma());
  CHECK(periodic_weighted_sum(alt) == 2 * SC::log(2) - SC::log_pi());
  CHECK(periodic_weighted_sum(zero).is_zero());
}

TEST_CASE("the weighted-sum gap need not shrink at every decade") {
  // The leading error term of lhs(N) - rhs(N) is c(N)/N where c depends on
  // the binary digits of N; it can change sign between decades. This rule
  // has a sign change between 10^3 and 10^4, so the gap at 10^4 is tiny and
  // grows again at 10^5 while both sides still converge to the same limit.
  const PeriodicRule rule{{}, {-1, -2, 0, 0, 2, 0, 2}};
  const auto r = rule.rule();
  const auto R = rule.forward_rule();
  auto gap = [&](std::uint64_t N) { return weighted_sum_lhs(r, N) - weighted_sum_rhs(R, N); };
  CHECK(gap(1000) * 1000 < -0.2);
  CHECK(std::fabs(gap(10'000)) * 10'000 < 0.01);
  CHECK(gap(100'000) * 100'000 > 0.1);
  CHECK(std::fabs(gap(1'000'000)) < 1e-6);
  CHECK(std::fabs(weighted_sum_lhs(r, 1'000'000) - eval(periodic_weighted_sum(rule))) < 1e-6);
}

TEST_CASE("periodic detection") {
  const auto one = periodic_r_for_word(bin("1"), 64);
  REQUIRE(one);
  CHECK(one->preperiod.empty());
  CHECK(one->period == Sequence{1, 0});
  // r_1 = 0 then 1 - (n mod 2); the minimal description starts the period at n = 1.
  const auto zero = periodic_r_for_word(bin("0"), 64);
  REQUIRE(zero);
  CHECK(zero->preperiod.empty());
  CHECK(zero->period == Sequence{0, 1});
  const auto eleven = periodic_r_for_word(bin("11"), 256);
  REQUIRE(eleven);
  CHECK(eleven->period.size() <= 8);

  CHECK_THROWS_AS(periodic_r_for_word(bin("1"), 7), std::invalid_argument);
  CHECK_THROWS_AS(periodic_r_for_word(Word::from_digits("1", 3), 64), std::invalid_argument);

  // For all words of length <= 5 the detected rule reproduces r on a longer
  // window and its weighted sum equals the degree-2 closed form.
  for (std::size_t len = 1; len <= 5; ++len) {
    for (std::size_t code = 0; code < (std::size_t{1} << len); ++code) {
      std::vector<std::uint8_t> d(len);
      for (std::size_t i = 0; i < len; ++i) d[len - 1 - i] = (code >> i) & 1;
      const Word w(2, d);
      CAPTURE(w.to_string());
      const auto rule = periodic_r_for_word(w, std::uint64_t{64} << len);
      REQUIRE(rule);
      REQUIRE(rule->period.size() <= (std::size_t{1} << (len + 1)));
      for (std::uint64_t n = 1; n <= (std::uint64_t{1} << (len + 8)); ++n) {
        const long expected = static_cast<long>(count_block(n, w)) - static_cast<long>(count_block(n / 2, w));
        REQUIRE(rule->at(n) == expected);
      }
      REQUIRE(periodic_weighted_sum(*rule) == closedform::block_series_deg2(w));
    }
  }
}
