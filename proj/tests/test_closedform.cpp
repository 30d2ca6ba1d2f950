#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "digitblocks/closedform.hpp"
#include "digitblocks/series.hpp"
#include "digitblocks/special.hpp"

using namespace digitblocks;
using namespace digitblocks::closedform;
using SC = SymbolicConstant;

namespace {

Word bin(const char* d) { return Word::from_digits(d, 2); }
const Rational half(1, 2), quarter(1, 4);

std::vector<Word> binary_words(std::size_t max_len) {
  std::vector<Word> out;
  for (std::size_t len = 1; len <= max_len; ++len) {
    for (std::size_t code = 0; code < (std::size_t{1} << len); ++code) {
      std::vector<std::uint8_t> d(len);
      for (std::size_t i = 0; i < len; ++i) d[len - 1 - i] = (code >> i) & 1;
      out.emplace_back(2, d);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("degree-2 closed forms") {
  CHECK(block_series_deg2(bin("0")) == half * SC::log_pi() + half * SC::euler_gamma() - SC::log(2));
  CHECK(block_series_deg2(bin("1")) == -half * SC::log_pi() + half * SC::euler_gamma() + SC::log(2));
  CHECK(block_series_deg2(bin("11")) == -SC::log_gamma(Rational(3, 4)) - quarter * SC::digamma(Rational(3, 4)));
  // 0.0681842685153 from a 30-digit evaluation.
  CHECK(std::fabs(eval(block_series_deg2(bin("11"))) - 0.0681842685153226709) < 1e-14);
  CHECK(block_series_deg2(bin("1")) + block_series_deg2(bin("0")) == SC::euler_gamma());
  CHECK_THROWS_AS(block_series_deg2(Word::from_digits("1", 3)), std::invalid_argument);
}

TEST_CASE("degree-3 closed forms") {
  CHECK(block_series_deg3(bin("0")) ==
        half * SC::log_pi() + half * SC::euler_gamma() - half * SC::log(2) - SC::rational(half));
  CHECK(block_series_deg3(bin("1")) == -half * SC::log_pi() + half * SC::euler_gamma() + half * SC::log(2));
  const SC ten = SC::log_gamma(Rational(3, 4)) - SC::log_gamma(half) -
                 Rational(1, 8) * (SC::digamma(half) + SC::digamma(Rational(3, 4)));
  CHECK(block_series_deg3(bin("10")) == ten);
  const auto r = series::partial_sum(bin("10"), series::Kernel::deg3(), 100'000);
  CHECK(eval(ten) >= r.value);
  CHECK(eval(ten) <= r.value + r.tail_bound);
}

TEST_CASE("n(n+1) closed forms") {
  CHECK(block_series_nn1(bin("1")) == 2 * SC::log(2));
  CHECK(block_series_nn1(bin("0")) == SC::rational(2) - 2 * SC::log(2));
  CHECK(block_series_nn1(bin("10")) == half * SC::digamma(Rational(3, 4)) + half * SC::euler_gamma() + SC::log(2));
}

TEST_CASE("base-B closed forms") {
  const Word one3 = Word::from_digits("1", 3), zero3 = Word::from_digits("0", 3);
  CHECK(block_series_base(one3) ==
        SC::log_gamma(Rational(2, 3)) - SC::log_gamma(Rational(1, 3)) - Rational(1, 3) * SC::digamma(Rational(1, 3)));
  CHECK(block_series_base(zero3) == SC::log_gamma(Rational(1, 3)) + Rational(1, 3) * SC::euler_gamma() - SC::log(3));
  for (const auto& w : binary_words(4)) REQUIRE(block_series_base(w) == block_series_deg2(w));
}

TEST_CASE("shifted kernel closed forms") {
  for (const auto& w : binary_words(3)) REQUIRE(block_series_qk(w, 0) == block_series_deg2(w));
  for (const char* d : {"1", "0", "01", "110"}) {
    for (std::uint64_t k : {1ull, 2ull, 5ull}) {
      const auto w = bin(d);
      const double closed = eval(block_series_qk(w, k));
      const auto r = series::partial_sum(w, series::Kernel::qk(k), 1'000'000);
      CAPTURE(d);
      CAPTURE(k);
      REQUIRE(std::fabs(closed - r.value) <= r.tail_bound);
    }
  }
}

TEST_CASE("gamma and delta constants") {
  const auto [gp, gm] = gamma_pm();
  CHECK(gp == SC::euler_gamma());
  CHECK(gm == 2 * SC::log(2) - SC::log_pi());
  const auto [dp, dm] = delta_pm();
  CHECK(dp == SC::euler_gamma() - SC::rational(half));
  CHECK(dm == SC::rational(half) - SC::log_pi() + SC::log(2));
}

TEST_CASE("structural identities for all short words") {
  for (const auto& w : binary_words(3)) {
    CAPTURE(w.to_string());
    REQUIRE(block_series_deg2(w) - quarter * block_series_nn1(w) == block_series_deg3(w));
  }
}

TEST_CASE("closed forms agree with partial sums for all short words") {
  for (const auto& w : binary_words(3)) {
    CAPTURE(w.to_string());
    const auto d2 = series::partial_sum(w, series::Kernel::deg2(), 1'000'000);
    REQUIRE(std::fabs(eval(block_series_deg2(w)) - d2.value) <= d2.tail_bound);
    const auto d3 = series::partial_sum(w, series::Kernel::deg3(), 100'000);
    REQUIRE(std::fabs(eval(block_series_deg3(w)) - d3.value) <= d3.tail_bound);
    const auto nn = series::partial_sum(w, series::Kernel::nn1(), 1'000'000);
    REQUIRE(std::fabs(eval(block_series_nn1(w)) - nn.value) <= nn.tail_bound);
  }
}

TEST_CASE("long words") {
  // Exact denominators of order 2^60 must survive.
  const Word w = Word::from_digits(std::string(59, '0') + "1", 2);
  const SC c = block_series_deg2(w);
  CHECK_FALSE(c.is_zero());
  // Every n < 2^59 contains 0^59 1 once in its padded form except near powers
  // of two, so the series is close to the sum of the kernel restricted to such n.
  CHECK(std::isfinite(eval(c)));
}
