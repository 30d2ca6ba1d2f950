#include "digitblocks/closedform.hpp"

#include <stdexcept>

namespace digitblocks::closedform {

namespace {

using SC = SymbolicConstant;

void require_binary(const Word& w) {
  if (w.base() != 2) throw std::invalid_argument("expected a base-2 word, got " + w.to_string());
}

Rational frac(const BigInt& num, const BigInt& den) { return Rational(num, den); }

}  // namespace

SymbolicConstant block_series_deg2(const Word& w) {
  require_binary(w);
  return a_progression_sum(w.modulus(), w.value());
}

SymbolicConstant block_series_deg3(const Word& w) {
  require_binary(w);
  const BigInt a = w.modulus();
  const BigInt v = w.value();
  const Rational half_inv_a = frac(1, 2 * a);
  if (v == 0) {
    return SC::log_gamma(frac(1, a)) + SC::euler_gamma() * half_inv_a -
           SC::log(Rational(a)) - SC::digamma(frac(1, a)) * half_inv_a - SC::rational(Rational(1, 2));
  }
  return SC::log_gamma(frac(v + 1, a)) - SC::log_gamma(frac(v, a)) -
         (SC::digamma(frac(v, a)) + SC::digamma(frac(v + 1, a))) * half_inv_a;
}

SymbolicConstant block_series_nn1(const Word& w) {
  require_binary(w);
  const BigInt a = w.modulus();
  const BigInt v = w.value();
  const Rational scale = frac(2, a);  // 1/2^{|w|-1}
  if (v == 0) {
    return (SC::digamma(frac(1, a)) + SC::euler_gamma() + SC::rational(Rational(a))) * scale;
  }
  return (SC::digamma(frac(v + 1, a)) - SC::digamma(frac(v, a))) * scale;
}

SymbolicConstant block_series_base(const Word& w) {
  return a_progression_sum(w.modulus(), w.value());
}

SymbolicConstant block_series_qk(const Word& w, std::uint64_t k) {
  require_binary(w);
  const BigInt a = w.modulus();
  const BigInt b = w.value();
  SC out = a_progression_sum(a, b);
  if (k == 0) return out;
  const BigInt kk = k;
  if (b == 0) {
    out += (SC::digamma(Rational(1)) - SC::digamma(1 + frac(kk, a))) * frac(1, a);
  } else {
    out += (SC::digamma(frac(b, a)) - SC::digamma(frac(b + kk, a))) * frac(1, a);
  }
  return out;
}

std::pair<SymbolicConstant, SymbolicConstant> gamma_pm() {
  const SC one = block_series_deg2(Word::single(1, 2));
  const SC zero = block_series_deg2(Word::single(0, 2));
  return {one + zero, one - zero};
}

std::pair<SymbolicConstant, SymbolicConstant> delta_pm() {
  const SC one = block_series_deg3(Word::single(1, 2));
  const SC zero = block_series_deg3(Word::single(0, 2));
  return {one + zero, one - zero};
}

}  // namespace digitblocks::closedform
