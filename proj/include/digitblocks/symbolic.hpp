#pragma once

// Exact rational-linear combinations of transcendental constants.
//
// A SymbolicConstant is a map Atom -> nonzero rational coefficient. It is
// always canonical: log Gamma and Psi at 1/2 and at arguments outside (0, 1)
// are rewritten, and logarithms of rationals are split into log p for primes
// p. Two constants are equal iff their maps are identical.

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace digitblocks {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "p/q", or "p" when the denominator is 1.
std::string rational_to_string(const Rational& q);
/// "p/q" with an explicit denominator, e.g. "-1/1".
std::string rational_to_fraction(const Rational& q);
/// Accepts "p", "p/q", "-p/q". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

// Declaration order is the render order.
enum class AtomKind { EulerGamma, LogPrime, LogPi, LogGammaRat, DigammaRat, One };

struct Atom {
  AtomKind kind = AtomKind::One;
  BigInt prime = 0;   // LogPrime only
  Rational rho = 0;   // LogGammaRat / DigammaRat only

  static Atom one() { return {AtomKind::One, 0, 0}; }
  static Atom euler_gamma() { return {AtomKind::EulerGamma, 0, 0}; }
  static Atom log_pi() { return {AtomKind::LogPi, 0, 0}; }
  static Atom log_prime(BigInt p) { return {AtomKind::LogPrime, std::move(p), 0}; }
  static Atom log_gamma_rat(Rational r) { return {AtomKind::LogGammaRat, 0, std::move(r)}; }
  static Atom digamma_rat(Rational r) { return {AtomKind::DigammaRat, 0, std::move(r)}; }

  friend bool operator==(const Atom& a, const Atom& b) {
    return a.kind == b.kind && a.prime == b.prime && a.rho == b.rho;
  }
  friend bool operator<(const Atom& a, const Atom& b);
};

/// Numeric value of a single atom.
double atom_value(const Atom& a);
/// "gamma", "log 2", "log pi", "log Gamma(3/4)", "psi(3/4)", "1".
std::string atom_name(const Atom& a);

class SymbolicConstant {
public:
  using TermMap = std::map<Atom, Rational>;

  SymbolicConstant() = default;

  static SymbolicConstant zero() { return {}; }
  static SymbolicConstant rational(const Rational& q);
  static SymbolicConstant euler_gamma();
  static SymbolicConstant log_pi();
  /// log q for rational q > 0, as a combination of log p atoms.
  static SymbolicConstant log(const Rational& q);
  /// log Gamma(rho) for rational rho > 0, reduced to an argument in (0, 1].
  static SymbolicConstant log_gamma(const Rational& rho);
  /// Psi(rho) for rational rho > 0, reduced to an argument in (0, 1].
  static SymbolicConstant digamma(const Rational& rho);

  /// Builds a canonical constant from arbitrary (possibly rewritable,
  /// repeated or zero-coefficient) terms.
  static SymbolicConstant from_terms(const std::vector<std::pair<Atom, Rational>>& terms);

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Rational coefficient(const Atom& a) const;

  SymbolicConstant& operator+=(const SymbolicConstant& other);
  SymbolicConstant& operator-=(const SymbolicConstant& other);
  SymbolicConstant& operator*=(const Rational& q);

  friend SymbolicConstant operator+(SymbolicConstant a, const SymbolicConstant& b) { return a += b; }
  friend SymbolicConstant operator-(SymbolicConstant a, const SymbolicConstant& b) { return a -= b; }
  friend SymbolicConstant operator*(SymbolicConstant a, const Rational& q) { return a *= q; }
  friend SymbolicConstant operator*(const Rational& q, SymbolicConstant a) { return a *= q; }
  friend SymbolicConstant operator-(SymbolicConstant a) { return a *= Rational(-1); }
  friend bool operator==(const SymbolicConstant&, const SymbolicConstant&) = default;

private:
  void add_term(const Atom& a, const Rational& c);
  void add_raw(const Atom& a, const Rational& c);

  TermMap terms_;
};

SymbolicConstant add(const SymbolicConstant& a, const SymbolicConstant& b);
SymbolicConstant scale(const SymbolicConstant& a, const Rational& q);

/// Re-runs canonicalization on the term map; the identity on canonical input.
SymbolicConstant canonicalize(const SymbolicConstant& c);

/// sum of coefficient * atom value.
double eval(const SymbolicConstant& c);

/// e.g. "1/2·gamma + log 2 - 1/2·log pi"; "0" for the zero constant.
std::string render(const SymbolicConstant& c);

/// Symbolic sum of A_m = 1/m - log((m+1)/m) over the progression m = a n + b:
///   b = 0: n >= 1, log Gamma(1/a) + gamma/a - log a;
///   b > 0: n >= 0, log Gamma((b+1)/a) - log Gamma(b/a) - Psi(b/a)/a.
SymbolicConstant a_progression_sum(const BigInt& a, const BigInt& b);

}  // namespace digitblocks
