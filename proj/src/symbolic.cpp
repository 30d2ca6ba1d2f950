#include "digitblocks/symbolic.hpp"

#include <cmath>
#include <stdexcept>

#include "digitblocks/constants.hpp"
#include "digitblocks/special.hpp"

namespace digitblocks {

namespace {

void require_positive(const Rational& q, const char* what) {
  if (q <= 0) throw std::domain_error(std::string(what) + ": argument must be positive");
}

// Prime factorization by trial division. Inputs here are small (bases, word
// moduli and their neighbours).
std::vector<std::pair<BigInt, unsigned>> factorize(BigInt n) {
  std::vector<std::pair<BigInt, unsigned>> out;
  for (BigInt p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

// rho = whole + frac with frac in (0, 1].
std::pair<BigInt, Rational> split_unit_interval(const Rational& rho) {
  const BigInt num = boost::multiprecision::numerator(rho);
  const BigInt den = boost::multiprecision::denominator(rho);
  BigInt whole = num / den;
  Rational frac = rho - Rational(whole);
  if (frac == 0) {
    whole -= 1;
    frac = 1;
  }
  return {whole, frac};
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace

std::string rational_to_string(const Rational& q) {
  if (boost::multiprecision::denominator(q) == 1) return boost::multiprecision::numerator(q).str();
  return q.str();
}

std::string rational_to_fraction(const Rational& q) {
  return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("invalid rational '" + std::string(text) + "'");
    for (std::size_t j = i; j < s.size(); ++j) {
      if (s[j] < '0' || s[j] > '9') throw std::invalid_argument("invalid rational '" + std::string(text) + "'");
    }
    return BigInt(std::string(s[0] == '+' ? s.substr(1) : s));
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  const BigInt num = parse_int(text.substr(0, slash));
  const auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
    throw std::invalid_argument("invalid rational '" + std::string(text) + "'");
  }
  const BigInt den = parse_int(den_text);
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

bool operator<(const Atom& a, const Atom& b) {
  if (a.kind != b.kind) return a.kind < b.kind;
  if (a.prime != b.prime) return a.prime < b.prime;
  return a.rho < b.rho;
}

double atom_value(const Atom& a) {
  using namespace constants;
  switch (a.kind) {
    case AtomKind::One: return 1.0;
    case AtomKind::EulerGamma: return kEulerGamma;
    case AtomKind::LogPi: return kLogPi;
    case AtomKind::LogPrime: return a.prime == 2 ? kLog2 : std::log(a.prime.convert_to<double>());
    case AtomKind::LogGammaRat: return special::log_gamma(to_double(a.rho));
    case AtomKind::DigammaRat: return special::digamma(to_double(a.rho));
  }
  return 0.0;
}

std::string atom_name(const Atom& a) {
  switch (a.kind) {
    case AtomKind::One: return "1";
    case AtomKind::EulerGamma: return "gamma";
    case AtomKind::LogPi: return "log pi";
    case AtomKind::LogPrime: return "log " + a.prime.str();
    case AtomKind::LogGammaRat: return "log Gamma(" + rational_to_string(a.rho) + ")";
    case AtomKind::DigammaRat: return "psi(" + rational_to_string(a.rho) + ")";
  }
  return "?";
}

SymbolicConstant SymbolicConstant::rational(const Rational& q) {
  SymbolicConstant c;
  c.add_term(Atom::one(), q);
  return c;
}

SymbolicConstant SymbolicConstant::euler_gamma() {
  SymbolicConstant c;
  c.add_term(Atom::euler_gamma(), 1);
  return c;
}

SymbolicConstant SymbolicConstant::log_pi() {
  SymbolicConstant c;
  c.add_term(Atom::log_pi(), 1);
  return c;
}

SymbolicConstant SymbolicConstant::log(const Rational& q) {
  require_positive(q, "log");
  SymbolicConstant c;
  for (const auto& [p, e] : factorize(boost::multiprecision::numerator(q))) {
    c.add_term(Atom::log_prime(p), Rational(e));
  }
  for (const auto& [p, e] : factorize(boost::multiprecision::denominator(q))) {
    c.add_term(Atom::log_prime(p), Rational(-static_cast<int>(e)));
  }
  return c;
}

SymbolicConstant SymbolicConstant::log_gamma(const Rational& rho) {
  require_positive(rho, "log_gamma");
  const auto [whole, frac] = split_unit_interval(rho);
  SymbolicConstant c;
  // Gamma(1/2) = sqrt(pi), Gamma(1) = 1.
  if (frac == Rational(1, 2)) c.add_term(Atom::log_pi(), Rational(1, 2));
  else if (frac != 1) c.add_term(Atom::log_gamma_rat(frac), 1);
  // log Gamma(f + m) = log Gamma(f) + sum_{j<m} log(f + j)
  for (BigInt j = 0; j < whole; ++j) c += log(frac + Rational(j));
  return c;
}

SymbolicConstant SymbolicConstant::digamma(const Rational& rho) {
  require_positive(rho, "digamma");
  const auto [whole, frac] = split_unit_interval(rho);
  SymbolicConstant c;
  if (frac == 1) {
    c.add_term(Atom::euler_gamma(), -1);
  } else if (frac == Rational(1, 2)) {
    c.add_term(Atom::euler_gamma(), -1);
    c.add_term(Atom::log_prime(2), -2);
  } else {
    c.add_term(Atom::digamma_rat(frac), 1);
  }
  // Psi(f + m) = Psi(f) + sum_{j<m} 1/(f + j)
  Rational shift = 0;
  for (BigInt j = 0; j < whole; ++j) shift += 1 / (frac + Rational(j));
  c.add_term(Atom::one(), shift);
  return c;
}

SymbolicConstant SymbolicConstant::from_terms(const std::vector<std::pair<Atom, Rational>>& terms) {
  SymbolicConstant c;
  for (const auto& [a, q] : terms) c.add_raw(a, q);
  return c;
}

Rational SymbolicConstant::coefficient(const Atom& a) const {
  const auto it = terms_.find(a);
  return it == terms_.end() ? Rational(0) : it->second;
}

SymbolicConstant& SymbolicConstant::operator+=(const SymbolicConstant& other) {
  for (const auto& [a, q] : other.terms_) add_term(a, q);
  return *this;
}

SymbolicConstant& SymbolicConstant::operator-=(const SymbolicConstant& other) {
  for (const auto& [a, q] : other.terms_) add_term(a, -q);
  return *this;
}

SymbolicConstant& SymbolicConstant::operator*=(const Rational& q) {
  if (q == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [a, c] : terms_) c *= q;
  return *this;
}

void SymbolicConstant::add_term(const Atom& a, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(a, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void SymbolicConstant::add_raw(const Atom& a, const Rational& c) {
  if (c == 0) return;
  switch (a.kind) {
    case AtomKind::One:
    case AtomKind::EulerGamma:
    case AtomKind::LogPi:
      add_term(a, c);
      return;
    case AtomKind::LogPrime:
      if (a.prime < 1) throw std::domain_error("log of a non-positive integer");
      *this += log(Rational(a.prime)) * c;
      return;
    case AtomKind::LogGammaRat:
      *this += log_gamma(a.rho) * c;
      return;
    case AtomKind::DigammaRat:
      *this += digamma(a.rho) * c;
      return;
  }
}

SymbolicConstant add(const SymbolicConstant& a, const SymbolicConstant& b) { return a + b; }
SymbolicConstant scale(const SymbolicConstant& a, const Rational& q) { return a * q; }

SymbolicConstant canonicalize(const SymbolicConstant& c) {
  return SymbolicConstant::from_terms({c.terms().begin(), c.terms().end()});
}

double eval(const SymbolicConstant& c) {
  // Neumaier summation over the terms.
  double sum = 0.0;
  double comp = 0.0;
  for (const auto& [a, q] : c.terms()) {
    const double x = to_double(q) * atom_value(a);
    const double t = sum + x;
    comp += std::fabs(sum) >= std::fabs(x) ? (sum - t) + x : (x - t) + sum;
    sum = t;
  }
  return sum + comp;
}

std::string render(const SymbolicConstant& c) {
  if (c.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [a, q] : c.terms()) {
    const bool negative = q < 0;
    const Rational mag = negative ? Rational(-q) : q;
    std::string term;
    if (a.kind == AtomKind::One) term = rational_to_string(mag);
    else if (mag == 1) term = atom_name(a);
    else term = rational_to_string(mag) + "·" + atom_name(a);
    if (first) out += negative ? "-" + term : term;
    else out += (negative ? " - " : " + ") + term;
    first = false;
  }
  return out;
}

SymbolicConstant a_progression_sum(const BigInt& a, const BigInt& b) {
  using SC = SymbolicConstant;
  if (a <= 0 || b < 0) throw std::invalid_argument("a_progression_sum: need a > 0, b >= 0");
  if (b == 0) {
    return SC::log_gamma(Rational(1, a)) + SC::euler_gamma() * Rational(1, a) - SC::log(Rational(a));
  }
  return SC::log_gamma(Rational(b + 1, a)) - SC::log_gamma(Rational(b, a)) -
         SC::digamma(Rational(b, a)) * Rational(1, a);
}

}  // namespace digitblocks
