#include "digitblocks/json_io.hpp"

#include <stdexcept>

namespace digitblocks {

namespace {

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw std::invalid_argument("expected a rational string, got " + j.dump());
}

Json rationals_to_json(const transform::Sequence& s) {
  Json arr = Json::array();
  for (const auto& q : s) arr.push_back(rational_to_fraction(q));
  return arr;
}

transform::Sequence rationals_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of rationals");
  transform::Sequence out;
  for (const auto& x : j) out.push_back(rational_from_json(x));
  return out;
}

}  // namespace

Json to_json(const Word& w) { return {{"base", w.base()}, {"digits", w.digit_string()}}; }

Word word_from_json(const Json& j) {
  return Word::from_digits(j.at("digits").get<std::string>(), j.at("base").get<unsigned>());
}

Json to_json(const Atom& a) {
  switch (a.kind) {
    case AtomKind::One: return {{"atom", "one"}};
    case AtomKind::EulerGamma: return {{"atom", "euler_gamma"}};
    case AtomKind::LogPi: return {{"atom", "log_pi"}};
    case AtomKind::LogPrime: return {{"atom", "log_prime"}, {"p", a.prime.str()}};
    case AtomKind::LogGammaRat: return {{"atom", "log_gamma_rat"}, {"rho", rational_to_fraction(a.rho)}};
    case AtomKind::DigammaRat: return {{"atom", "digamma_rat"}, {"rho", rational_to_fraction(a.rho)}};
  }
  return {};
}

Atom atom_from_json(const Json& j) {
  const auto tag = j.at("atom").get<std::string>();
  if (tag == "one") return Atom::one();
  if (tag == "euler_gamma") return Atom::euler_gamma();
  if (tag == "log_pi") return Atom::log_pi();
  if (tag == "log_prime") {
    const auto& p = j.at("p");
    return Atom::log_prime(p.is_string() ? BigInt(p.get<std::string>()) : BigInt(p.get<long long>()));
  }
  if (tag == "log_gamma_rat") return Atom::log_gamma_rat(rational_from_json(j.at("rho")));
  if (tag == "digamma_rat") return Atom::digamma_rat(rational_from_json(j.at("rho")));
  throw std::invalid_argument("unknown atom tag '" + tag + "'");
}

Json to_json(const SymbolicConstant& c) {
  Json terms = Json::array();
  for (const auto& [a, q] : c.terms()) {
    Json t = to_json(a);
    t["coeff"] = rational_to_fraction(q);
    terms.push_back(std::move(t));
  }
  return {{"terms", std::move(terms)}};
}

SymbolicConstant symbolic_from_json(const Json& j) {
  std::vector<std::pair<Atom, Rational>> terms;
  for (const auto& t : j.at("terms")) terms.emplace_back(atom_from_json(t), rational_from_json(t.at("coeff")));
  return SymbolicConstant::from_terms(terms);
}

Json to_json(const series::Kernel& k) {
  Json j = {{"type", k.type_name()}};
  if (k.type == series::KernelType::QBase) j["base"] = k.base;
  if (k.type == series::KernelType::QK) j["k"] = k.k;
  return j;
}

series::Kernel kernel_from_json(const Json& j) {
  return series::parse_kernel(j.at("type").get<std::string>(), j.value("base", 2u),
                              j.value("k", std::uint64_t{0}));
}

Json to_json(const series::PartialSumResult& r) {
  return {{"value", r.value},
          {"terms", r.terms},
          {"tail_bound", r.tail_bound},
          {"word", to_json(r.word)},
          {"kernel", to_json(r.kernel)},
          {"mode", series::mode_name(r.mode)}};
}

Json to_json(const transform::PeriodicRule& r) {
  return {{"preperiod", rationals_to_json(r.preperiod)}, {"period", rationals_to_json(r.period)}};
}

transform::PeriodicRule periodic_rule_from_json(const Json& j) {
  transform::PeriodicRule r;
  if (j.contains("preperiod")) r.preperiod = rationals_from_json(j.at("preperiod"));
  r.period = rationals_from_json(j.at("period"));
  if (r.period.empty()) throw std::invalid_argument("period must be non-empty");
  return r;
}

Json sequence_to_json(const transform::Sequence& s) { return {{"values", rationals_to_json(s)}}; }

transform::Sequence sequence_from_json(const Json& j) { return rationals_from_json(j.at("values")); }

}  // namespace digitblocks
