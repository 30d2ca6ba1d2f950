#include "digitblocks/verify.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "digitblocks/closedform.hpp"
#include "digitblocks/constants.hpp"
#include "digitblocks/format.hpp"
#include "digitblocks/series.hpp"
#include "digitblocks/special.hpp"
#include "digitblocks/transform.hpp"

namespace digitblocks::verify {

namespace {

using SC = SymbolicConstant;
using series::Kernel;

std::string num(double x) { return format_number(x, 12); }

// All words of length 1..max_len over the given base, shortest first.
std::vector<Word> all_words(unsigned base, std::size_t max_len) {
  std::vector<Word> out;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::uint8_t> ds(len, 0);
    while (true) {
      out.emplace_back(base, ds);
      std::size_t i = len;
      while (i > 0 && ++ds[i - 1] == base) ds[--i] = 0;
      if (i == 0) break;
    }
  }
  return out;
}

Word bin(const char* digits) { return Word::from_digits(digits, 2); }

// Sliding-window count over an explicit digit string, zero-padded by
// |w|-1 when w has a leading zero but is not all zeros.
std::uint64_t naive_count(const std::vector<std::uint8_t>& expansion, const Word& w) {
  if (expansion.empty()) return 0;
  std::vector<std::uint8_t> text;
  if (w.has_leading_zero() && !w.is_zero_block()) text.assign(w.length() - 1, 0);
  text.insert(text.end(), expansion.begin(), expansion.end());
  const auto& pat = w.digits();
  std::uint64_t count = 0;
  for (std::size_t i = 0; i + pat.size() <= text.size(); ++i) {
    count += std::equal(pat.begin(), pat.end(), text.begin() + static_cast<std::ptrdiff_t>(i));
  }
  return count;
}

// Closed-form value of sum N_{w,2}(n)/(2n(2n+1)) straight from log Gamma and
// Psi, bypassing the symbolic layer.
double deg2_direct(const Word& w) {
  const double a = std::ldexp(1.0, static_cast<int>(w.length()));
  const double v = w.value().convert_to<double>();
  if (v == 0.0) {
    return special::log_gamma(1.0 / a) + constants::kEulerGamma / a - w.length() * constants::kLog2;
  }
  return special::log_gamma((v + 1.0) / a) - special::log_gamma(v / a) - special::digamma(v / a) / a;
}

const std::vector<Word>& short_binary_words() {
  static const std::vector<Word> words = {bin("0"), bin("1"), bin("00"), bin("01"),
                                          bin("10"), bin("11"), bin("101")};
  return words;
}

void enclosure(Checker& ck, const std::string& id, const series::PartialSumResult& ps, double closed,
               double tail_cap) {
  ck.at_most(id + ".tail_bound", ps.tail_bound, tail_cap);
  ck.close(id + ".enclosure", ps.value, closed, ps.tail_bound);
}

// ---- criteria -------------------------------------------------------------

void c01_counting_oracle(Checker& ck) {
  for (unsigned base : {2u, 3u, 10u}) {
    const auto words = all_words(base, 3);
    std::uint64_t mismatches = 0;
    std::string first;
    for (std::uint64_t n = 0; n < (1u << 16); ++n) {
      const auto expansion = expand(n, base);
      for (const auto& w : words) {
        if (count_block(n, w) != naive_count(expansion, w)) {
          if (mismatches++ == 0) first = "n=" + std::to_string(n) + " w=" + w.to_string();
        }
      }
    }
    ck.exact("base" + std::to_string(base), mismatches == 0,
             std::to_string(mismatches) + " mismatches" + (first.empty() ? "" : " (first " + first + ")"),
             "0 mismatches over " + std::to_string(words.size()) + " words, n < 65536");
  }
}

void c02_digit_sum_series(Checker& ck) {
  const auto ps = series::partial_sum(bin("1"), Kernel::deg2(), ck.options().terms);
  const SC target = SC::euler_gamma() * Rational(1, 2) + SC::log(2) - SC::log_pi() * Rational(1, 2);
  ck.close("digit_sum_series", ps.value, eval(target), 1e-5);
}

void c03_deg2_vs_partial_sums(Checker& ck) {
  for (const auto& w : short_binary_words()) {
    const auto ps = series::partial_sum(w, Kernel::deg2(), ck.options().terms);
    enclosure(ck, "deg2.w=" + w.digit_string(), ps, eval(closedform::block_series_deg2(w)), 1e-4);
  }
}

void c04_deg3_vs_partial_sums(Checker& ck) {
  const std::uint64_t terms = std::max<std::uint64_t>(1, ck.options().terms / 10);
  for (const auto& w : short_binary_words()) {
    const auto ps = series::partial_sum(w, Kernel::deg3(), terms);
    enclosure(ck, "deg3.w=" + w.digit_string(), ps, eval(closedform::block_series_deg3(w)), 1e-7);
  }
  const auto [plus, minus] = closedform::delta_pm();
  ck.symbolic("delta_plus", plus, SC::euler_gamma() - SC::rational(Rational(1, 2)));
  ck.symbolic("delta_minus", minus, SC::rational(Rational(1, 2)) - SC::log_pi() + SC::log(2));
}

void c05_symbolic_identities(Checker& ck) {
  const SC one = closedform::block_series_deg2(bin("1"));
  const SC zero = closedform::block_series_deg2(bin("0"));
  ck.symbolic("deg2_sum_is_gamma", one + zero, SC::euler_gamma());
  ck.symbolic("deg2_difference_is_log_4_over_pi", one - zero, SC::log(4) - SC::log_pi());
  const auto [gp, gm] = closedform::gamma_pm();
  ck.symbolic("gamma_plus", gp, SC::euler_gamma());
  ck.symbolic("gamma_minus", gm, SC::log(2) * Rational(2) - SC::log_pi());
  for (const auto& w : all_words(2, 3)) {
    ck.symbolic("deg2_minus_quarter_nn1.w=" + w.digit_string(),
                closedform::block_series_deg2(w) - closedform::block_series_nn1(w) * Rational(1, 4),
                closedform::block_series_deg3(w));
  }
}

void c06_digit_sum_over_nn1(Checker& ck) {
  const auto ps = series::partial_sum(bin("1"), Kernel::nn1(), ck.options().terms);
  ck.close("partial_sum_vs_2log2", ps.value, 2.0 * constants::kLog2, 1e-4);
  const SC nn1 = closedform::block_series_nn1(bin("1"));
  ck.relative("exp_sum_is_4", std::exp(eval(nn1)), 4.0, 1e-12);
  ck.symbolic("nn1_w=1_is_2log2", nn1, SC::log(4));
}

void c07_gauss_digamma(Checker& ck) {
  for (std::int64_t q = 2; q <= 12; ++q) {
    for (std::int64_t p = 1; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      const double via_gauss = special::gauss_digamma(p, q).value;
      const double direct = special::digamma(static_cast<double>(p) / static_cast<double>(q));
      ck.relative("psi(" + std::to_string(p) + "/" + (q < 10 ? "0" : "") + std::to_string(q) + ")",
                  via_gauss, direct, 1e-12);
    }
  }
}

void c08_base3(Checker& ck) {
  for (const char* digits : {"0", "1", "2", "12"}) {
    const Word w = Word::from_digits(digits, 3);
    const auto ps = series::partial_sum(w, Kernel::qbase(3), ck.options().terms);
    enclosure(ck, "qbase3.w=" + w.digit_string(), ps, eval(closedform::block_series_base(w)), 1e-4);
  }
}

void c09_qk(Checker& ck) {
  for (const char* digits : {"0", "1"}) {
    for (std::uint64_t k : {1u, 2u}) {
      const Word w = bin(digits);
      const auto ps = series::partial_sum(w, Kernel::qk(k), ck.options().terms);
      const double closed = eval(closedform::block_series_qk(w, k));
      const std::string id = "qk.k=" + std::to_string(k) + ".w=" + w.digit_string();
      ck.close(id + ".agreement", ps.value, closed, 1e-4);
      ck.close(id + ".within_tail_bound", ps.value, closed, ps.tail_bound);
    }
  }
}

transform::Sequence random_sequence(std::mt19937_64& rng, std::size_t len) {
  std::uniform_int_distribution<int> den(1, 6);
  transform::Sequence s;
  s.reserve(len);
  for (std::size_t i = 0; i < len; ++i) {
    const int d = den(rng);
    std::uniform_int_distribution<int> numer(-5 * d, 5 * d);
    s.emplace_back(numer(rng), d);
  }
  return s;
}

void c10_dyadic_transform(Checker& ck) {
  std::mt19937_64 rng(ck.options().seed);
  std::uniform_int_distribution<std::size_t> length(1, 64);
  std::size_t bad_fi = 0, bad_if = 0;
  constexpr int kSequences = 10'000;
  for (int t = 0; t < kSequences; ++t) {
    const auto s = random_sequence(rng, length(rng));
    bad_fi += transform::inverse(transform::forward(s)) != s;
    bad_if += transform::forward(transform::inverse(s)) != s;
  }
  ck.exact("inverse_after_forward", bad_fi == 0, std::to_string(bad_fi) + " failures",
           "0 of " + std::to_string(kSequences));
  ck.exact("forward_after_inverse", bad_if == 0, std::to_string(bad_if) + " failures",
           "0 of " + std::to_string(kSequences));

  constexpr std::size_t M = std::size_t{1} << 14;
  const Word one = bin("1"), zero = bin("0");
  const auto R_const = transform::forward(transform::Sequence(M, Rational(1)));
  transform::Sequence alt(M);
  for (std::size_t n = 1; n <= M; ++n) alt[n - 1] = (n % 2 == 1) ? 1 : -1;
  const auto R_alt = transform::forward(alt);
  std::size_t bad_const = 0, bad_alt = 0;
  for (std::uint64_t i = 1; i <= M; ++i) {
    const auto n1 = static_cast<long long>(count_block(i, one));
    const auto n0 = static_cast<long long>(count_block(i, zero));
    const auto floor_log = static_cast<long long>(std::bit_width(2 * i)) - 1;  // floor(log2(2i))
    bad_const += R_const[i - 1] != floor_log || floor_log != n1 + n0;
    bad_alt += R_alt[i - 1] != n1 - n0;
  }
  ck.exact("constant_r.R_i=floor_log2(2i)=N1+N0", bad_const == 0, std::to_string(bad_const) + " mismatches",
           "0 for i <= 2^14");
  ck.exact("alternating_r.R_i=N1-N0", bad_alt == 0, std::to_string(bad_alt) + " mismatches", "0 for i <= 2^14");
}

void c11_weighted_sums(Checker& ck) {
  const std::uint64_t N = ck.options().terms;
  transform::PeriodicRule ones{{}, {Rational(1)}};
  ck.close("constant_r.lhs_vs_gamma", transform::weighted_sum_lhs(ones.rule(), 10 * N),
           constants::kEulerGamma, 3e-7);

  transform::PeriodicRule alt{{}, {Rational(1), Rational(-1)}};
  const double log_4_over_pi = eval(SC::log(4) - SC::log_pi());
  ck.close("alternating_r.lhs_vs_log_4_over_pi", transform::weighted_sum_lhs(alt.rule(), N), log_4_over_pi, 1e-4);
  ck.close("alternating_r.rhs_vs_log_4_over_pi", transform::weighted_sum_rhs(alt.forward_rule(), N),
           log_4_over_pi, 1e-4);

  std::mt19937_64 rng(ck.options().seed + 11);
  std::uniform_int_distribution<int> period_len(1, 8), value(-2, 2);
  // Gaps below this are rounding noise and count as converged.
  constexpr double kGapFloor = 1e-12;
  for (int t = 0; t < 50; ++t) {
    transform::PeriodicRule rule;
    const int q = period_len(rng);
    for (int j = 0; j < q; ++j) rule.period.emplace_back(value(rng));
    const auto r = rule.rule();
    const auto R = rule.forward_rule();
    std::string id = "random_r." + std::string(t < 10 ? "0" : "") + std::to_string(t);
    double prev_gap = INFINITY;
    bool monotone = true;
    std::string gaps;
    double gap = 0.0;
    for (std::uint64_t n = std::max<std::uint64_t>(1, N / 1000); n <= N; n *= 10) {
      gap = std::fabs(transform::weighted_sum_lhs(r, n) - transform::weighted_sum_rhs(R, n));
      const double g = std::max(gap, kGapFloor);
      if (g > prev_gap) monotone = false;
      prev_gap = g;
      gaps += (gaps.empty() ? "" : " ") + num(gap);
    }
    ck.at_most(id + ".gap", gap, 1e-4 * ck.options().tolerance_scale);
    ck.exact(id + ".gap_shrinks", monotone, gaps, "non-increasing across decades");
  }
}

void c12_expansion(Checker& ck) {
  std::size_t failures = 0;
  double worst = 0.0;
  for (std::uint64_t n = 1; n <= 100; ++n) {
    const double a = series::a_term(n);
    for (unsigned K = 1; K <= 20; ++K) {
      const auto chk = series::a_expansion_check(n, K);
      const double err = std::fabs(a - chk.partial);
      worst = std::max(worst, err / chk.remainder_bound);
      failures += !(err <= chk.remainder_bound);
    }
  }
  ck.exact("remainder_below_2^-K", failures == 0,
           std::to_string(failures) + " failures, max |A_n - partial| * 2^K = " + num(worst),
           "n <= 100, K <= 20");
}

void c13_periodic_route(Checker& ck) {
  // Block counting and the dyadic transform only; no call into closedform.
  for (const auto& w : all_words(2, 2)) {
    const std::string id = "w=" + w.digit_string();
    const auto rule = transform::periodic_r_for_word(w, 64u << w.length());
    ck.exact(id + ".periodic_detected", rule.has_value(), rule ? "detected" : "not detected", "detected");
    if (!rule) continue;
    const double deg2 = deg2_direct(w);
    ck.close(id + ".weighted_sum", transform::weighted_sum_lhs(rule->rule(), ck.options().terms), deg2, 1e-4);
    ck.close(id + ".progression_closed_form", eval(transform::periodic_weighted_sum(*rule)), deg2, 1e-12);
  }
}

}  // namespace

std::string kind_name(CheckKind k) {
  switch (k) {
    case CheckKind::Exact: return "exact";
    case CheckKind::Symbolic: return "symbolic";
    case CheckKind::Numeric: return "numeric";
    case CheckKind::Runtime: return "runtime";
  }
  return "?";
}

Checker::Checker(std::string prefix, const VerifyOptions& options)
    : prefix_(std::move(prefix)), options_(options) {}

double Checker::rhs_value(const std::string& full_id, double rhs) const {
  const auto it = options_.overrides.find(full_id);
  return it == options_.overrides.end() ? rhs : it->second;
}

void Checker::close(const std::string& id, double lhs, double rhs, double tol) {
  const std::string full = prefix_ + "." + id;
  rhs = rhs_value(full, rhs);
  tol *= options_.tolerance_scale;
  const double diff = std::fabs(lhs - rhs);
  records_.push_back({full, CheckKind::Numeric, num(lhs), num(rhs), tol, diff <= tol});
}

void Checker::relative(const std::string& id, double lhs, double rhs, double rel_tol) {
  const std::string full = prefix_ + "." + id;
  rhs = rhs_value(full, rhs);
  const double tol = rel_tol * options_.tolerance_scale * std::fabs(rhs);
  records_.push_back({full, CheckKind::Numeric, num(lhs), num(rhs), tol, std::fabs(lhs - rhs) <= tol});
}

void Checker::at_most(const std::string& id, double value, double bound) {
  const std::string full = prefix_ + "." + id;
  bound = rhs_value(full, bound);
  records_.push_back({full, CheckKind::Numeric, num(value), "<= " + num(bound), bound, value <= bound});
}

void Checker::exact(const std::string& id, bool ok, std::string lhs, std::string rhs) {
  records_.push_back({prefix_ + "." + id, CheckKind::Exact, std::move(lhs), std::move(rhs), 0.0, ok});
}

void Checker::symbolic(const std::string& id, const SymbolicConstant& lhs, const SymbolicConstant& rhs) {
  records_.push_back({prefix_ + "." + id, CheckKind::Symbolic, render(lhs), render(rhs), 0.0, lhs == rhs});
}

void Checker::runtime(double seconds, double limit) {
  records_.push_back({prefix_ + ".runtime", CheckKind::Runtime, num(seconds) + " s", "<= " + num(limit) + " s",
                      limit, seconds <= limit});
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "digits", "block counting matches a naive scan", 10.0, c01_counting_oracle},
      {2, "theorems", "digit-sum series equals (gamma + log 4/pi)/2", 1.0, c02_digit_sum_series},
      {3, "theorems", "degree-2 block series vs partial sums", 5.0, c03_deg2_vs_partial_sums},
      {4, "theorems", "degree-3 block series vs partial sums, delta+-", 0.0, c04_deg3_vs_partial_sums},
      {5, "theorems", "exact symbolic identities", 0.0, c05_symbolic_identities},
      {6, "theorems", "sum s_2(n)/(n(n+1)) = 2 log 2", 0.0, c06_digit_sum_over_nn1},
      {7, "special", "Gauss digamma vs asymptotic digamma, q <= 12", 1.0, c07_gauss_digamma},
      {8, "base", "base-3 block series vs partial sums", 0.0, c08_base3},
      {9, "base", "A^(k) variation vs partial sums", 0.0, c09_qk},
      {10, "transform", "dyadic transform round trips and examples", 0.0, c10_dyadic_transform},
      {11, "transform", "weighted sums: r_n A_n vs R_i/(2i(2i+1))", 30.0, c11_weighted_sums},
      {12, "transform", "dyadic expansion of A_n, remainder < 2^-K", 0.0, c12_expansion},
      {13, "transform", "degree-2 values via periodic r, without block-counting lemma", 0.0, c13_periodic_route},
  };
  return all;
}

CriterionResult run_criterion(const Criterion& c, const VerifyOptions& options) {
  char prefix[8];
  std::snprintf(prefix, sizeof prefix, "C%02d", c.number);
  Checker ck(prefix, options);
  const auto start = std::chrono::steady_clock::now();
  try {
    c.run(ck);
  } catch (const std::exception& e) {
    ck.exact("exception", false, e.what(), "no exception");
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (c.max_seconds > 0.0) ck.runtime(seconds, c.max_seconds);
  auto& recs = ck.records();
  const bool pass = std::all_of(recs.begin(), recs.end(), [](const auto& r) { return r.pass; });
  return {&c, std::move(recs), seconds, pass};
}

bool is_suite(std::string_view name) {
  return name == "all" || name == "digits" || name == "special" || name == "theorems" || name == "base" ||
         name == "transform";
}

VerifyReport run_suite(std::string_view suite, const VerifyOptions& options) {
  if (!is_suite(suite)) throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
  VerifyReport report;
  report.suite = std::string(suite);
  const auto start = std::chrono::steady_clock::now();
  for (const auto& c : criteria()) {
    if (suite != "all" && c.suite != suite) continue;
    auto res = run_criterion(c, options);
    for (auto& r : res.records) report.records.push_back(std::move(r));
  }
  std::stable_sort(report.records.begin(), report.records.end(),
                   [](const auto& a, const auto& b) { return a.id < b.id; });
  report.pass = std::all_of(report.records.begin(), report.records.end(), [](const auto& r) { return r.pass; });
  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

Json to_json(const VerifyReport& report) {
  Json recs = Json::array();
  for (const auto& r : report.records) {
    recs.push_back({{"id", r.id},
                    {"kind", kind_name(r.kind)},
                    {"lhs", r.lhs},
                    {"rhs", r.rhs},
                    {"tolerance", r.tolerance},
                    {"pass", r.pass}});
  }
  return {{"suite", report.suite},
          {"records", std::move(recs)},
          {"pass", report.pass},
          {"elapsed_seconds", report.elapsed_seconds}};
}

std::string to_text(const VerifyReport& report) {
  std::ostringstream os;
  std::size_t failed = 0;
  for (const auto& r : report.records) {
    os << (r.pass ? "PASS " : "FAIL ") << r.id << "  " << r.lhs << " vs " << r.rhs;
    if (r.kind == CheckKind::Numeric && r.tolerance > 0.0 && r.rhs.rfind("<=", 0) != 0) {
      os << "  (tol " << num(r.tolerance) << ")";
    }
    os << '\n';
    failed += !r.pass;
  }
  os << "suite " << report.suite << ": " << (report.records.size() - failed) << "/" << report.records.size()
     << " checks passed, " << (report.pass ? "PASS" : "FAIL") << " in " << format_number(report.elapsed_seconds, 3)
     << " s\n";
  return os.str();
}

namespace {

// Locale-independent.
double parse_double(std::string_view text) {
  double v = 0.0;
  const auto* end = text.data() + text.size();
  const auto res = std::from_chars(text.data(), end, v);
  if (text.empty() || res.ec != std::errc() || res.ptr != end) {
    throw std::invalid_argument("not a number: '" + std::string(text) + "'");
  }
  return v;
}

}  // namespace

std::uint64_t parse_count(std::string_view text) {
  const double v = parse_double(text);
  if (!(v >= 1.0) || v > 1e18 || v != std::floor(v)) {
    throw std::invalid_argument("expected a positive integer count, got '" + std::string(text) + "'");
  }
  return static_cast<std::uint64_t>(v);
}

VerifyOptions parse_config(std::string_view text, VerifyOptions opts) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    const auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key=value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    try {
      if (key == "terms") opts.terms = parse_count(value);
      else if (key == "tolerance_scale") opts.tolerance_scale = parse_double(value);
      else if (key == "seed") opts.seed = parse_count(value);
      else if (key.rfind("override.", 0) == 0) opts.overrides[key.substr(9)] = parse_double(value);
      else throw std::invalid_argument("unknown key '" + key + "'");
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return opts;
}

}  // namespace digitblocks::verify
