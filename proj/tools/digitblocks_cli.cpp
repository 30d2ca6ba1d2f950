// digitblocks: block-counting digit statistics, closed forms and their
// numeric verification.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "digitblocks/closedform.hpp"
#include "digitblocks/format.hpp"
#include "digitblocks/json_io.hpp"
#include "digitblocks/series.hpp"
#include "digitblocks/special.hpp"
#include "digitblocks/transform.hpp"
#include "digitblocks/verify.hpp"

namespace {

using namespace digitblocks;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Word make_word(const std::string& text, unsigned base) {
  if (text.find('@') != std::string::npos) {
    Word w = Word::parse(text);
    if (w.base() != base) throw UsageError("word base " + std::to_string(w.base()) + " disagrees with --base");
    return w;
  }
  return Word::from_digits(text, base);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

transform::Sequence parse_list(const std::string& text) {
  transform::Sequence out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(parse_rational(item));
  }
  return out;
}

SymbolicConstant closed_form_for(const Word& w, const series::Kernel& k) {
  if (w.base() != k.word_base()) {
    throw UsageError("kernel " + k.type_name() + " needs base " + std::to_string(k.word_base()) + ", got base " +
                     std::to_string(w.base()));
  }
  switch (k.type) {
    case series::KernelType::Deg2: return closedform::block_series_deg2(w);
    case series::KernelType::Deg3: return closedform::block_series_deg3(w);
    case series::KernelType::NN1: return closedform::block_series_nn1(w);
    case series::KernelType::QBase: return closedform::block_series_base(w);
    case series::KernelType::QK: return closedform::block_series_qk(w, k.k);
  }
  throw UsageError("unknown kernel");
}

std::string gauss_kind(special::GaussTermKind k) {
  switch (k) {
    case special::GaussTermKind::EulerGamma: return "gamma";
    case special::GaussTermKind::Log: return "log";
    case special::GaussTermKind::Cot: return "cot";
    case special::GaussTermKind::CosLogSin: return "cos-log-sin";
  }
  return "?";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Block-counting digit series: counts, closed forms, partial sums and verification"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Emit JSON");

  std::string word_text;
  unsigned base = 2;
  std::string kernel_name = "deg2";
  std::uint64_t k_param = 0;
  std::string terms_text;

  // count
  auto* count = app.add_subcommand("count", "Print N_{w,B}(n)");
  std::uint64_t n_value = 0;
  count->add_option("--word", word_text, "Digit block, e.g. 011 or 011@2")->required();
  count->add_option("--base", base, "Base B in [2, 16]");
  count->add_option("--n", n_value, "Nonnegative integer n")->required();
  count->add_flag("--json", json);

  // closed-form
  auto* closed = app.add_subcommand("closed-form", "Symbolic closed form of sum N_{w,B}(n) kernel(n)");
  closed->add_option("--word", word_text)->required();
  closed->add_option("--base", base);
  closed->add_option("--kernel", kernel_name, "deg2 | deg3 | nn1 | qbase | qk")
      ->check(CLI::IsMember({"deg2", "deg3", "nn1", "qbase", "qk"}));
  closed->add_option("--k", k_param, "Shift k for the qk kernel");
  closed->add_flag("--json", json);

  // partial-sum
  auto* partial = app.add_subcommand("partial-sum", "Brute-force partial sum with rigorous tail bound (JSON)");
  std::string mode_text = "sequential";
  unsigned threads = 0;
  partial->add_option("--word", word_text)->required();
  partial->add_option("--base", base);
  partial->add_option("--kernel", kernel_name)->check(CLI::IsMember({"deg2", "deg3", "nn1", "qbase", "qk"}));
  partial->add_option("--k", k_param);
  partial->add_option("--terms", terms_text, "Number of terms N (1e6 accepted)")->required();
  partial->add_option("--mode", mode_text)->check(CLI::IsMember({"sequential", "parallel"}));
  partial->add_option("--threads", threads, "Worker threads in parallel mode (0 = all cores)");
  partial->add_flag("--json", json);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites; exit 0 iff every check passes");
  std::string suite = "all";
  std::string config_path;
  double tolerance_scale = 0.0;
  std::uint64_t seed = 0;
  verify_cmd->add_option("--suite", suite, "all | digits | special | theorems | base | transform")
      ->check(CLI::IsMember({"all", "digits", "special", "theorems", "base", "transform"}));
  verify_cmd->add_option("--terms", terms_text, "Base term budget (default 1e6)");
  verify_cmd->add_option("--tolerance-scale", tolerance_scale, "Multiply all numeric tolerances");
  verify_cmd->add_option("--seed", seed, "Seed for randomized checks");
  verify_cmd->add_option("--config", config_path, "key=value file: terms, tolerance_scale, seed, override.<id>");
  verify_cmd->add_flag("--json", json);

  // digamma
  auto* dig = app.add_subcommand("digamma", "Psi(p/q)");
  std::int64_t p = 0, q = 0;
  bool gauss = false;
  dig->add_option("--p", p)->required();
  dig->add_option("--q", q)->required();
  dig->add_flag("--gauss", gauss, "Also evaluate with Gauss's digamma theorem (needs p < q)");
  dig->add_flag("--json", json);

  // transform
  auto* tr = app.add_subcommand("transform", "Dyadic sequence transform r <-> R (JSON)");
  std::string direction = "forward";
  std::string input_path, period_text, preperiod_text;
  std::size_t length = 0;
  std::uint64_t limit = 0;
  tr->add_option("--direction", direction, "forward | inverse | detect")
      ->check(CLI::IsMember({"forward", "inverse", "detect"}));
  tr->add_option("--input", input_path, "JSON file: {\"values\": [...]} or {\"preperiod\": [...], \"period\": [...]}");
  tr->add_option("--period", period_text, "Comma-separated period of a rule, e.g. 1,-1");
  tr->add_option("--preperiod", preperiod_text, "Comma-separated preperiod of a rule");
  tr->add_option("--length", length, "Number of terms to produce from a rule");
  tr->add_option("--word", word_text, "detect: binary word");
  tr->add_option("--limit", limit, "detect: search window (default 64 * 2^|w|)");
  tr->add_flag("--json", json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*count) {
      const Word w = make_word(word_text, base);
      const auto c = count_block(n_value, w);
      if (json) std::cout << Json{{"word", to_json(w)}, {"n", n_value}, {"count", c}}.dump() << '\n';
      else std::cout << c << '\n';
      return kExitOk;
    }

    if (*closed) {
      const Word w = make_word(word_text, base);
      const auto kernel = series::parse_kernel(kernel_name, base, k_param);
      const SymbolicConstant c = closed_form_for(w, kernel);
      const double value = eval(c);
      if (json) {
        std::cout << Json{{"word", to_json(w)},
                          {"kernel", to_json(kernel)},
                          {"closed_form", to_json(c)},
                          {"rendered", render(c)},
                          {"value", value}}
                         .dump()
                  << '\n';
      } else {
        std::cout << render(c) << " ≈ " << format_number(value, 12) << '\n';
      }
      return kExitOk;
    }

    if (*partial) {
      const Word w = make_word(word_text, base);
      const auto kernel = series::parse_kernel(kernel_name, base, k_param);
      if (w.base() != kernel.word_base()) throw UsageError("kernel/base mismatch");
      const auto terms = verify::parse_count(terms_text);
      const auto mode = mode_text == "parallel" ? series::Mode::Parallel : series::Mode::Sequential;
      std::cout << to_json(series::partial_sum(w, kernel, terms, mode, threads)).dump() << '\n';
      return kExitOk;
    }

    if (*verify_cmd) {
      verify::VerifyOptions opts;
      if (!config_path.empty()) opts = verify::parse_config(read_file(config_path), opts);
      if (!terms_text.empty()) opts.terms = verify::parse_count(terms_text);
      if (tolerance_scale > 0.0) opts.tolerance_scale = tolerance_scale;
      if (seed != 0) opts.seed = seed;
      const auto report = verify::run_suite(suite, opts);
      if (json) std::cout << verify::to_json(report).dump(2) << '\n';
      else std::cout << verify::to_text(report);
      return report.pass ? kExitOk : kExitFailed;
    }

    if (*dig) {
      if (p <= 0 || q <= 0) throw UsageError("need p > 0 and q > 0");
      const double value = special::digamma(static_cast<double>(p) / static_cast<double>(q));
      Json out = {{"p", p}, {"q", q}, {"value", value}};
      std::string text = format_number(value, 12) + '\n';
      if (gauss) {
        if (p >= q) throw UsageError("--gauss needs p < q");
        const auto g = special::gauss_digamma(p, q);
        Json terms = Json::array();
        text += "gauss " + format_number(g.value, 12) + '\n';
        for (const auto& t : g.terms) {
          terms.push_back({{"kind", gauss_kind(t.kind)}, {"k", t.k}, {"value", t.value}});
          text += "  " + gauss_kind(t.kind) + (t.k ? "[k=" + std::to_string(t.k) + "]" : "") + " " +
                  format_number(t.value, 12) + '\n';
        }
        out["gauss"] = {{"value", g.value}, {"terms", std::move(terms)}};
      }
      std::cout << (json ? out.dump() + '\n' : text);
      return kExitOk;
    }

    if (*tr) {
      if (direction == "detect") {
        const Word w = make_word(word_text.empty() ? throw UsageError("detect needs --word") : word_text, 2);
        const std::uint64_t lim = limit ? limit : (std::uint64_t{64} << w.length());
        const auto rule = transform::periodic_r_for_word(w, lim);
        Json out = {{"word", to_json(w)}, {"limit", lim}, {"detected", rule.has_value()}};
        if (rule) {
          const Json r = to_json(*rule);
          out["preperiod"] = r["preperiod"];
          out["period"] = r["period"];
        }
        std::cout << out.dump() << '\n';
        return rule ? kExitOk : kExitFailed;
      }

      transform::Sequence input;
      if (!input_path.empty()) {
        const Json j = Json::parse(read_file(input_path));
        if (j.contains("values")) {
          input = sequence_from_json(j);
        } else {
          if (length == 0) throw UsageError("a rule input needs --length");
          input = periodic_rule_from_json(j).table(length);
        }
      } else if (!period_text.empty()) {
        if (length == 0) throw UsageError("a rule input needs --length");
        transform::PeriodicRule rule{parse_list(preperiod_text), parse_list(period_text)};
        if (rule.period.empty()) throw UsageError("empty --period");
        input = rule.table(length);
      } else {
        throw UsageError("transform needs --input or --period");
      }
      if (input.empty()) throw UsageError("empty input sequence");
      const auto out = direction == "forward" ? transform::forward(input) : transform::inverse(input);
      Json j = sequence_to_json(out);
      j["direction"] = direction;
      std::cout << j.dump() << '\n';
      return kExitOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
