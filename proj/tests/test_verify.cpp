#include <stdexcept>

#include "doctest.h"

#include "digitblocks/verify.hpp"

using namespace digitblocks::verify;

TEST_CASE("criteria table") {
  const auto& cs = criteria();
  REQUIRE(cs.size() == 13);
  for (std::size_t i = 0; i < cs.size(); ++i) {
    CHECK(cs[i].number == static_cast<int>(i + 1));
    CHECK(is_suite(cs[i].suite));
  }
  CHECK(is_suite("all"));
  CHECK_FALSE(is_suite("everything"));
}

TEST_CASE("parse_count and parse_config") {
  CHECK(parse_count("1e6") == 1'000'000);
  CHECK(parse_count("250") == 250);
  CHECK(parse_count("2.5e3") == 2500);
  CHECK_THROWS_AS(parse_count("0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_count("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_count("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_count("-3"), std::invalid_argument);

  const auto o = parse_config("# comment\nterms = 1e5\n tolerance_scale=0.5\nseed=9\noverride.C07.psi(1/02) = 3\n");
  CHECK(o.terms == 100'000);
  CHECK(o.tolerance_scale == 0.5);
  CHECK(o.seed == 9);
  CHECK(o.overrides.at("C07.psi(1/02)") == 3.0);
  CHECK_THROWS_AS(parse_config("nonsense"), std::invalid_argument);
  CHECK_THROWS_AS(parse_config("colour=blue"), std::invalid_argument);
  CHECK_THROWS_AS(parse_config("tolerance_scale=fast"), std::invalid_argument);
}

TEST_CASE("checker semantics") {
  VerifyOptions opts;
  Checker ck("X", opts);
  ck.close("a", 1.0, 1.0 + 1e-9, 1e-8);
  ck.close("b", 1.0, 1.1, 1e-8);
  ck.relative("c", 100.0, 100.0 + 1e-11, 1e-12);
  ck.at_most("d", 0.5, 1.0);
  ck.exact("e", true, "x", "x");
  ck.runtime(2.0, 1.0);
  const auto& r = ck.records();
  REQUIRE(r.size() == 6);
  CHECK(r[0].pass);
  CHECK_FALSE(r[1].pass);
  CHECK(r[2].pass);
  CHECK(r[3].pass);
  CHECK(r[4].pass);
  CHECK_FALSE(r[5].pass);
  CHECK(r[0].id == "X.a");
  CHECK(r[5].kind == CheckKind::Runtime);
}

TEST_CASE("suites pass and fail as configured") {
  VerifyOptions opts;
  const auto special = run_suite("special", opts);
  CHECK(special.pass);
  CHECK_FALSE(special.records.empty());
  for (std::size_t i = 1; i < special.records.size(); ++i) CHECK(special.records[i - 1].id <= special.records[i].id);

  // A wrong expected value is caught.
  VerifyOptions bad = opts;
  bad.overrides["C07.psi(1/02)"] = -1.9;
  const auto broken = run_suite("special", bad);
  CHECK_FALSE(broken.pass);
  const auto& rec = *std::find_if(broken.records.begin(), broken.records.end(),
                                  [](const CheckRecord& x) { return x.id == "C07.psi(1/02)"; });
  CHECK_FALSE(rec.pass);

  // Too few terms for the configured tolerances.
  VerifyOptions coarse = opts;
  coarse.terms = 10'000;
  CHECK_FALSE(run_suite("theorems", coarse).pass);

  // Shrinking every tolerance makes numeric checks fail.
  VerifyOptions strict = opts;
  strict.tolerance_scale = 1e-9;
  CHECK_FALSE(run_suite("base", strict).pass);
  CHECK_THROWS_AS(run_suite("nope", opts), std::invalid_argument);
}

TEST_CASE("report serialization") {
  VerifyOptions opts;
  const auto rep = run_suite("special", opts);
  const auto j = to_json(rep);
  CHECK(j["suite"] == "special");
  CHECK(j["pass"] == true);
  CHECK(j["records"].size() == rep.records.size());
  CHECK(j["records"][0].contains("tolerance"));
  const auto text = to_text(rep);
  CHECK(text.find("suite special:") != std::string::npos);
  CHECK(text.find("PASS C07.") != std::string::npos);
}
