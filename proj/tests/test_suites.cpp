#include <doctest.h>

#include "cpw/suites.hpp"

using namespace cpw;

namespace {

const SystemModel kSwap = SystemModel::finite_permutation({1, 0});
const SystemModel kTwoOrbit = SystemModel::finite_permutation({1, 0, 2});
const SystemModel kShift = SystemModel::integer_shift();
const SystemModel kCircleI = SystemModel::circle_rotation(GaussianRational::i());
const SystemModel kCircleIrr = SystemModel::circle_rotation(
    GaussianRational(make_rational(3, 5), make_rational(4, 5)));

CheckOptions small_options() {
  CheckOptions o;
  o.samples = 20;
  o.seed = 7;
  return o;
}

}  // namespace

TEST_CASE("config parsing round trips and validates") {
  nlohmann::json finite = {{"model", "finite"}, {"permutation", {1, 0, 2}}};
  SystemModel s = parse_config(finite);
  CHECK(s.same_as(kTwoOrbit));
  CHECK(config_echo(s) == finite);

  CHECK(parse_config({{"model", "shift"}}).same_as(kShift));
  CHECK(parse_config({{"model", "circle"}, {"q", "3/5+4/5i"}}).same_as(kCircleIrr));

  auto expect_config_error = [](const nlohmann::json& bad, const std::string& path) {
    try {
      parse_config(bad);
      FAIL("expected ConfigError");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::ConfigError);
      CHECK(std::string(e.what()).find(path) == 0);
    }
  };
  expect_config_error({{"model", "finite"}, {"permutation", {1, 1}}}, "permutation");
  expect_config_error({{"model", "circle"}, {"q", "1/2"}}, "q");
  expect_config_error({{"model", "torus"}}, "model");
  expect_config_error({{"permutation", {0}}}, "model");
}

TEST_CASE("analyze reports the property table") {
  nlohmann::json swap = analyze(kSwap, 4);
  CHECK(swap["properties"]["aperiodic_dense"] == false);
  CHECK(swap["properties"]["maximal_abelian"] == false);
  CHECK(swap["consistency"]["maximal_abelian_equals_aperiodic_dense"] == true);
  CHECK(swap["per_n"]["1"] == "empty");
  CHECK(swap["per_n"]["2"] == "all");

  nlohmann::json shift = analyze(kShift, 3);
  CHECK(shift["properties"]["aperiodic_dense"] == true);
  CHECK(shift["properties"]["minimal"] == true);
  CHECK(shift["properties"]["transitive"] == true);
  CHECK(shift["properties"]["maximal_abelian"] == true);
  CHECK(shift["per_n"]["3"] == "empty");

  nlohmann::json circle = analyze(kCircleI, 4);
  CHECK(circle["properties"]["aperiodic_dense"] == false);
  CHECK(circle["properties"]["minimal"] == false);
  CHECK(circle["properties"]["transitive"] == false);
  CHECK(circle["properties"]["maximal_abelian"] == false);
  CHECK(circle["per_n"]["4"] == "all");
}

TEST_CASE("check suites pass on their supported models") {
  for (const SystemModel& s : {kSwap, kTwoOrbit, kShift, kCircleI, kCircleIrr}) {
    CheckSuiteResult algebra = run_check_suite("algebra", s, config_echo(s), small_options());
    CHECK(algebra.status() != ItemStatus::Fail);
    CheckSuiteResult triquiv = run_check_suite("triquiv", s, config_echo(s), small_options());
    CHECK(triquiv.status() != ItemStatus::Fail);
    CheckSuiteResult baire = run_check_suite("baire", s, config_echo(s), small_options());
    CHECK(baire.status() != ItemStatus::Fail);
  }
}

TEST_CASE("algebra suite marks the shift's missing unit as unsupported") {
  CheckSuiteResult r = run_check_suite("algebra", kShift, config_echo(kShift), small_options());
  bool found = false;
  for (const CheckItem& item : r.items)
    if (item.name == "delta-inverse") {
      found = true;
      CHECK(item.status == ItemStatus::Unsupported);
    }
  CHECK(found);
  CHECK(r.status() == ItemStatus::Unsupported);
  CHECK(r.exit_code() == 3);
}

TEST_CASE("commint suite statuses") {
  CHECK(run_check_suite("commint", kSwap, config_echo(kSwap), small_options()).exit_code() == 0);
  CHECK(run_check_suite("commint", kShift, config_echo(kShift), small_options()).exit_code() == 0);
  CHECK(run_check_suite("commint", kCircleI, config_echo(kCircleI), small_options()).exit_code() ==
        3);
}

TEST_CASE("simplicity suite per model") {
  CHECK(run_check_suite("simplicity", kTwoOrbit, config_echo(kTwoOrbit), small_options())
            .exit_code() == 0);
  CHECK(run_check_suite("simplicity", kSwap, config_echo(kSwap), small_options()).exit_code() ==
        0);
  CheckOptions few = small_options();
  few.samples = 5;
  CHECK(run_check_suite("simplicity", kShift, config_echo(kShift), few).exit_code() == 0);
  CHECK(run_check_suite("simplicity", kCircleIrr, config_echo(kCircleIrr), small_options())
            .exit_code() == 0);
  CHECK(run_check_suite("simplicity", kCircleI, config_echo(kCircleI), small_options())
            .exit_code() == 0);
}

TEST_CASE("primeness suite per model") {
  CHECK(run_check_suite("primeness", kTwoOrbit, config_echo(kTwoOrbit), small_options())
            .exit_code() == 0);
  CheckOptions few = small_options();
  few.samples = 4;
  CHECK(run_check_suite("primeness", kSwap, config_echo(kSwap), few).exit_code() == 0);
  CHECK(run_check_suite("primeness", kShift, config_echo(kShift), few).exit_code() == 0);
  CHECK(run_check_suite("primeness", kCircleI, config_echo(kCircleI), few).exit_code() == 3);
}

TEST_CASE("reports are deterministic for a fixed seed") {
  CheckOptions o = small_options();
  nlohmann::json a = run_check_suite("triquiv", kSwap, config_echo(kSwap), o).to_json();
  nlohmann::json b = run_check_suite("triquiv", kSwap, config_echo(kSwap), o).to_json();
  CHECK(a.dump() == b.dump());
  o.seed = 8;
  // Different seed still passes; the report layout stays schema-stable.
  nlohmann::json c = run_check_suite("triquiv", kSwap, config_echo(kSwap), o).to_json();
  CHECK(c["schema_version"] == 1);
  CHECK(c["items"].size() == b["items"].size());
}

TEST_CASE("witness reports replay") {
  nlohmann::json wa = witness_report(kShift, "in-a", "e_0 + e_1*d^1");
  CHECK(wa["witness"] == "e_0");
  CHECK(wa["replay_ok"] == true);
  CHECK(wa["certificate"]["kind"] == "chain");

  nlohmann::json wc = witness_report(kSwap, "in-commutant", "1 + d^1");
  CHECK(wc["witness"] == "e_0");
  CHECK(wc["replay_ok"] == true);

  CHECK_THROWS_AS(witness_report(kSwap, "in-a", "e_0"), Error);
  CHECK_THROWS_AS(witness_report(kShift, "sideways", "e_0"), Error);
}

TEST_CASE("unknown suites and bad options are config errors") {
  CHECK_THROWS_AS(run_check_suite("nope", kSwap, config_echo(kSwap), small_options()), Error);
  CheckOptions bad;
  bad.samples = 0;
  CHECK_THROWS_AS(run_check_suite("algebra", kSwap, config_echo(kSwap), bad), Error);
}
