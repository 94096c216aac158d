#include <doctest.h>

#include <cmath>

#include <json.hpp>

#include "casimir/verification.hpp"

using namespace casimir;

TEST_SUITE("verification") {
  TEST_CASE("half-space constant oracle hits 3 pi / 8") {
    const auto report = oracle::halfspace_constant_oracle(1.0, 4000000, 42);
    CHECK(report.reference_value == doctest::Approx(3.0 * M_PI / 8.0).epsilon(1e-15));
    CHECK(report.rel_error <= 0.005);
    CHECK(report.passed);
    CHECK(report.rng == "mt19937_64");
    CHECK(report.std_error > 0.0);
  }

  TEST_CASE("half-space oracle is scale invariant and bit-reproducible") {
    const auto a = oracle::halfspace_constant_oracle(1.0, 200000, 7);
    const auto b = oracle::halfspace_constant_oracle(2.0, 200000, 7);
    // d -> 2d rescales every mapped coordinate by an exact power of two, so
    // the dimensionless constant matches bit for bit.
    CHECK(a.computed_value == b.computed_value);

    const auto c = oracle::halfspace_constant_oracle(1.0, 200000, 7);
    CHECK(a.computed_value == c.computed_value);
    CHECK(a.std_error == c.std_error);
  }

  TEST_CASE("half-space oracle refuses starved sampling") {
    CHECK_THROWS_AS(oracle::halfspace_constant_oracle(1.0, 1000, 3), DomainError);
  }

  TEST_CASE("finite-difference oracle") {
    const auto report = oracle::finite_difference_oracle(100, 99);
    CHECK(report.rel_error <= 1e-6);
    CHECK(report.passed);

    const auto again = oracle::finite_difference_oracle(100, 99);
    CHECK(report.computed_value == again.computed_value);

    CHECK_THROWS_AS(oracle::finite_difference_oracle(5, 1), DomainError);
  }

  TEST_CASE("matsubara identity oracle") {
    SUBCASE("identical oscillators at beta = 1") {
      const kernel::OscillatorModel osc(1.0, 1.0);
      const int n = kernel::suggested_truncation(osc, osc, 1.0, 1e-9);
      const auto report = oracle::matsubara_identity_oracle(1.0, osc, osc, n);
      CHECK(report.rel_error <= 1e-6);
      CHECK(report.passed);
    }
    SUBCASE("a dead oscillator gives zero on both routes") {
      const kernel::OscillatorModel live(1.0, 1.0);
      const kernel::OscillatorModel dead(0.0, 2.0);
      const auto report = oracle::matsubara_identity_oracle(1.0, live, dead, 64);
      CHECK(report.reference_value == 0.0);
      CHECK(report.computed_value == 0.0);
      CHECK(report.rel_error == 0.0);
    }
    SUBCASE("error decreases monotonically with the truncation") {
      const kernel::OscillatorModel osc1(1.0, 1.0);
      const kernel::OscillatorModel osc2(1.0, 1.5);
      double prev = 1.0;
      for (int n : {64, 128, 256}) {
        const auto report = oracle::matsubara_identity_oracle(2.0, osc1, osc2, n);
        CHECK(report.rel_error < prev);
        prev = report.rel_error;
      }
    }
  }

  TEST_CASE("delta-limit oracle") {
    engine::Scenario scn{materials::gold(), materials::gold(), 10e-9, 100.0, 300.0, 1.0, 1.0};

    SUBCASE("descending list enforced") {
      CHECK_THROWS_AS(
          oracle::delta_limit_oracle(materials::gold(), {1e-3, 1e-2}, scn), DomainError);
      CHECK_THROWS_AS(oracle::delta_limit_oracle(materials::gold(), {}, scn), DomainError);
    }
    SUBCASE("one percent budget at sigma/q = 1e-3 and monotone convergence") {
      const auto reports =
          oracle::delta_limit_oracle(materials::gold(), {1e-2, 1e-3}, scn);
      REQUIRE(reports.size() == 2);
      CHECK(reports[1].rel_error <= 0.01);
      CHECK(reports[1].rel_error < reports[0].rel_error);
      CHECK(reports[0].passed);
      CHECK(reports[1].passed);
    }
    SUBCASE("zero velocity gives zero on both routes") {
      engine::Scenario still = scn;
      still.v_mps = 0.0;
      const auto reports =
          oracle::delta_limit_oracle(materials::gold(), {1e-2, 1e-3}, still);
      for (const auto& r : reports) {
        CHECK(r.reference_value == 0.0);
        CHECK(r.computed_value == 0.0);
        CHECK(r.rel_error == 0.0);
      }
    }
  }

  TEST_CASE("reports serialize to JSON with seeds and node counts") {
    const auto report = oracle::halfspace_constant_oracle(1.0, 200000, 12345);
    const auto j = nlohmann::json::parse(oracle::to_json(report));
    CHECK(j["name"] == "halfspace_constant");
    CHECK(j["seed"] == 12345);
    CHECK(j["samples_or_nodes"] == 200000);
    CHECK(j.contains("rel_error"));
    CHECK(j.contains("std_error"));
    CHECK(j.contains("budget"));

    const auto arr = nlohmann::json::parse(oracle::to_json(std::vector<oracle::OracleReport>{
        report, oracle::finite_difference_oracle(10, 1)}));
    CHECK(arr.is_array());
    CHECK(arr.size() == 2);
  }

  TEST_CASE("suite passes clean and fails with an injected constant error") {
    oracle::SuiteOptions options;
    options.profile = oracle::Profile::Fast;
    const auto reports = oracle::run_suite(options);
    CHECK(oracle::all_passed(reports));

    oracle::SuiteOptions poisoned = options;
    poisoned.halfspace_reference_scale = 1.01;
    const auto bad = oracle::run_suite(poisoned);
    CHECK_FALSE(oracle::all_passed(bad));
  }
}
