// Acceptance suite: one line per criterion, nonzero exit if any fails.
//
// Each check pins its tolerance in code; the run is deterministic (fixed
// seeds, fixed sample counts).

#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "casimir/coupling_geometry.hpp"
#include "casimir/friction_engine.hpp"
#include "casimir/materials.hpp"
#include "casimir/numerics.hpp"
#include "casimir/quantities.hpp"
#include "casimir/response_kernel.hpp"
#include "casimir/verification.hpp"

using namespace casimir;

namespace {

int g_failed = 0;

void report(int id, bool ok, const std::string& label, const std::string& detail) {
  std::printf("[%d] %s  %s  (%s)\n", id, ok ? "PASS" : "FAIL", label.c_str(), detail.c_str());
  if (!ok) ++g_failed;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

engine::Scenario gold_scenario() {
  return engine::Scenario{materials::gold(), materials::gold(), 10e-9, 100.0, 300.0, 1.0, 1.0};
}

double uniform01(std::mt19937_64& rng) {
  return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

}  // namespace

int main() {
  // 1. Gold worked example: prefactor 5.81 mPa within 1%.
  {
    const auto rep = engine::dense_friction_closed_form(gold_scenario());
    const double rel = numerics::relative_error(rep.prefactor_Pa, 5.81e-3);
    report(1, rel <= 0.01, "gold prefactor 5.81 mPa",
           "got " + fmt(rep.prefactor_Pa) + " Pa, rel " + fmt(rel) + ", tol 0.01");
  }

  // 2. Derived parameters: q = 6.36 eV and half beta q = 123 within 1%.
  {
    const double q = materials::gold().q_eV();
    const double kT = units::thermal_energy({300.0, units::Unit::TemperatureK}).value;
    const double half_beta_q = 0.5 * q / kT;
    const double rel_q = numerics::relative_error(q, 6.36);
    const double rel_b = numerics::relative_error(half_beta_q, 123.0);
    report(2, rel_q <= 0.01 && rel_b <= 0.01, "q = 6.36 eV, beta q / 2 = 123",
           "q " + fmt(q) + " (rel " + fmt(rel_q) + "), beta q/2 " + fmt(half_beta_q) +
               " (rel " + fmt(rel_b) + "), tol 0.01");
  }

  // 3. Geometry constant: half-space integration of G_xx recovers 3 pi / 8
  //    within 0.5%.
  {
    const auto rep = oracle::halfspace_constant_oracle(10e-9, 24000000, 20260808);
    report(3, rep.passed, "half-space constant 3 pi / 8",
           "got " + fmt(rep.computed_value) + " vs " + fmt(rep.reference_value) + ", rel " +
               fmt(rep.rel_error) + ", tol 0.005, samples 2.4e7, seed 20260808");
  }

  // 4. Tensor oracle: analytic T against central differences, 1e-6, 100
  //    separations including axis-aligned ones.
  {
    const auto rep = oracle::finite_difference_oracle(100, 31337);
    report(4, rep.passed, "force tensor vs finite differences",
           "max rel dev " + fmt(rep.rel_error) + ", tol 1e-6, points 100");
  }

  // 5. Matsubara identity: convolution equals imaginary-time integration to
  //    1e-6 at converged truncation for 10 random oscillator pairs.
  {
    std::mt19937_64 rng(777);
    double worst = 0.0;
    bool ok = true;
    for (int p = 0; p < 10; ++p) {
      const kernel::OscillatorModel osc1(0.5 + 1.5 * uniform01(rng),
                                         0.5 + 2.5 * uniform01(rng));
      const kernel::OscillatorModel osc2(0.5 + 1.5 * uniform01(rng),
                                         0.5 + 2.5 * uniform01(rng));
      const double beta = 0.5 + 2.5 * uniform01(rng);
      const int n = kernel::suggested_truncation(osc1, osc2, beta, 1e-8);
      const auto rep = oracle::matsubara_identity_oracle(beta, osc1, osc2, n);
      worst = std::max(worst, rep.rel_error);
      ok = ok && rep.passed;
    }
    report(5, ok && worst <= 1e-6, "Matsubara convolution identity, 10 pairs",
           "worst rel " + fmt(worst) + ", tol 1e-6");
  }

  // 6. Spectral reconstruction at sigma/q = 1e-3: surface response rebuilt to
  //    1% at K in {0.1q, q, 10q}; K = 0 sum rule to 1e-4.
  {
    const double q = 9.0 / std::sqrt(2.0);
    const materials::DrudeMaterial mat(9.0, 1e-3 * q);
    const auto dist = materials::drude_surface_distribution(mat);
    bool ok = true;
    std::string detail;
    for (double k : {0.1 * q, q, 10.0 * q}) {
      const double rebuilt = materials::reconstruct_alpha(dist, k);
      const double direct = materials::surface_response(mat, k);
      const double rel = numerics::relative_error(rebuilt, direct);
      ok = ok && rel <= 0.01;
      detail += "K=" + fmt(k) + " rel " + fmt(rel) + "; ";
    }
    const double sum_rule = materials::reconstruct_alpha(dist, 0.0);
    const double rel0 = std::abs(sum_rule - 1.0);
    ok = ok && rel0 <= 1e-4;
    detail += "sum rule dev " + fmt(rel0) + " (tol 1e-4; others 0.01)";
    report(6, ok, "Drude spectral density reconstructs the surface response", detail);
  }

  // 7. Closed form vs quadrature: 1% at sigma/q = 1e-3, monotone over
  //    {1e-2, 1e-3, 1e-4}.
  {
    const auto reports =
        oracle::delta_limit_oracle(materials::gold(), {1e-2, 1e-3, 1e-4}, gold_scenario());
    bool ok = reports.size() == 3;
    std::string detail;
    for (const auto& r : reports) {
      ok = ok && r.passed;
      detail += r.name.substr(r.name.find("sigma")) + " rel " + fmt(r.rel_error) + "; ";
    }
    detail += "tol 0.01 at 1e-3/1e-4, monotone";
    report(7, ok, "dense quadrature converges to the closed form", detail);
  }

  // 8. Structural invariants.
  {
    bool ok = true;
    std::string detail;

    // F <= 0 and exact scalings on both routes.
    const auto base = engine::dense_friction_closed_form(gold_scenario());
    auto scn = gold_scenario();
    scn.v_mps *= 2.0;
    const auto v2 = engine::dense_friction_closed_form(scn);
    const double lin_dev =
        std::abs(v2.force_per_area_Pa / (2.0 * base.force_per_area_Pa) - 1.0);
    ok = ok && base.force_per_area_Pa <= 0.0 && lin_dev <= 1e-12;
    detail += "F(2v)/2F(v) dev " + fmt(lin_dev) + "; ";

    scn = gold_scenario();
    scn.d_m *= 2.0;
    const auto d2 = engine::dense_friction_closed_form(scn);
    const double d4_dev =
        std::abs(16.0 * d2.force_per_area_Pa / base.force_per_area_Pa - 1.0);
    ok = ok && d4_dev <= 1e-12;
    detail += "16 F(2d)/F(d) dev " + fmt(d4_dev) + "; ";

    scn = gold_scenario();
    scn.material1 = materials::DrudeMaterial(9.0, 0.070);
    scn.material2 = materials::DrudeMaterial(9.0, 0.070);
    const auto nu2 = engine::dense_friction_closed_form(scn);
    const double nu_dev =
        std::abs(2.0 * nu2.force_per_area_Pa / base.force_per_area_Pa - 1.0);
    ok = ok && nu_dev <= 1e-12;
    detail += "2|F(2nu)|/|F(nu)| dev " + fmt(nu_dev) + "; ";

    // Density independence of the dense quadrature route.
    const double q = 9.0 / std::sqrt(2.0);
    scn = gold_scenario();
    scn.material1 = materials::DrudeMaterial(9.0, 1e-3 * q);
    scn.material2 = scn.material1;
    const auto rho_a = engine::dense_friction_quadrature(scn);
    scn.rho1_per_m3 = 10.0;
    scn.rho2_per_m3 = 10.0;
    const auto rho_b = engine::dense_friction_quadrature(scn);
    const double rho_dev =
        numerics::relative_error(rho_b.force_per_area_Pa, rho_a.force_per_area_Pa);
    ok = ok && rho_dev <= 1e-10;
    detail += "rho independence dev " + fmt(rho_dev) + "; ";

    // Suppression log increases as q decreases while beta q / 2 > 2.
    const double kT = units::thermal_energy({300.0, units::Unit::TemperatureK}).value;
    bool monotone = true;
    double prev = -std::numeric_limits<double>::infinity();
    for (double qq = 15.0; 0.5 * qq / kT > 2.0; qq *= 0.8) {
      const double s = engine::suppression_log_from_half_beta_q(0.5 * qq / kT);
      monotone = monotone && s > prev;
      prev = s;
    }
    ok = ok && monotone;
    detail += std::string("suppression monotone ") + (monotone ? "yes" : "NO") + "; ";

    // log-sinh path equals the direct path wherever both are representable.
    double worst_log = 0.0;
    for (double x = 1.0; x <= 295.0; x *= 1.4) {
      const double direct = 2.0 * (std::log(x) - std::log(std::sinh(x)));
      const double logged = engine::suppression_log_from_half_beta_q(x);
      worst_log = std::max(worst_log, numerics::relative_error(logged, direct));
    }
    ok = ok && worst_log <= 1e-12;
    detail += "log-sinh vs direct dev " + fmt(worst_log) + " (tols 1e-12/1e-10)";

    report(8, ok, "structural invariants", detail);
  }

  // 9. Reported gold force equals -prefactor * exp(suppression_log), with the
  //    suppression log verified in extended precision to 1e-10.
  {
    const auto rep = engine::dense_friction_closed_form(gold_scenario());
    const double reassembled = -rep.prefactor_Pa * std::exp(rep.suppression_log);
    const double id_dev = numerics::relative_error(rep.force_per_area_Pa, reassembled);

    const double kT = units::thermal_energy({300.0, units::Unit::TemperatureK}).value;
    const long double x = 0.5L * static_cast<long double>(materials::gold().q_eV()) /
                          static_cast<long double>(kT);
    const long double expected = 2.0L * (std::log(x) - std::log(std::sinh(x)));
    const double s_dev = std::abs(
        static_cast<double>(rep.suppression_log / static_cast<double>(expected)) - 1.0);

    report(9, id_dev <= 1e-12 && s_dev <= 1e-10,
           "gold force factorization and extended-precision suppression",
           "identity dev " + fmt(id_dev) + ", suppression dev " + fmt(s_dev) +
               ", suppression_log " + fmt(rep.suppression_log));
  }

  if (g_failed == 0) {
    std::printf("ACCEPTANCE: 9/9 criteria passed\n");
    return 0;
  }
  std::printf("ACCEPTANCE: %d criterion/criteria FAILED\n", g_failed);
  return 1;
}
