// Copyright 2026 The nmqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <random>

#include "core/noise.hpp"
#include "doctest.h"

using namespace nmqc;

namespace {

// frozen by independent evaluation of the closed-form expressions
constexpr double kStrongD = 0.14106735979665885;        // sqrt(2*0.01-0.0001)
constexpr double kRevivalPeakT = 44.54031971844136;     // 2*pi / kStrongD
constexpr double kRevivalPeakP = 0.64056594957026936;   // exp(-0.01 * peak t)
constexpr double kDephasingStrongT100 = 1.0270685590918262e-08;
constexpr double kBoundRatio = 0.53552886012103651;

std::array<double, 4> probs_from(const OmegaTriple& om) {
  const double o1 = om.omega[0], o2 = om.omega[1], o3 = om.omega[2];
  return {0.25 * (1 + o1 - o2 - o3), 0.25 * (1 - o1 + o2 - o3),
          0.25 * (1 - o1 - o2 + o3), 0.25 * (1 + o1 + o2 + o3)};
}

}  // namespace

TEST_CASE("damping decoherence function") {
  const DecoherenceParams strong{1.0, 0.01};
  CHECK(damping_p(strong, 0.0) == 1.0);
  CHECK(strong.d().real() == doctest::Approx(kStrongD).epsilon(1e-15));
  CHECK(strong.d().imag() == 0.0);

  // full oscillation d*t = 2*pi: the envelope alone survives
  CHECK(damping_p(strong, kRevivalPeakT) ==
        doctest::Approx(kRevivalPeakP).epsilon(1e-13));

  CHECK_THROWS_AS(damping_p(strong, -0.1), ArgumentError);
  CHECK_THROWS_AS(DecoherenceParams(0.0, 1.0), ArgumentError);
  CHECK_THROWS_AS(DecoherenceParams(1.0, -2.0), ArgumentError);
}

TEST_CASE("overdamped damping decays monotonically without zeros") {
  const DecoherenceParams markovian{1.0, 5.0};
  CHECK(markovian.d_radicand() < 0.0);
  CHECK(markovian.d().imag() > 0.0);
  double prev = damping_p(markovian, 0.0);
  for (int i = 1; i <= 2000; ++i) {
    const double t = 50.0 * i / 2000.0;
    const double p = damping_p(markovian, t);
    CHECK(p > 0.0);
    CHECK(p < prev);
    prev = p;
  }
}

TEST_CASE("damping_p is continuous across the critical regime") {
  // 2*gamma*Gamma - Gamma^2 = +-eps around the double root Gamma = 2*gamma
  const double eps = 1e-9;
  const DecoherenceParams above{1.0, 1.0 + std::sqrt(1.0 - eps)};
  const DecoherenceParams below{1.0, 1.0 + std::sqrt(1.0 + eps)};
  CHECK(above.d_radicand() == doctest::Approx(eps).epsilon(1e-4));
  CHECK(below.d_radicand() == doctest::Approx(-eps).epsilon(1e-4));
  for (double t : {0.1, 0.5, 1.0, 3.0, 10.0})
    CHECK(std::abs(damping_p(above, t) - damping_p(below, t)) < 1e-6);
}

TEST_CASE("markovian damping and dephasing limits") {
  CHECK(damping_p_markovian(MarkovianEta{0.0}) == 1.0);
  CHECK(damping_p_markovian(MarkovianEta{1.0}) == 0.0);
  CHECK(damping_p_markovian(MarkovianEta{0.3}) == doctest::Approx(0.7));

  CHECK(dephasing_p_markovian(MarkovianEta{0.0}) == 1.0);
  CHECK(dephasing_p_markovian(MarkovianEta{1.0}) == 0.0);
  CHECK(dephasing_p_markovian(MarkovianEta{0.19}) ==
        doctest::Approx(0.9).epsilon(1e-15));

  CHECK_THROWS_AS(MarkovianEta{-0.1}, ArgumentError);
  CHECK_THROWS_AS(MarkovianEta{1.1}, ArgumentError);
}

TEST_CASE("damping Kraus operators") {
  const KrausSet at_one = damping_kraus(1.0);
  CHECK(at_one.ops[0].isApprox(Mat2::Identity()));
  CHECK(at_one.ops[1].cwiseAbs().maxCoeff() == 0.0);

  const KrausSet at_zero = damping_kraus(0.0);
  Mat2 k0, k1;
  k0 << 1, 0, 0, 0;
  k1 << 0, 1, 0, 0;
  CHECK(at_zero.ops[0].isApprox(k0));
  CHECK(at_zero.ops[1].isApprox(k1));

  std::mt19937 rng(3);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 50; ++i)
    CHECK(completeness_defect(damping_kraus(unit(rng))) < 1e-15);

  CHECK_THROWS_AS(damping_kraus(1.5), ArgumentError);
  CHECK_THROWS_AS(damping_kraus(-0.2), ArgumentError);
  CHECK_NOTHROW(damping_kraus(1.0 + 1e-13));  // round-off is tolerated
}

TEST_CASE("dephasing decoherence function") {
  const DecoherenceParams strong{1.0, 0.01};
  CHECK(dephasing_p(strong, 0.0) == 1.0);
  CHECK(dephasing_p(strong, 100.0) ==
        doctest::Approx(kDephasingStrongT100).epsilon(1e-12));

  // wide-band limit: p -> exp(-gamma t / 2)
  const DecoherenceParams wide{1.0, 1e8};
  for (double t : {0.5, 1.0, 3.0})
    CHECK(dephasing_p(wide, t) ==
          doctest::Approx(std::exp(-0.5 * t)).epsilon(1e-6));

  CHECK_THROWS_AS(dephasing_p(strong, -1.0), ArgumentError);
}

TEST_CASE("dephasing_p never increases") {
  for (double ratio : {0.01, 0.1, 1.0, 5.0}) {
    const DecoherenceParams params{1.0, ratio};
    double prev = 1.0;
    for (int i = 1; i <= 500; ++i) {
      const double p = dephasing_p(params, 40.0 * i / 500.0);
      CHECK(p <= prev + 1e-15);
      prev = p;
    }
  }
}

TEST_CASE("dephasing Kraus operators") {
  const KrausSet at_one = dephasing_kraus(1.0);
  CHECK(at_one.ops[0].isApprox(Mat2::Identity()));
  CHECK(at_one.ops[1].cwiseAbs().maxCoeff() == 0.0);

  const KrausSet at_zero = dephasing_kraus(0.0);
  Mat2 k0, k1;
  k0 << 1, 0, 0, 0;
  k1 << 0, 0, 0, 1;
  CHECK(at_zero.ops[0].isApprox(k0));
  CHECK(at_zero.ops[1].isApprox(k1));

  std::mt19937 rng(5);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 50; ++i)
    CHECK(completeness_defect(dephasing_kraus(unit(rng))) < 1e-15);

  CHECK_THROWS_AS(dephasing_kraus(2.0), ArgumentError);
}

TEST_CASE("depolarizing Omega triple") {
  const DepolarizingParams homogeneous{{0.3, 0.3, 0.3}, 1.0};
  const OmegaTriple at_zero = depolarizing_omegas(homogeneous, 0.0);
  for (double o : at_zero.omega) CHECK(o == 1.0);

  for (double t : {0.5, 2.0, 10.0}) {
    const OmegaTriple om = depolarizing_omegas(homogeneous, t);
    CHECK(om.omega[0] == om.omega[1]);
    CHECK(om.omega[1] == om.omega[2]);
  }

  // inhomogeneous set: the axis paired with the two small ratios decays
  // slowest at early times
  const DepolarizingParams inhomogeneous{{0.2, 0.2, 5.0}, 1.0};
  for (double t : {0.05, 0.1, 0.2}) {
    const OmegaTriple om = depolarizing_omegas(inhomogeneous, t);
    CHECK(om.omega[0] == doctest::Approx(om.omega[1]).epsilon(1e-15));
    CHECK(om.omega[2] > om.omega[0]);
  }

  // |Omega_i| <= 1 on a dense grid for a spread of parameter sets
  for (auto ratios : {std::array<double, 3>{0.53, 0.53, 0.53},
                      std::array<double, 3>{0.2, 0.2, 5.0},
                      std::array<double, 3>{0.05, 0.1, 0.15}}) {
    const DepolarizingParams params{ratios, 1.0};
    for (int i = 0; i <= 1000; ++i) {
      const OmegaTriple om = depolarizing_omegas(params, 60.0 * i / 1000.0);
      for (double o : om.omega) CHECK(std::abs(o) <= 1.0 + 1e-12);
    }
  }

  CHECK_THROWS_AS(depolarizing_omegas(homogeneous, -0.5), ArgumentError);
  CHECK_THROWS_AS(DepolarizingParams({0.0, 0.1, 0.1}, 1.0), ArgumentError);
}

TEST_CASE("markovian depolarizing Omegas are pure exponentials") {
  const DepolarizingParams params{{0.3, 0.3, 0.3}, 2.0};
  const OmegaTriple at_zero = depolarizing_omegas_markovian(params, 0.0);
  for (double o : at_zero.omega) CHECK(o == 1.0);

  // homogeneous rate: gamma_i = 8 gamma^2 / Gamma with gamma = r * Gamma
  const double gamma = 0.3 * 2.0;
  const double rate = 8.0 * gamma * gamma / 2.0;
  for (double t : {0.1, 1.0, 4.0}) {
    const OmegaTriple om = depolarizing_omegas_markovian(params, t);
    for (double o : om.omega)
      CHECK(o == doctest::Approx(std::exp(-0.5 * rate * t)).epsilon(1e-14));
  }

  double prev = 1.0;
  for (int i = 1; i <= 200; ++i) {
    const double o =
        depolarizing_omegas_markovian(params, 20.0 * i / 200.0).omega[0];
    CHECK(o > 0.0);
    CHECK(o < prev);
    prev = o;
  }
}

TEST_CASE("depolarizing probabilities") {
  const ProbQuad identity = depolarizing_probs(OmegaTriple{{1.0, 1.0, 1.0}});
  CHECK(identity.p[0] == 0.0);
  CHECK(identity.p[1] == 0.0);
  CHECK(identity.p[2] == 0.0);
  CHECK(identity.p[3] == 1.0);

  const ProbQuad mixed = depolarizing_probs(OmegaTriple{{0.0, 0.0, 0.0}});
  for (double p : mixed.p) CHECK(p == 0.25);

  // probabilities on the simplex map back to a unit sum exactly
  std::mt19937 rng(9);
  std::exponential_distribution<double> expo(1.0);
  for (int trial = 0; trial < 100; ++trial) {
    std::array<double, 4> w{expo(rng), expo(rng), expo(rng), expo(rng)};
    const double sum = w[0] + w[1] + w[2] + w[3];
    for (double& x : w) x /= sum;
    const OmegaTriple om{{w[3] + w[0] - w[1] - w[2],
                          w[3] - w[0] + w[1] - w[2],
                          w[3] - w[0] - w[1] + w[2]}};
    const ProbQuad probs = depolarizing_probs(om);
    CHECK(std::abs(probs.p[0] + probs.p[1] + probs.p[2] + probs.p[3] - 1.0) <
          1e-14);
    for (int i = 0; i < 4; ++i)
      CHECK(probs.p[static_cast<std::size_t>(i)] ==
            doctest::Approx(w[static_cast<std::size_t>(i)]).epsilon(1e-12));
  }
}

TEST_CASE("depolarizing probability clamping bands") {
  // with Omega_2 = Omega_3 = 0.5, P_1 = Omega_1 / 4
  auto om_for_p1 = [](double p1) {
    return OmegaTriple{{4.0 * p1, 0.5, 0.5}};
  };

  const ProbQuad silent = depolarizing_probs(om_for_p1(-5e-13));
  CHECK(silent.p[0] == 0.0);
  CHECK_FALSE(silent.clamp_warning);

  const ProbQuad warned = depolarizing_probs(om_for_p1(-1e-10));
  CHECK(warned.p[0] == 0.0);
  CHECK(warned.clamp_warning);

  try {
    depolarizing_probs(om_for_p1(-1e-6), 3.5);
    FAIL("expected ChannelError");
  } catch (const ChannelError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("P_1") != std::string::npos);
    CHECK(msg.find("3.5") != std::string::npos);
  }
}

TEST_CASE("depolarizing Kraus operators") {
  const KrausSet identity = depolarizing_kraus(ProbQuad{{0, 0, 0, 1}, false});
  for (int i = 0; i < 3; ++i)
    CHECK(identity.ops[static_cast<std::size_t>(i)].cwiseAbs().maxCoeff() ==
          0.0);
  CHECK(identity.ops[3].isApprox(Mat2::Identity()));

  const KrausSet twirl =
      depolarizing_kraus(ProbQuad{{0.25, 0.25, 0.25, 0.25}, false});
  CHECK(completeness_defect(twirl) < 1e-15);
  Mat2 rho;
  rho << 0.7, cplx{0.1, 0.2}, cplx{0.1, -0.2}, 0.3;
  const Mat2 out = apply_channel(rho, twirl);
  CHECK((out - 0.5 * Mat2::Identity()).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("homogeneous complete-positivity bound") {
  CHECK(homogeneous_depol_bound_ratio() ==
        doctest::Approx(kBoundRatio).epsilon(1e-15));
  CHECK(homogeneous_depol_bound(2.0) ==
        doctest::Approx(2.0 * kBoundRatio).epsilon(1e-15));
  CHECK_THROWS_AS(homogeneous_depol_bound(0.0), ArgumentError);

  // at the bound every P_i stays non-negative on a dense grid
  const double c = homogeneous_depol_bound_ratio();
  const DepolarizingParams at_bound{{c, c, c}, 1.0};
  double worst = 1.0;
  for (int i = 0; i <= 4000; ++i) {
    const OmegaTriple om = depolarizing_omegas(at_bound, 60.0 * i / 4000.0);
    for (double p : probs_from(om)) worst = std::min(worst, p);
  }
  CHECK(worst >= -1e-9);

  // twice the bound dips clearly negative somewhere
  const DepolarizingParams beyond{{2 * c, 2 * c, 2 * c}, 1.0};
  worst = 1.0;
  for (int i = 0; i <= 4000; ++i) {
    const OmegaTriple om = depolarizing_omegas(beyond, 60.0 * i / 4000.0);
    for (double p : probs_from(om)) worst = std::min(worst, p);
  }
  CHECK(worst < -1e-6);
}

TEST_CASE("depolarizing Omegas are continuous across the critical regime") {
  // homogeneous radicand 32 r^2 - 1 = +-eps
  const double eps = 1e-9;
  const double r_hi = std::sqrt((1.0 + eps) / 32.0);
  const double r_lo = std::sqrt((1.0 - eps) / 32.0);
  const DepolarizingParams above{{r_hi, r_hi, r_hi}, 1.0};
  const DepolarizingParams below{{r_lo, r_lo, r_lo}, 1.0};
  for (double t : {0.5, 2.0, 10.0, 40.0})
    CHECK(std::abs(depolarizing_omegas(above, t).omega[0] -
                   depolarizing_omegas(below, t).omega[0]) < 1e-6);
}
