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

#include "core/noise.hpp"

#include <cmath>
#include <sstream>

namespace nmqc {

namespace {

constexpr double kRadicandTiny = 1e-24;
constexpr double kProbClamp = -1e-12;
constexpr double kProbAbort = -1e-8;

void require_time(double t, const char* fn) {
  if (!(t >= 0.0) || !std::isfinite(t)) {
    std::ostringstream os;
    os << fn << ": time must be finite and >= 0, got " << t;
    throw ArgumentError(os.str());
  }
}

double require_unit_interval(double p, const char* fn) {
  if (!std::isfinite(p) || p < -1e-12 || p > 1.0 + 1e-12) {
    std::ostringstream os;
    os << fn << ": decoherence value must lie in [0,1], got " << p;
    throw ArgumentError(os.str());
  }
  return std::min(1.0, std::max(0.0, p));
}

// exp(-c*theta) * [cos(d*theta) + (c/d) sin(d*theta)] with d = sqrt(radicand).
// One code path covers all three regimes:
//   radicand > 0: underdamped oscillation,
//   radicand = 0: critical limit (1 + c*theta) exp(-c*theta),
//   radicand < 0: overdamped, expanded into pure decaying exponentials
//                 (s = sqrt(-radicand) < c here, so both rates are positive
//                 and large theta cannot overflow cosh).
double damped_oscillation(double radicand, double c, double theta) {
  if (radicand > kRadicandTiny) {
    const double d = std::sqrt(radicand);
    return std::exp(-c * theta) *
           (std::cos(d * theta) + (c / d) * std::sin(d * theta));
  }
  if (radicand < -kRadicandTiny) {
    const double s = std::sqrt(-radicand);
    return 0.5 * ((1.0 + c / s) * std::exp(-(c - s) * theta) +
                  (1.0 - c / s) * std::exp(-(c + s) * theta));
  }
  return (1.0 + c * theta) * std::exp(-c * theta);
}

}  // namespace

DecoherenceParams::DecoherenceParams(double gamma_in, double Gamma_in)
    : gamma(gamma_in), Gamma(Gamma_in) {
  if (!(gamma > 0.0) || !std::isfinite(gamma))
    throw ArgumentError("DecoherenceParams: gamma must be > 0");
  if (!(Gamma > 0.0) || !std::isfinite(Gamma))
    throw ArgumentError("DecoherenceParams: Gamma must be > 0");
}

std::complex<double> DecoherenceParams::d() const {
  return std::sqrt(std::complex<double>{d_radicand(), 0.0});
}

MarkovianEta::MarkovianEta(double eta_in) : eta(eta_in) {
  if (!(eta >= 0.0 && eta <= 1.0))
    throw ArgumentError("MarkovianEta: eta must lie in [0,1]");
}

DepolarizingParams::DepolarizingParams(const std::array<double, 3>& ratios_in,
                                       double Gamma_in)
    : ratios(ratios_in), Gamma(Gamma_in) {
  for (double r : ratios)
    if (!(r > 0.0) || !std::isfinite(r))
      throw ArgumentError("DepolarizingParams: ratios must be > 0");
  if (!(Gamma > 0.0) || !std::isfinite(Gamma))
    throw ArgumentError("DepolarizingParams: Gamma must be > 0");
}

double DepolarizingParams::d_radicand(int i) const {
  if (i < 0 || i > 2)
    throw ArgumentError("DepolarizingParams::d_radicand: index must be 0..2");
  const int j = (i + 1) % 3;
  const int k = (i + 2) % 3;
  return 16.0 * (ratios[j] * ratios[j] + ratios[k] * ratios[k]) - 1.0;
}

std::complex<double> DepolarizingParams::d(int i) const {
  return std::sqrt(std::complex<double>{d_radicand(i), 0.0});
}

double damping_p(const DecoherenceParams& params, double t) {
  require_time(t, "damping_p");
  const double a =
      damped_oscillation(params.d_radicand(), params.Gamma, 0.5 * t);
  return std::min(1.0, a * a);
}

double damping_p_markovian(const MarkovianEta& eta) { return 1.0 - eta.eta; }

KrausSet damping_kraus(double p) {
  p = require_unit_interval(p, "damping_kraus");
  KrausSet ks;
  ks.label = "damping";
  Mat2 k0, k1;
  k0 << 1, 0, 0, std::sqrt(p);
  k1 << 0, std::sqrt(1.0 - p), 0, 0;
  ks.ops = {k0, k1};
  return ks;
}

double dephasing_p(const DecoherenceParams& params, double t) {
  require_time(t, "dephasing_p");
  // expm1 keeps the exponent accurate for Gamma*t << 1
  const double inner = t + std::expm1(-params.Gamma * t) / params.Gamma;
  return std::exp(-0.5 * params.gamma * inner);
}

double dephasing_p_markovian(const MarkovianEta& eta) {
  return std::sqrt(1.0 - eta.eta);
}

KrausSet dephasing_kraus(double p) {
  p = require_unit_interval(p, "dephasing_kraus");
  KrausSet ks;
  ks.label = "dephasing";
  Mat2 k0, k1;
  k0 << 1, 0, 0, p;
  k1 << 0, 0, 0, std::sqrt(1.0 - p * p);
  ks.ops = {k0, k1};
  return ks;
}

OmegaTriple depolarizing_omegas(const DepolarizingParams& params, double t) {
  require_time(t, "depolarizing_omegas");
  OmegaTriple out;
  const double theta = 0.5 * params.Gamma * t;
  for (int i = 0; i < 3; ++i)
    out.omega[i] = damped_oscillation(params.d_radicand(i), 1.0, theta);
  return out;
}

OmegaTriple depolarizing_omegas_markovian(const DepolarizingParams& params,
                                          double t) {
  require_time(t, "depolarizing_omegas_markovian");
  OmegaTriple out;
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3;
    const int k = (i + 2) % 3;
    // gamma_i = (4/Gamma)(gamma_j^2 + gamma_k^2) with gamma_j = r_j * Gamma
    const double rate = 4.0 * params.Gamma *
                        (params.ratios[j] * params.ratios[j] +
                         params.ratios[k] * params.ratios[k]);
    out.omega[i] = std::exp(-0.5 * rate * t);
  }
  return out;
}

ProbQuad depolarizing_probs(const OmegaTriple& omegas, double t_context) {
  const double o1 = omegas.omega[0];
  const double o2 = omegas.omega[1];
  const double o3 = omegas.omega[2];
  ProbQuad out;
  out.p = {0.25 * (1.0 + o1 - o2 - o3), 0.25 * (1.0 - o1 + o2 - o3),
           0.25 * (1.0 - o1 - o2 + o3), 0.25 * (1.0 + o1 + o2 + o3)};
  for (int i = 0; i < 4; ++i) {
    if (out.p[i] >= 0.0) continue;
    if (out.p[i] < kProbAbort) {
      std::ostringstream os;
      os << "depolarizing channel is not completely positive: P_" << (i + 1)
         << " = " << out.p[i];
      if (t_context >= 0.0) os << " at t = " << t_context;
      throw ChannelError(os.str());
    }
    if (out.p[i] < kProbClamp) out.clamp_warning = true;
    out.p[i] = 0.0;
  }
  return out;
}

KrausSet depolarizing_kraus(const ProbQuad& probs) {
  KrausSet ks;
  ks.label = "depolarizing";
  ks.ops = {std::sqrt(probs.p[0]) * pauli(1), std::sqrt(probs.p[1]) * pauli(2),
            std::sqrt(probs.p[2]) * pauli(3), std::sqrt(probs.p[3]) * pauli(0)};
  return ks;
}

double homogeneous_depol_bound_ratio() {
  const double x = M_PI / std::log(3.0);
  return std::sqrt((1.0 + x * x) / 32.0);
}

double homogeneous_depol_bound(double Gamma) {
  if (!(Gamma > 0.0) || !std::isfinite(Gamma))
    throw ArgumentError("homogeneous_depol_bound: Gamma must be > 0");
  return Gamma * homogeneous_depol_bound_ratio();
}

}  // namespace nmqc
