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
//
// Time-dependent decoherence functions and Kraus sets for Lorentzian-bath
// damping, dephasing, and depolarizing channels, plus their Markovian limits.
// The oscillatory decoherence functions are continued analytically through
// the critically damped and overdamped parameter regimes.

#ifndef NMQC_CORE_NOISE_HPP
#define NMQC_CORE_NOISE_HPP

#include <array>
#include <complex>

#include "core/linalg.hpp"
#include "core/types.hpp"

namespace nmqc {

// Coupling strength gamma (inverse qubit relaxation time) and line width
// Gamma (inverse reservoir correlation time) for one damping or dephasing
// channel slot. Gamma << gamma is the strongly non-Markovian regime,
// Gamma >> gamma the Markovian one.
struct DecoherenceParams {
  double gamma;
  double Gamma;

  DecoherenceParams(double gamma_in, double Gamma_in);

  // Oscillation frequency d = sqrt(2*gamma*Gamma - Gamma^2); imaginary in
  // the overdamped regime.
  double d_radicand() const { return 2.0 * gamma * Gamma - Gamma * Gamma; }
  std::complex<double> d() const;
};

// Decoherence rate eta of the memoryless damping/dephasing channels.
struct MarkovianEta {
  double eta;
  explicit MarkovianEta(double eta_in);
};

// Pauli-channel decay triple: dimensionless ratios r_i = gamma_i / Gamma_i
// per Pauli axis and one overall bandwidth parameter Gamma.
struct DepolarizingParams {
  std::array<double, 3> ratios;
  double Gamma;

  DepolarizingParams(const std::array<double, 3>& ratios_in, double Gamma_in);

  // d_i = sqrt(16 (r_j^2 + r_k^2) - 1) built from the two other axes;
  // index is 0-based.
  double d_radicand(int i) const;
  std::complex<double> d(int i) const;
};

// Pauli-component decay factors (Omega_1, Omega_2, Omega_3); each starts at
// 1 and stays within [-1, 1].
struct OmegaTriple {
  std::array<double, 3> omega;
};

// Pauli-operation probabilities (P_1..P_4); they sum to 1 exactly and
// P_4(0) = 1 (identity channel at t = 0).
struct ProbQuad {
  std::array<double, 4> p;
  // set when any component fell in the (-1e-8, -1e-12) band and was clamped
  bool clamp_warning = false;
};

// Damping decoherence function
//   p(t) = exp(-Gamma t) {cos(d t/2) + (Gamma/d) sin(d t/2)}^2.
double damping_p(const DecoherenceParams& params, double t);

// Markovian limit p = 1 - eta.
double damping_p_markovian(const MarkovianEta& eta);

// K0 = |0><0| + sqrt(p)|1><1|,  K1 = sqrt(1-p)|0><1|.
KrausSet damping_kraus(double p);

// Dephasing decoherence function
//   p(t) = exp[-(gamma/2){t + (1/Gamma)(exp(-Gamma t) - 1)}],
// monotone non-increasing with p(0) = 1.
double dephasing_p(const DecoherenceParams& params, double t);

// Markovian limit p = sqrt(1 - eta).
double dephasing_p_markovian(const MarkovianEta& eta);

// K0 = |0><0| + p|1><1|,  K1 = sqrt(1-p^2)|1><1|.
KrausSet dephasing_kraus(double p);

// Omega_i = exp(-Gamma t/2)[cos(Gamma d_i t/2) + (1/d_i) sin(Gamma d_i t/2)].
OmegaTriple depolarizing_omegas(const DepolarizingParams& params, double t);

// Markovian limit Omega_i = exp(-gamma_i t/2), gamma_i = (4/Gamma)(gamma_j^2
// + gamma_k^2).
OmegaTriple depolarizing_omegas_markovian(const DepolarizingParams& params,
                                          double t);

// P_1 = (1/4)[1 + O1 - O2 - O3], ..., P_4 = (1/4)[1 + O1 + O2 + O3].
// Components in [-1e-12, 0) are clamped to 0; below -1e-8 the channel is not
// completely positive and a ChannelError naming the index (and t, when
// supplied) is thrown. t_context is for error messages only.
ProbQuad depolarizing_probs(const OmegaTriple& omegas,
                            double t_context = -1.0);

// {sqrt(P1) X, sqrt(P2) Y, sqrt(P3) Z, sqrt(P4) I}. Pairing P4 with the
// identity is forced by P4(0) = 1.
KrausSet depolarizing_kraus(const ProbQuad& probs);

// Largest homogeneous coupling strength keeping the depolarizing map
// completely positive at all times: c = Gamma * sqrt((1 + (pi/ln 3)^2)/32).
double homogeneous_depol_bound(double Gamma);
double homogeneous_depol_bound_ratio();

}  // namespace nmqc

#endif  // NMQC_CORE_NOISE_HPP
