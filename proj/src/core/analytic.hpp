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
// Closed-form average-fidelity evaluators for every protocol/channel pair,
// plus a dispatcher that derives the slot decoherence values from a
// SlotAssignment. All depolarizing expressions carry the 1/4 prefactor
// pinned by F(0) = 1; the brute-force oracle is the arbiter.

#ifndef NMQC_CORE_ANALYTIC_HPP
#define NMQC_CORE_ANALYTIC_HPP

#include <string>

#include "core/noise.hpp"
#include "core/protocol.hpp"

namespace nmqc {

// Decoherence function values per noise slot, each in [0,1].
struct SlotPs {
  double p1 = 1.0;
  double p2 = 1.0;
  double p3 = 1.0;
  double p4 = 1.0;
};

struct AnalyticResult {
  double value = 0.0;
  std::string formula_id;
  // Set when the 1/4 prefactor replaces a circulating 1/2 normalization
  // that would give F(0) > 1.
  std::string normalization_note;
};

// Controlled quantum dialogue: four noise slots, both parties encode.
// psi family: 1/4 [1 + 2 sqrt(p1 p2 p3 p4) + p1 p3 p4 (2 p2 - 1)
//                  + p3 p4 (1 - p2)]
// phi family: 1/4 [1 + 2 sqrt(p1 p2 p3 p4) + p1 p3 p4 + p3 p4 (p2 - 1)]
AnalyticResult cqd_damping(const SlotPs& ps, BellKind kind);
// 1/2 [1 + p1 p2 p3 p4], Bell-kind independent.
AnalyticResult cqd_dephasing(const SlotPs& ps);
// 1/4 [1 + O1^4 + O2^4 + O3^4]
AnalyticResult cqd_depolarizing(const OmegaTriple& omegas);

// Controlled DSQC: the CQD forms at p3 = 1 (slot 3 unused, one encoder).
AnalyticResult cdsqc_damping(const SlotPs& ps, BellKind kind);
AnalyticResult cdsqc_dephasing(const SlotPs& ps);
// 1/4 [1 + O1^3 + O2^3 + O3^3]
AnalyticResult cdsqc_depolarizing(const OmegaTriple& omegas);

// Quantum dialogue and its one-encoder reductions (QSDC, DSQC, QKA): two
// transits of one qubit; Bell-kind independent.
// damping 1/4 [1 + 2 sqrt(pa pb) + pa pb], dephasing 1/2 [1 + pa pb],
// depolarizing 1/4 [1 + O1^2 + O2^2 + O3^2].
AnalyticResult qd_family_damping(double pa, double pb);
AnalyticResult qd_family_dephasing(double pa, double pb);
AnalyticResult qd_family_depolarizing(const OmegaTriple& omegas);

// Bell-pair QKD, one transit: damping 1/4 [1 + 2 sqrt(p3) + p3],
// dephasing 1/2 [1 + p3], depolarizing 1/4 [1 + O1 + O2 + O3] (= P4).
AnalyticResult bbm_damping(double p3);
AnalyticResult bbm_dephasing(double p3);
AnalyticResult bbm_depolarizing(const OmegaTriple& omegas);

// Four-state single-qubit QKD: damping 1/4 [2 + sqrt(p3) + p3],
// dephasing 1/4 [3 + p3], depolarizing 1/4 [2 + O1 + O3] (no state of the
// ensemble is a sigma_y eigenstate).
AnalyticResult bb84_damping(double p3);
AnalyticResult bb84_dephasing(double p3);
AnalyticResult bb84_depolarizing(const OmegaTriple& omegas);

// Entanglement-based QKD: both qubits transit once from the source, so the
// CQD forms apply at p3 = p4 = 1; the Bell-kind asymmetry survives for
// damping.
AnalyticResult ekert_damping(double p1, double p2, BellKind kind);
AnalyticResult ekert_dephasing(double p1, double p2);
AnalyticResult ekert_depolarizing(const OmegaTriple& omegas);

// Two-state single-qubit QKD over {|0>,|+>}: damping 1/4 [3 + sqrt(p3)],
// dephasing 1/4 [3 + p3], depolarizing 1/4 [2 + O1 + O3]. Derived here and
// validated against the two-state-ensemble oracle.
AnalyticResult b92_damping(double p3);
AnalyticResult b92_dephasing(double p3);
AnalyticResult b92_depolarizing(const OmegaTriple& omegas);

// Slot decoherence values of a damping/dephasing assignment at time t.
SlotPs slot_ps_at(const SlotAssignment& assignment, double t);

// Uniform dispatcher: computes the slot values / Omega triple from the
// assignment at time t and evaluates the matching closed form.
AnalyticResult analytic_fidelity(Protocol protocol,
                                 const SlotAssignment& assignment, double t,
                                 BellKind kind = BellKind::PsiPlus);

}  // namespace nmqc

#endif  // NMQC_CORE_ANALYTIC_HPP
