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
// Each cryptographic protocol is a schedule of noise slots, encoding
// ensembles, and a reference-state rule. oracle_fidelity() computes the
// average fidelity by brute-force density-matrix simulation with exact
// enumeration of the encoding combinations; it is the ground truth the
// closed-form evaluators are checked against.

#ifndef NMQC_CORE_PROTOCOL_HPP
#define NMQC_CORE_PROTOCOL_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "core/linalg.hpp"
#include "core/noise.hpp"
#include "core/types.hpp"

namespace nmqc {

enum class Protocol { Cqd, Cdsqc, Qd, Qsdc, Dsqc, Qka, Bbm, Bb84, Ekert, B92 };

enum class ChannelKind { Damping, Dephasing, Depolarizing };

// Equal-weight set of 2x2 unitaries one party applies to one qubit. The full
// Pauli ensemble {I, X, iY, Z} encodes bit values 00, 01, 10, 11.
struct EncodingEnsemble {
  std::vector<Mat2> unitaries;
  int qubit = 1;
};

EncodingEnsemble full_pauli_ensemble(int qubit);

struct Leg {
  enum class Kind { Slot, PairSlot, Encoding };
  Kind kind;
  // Slot: noise slot `slot` acting on `qubit`.
  // PairSlot: slot `slot` on qubit 1 and `pair_slot` on qubit 2, applied as
  // one double Kraus sum (independent environments).
  // Encoding: `ensemble` applied on its qubit by `party`.
  int slot = 0;
  int qubit = 0;
  int pair_slot = 0;
  EncodingEnsemble ensemble;
  std::string party;
};

struct ProtocolSchedule {
  Protocol protocol;
  bool single_qubit = false;
  BellKind initial = BellKind::PsiPlus;   // Bell-pair protocols
  std::vector<Vec2> ensemble_states;      // single-qubit protocols
  std::vector<Leg> legs;

  std::vector<int> active_slots() const;
  std::size_t encoding_combinations() const;
};

// BB84 uses {|0>,|1>,|+>,|->}, B92 the nonorthogonal pair {|0>,|+>}.
std::vector<Vec2> bb84_states();
std::vector<Vec2> b92_states();

// Canonical schedule per protocol. `initial` is ignored by the single-qubit
// protocols.
ProtocolSchedule schedule_for(Protocol protocol,
                              BellKind initial = BellKind::PsiPlus);

const char* protocol_name(Protocol p);
const char* channel_name(ChannelKind k);
const char* bell_kind_name(BellKind k);

// Which channel acts in each noise slot. All active slots carry the same
// channel kind; depolarizing runs use a single parameter set for every slot.
struct SlotChannel {
  enum class Mode { Noiseless, Lorentzian, MarkovianEta };
  Mode mode = Mode::Noiseless;
  std::optional<DecoherenceParams> params;
  double eta = 0.0;
};

struct SlotAssignment {
  ChannelKind kind = ChannelKind::Damping;
  std::array<SlotChannel, 4> slots;
  std::optional<DepolarizingParams> depol;
  bool depol_markovian = false;

  static SlotAssignment lorentzian(
      ChannelKind kind,
      const std::array<std::optional<DecoherenceParams>, 4>& per_slot);
  static SlotAssignment uniform_lorentzian(ChannelKind kind,
                                           const DecoherenceParams& params);
  static SlotAssignment markovian_eta(
      ChannelKind kind, const std::array<std::optional<double>, 4>& etas);
  static SlotAssignment depolarizing(const DepolarizingParams& params,
                                     bool markovian = false);

  // Decoherence function value of slot 1..4 at time t (1 for noiseless
  // slots). Only meaningful for damping/dephasing assignments.
  double slot_p(int slot, double t) const;

  // Omega triple at time t for depolarizing assignments.
  OmegaTriple omegas(double t) const;
};

// Average fidelity by direct Kraus-sum simulation: for Bell protocols the
// mean over all encoding combinations of <psi'|rho'|psi'>, for single-qubit
// protocols the mean over the state ensemble. Every intermediate density
// matrix is validated.
double oracle_fidelity(const ProtocolSchedule& schedule,
                       const SlotAssignment& assignment, double t);

// One oracle evaluation per grid point; the grid must be non-empty, sorted,
// and non-negative.
std::vector<std::pair<double, double>> oracle_curve(
    const ProtocolSchedule& schedule, const SlotAssignment& assignment,
    std::span<const double> t_grid);

}  // namespace nmqc

#endif  // NMQC_CORE_PROTOCOL_HPP
