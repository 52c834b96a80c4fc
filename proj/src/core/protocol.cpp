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

#include "core/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace nmqc {

namespace {

constexpr double kUnitaryTol = 1e-12;

void require_unitary(const Mat2& u) {
  const double defect =
      (u.adjoint() * u - Mat2::Identity()).cwiseAbs().maxCoeff();
  if (defect > kUnitaryTol) {
    std::ostringstream os;
    os << "encoding operator is not unitary (defect " << defect << ")";
    throw ArgumentError(os.str());
  }
}

Leg slot_leg(int slot, int qubit) {
  Leg leg;
  leg.kind = Leg::Kind::Slot;
  leg.slot = slot;
  leg.qubit = qubit;
  return leg;
}

Leg pair_slot_leg(int slot_q1, int slot_q2) {
  Leg leg;
  leg.kind = Leg::Kind::PairSlot;
  leg.slot = slot_q1;
  leg.pair_slot = slot_q2;
  return leg;
}

Leg encoding_leg(const std::string& party, const EncodingEnsemble& ensemble) {
  Leg leg;
  leg.kind = Leg::Kind::Encoding;
  leg.qubit = ensemble.qubit;
  leg.ensemble = ensemble;
  leg.party = party;
  return leg;
}

EncodingEnsemble identity_ensemble(int qubit) {
  EncodingEnsemble e;
  e.unitaries = {pauli(0)};
  e.qubit = qubit;
  return e;
}

void check_density(const Mat4& rho) {
  auto violations = validate_density(rho);
  if (violations.empty()) return;
  std::string msg = "intermediate state is not a valid density matrix:";
  for (const auto& v : violations) msg += " " + v + ";";
  throw NumericsError(msg);
}

void check_density(const Mat2& rho) {
  auto violations = validate_density(rho);
  if (violations.empty()) return;
  std::string msg = "intermediate state is not a valid density matrix:";
  for (const auto& v : violations) msg += " " + v + ";";
  throw NumericsError(msg);
}

}  // namespace

EncodingEnsemble full_pauli_ensemble(int qubit) {
  EncodingEnsemble e;
  e.unitaries = {pauli(0), pauli(1), cplx{0.0, 1.0} * pauli(2), pauli(3)};
  e.qubit = qubit;
  for (const Mat2& u : e.unitaries) require_unitary(u);
  return e;
}

std::vector<Vec2> bb84_states() {
  const double r = 1.0 / std::sqrt(2.0);
  Vec2 zero, one, plus, minus;
  zero << 1, 0;
  one << 0, 1;
  plus << r, r;
  minus << r, -r;
  return {zero, one, plus, minus};
}

std::vector<Vec2> b92_states() {
  auto all = bb84_states();
  return {all[0], all[2]};
}

std::vector<int> ProtocolSchedule::active_slots() const {
  std::set<int> slots;
  for (const Leg& leg : legs) {
    if (leg.kind == Leg::Kind::Slot) slots.insert(leg.slot);
    if (leg.kind == Leg::Kind::PairSlot) {
      slots.insert(leg.slot);
      slots.insert(leg.pair_slot);
    }
  }
  return {slots.begin(), slots.end()};
}

std::size_t ProtocolSchedule::encoding_combinations() const {
  std::size_t n = 1;
  for (const Leg& leg : legs)
    if (leg.kind == Leg::Kind::Encoding) n *= leg.ensemble.unitaries.size();
  return n;
}

ProtocolSchedule schedule_for(Protocol protocol, BellKind initial) {
  ProtocolSchedule s;
  s.protocol = protocol;
  s.initial = initial;
  switch (protocol) {
    case Protocol::Cqd:
      // Charlie -> Bob (both qubits), Bob encodes, Bob -> Alice, Alice
      // encodes, Alice -> Bob.
      s.legs = {pair_slot_leg(1, 2),
                encoding_leg("bob", full_pauli_ensemble(1)), slot_leg(3, 1),
                encoding_leg("alice", full_pauli_ensemble(1)),
                slot_leg(4, 1)};
      break;
    case Protocol::Cdsqc:
      s.legs = {pair_slot_leg(1, 2),
                encoding_leg("alice", full_pauli_ensemble(1)),
                slot_leg(4, 1)};
      break;
    case Protocol::Qd:
      s.legs = {encoding_leg("bob", full_pauli_ensemble(1)), slot_leg(3, 1),
                encoding_leg("alice", full_pauli_ensemble(1)),
                slot_leg(4, 1)};
      break;
    case Protocol::Qsdc:
    case Protocol::Qka:
      s.legs = {encoding_leg("bob", identity_ensemble(1)), slot_leg(3, 1),
                encoding_leg("alice", full_pauli_ensemble(1)),
                slot_leg(4, 1)};
      break;
    case Protocol::Dsqc:
      // The untouched qubit travels first; the encoded qubit follows. The
      // two transits commute since the encoding acts on qubit 1 only.
      s.legs = {slot_leg(2, 2), encoding_leg("bob", full_pauli_ensemble(1)),
                slot_leg(3, 1)};
      break;
    case Protocol::Bbm:
      s.legs = {slot_leg(3, 1)};
      break;
    case Protocol::Ekert:
      s.legs = {pair_slot_leg(1, 2)};
      break;
    case Protocol::Bb84:
      s.single_qubit = true;
      s.ensemble_states = bb84_states();
      s.legs = {slot_leg(3, 1)};
      break;
    case Protocol::B92:
      s.single_qubit = true;
      s.ensemble_states = b92_states();
      s.legs = {slot_leg(3, 1)};
      break;
    default:
      throw ArgumentError("schedule_for: unknown protocol tag");
  }
  return s;
}

const char* protocol_name(Protocol p) {
  switch (p) {
    case Protocol::Cqd: return "cqd";
    case Protocol::Cdsqc: return "cdsqc";
    case Protocol::Qd: return "qd";
    case Protocol::Qsdc: return "qsdc";
    case Protocol::Dsqc: return "dsqc";
    case Protocol::Qka: return "qka";
    case Protocol::Bbm: return "bbm";
    case Protocol::Bb84: return "bb84";
    case Protocol::Ekert: return "ekert";
    case Protocol::B92: return "b92";
  }
  return "?";
}

const char* channel_name(ChannelKind k) {
  switch (k) {
    case ChannelKind::Damping: return "damping";
    case ChannelKind::Dephasing: return "dephasing";
    case ChannelKind::Depolarizing: return "depolarizing";
  }
  return "?";
}

const char* bell_kind_name(BellKind k) {
  switch (k) {
    case BellKind::PsiPlus: return "psi+";
    case BellKind::PsiMinus: return "psi-";
    case BellKind::PhiPlus: return "phi+";
    case BellKind::PhiMinus: return "phi-";
  }
  return "?";
}

SlotAssignment SlotAssignment::lorentzian(
    ChannelKind kind,
    const std::array<std::optional<DecoherenceParams>, 4>& per_slot) {
  if (kind == ChannelKind::Depolarizing)
    throw ConfigError(
        "per-slot decoherence parameters apply to damping/dephasing only");
  SlotAssignment a;
  a.kind = kind;
  for (int i = 0; i < 4; ++i) {
    if (!per_slot[i]) continue;
    a.slots[i].mode = SlotChannel::Mode::Lorentzian;
    a.slots[i].params = per_slot[i];
  }
  return a;
}

SlotAssignment SlotAssignment::uniform_lorentzian(
    ChannelKind kind, const DecoherenceParams& params) {
  std::array<std::optional<DecoherenceParams>, 4> per_slot;
  per_slot.fill(params);
  return lorentzian(kind, per_slot);
}

SlotAssignment SlotAssignment::markovian_eta(
    ChannelKind kind, const std::array<std::optional<double>, 4>& etas) {
  if (kind == ChannelKind::Depolarizing)
    throw ConfigError("eta-style slots apply to damping/dephasing only");
  SlotAssignment a;
  a.kind = kind;
  for (int i = 0; i < 4; ++i) {
    if (!etas[i]) continue;
    MarkovianEta checked{*etas[i]};
    a.slots[i].mode = SlotChannel::Mode::MarkovianEta;
    a.slots[i].eta = checked.eta;
  }
  return a;
}

SlotAssignment SlotAssignment::depolarizing(const DepolarizingParams& params,
                                            bool markovian) {
  SlotAssignment a;
  a.kind = ChannelKind::Depolarizing;
  a.depol = params;
  a.depol_markovian = markovian;
  return a;
}

double SlotAssignment::slot_p(int slot, double t) const {
  if (slot < 1 || slot > 4)
    throw ArgumentError("slot_p: slot index must be in 1..4");
  if (kind == ChannelKind::Depolarizing)
    throw ConfigError("slot_p: depolarizing slots have no scalar p(t)");
  const SlotChannel& sc = slots[slot - 1];
  switch (sc.mode) {
    case SlotChannel::Mode::Noiseless:
      return 1.0;
    case SlotChannel::Mode::Lorentzian:
      return kind == ChannelKind::Damping ? damping_p(*sc.params, t)
                                          : dephasing_p(*sc.params, t);
    case SlotChannel::Mode::MarkovianEta:
      return kind == ChannelKind::Damping
                 ? damping_p_markovian(MarkovianEta{sc.eta})
                 : dephasing_p_markovian(MarkovianEta{sc.eta});
  }
  return 1.0;
}

OmegaTriple SlotAssignment::omegas(double t) const {
  if (kind != ChannelKind::Depolarizing || !depol)
    throw ConfigError("omegas: assignment is not depolarizing");
  return depol_markovian ? depolarizing_omegas_markovian(*depol, t)
                         : depolarizing_omegas(*depol, t);
}

namespace {

KrausSet kraus_for_slot(const SlotAssignment& a, int slot, double t) {
  switch (a.kind) {
    case ChannelKind::Damping:
      return damping_kraus(a.slot_p(slot, t));
    case ChannelKind::Dephasing:
      return dephasing_kraus(a.slot_p(slot, t));
    case ChannelKind::Depolarizing:
      return depolarizing_kraus(depolarizing_probs(a.omegas(t), t));
  }
  throw ConfigError("kraus_for_slot: unknown channel kind");
}

double single_qubit_fidelity(const ProtocolSchedule& s,
                             const SlotAssignment& a, double t) {
  const Leg* slot = nullptr;
  for (const Leg& leg : s.legs) {
    if (leg.kind != Leg::Kind::Slot)
      throw ConfigError("single-qubit schedules admit noise slots only");
    if (slot) throw ConfigError("single-qubit schedules use a single slot");
    slot = &leg;
  }
  if (!slot || s.ensemble_states.empty())
    throw ConfigError("single-qubit schedule is incomplete");
  const KrausSet ks = kraus_for_slot(a, slot->slot, t);
  double total = 0.0;
  for (const Vec2& state : s.ensemble_states) {
    const Mat2 rho0 = state * state.adjoint();
    const Mat2 rho = apply_channel(rho0, ks);
    check_density(rho);
    total += fidelity_pure(state, rho);
  }
  return total / static_cast<double>(s.ensemble_states.size());
}

double bell_fidelity(const ProtocolSchedule& s, const SlotAssignment& a,
                     double t) {
  // Kraus sets are identical across encoding combinations; build them once.
  std::array<std::optional<KrausSet>, 4> kraus;
  for (int slot : s.active_slots()) kraus[slot - 1] = kraus_for_slot(a, slot, t);

  std::vector<const Leg*> encodings;
  for (const Leg& leg : s.legs)
    if (leg.kind == Leg::Kind::Encoding) encodings.push_back(&leg);

  const Vec4 initial = bell_state(s.initial);
  std::vector<std::size_t> choice(encodings.size(), 0);
  double total = 0.0;
  std::size_t combos = 0;
  while (true) {
    Vec4 ref = initial;
    Mat4 rho = initial * initial.adjoint();
    std::size_t enc_index = 0;
    for (const Leg& leg : s.legs) {
      switch (leg.kind) {
        case Leg::Kind::Slot:
          rho = apply_channel_on_qubit(rho, *kraus[leg.slot - 1], leg.qubit);
          break;
        case Leg::Kind::PairSlot:
          rho = apply_channel_pair(rho, *kraus[leg.slot - 1],
                                   *kraus[leg.pair_slot - 1]);
          break;
        case Leg::Kind::Encoding: {
          const Mat2& u = leg.ensemble.unitaries[choice[enc_index]];
          const Mat4 e = embed_on_qubit(u, leg.ensemble.qubit);
          rho = e * rho * e.adjoint();
          ref = e * ref;
          ++enc_index;
          break;
        }
      }
      check_density(rho);
    }
    total += fidelity_pure(ref, rho);
    ++combos;

    // odometer over the encoding choices
    std::size_t k = 0;
    while (k < choice.size()) {
      if (++choice[k] < encodings[k]->ensemble.unitaries.size()) break;
      choice[k] = 0;
      ++k;
    }
    if (k == choice.size()) break;
  }
  return total / static_cast<double>(combos);
}

}  // namespace

double oracle_fidelity(const ProtocolSchedule& schedule,
                       const SlotAssignment& assignment, double t) {
  if (!(t >= 0.0) || !std::isfinite(t))
    throw ArgumentError("oracle_fidelity: time must be finite and >= 0");
  if (assignment.kind == ChannelKind::Depolarizing && !assignment.depol)
    throw ConfigError("oracle_fidelity: depolarizing parameters missing");
  return schedule.single_qubit ? single_qubit_fidelity(schedule, assignment, t)
                               : bell_fidelity(schedule, assignment, t);
}

std::vector<std::pair<double, double>> oracle_curve(
    const ProtocolSchedule& schedule, const SlotAssignment& assignment,
    std::span<const double> t_grid) {
  if (t_grid.empty()) throw ArgumentError("oracle_curve: empty time grid");
  if (!std::is_sorted(t_grid.begin(), t_grid.end()))
    throw ArgumentError("oracle_curve: time grid must be sorted");
  std::vector<std::pair<double, double>> out;
  out.reserve(t_grid.size());
  for (double t : t_grid)
    out.emplace_back(t, oracle_fidelity(schedule, assignment, t));
  return out;
}

}  // namespace nmqc
