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

#include "core/analytic.hpp"

#include <cmath>

namespace nmqc {

namespace {

constexpr const char* kQuarterNote =
    "prefactor 1/4 pinned by F(0)=1; the circulating 1/2 normalization is "
    "rejected (it gives F(0)>1)";

void require_unit(double p, const char* fn) {
  if (!(p >= 0.0 && p <= 1.0))
    throw ArgumentError(std::string(fn) +
                        ": slot decoherence values must lie in [0,1]");
}

void require_ps(const SlotPs& ps, const char* fn) {
  require_unit(ps.p1, fn);
  require_unit(ps.p2, fn);
  require_unit(ps.p3, fn);
  require_unit(ps.p4, fn);
}

AnalyticResult make(double value, const char* id, bool quarter_note = false) {
  AnalyticResult r;
  r.value = value;
  r.formula_id = id;
  if (quarter_note) r.normalization_note = kQuarterNote;
  return r;
}

double pow2(double x) { return x * x; }
double pow3(double x) { return x * x * x; }
double pow4(double x) { return x * x * x * x; }

}  // namespace

AnalyticResult cqd_damping(const SlotPs& ps, BellKind kind) {
  require_ps(ps, "cqd_damping");
  // single square root of the full product: every p_i >= 0
  const double root = std::sqrt(ps.p1 * ps.p2 * ps.p3 * ps.p4);
  const double p34 = ps.p3 * ps.p4;
  if (is_psi_family(kind)) {
    const double f = 0.25 * (1.0 + 2.0 * root +
                             ps.p1 * p34 * (2.0 * ps.p2 - 1.0) +
                             p34 * (1.0 - ps.p2));
    return make(f, "cqd-damping-psi");
  }
  const double f =
      0.25 * (1.0 + 2.0 * root + ps.p1 * p34 + p34 * (ps.p2 - 1.0));
  return make(f, "cqd-damping-phi");
}

AnalyticResult cqd_dephasing(const SlotPs& ps) {
  require_ps(ps, "cqd_dephasing");
  return make(0.5 * (1.0 + ps.p1 * ps.p2 * ps.p3 * ps.p4), "cqd-dephasing");
}

AnalyticResult cqd_depolarizing(const OmegaTriple& om) {
  const double f = 0.25 * (1.0 + pow4(om.omega[0]) + pow4(om.omega[1]) +
                           pow4(om.omega[2]));
  return make(f, "cqd-depolarizing", true);
}

AnalyticResult cdsqc_damping(const SlotPs& ps, BellKind kind) {
  SlotPs reduced = ps;
  reduced.p3 = 1.0;
  AnalyticResult r = cqd_damping(reduced, kind);
  r.formula_id = is_psi_family(kind) ? "cdsqc-damping-psi" : "cdsqc-damping-phi";
  return r;
}

AnalyticResult cdsqc_dephasing(const SlotPs& ps) {
  SlotPs reduced = ps;
  reduced.p3 = 1.0;
  AnalyticResult r = cqd_dephasing(reduced);
  r.formula_id = "cdsqc-dephasing";
  return r;
}

AnalyticResult cdsqc_depolarizing(const OmegaTriple& om) {
  const double f = 0.25 * (1.0 + pow3(om.omega[0]) + pow3(om.omega[1]) +
                           pow3(om.omega[2]));
  return make(f, "cdsqc-depolarizing", true);
}

AnalyticResult qd_family_damping(double pa, double pb) {
  require_unit(pa, "qd_family_damping");
  require_unit(pb, "qd_family_damping");
  const double f = 0.25 * (1.0 + 2.0 * std::sqrt(pa * pb) + pa * pb);
  return make(f, "qd-family-damping");
}

AnalyticResult qd_family_dephasing(double pa, double pb) {
  require_unit(pa, "qd_family_dephasing");
  require_unit(pb, "qd_family_dephasing");
  return make(0.5 * (1.0 + pa * pb), "qd-family-dephasing");
}

AnalyticResult qd_family_depolarizing(const OmegaTriple& om) {
  const double f = 0.25 * (1.0 + pow2(om.omega[0]) + pow2(om.omega[1]) +
                           pow2(om.omega[2]));
  return make(f, "qd-family-depolarizing", true);
}

AnalyticResult bbm_damping(double p3) {
  require_unit(p3, "bbm_damping");
  return make(0.25 * (1.0 + 2.0 * std::sqrt(p3) + p3), "bbm-damping");
}

AnalyticResult bbm_dephasing(double p3) {
  require_unit(p3, "bbm_dephasing");
  return make(0.5 * (1.0 + p3), "bbm-dephasing");
}

AnalyticResult bbm_depolarizing(const OmegaTriple& om) {
  const double f = 0.25 * (1.0 + om.omega[0] + om.omega[1] + om.omega[2]);
  return make(f, "bbm-depolarizing", true);
}

AnalyticResult bb84_damping(double p3) {
  require_unit(p3, "bb84_damping");
  return make(0.25 * (2.0 + std::sqrt(p3) + p3), "bb84-damping");
}

AnalyticResult bb84_dephasing(double p3) {
  require_unit(p3, "bb84_dephasing");
  return make(0.25 * (3.0 + p3), "bb84-dephasing");
}

AnalyticResult bb84_depolarizing(const OmegaTriple& om) {
  const double f = 0.25 * (2.0 + om.omega[0] + om.omega[2]);
  return make(f, "bb84-depolarizing", true);
}

AnalyticResult ekert_damping(double p1, double p2, BellKind kind) {
  SlotPs ps;
  ps.p1 = p1;
  ps.p2 = p2;
  AnalyticResult r = cqd_damping(ps, kind);
  r.formula_id = is_psi_family(kind) ? "ekert-damping-psi" : "ekert-damping-phi";
  return r;
}

AnalyticResult ekert_dephasing(double p1, double p2) {
  require_unit(p1, "ekert_dephasing");
  require_unit(p2, "ekert_dephasing");
  return make(0.5 * (1.0 + p1 * p2), "ekert-dephasing");
}

AnalyticResult ekert_depolarizing(const OmegaTriple& om) {
  AnalyticResult r = qd_family_depolarizing(om);
  r.formula_id = "ekert-depolarizing";
  return r;
}

AnalyticResult b92_damping(double p3) {
  require_unit(p3, "b92_damping");
  return make(0.25 * (3.0 + std::sqrt(p3)), "b92-damping");
}

AnalyticResult b92_dephasing(double p3) {
  require_unit(p3, "b92_dephasing");
  return make(0.25 * (3.0 + p3), "b92-dephasing");
}

AnalyticResult b92_depolarizing(const OmegaTriple& om) {
  const double f = 0.25 * (2.0 + om.omega[0] + om.omega[2]);
  return make(f, "b92-depolarizing");
}

SlotPs slot_ps_at(const SlotAssignment& assignment, double t) {
  if (assignment.kind == ChannelKind::Depolarizing)
    throw ConfigError("slot_ps_at: depolarizing slots have no scalar p(t)");
  SlotPs ps;
  ps.p1 = assignment.slot_p(1, t);
  ps.p2 = assignment.slot_p(2, t);
  ps.p3 = assignment.slot_p(3, t);
  ps.p4 = assignment.slot_p(4, t);
  return ps;
}

AnalyticResult analytic_fidelity(Protocol protocol,
                                 const SlotAssignment& assignment, double t,
                                 BellKind kind) {
  if (!(t >= 0.0) || !std::isfinite(t))
    throw ArgumentError("analytic_fidelity: time must be finite and >= 0");

  if (assignment.kind == ChannelKind::Depolarizing) {
    const OmegaTriple om = assignment.omegas(t);
    switch (protocol) {
      case Protocol::Cqd: return cqd_depolarizing(om);
      case Protocol::Cdsqc: return cdsqc_depolarizing(om);
      case Protocol::Qd:
      case Protocol::Qsdc:
      case Protocol::Dsqc:
      case Protocol::Qka: return qd_family_depolarizing(om);
      case Protocol::Bbm: return bbm_depolarizing(om);
      case Protocol::Bb84: return bb84_depolarizing(om);
      case Protocol::Ekert: return ekert_depolarizing(om);
      case Protocol::B92: return b92_depolarizing(om);
    }
    throw ConfigError("analytic_fidelity: unknown protocol");
  }

  const SlotPs ps = slot_ps_at(assignment, t);
  if (assignment.kind == ChannelKind::Damping) {
    switch (protocol) {
      case Protocol::Cqd: return cqd_damping(ps, kind);
      case Protocol::Cdsqc: return cdsqc_damping(ps, kind);
      case Protocol::Qd:
      case Protocol::Qsdc:
      case Protocol::Qka: return qd_family_damping(ps.p3, ps.p4);
      case Protocol::Dsqc: return qd_family_damping(ps.p2, ps.p3);
      case Protocol::Bbm: return bbm_damping(ps.p3);
      case Protocol::Bb84: return bb84_damping(ps.p3);
      case Protocol::Ekert: return ekert_damping(ps.p1, ps.p2, kind);
      case Protocol::B92: return b92_damping(ps.p3);
    }
    throw ConfigError("analytic_fidelity: unknown protocol");
  }

  switch (protocol) {
    case Protocol::Cqd: return cqd_dephasing(ps);
    case Protocol::Cdsqc: return cdsqc_dephasing(ps);
    case Protocol::Qd:
    case Protocol::Qsdc:
    case Protocol::Qka: return qd_family_dephasing(ps.p3, ps.p4);
    case Protocol::Dsqc: return qd_family_dephasing(ps.p2, ps.p3);
    case Protocol::Bbm: return bbm_dephasing(ps.p3);
    case Protocol::Bb84: return bb84_dephasing(ps.p3);
    case Protocol::Ekert: return ekert_dephasing(ps.p1, ps.p2);
    case Protocol::B92: return b92_dephasing(ps.p3);
  }
  throw ConfigError("analytic_fidelity: unknown protocol");
}

}  // namespace nmqc
