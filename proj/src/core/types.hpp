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

#ifndef NMQC_CORE_TYPES_HPP
#define NMQC_CORE_TYPES_HPP

#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

namespace nmqc {

using cplx = std::complex<double>;

// Everything in this library lives in the one- or two-qubit Hilbert space,
// so matrices are fixed-size and value-semantic. Basis order for two qubits
// is (|00>, |01>, |10>, |11>) with qubit 1 as the left tensor factor.
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;
using Vec2 = Eigen::Vector2cd;
using Vec4 = Eigen::Vector4cd;

// Bad value passed by the caller.
struct ArgumentError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Inconsistent run configuration (bad key, conflicting options, ...).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A channel failed a physicality check (completeness, complete positivity).
struct ChannelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An internal numerical consistency check failed; indicates a bug, not
// a caller mistake.
struct NumericsError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace nmqc

#endif  // NMQC_CORE_TYPES_HPP
