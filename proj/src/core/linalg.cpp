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

#include "core/linalg.hpp"

#include <cmath>
#include <sstream>

namespace nmqc {

namespace {

constexpr double kCompletenessTol = 1e-8;
constexpr double kTraceTol = 1e-10;
constexpr double kHermTol = 1e-10;
constexpr double kEigTol = -1e-9;

const cplx kI{0.0, 1.0};

}  // namespace

bool is_psi_family(BellKind kind) {
  return kind == BellKind::PsiPlus || kind == BellKind::PsiMinus;
}

Mat2 pauli(int index) {
  Mat2 m;
  switch (index) {
    case 0:
      m << 1, 0, 0, 1;
      break;
    case 1:
      m << 0, 1, 1, 0;
      break;
    case 2:
      m << 0, -kI, kI, 0;
      break;
    case 3:
      m << 1, 0, 0, -1;
      break;
    default:
      throw ArgumentError("pauli: index must be in 0..3, got " +
                          std::to_string(index));
  }
  return m;
}

Vec4 bell_state(BellKind kind) {
  const double r = 1.0 / std::sqrt(2.0);
  Vec4 v = Vec4::Zero();
  switch (kind) {
    case BellKind::PsiPlus:
      v(0) = r;
      v(3) = r;
      break;
    case BellKind::PsiMinus:
      v(0) = r;
      v(3) = -r;
      break;
    case BellKind::PhiPlus:
      v(1) = r;
      v(2) = r;
      break;
    case BellKind::PhiMinus:
      v(1) = r;
      v(2) = -r;
      break;
  }
  return v;
}

Mat4 tensor(const Mat2& a, const Mat2& b) {
  Mat4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

Mat4 embed_on_qubit(const Mat2& k, int qubit) {
  switch (qubit) {
    case 1:
      return tensor(k, Mat2::Identity());
    case 2:
      return tensor(Mat2::Identity(), k);
    default:
      throw ArgumentError("embed_on_qubit: qubit must be 1 or 2, got " +
                          std::to_string(qubit));
  }
}

double completeness_defect(const KrausSet& ks) {
  Mat2 sum = Mat2::Zero();
  for (const Mat2& k : ks.ops) sum += k.adjoint() * k;
  return (sum - Mat2::Identity()).cwiseAbs().maxCoeff();
}

namespace {

void require_complete(const KrausSet& ks) {
  const double defect = completeness_defect(ks);
  if (defect > kCompletenessTol) {
    std::ostringstream os;
    os << "Kraus set '" << ks.label
       << "' violates completeness: max |sum K^dag K - I| = " << defect;
    throw ChannelError(os.str());
  }
}

}  // namespace

Mat2 apply_channel(const Mat2& rho, const KrausSet& ks) {
  require_complete(ks);
  Mat2 out = Mat2::Zero();
  for (const Mat2& k : ks.ops) out += k * rho * k.adjoint();
  return out;
}

Mat4 apply_channel_on_qubit(const Mat4& rho, const KrausSet& ks, int qubit) {
  require_complete(ks);
  Mat4 out = Mat4::Zero();
  for (const Mat2& k : ks.ops) {
    const Mat4 e = embed_on_qubit(k, qubit);
    out += e * rho * e.adjoint();
  }
  return out;
}

Mat4 apply_channel_pair(const Mat4& rho, const KrausSet& on_qubit1,
                        const KrausSet& on_qubit2) {
  require_complete(on_qubit1);
  require_complete(on_qubit2);
  Mat4 out = Mat4::Zero();
  for (const Mat2& a : on_qubit1.ops)
    for (const Mat2& b : on_qubit2.ops) {
      const Mat4 e = tensor(a, b);
      out += e * rho * e.adjoint();
    }
  return out;
}

namespace {

template <typename Vec, typename Mat>
double fidelity_impl(const Vec& psi, const Mat& rho) {
  const cplx q = psi.dot(rho * psi);
  if (std::abs(q.imag()) > 1e-10) {
    std::ostringstream os;
    os << "fidelity_pure: quadratic form has imaginary part " << q.imag()
       << "; rho is not Hermitian";
    throw NumericsError(os.str());
  }
  double f = q.real();
  if (f < -1e-12 || f > 1.0 + 1e-12) {
    std::ostringstream os;
    os << "fidelity_pure: value " << f << " outside [0,1] beyond round-off";
    throw NumericsError(os.str());
  }
  return std::min(1.0, std::max(0.0, f));
}

template <typename Mat>
std::vector<std::string> validate_impl(const Mat& rho) {
  std::vector<std::string> out;
  const double tr_err = std::abs(rho.trace() - cplx{1.0, 0.0});
  if (tr_err > kTraceTol) {
    std::ostringstream os;
    os << "trace deviates from 1 by " << tr_err;
    out.push_back(os.str());
  }
  const double herm_err = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  if (herm_err > kHermTol) {
    std::ostringstream os;
    os << "non-Hermitian: max |rho - rho^dag| = " << herm_err;
    out.push_back(os.str());
  } else {
    // Eigenvalues are only meaningful for a (near-)Hermitian matrix.
    Eigen::SelfAdjointEigenSolver<Mat> solver(rho, Eigen::EigenvaluesOnly);
    const double min_eig = solver.eigenvalues().minCoeff();
    if (min_eig < kEigTol) {
      std::ostringstream os;
      os << "negative eigenvalue " << min_eig;
      out.push_back(os.str());
    }
  }
  return out;
}

}  // namespace

double fidelity_pure(const Vec2& psi, const Mat2& rho) {
  return fidelity_impl(psi, rho);
}

double fidelity_pure(const Vec4& psi, const Mat4& rho) {
  return fidelity_impl(psi, rho);
}

std::vector<std::string> validate_density(const Mat2& rho) {
  return validate_impl(rho);
}

std::vector<std::string> validate_density(const Mat4& rho) {
  return validate_impl(rho);
}

}  // namespace nmqc
