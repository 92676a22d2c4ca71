#include "heomesd/qops.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "heomesd/error.hpp"

namespace heomesd {

ComplexMatrix4::ComplexMatrix4(std::initializer_list<Complex> row_major)
    : entries_{} {
  std::size_t i = 0;
  for (const auto& v : row_major) {
    if (i == kSize) {
      throw Error(ErrorKind::Domain, "ComplexMatrix4: more than 16 entries");
    }
    entries_[i++] = v;
  }
}

ComplexMatrix4 ComplexMatrix4::identity() {
  ComplexMatrix4 m;
  for (std::size_t i = 0; i < kDim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix4& ComplexMatrix4::operator+=(const ComplexMatrix4& other) {
  for (std::size_t i = 0; i < kSize; ++i) entries_[i] += other.entries_[i];
  return *this;
}

ComplexMatrix4& ComplexMatrix4::operator-=(const ComplexMatrix4& other) {
  for (std::size_t i = 0; i < kSize; ++i) entries_[i] -= other.entries_[i];
  return *this;
}

ComplexMatrix4& ComplexMatrix4::operator*=(Complex scale) {
  for (auto& v : entries_) v *= scale;
  return *this;
}

ComplexMatrix4 ComplexMatrix4::adjoint() const {
  ComplexMatrix4 out;
  for (std::size_t r = 0; r < kDim; ++r)
    for (std::size_t c = 0; c < kDim; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

ComplexMatrix4 ComplexMatrix4::conjugate() const {
  ComplexMatrix4 out;
  for (std::size_t i = 0; i < kSize; ++i) out.entries_[i] = std::conj(entries_[i]);
  return out;
}

ComplexMatrix4 ComplexMatrix4::transpose() const {
  ComplexMatrix4 out;
  for (std::size_t r = 0; r < kDim; ++r)
    for (std::size_t c = 0; c < kDim; ++c) out(c, r) = (*this)(r, c);
  return out;
}

Complex ComplexMatrix4::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < kDim; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix4::max_abs() const {
  double m = 0.0;
  for (const auto& v : entries_) m = std::max(m, std::abs(v));
  return m;
}

bool ComplexMatrix4::is_finite() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Complex& v) {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
  });
}

ComplexMatrix4 operator+(ComplexMatrix4 lhs, const ComplexMatrix4& rhs) {
  return lhs += rhs;
}

ComplexMatrix4 operator-(ComplexMatrix4 lhs, const ComplexMatrix4& rhs) {
  return lhs -= rhs;
}

ComplexMatrix4 operator*(const ComplexMatrix4& lhs, const ComplexMatrix4& rhs) {
  ComplexMatrix4 out;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t k = 0; k < 4; ++k) {
      const Complex a = lhs(r, k);
      if (a == Complex{}) continue;
      for (std::size_t c = 0; c < 4; ++c) out(r, c) += a * rhs(k, c);
    }
  return out;
}

ComplexMatrix4 operator*(Complex scale, ComplexMatrix4 m) { return m *= scale; }

ComplexMatrix4 commutator(const ComplexMatrix4& a, const ComplexMatrix4& b) {
  return a * b - b * a;
}

double hermiticity_error(const ComplexMatrix4& m) {
  return (m - m.adjoint()).max_abs();
}

ComplexMatrix4 kron(const std::array<Complex, 4>& a,
                    const std::array<Complex, 4>& b) {
  ComplexMatrix4 out;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l)
          out(2 * i + k, 2 * j + l) = a[2 * i + j] * b[2 * k + l];
  return out;
}

DensityMatrix::DensityMatrix(const ComplexMatrix4& m,
                             const DensityTolerances& tol)
    : matrix_(m) {
  if (!m.is_finite()) {
    throw Error(ErrorKind::InvalidState, "density matrix has non-finite entries");
  }
  const double herm = hermiticity_error(m);
  if (herm > tol.hermitian) {
    std::ostringstream ss;
    ss << "density matrix is not Hermitian (max |rho - rho^dagger| = " << herm
       << ")";
    throw Error(ErrorKind::InvalidState, ss.str());
  }
  const Complex tr = m.trace();
  if (std::abs(tr - 1.0) > tol.trace) {
    std::ostringstream ss;
    ss << "density matrix trace is " << tr.real() << ", expected 1";
    throw Error(ErrorKind::InvalidState, ss.str());
  }
  Eigen::Matrix4cd h;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      // symmetrize so the Hermitian solver sees an exactly Hermitian input
      h(r, c) = 0.5 * (m(r, c) + std::conj(m(c, r)));
    }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(h, Eigen::EigenvaluesOnly);
  const double lowest = es.eigenvalues().minCoeff();
  if (lowest < -tol.positivity) {
    std::ostringstream ss;
    ss << "density matrix is not positive semidefinite (lowest eigenvalue "
       << lowest << ")";
    throw Error(ErrorKind::InvalidState, ss.str());
  }
}

DensityMatrix DensityMatrix::unchecked(const ComplexMatrix4& m) {
  return DensityMatrix(m, Unchecked{});
}

void SystemParams::validate() const {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw Error(ErrorKind::Domain, "epsilon must be positive");
  }
  if (!std::isfinite(zeta)) {
    throw Error(ErrorKind::Domain, "zeta must be finite");
  }
}

namespace {

// a^+ + a on a single qubit, ordered (e, g).
constexpr std::array<Complex, 4> kFlip{0.0, 1.0, 1.0, 0.0};
constexpr std::array<Complex, 4> kId2{1.0, 0.0, 0.0, 1.0};
// a^+ a: occupied in the excited state.
constexpr std::array<Complex, 4> kNumber{1.0, 0.0, 0.0, 0.0};

}  // namespace

ComplexMatrix4 build_system_hamiltonian(const SystemParams& params) {
  ComplexMatrix4 h = kron(kNumber, kId2) + kron(kId2, kNumber);
  h *= params.epsilon;
  h += params.zeta * kron(kFlip, kFlip);
  return h;
}

ComplexMatrix4 coupling_operator(int qubit) {
  switch (qubit) {
    case 1:
      return kron(kFlip, kId2);
    case 2:
      return kron(kId2, kFlip);
    default:
      throw Error(ErrorKind::Domain,
                  "coupling_operator: qubit index must be 1 or 2, got " +
                      std::to_string(qubit));
  }
}

}  // namespace heomesd
