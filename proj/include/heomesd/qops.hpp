#pragma once

// Dense 4x4 complex algebra for the two-qubit system and the operators that
// act on it. Every matrix in the library uses the product basis
//   |e1 e2>, |e1 g2>, |g1 e2>, |g1 g2>
// in that order. Energies are in units of the qubit-qubit coupling zeta,
// times in units of 1/zeta.

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>

namespace heomesd {

using Complex = std::complex<double>;

class ComplexMatrix4 {
 public:
  static constexpr std::size_t kDim = 4;
  static constexpr std::size_t kSize = kDim * kDim;

  constexpr ComplexMatrix4() : entries_{} {}

  /// Row-major initialization; missing trailing entries are zero.
  ComplexMatrix4(std::initializer_list<Complex> row_major);

  static ComplexMatrix4 identity();
  static ComplexMatrix4 zero() { return {}; }

  Complex& operator()(std::size_t row, std::size_t col) {
    return entries_[row * kDim + col];
  }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * kDim + col];
  }

  Complex* data() { return entries_.data(); }
  const Complex* data() const { return entries_.data(); }

  ComplexMatrix4& operator+=(const ComplexMatrix4& other);
  ComplexMatrix4& operator-=(const ComplexMatrix4& other);
  ComplexMatrix4& operator*=(Complex scale);

  ComplexMatrix4 adjoint() const;
  ComplexMatrix4 conjugate() const;
  ComplexMatrix4 transpose() const;
  Complex trace() const;

  /// Largest absolute entry.
  double max_abs() const;
  bool is_finite() const;

  friend bool operator==(const ComplexMatrix4&, const ComplexMatrix4&) = default;

 private:
  std::array<Complex, kSize> entries_;
};

ComplexMatrix4 operator+(ComplexMatrix4 lhs, const ComplexMatrix4& rhs);
ComplexMatrix4 operator-(ComplexMatrix4 lhs, const ComplexMatrix4& rhs);
ComplexMatrix4 operator*(const ComplexMatrix4& lhs, const ComplexMatrix4& rhs);
ComplexMatrix4 operator*(Complex scale, ComplexMatrix4 m);

ComplexMatrix4 commutator(const ComplexMatrix4& a, const ComplexMatrix4& b);

/// Max-entry distance from Hermitian: max |A - A^dagger|.
double hermiticity_error(const ComplexMatrix4& m);

/// Kronecker product of two 2x2 matrices, given row-major.
ComplexMatrix4 kron(const std::array<Complex, 4>& a,
                    const std::array<Complex, 4>& b);

struct DensityTolerances {
  double hermitian = 1e-10;
  double trace = 1e-8;
  double positivity = 1e-6;
};

/// A validated two-qubit state: Hermitian, unit trace, positive
/// semidefinite up to the tolerances. Construction throws
/// Error(InvalidState) otherwise.
class DensityMatrix {
 public:
  explicit DensityMatrix(const ComplexMatrix4& m,
                         const DensityTolerances& tol = {});

  /// Wraps without validation. Used for intermediate integrator output,
  /// whose drift is monitored separately.
  static DensityMatrix unchecked(const ComplexMatrix4& m);

  const ComplexMatrix4& matrix() const { return matrix_; }

 private:
  struct Unchecked {};
  DensityMatrix(const ComplexMatrix4& m, Unchecked) : matrix_(m) {}

  ComplexMatrix4 matrix_;
};

struct SystemParams {
  double epsilon = 1.5;  // qubit energy gap
  double zeta = 1.0;     // qubit-qubit coupling, the energy unit

  void validate() const;
};

/// H_S = eps (n_1 + n_2) + zeta (a1^+ + a1)(a2^+ + a2).
ComplexMatrix4 build_system_hamiltonian(const SystemParams& params);

/// V_m = a_m^+ + a_m, the bit flip on qubit m in {1, 2}.
ComplexMatrix4 coupling_operator(int qubit);

}  // namespace heomesd
