#include "heomesd/entanglement.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "heomesd/error.hpp"

namespace heomesd {

namespace {

ComplexMatrix4 sigma_y_sigma_y() {
  const Complex i{0.0, 1.0};
  return kron({0.0, -i, i, 0.0}, {0.0, -i, i, 0.0});
}

}  // namespace

ComplexMatrix4 spin_flip(const DensityMatrix& rho) {
  static const ComplexMatrix4 yy = sigma_y_sigma_y();
  return yy * rho.matrix().conjugate() * yy;
}

ConcurrenceResult concurrence(const DensityMatrix& rho) {
  const ComplexMatrix4 product = rho.matrix() * spin_flip(rho);

  Eigen::Matrix4cd m;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m(r, c) = product(r, c);

  Eigen::ComplexEigenSolver<Eigen::Matrix4cd> solver(m, false);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::NumericalDegradation,
                "eigenvalue iteration for rho*rho_tilde did not converge");
  }

  ConcurrenceResult result;
  for (int i = 0; i < 4; ++i) {
    const Complex ev = solver.eigenvalues()(i);
    if (std::abs(ev.imag()) > kEigenTolerance || ev.real() < -kEigenTolerance) {
      std::ostringstream ss;
      ss << "rho*rho_tilde has eigenvalue " << ev.real() << (ev.imag() < 0 ? "-" : "+")
         << std::abs(ev.imag()) << "i; the state is not physical";
      throw Error(ErrorKind::NumericalDegradation, ss.str());
    }
    result.lambdas[i] = std::max(ev.real(), 0.0);
  }
  std::sort(result.lambdas.begin(), result.lambdas.end(), std::greater<>());

  result.lambda_gap = std::sqrt(result.lambdas[0]) - std::sqrt(result.lambdas[1]) -
                      std::sqrt(result.lambdas[2]) - std::sqrt(result.lambdas[3]);
  result.concurrence = std::max(0.0, result.lambda_gap);
  return result;
}

}  // namespace heomesd
