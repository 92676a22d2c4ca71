#include "heomesd/bath.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "heomesd/error.hpp"

namespace heomesd {

namespace {

constexpr double kResidueTolerance = 1e-12;
constexpr double kTailIncrement = 1e-10;

double matsubara_frequency(int k, double beta) {
  return 2.0 * std::numbers::pi * k / beta;
}

// c_k / gamma_k for k >= 1, written in the form that stays accurate for
// large k: (eta gamma beta / (2 pi^2)) / (k^2 - b^2), b = beta gamma / (2 pi).
double tail_term(int k, const BathParams& p) {
  const double gk = matsubara_frequency(k, p.beta);
  if (std::abs(gk - p.gamma) < kSingularTolerance) {
    std::ostringstream ss;
    ss << "Matsubara frequency gamma_" << k << " = " << gk
       << " coincides with the bath frequency";
    throw Error(ErrorKind::SingularParameter, ss.str());
  }
  const double b = p.beta * p.gamma / (2.0 * std::numbers::pi);
  const double kd = static_cast<double>(k);
  return p.eta * p.gamma * p.beta / (2.0 * std::numbers::pi * std::numbers::pi) /
         ((kd - b) * (kd + b));
}

void check_cot_pole(const BathParams& p) {
  const double half = 0.5 * p.beta * p.gamma;
  if (std::abs(std::sin(half)) < kSingularTolerance) {
    std::ostringstream ss;
    ss << "beta*gamma/2 = " << half << " sits on a pole of cot";
    throw Error(ErrorKind::SingularParameter, ss.str());
  }
}

}  // namespace

void BathParams::validate() const {
  if (!(eta >= 0.0) || !std::isfinite(eta)) {
    throw Error(ErrorKind::Domain, "eta must be non-negative");
  }
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw Error(ErrorKind::Domain, "gamma must be positive");
  }
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw Error(ErrorKind::Domain, "beta must be positive");
  }
}

double spectral_density(double omega, const BathParams& params) {
  return omega * params.eta * params.gamma /
         (omega * omega + params.gamma * params.gamma);
}

Complex counterterm_residue(const BathParams& params, int order) {
  const auto exp = build_matsubara_expansion(params, order);
  Complex residue =
      Complex(1.0 / (params.beta * params.gamma), -0.5) * params.eta;
  for (int k = 0; k <= order; ++k) {
    residue -= exp.coefficients[k] / exp.frequencies[k];
  }
  return residue;
}

MatsubaraExpansion build_matsubara_expansion(const BathParams& params,
                                             int order) {
  params.validate();
  if (order < 0) {
    throw Error(ErrorKind::Domain, "Matsubara order must be non-negative");
  }
  check_cot_pole(params);

  const double eta = params.eta;
  const double g0 = params.gamma;
  const double beta = params.beta;

  MatsubaraExpansion exp;
  exp.order = order;
  exp.frequencies.reserve(order + 1);
  exp.coefficients.reserve(order + 1);

  const double cot = 1.0 / std::tan(0.5 * beta * g0);
  exp.frequencies.push_back(g0);
  exp.coefficients.push_back(0.5 * eta * g0 * Complex(cot, -1.0));

  for (int k = 1; k <= order; ++k) {
    const double gk = matsubara_frequency(k, beta);
    if (std::abs(gk - g0) < kSingularTolerance) {
      std::ostringstream ss;
      ss << "Matsubara frequency gamma_" << k << " = " << gk
         << " coincides with the bath frequency";
      throw Error(ErrorKind::SingularParameter, ss.str());
    }
    exp.frequencies.push_back(gk);
    exp.coefficients.push_back(2.0 * eta * g0 * gk / (beta * (gk * gk - g0 * g0)));
  }

  Complex residue = Complex(1.0 / (beta * g0), -0.5) * eta;
  for (int k = 0; k <= order; ++k) {
    residue -= exp.coefficients[k] / exp.frequencies[k];
  }
  if (std::abs(residue.imag()) > kResidueTolerance) {
    std::ostringstream ss;
    ss << "counterterm has imaginary residue " << residue.imag();
    throw Error(ErrorKind::NumericalDegradation, ss.str());
  }
  exp.counterterm = residue.real();
  return exp;
}

double counterterm_tail(const BathParams& params, int order) {
  params.validate();
  if (order < 0) {
    throw Error(ErrorKind::Domain, "Matsubara order must be non-negative");
  }
  check_cot_pole(params);
  if (params.eta == 0.0) return 0.0;

  double sum = 0.0;
  int k = order + 1;
  for (;; ++k) {
    const double term = tail_term(k, params);
    sum += term;
    if (std::abs(term) < kTailIncrement) break;
  }
  // Remainder sum_{j > k} A / (j^2 - b^2) by Euler-Maclaurin. The next
  // correction is O(A / k^5), far below double precision here.
  const double b = params.beta * params.gamma / (2.0 * std::numbers::pi);
  const double scale = params.eta * params.gamma * params.beta /
                       (2.0 * std::numbers::pi * std::numbers::pi);
  const double kd = static_cast<double>(k);
  const double integral =
      scale * std::log1p(2.0 * b / (kd - b)) / (2.0 * b);  // int_k^inf
  const double f_k = scale / ((kd - b) * (kd + b));
  const double df_k = -2.0 * kd * scale / std::pow((kd - b) * (kd + b), 2);
  sum += integral - 0.5 * f_k - df_k / 12.0;
  return sum;
}

}  // namespace heomesd
