#pragma once

// Reference implementations used only by the tests. None of them call into
// the library's numerical kernels: matrices are plain nested arrays of
// std::complex, eigenvalues come from a hand-written Jacobi sweep, and the
// hierarchy equation is transcribed term by term from its textbook form.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <random>
#include <vector>

namespace oracle {

using C = std::complex<double>;
using Mat = std::array<std::array<C, 4>, 4>;

inline Mat zero() { return {}; }

inline Mat identity() {
  Mat m{};
  for (int i = 0; i < 4; ++i) m[i][i] = 1.0;
  return m;
}

inline Mat mul(const Mat& a, const Mat& b) {
  Mat r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) r[i][j] += a[i][k] * b[k][j];
  return r;
}

inline Mat add(const Mat& a, const Mat& b, C scale_b = 1.0) {
  Mat r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i][j] = a[i][j] + scale_b * b[i][j];
  return r;
}

inline Mat scale(C s, const Mat& a) {
  Mat r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i][j] = s * a[i][j];
  return r;
}

inline Mat dagger(const Mat& a) {
  Mat r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i][j] = std::conj(a[j][i]);
  return r;
}

inline Mat comm(const Mat& a, const Mat& b) { return add(mul(a, b), mul(b, a), -1.0); }

inline double max_abs_diff(const Mat& a, const Mat& b) {
  double d = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) d = std::max(d, std::abs(a[i][j] - b[i][j]));
  return d;
}

// Pauli matrices and the two-qubit operators, basis |ee>, |eg>, |ge>, |gg>.
inline Mat kron2(const std::array<std::array<C, 2>, 2>& a,
                 const std::array<std::array<C, 2>, 2>& b) {
  Mat r{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) r[2 * i + k][2 * j + l] = a[i][j] * b[k][l];
  return r;
}

inline const std::array<std::array<C, 2>, 2> kX{{{0.0, 1.0}, {1.0, 0.0}}};
inline const std::array<std::array<C, 2>, 2> kY{{{0.0, C(0, -1)}, {C(0, 1), 0.0}}};
inline const std::array<std::array<C, 2>, 2> kI{{{1.0, 0.0}, {0.0, 1.0}}};
// Excited state first, so n = |e><e| = diag(1, 0).
inline const std::array<std::array<C, 2>, 2> kN{{{1.0, 0.0}, {0.0, 0.0}}};

inline Mat hamiltonian(double eps, double zeta) {
  return add(scale(eps, add(kron2(kN, kI), kron2(kI, kN))), kron2(kX, kX), zeta);
}
inline Mat v1() { return kron2(kX, kI); }
inline Mat v2() { return kron2(kI, kX); }

// ---------------------------------------------------------------------------
// Eigenvalues

// Cyclic Jacobi on a real symmetric matrix; returns eigenvalues ascending and
// the eigenvectors as columns of `vecs`.
inline std::vector<double> jacobi_symmetric(std::vector<std::vector<double>> a,
                                            std::vector<std::vector<double>>* vecs = nullptr) {
  const std::size_t n = a.size();
  std::vector<std::vector<double>> v(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) v[i][i] = 1.0;
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
    if (off < 1e-34) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (a[p][q] == 0.0) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v[k][p], vkq = v[k][q];
          v[k][p] = c * vkp - s * vkq;
          v[k][q] = s * vkp + c * vkq;
        }
      }
    }
  }
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto x, auto y) { return a[x][x] < a[y][y]; });
  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = a[order[i]][order[i]];
  if (vecs) {
    vecs->assign(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) (*vecs)[k][i] = v[k][order[i]];
  }
  return ev;
}

// Hermitian H = A + iB is represented by the real symmetric [[A, -B], [B, A]],
// whose spectrum is that of H with every eigenvalue doubled up.
inline std::vector<std::vector<double>> real_embedding(const Mat& h) {
  std::vector<std::vector<double>> r(8, std::vector<double>(8));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      r[i][j] = r[i + 4][j + 4] = h[i][j].real();
      r[i][j + 4] = -h[i][j].imag();
      r[i + 4][j] = h[i][j].imag();
    }
  return r;
}

/// Eigenvalues of a Hermitian 4x4 matrix, ascending.
inline std::array<double, 4> hermitian_eigenvalues(const Mat& h) {
  const auto ev = jacobi_symmetric(real_embedding(h));
  return {ev[0], ev[2], ev[4], ev[6]};
}

/// Square root of a positive semidefinite Hermitian matrix.
inline Mat hermitian_sqrt(const Mat& h) {
  std::vector<std::vector<double>> vecs;
  const auto ev = jacobi_symmetric(real_embedding(h), &vecs);
  // Embedding of the square root: sum_i sqrt(ev_i) v_i v_i^T over all 8
  // vectors, then read back the complex blocks.
  std::vector<std::vector<double>> s(8, std::vector<double>(8, 0.0));
  for (int i = 0; i < 8; ++i) {
    const double w = std::sqrt(std::max(ev[i], 0.0));
    for (int p = 0; p < 8; ++p)
      for (int q = 0; q < 8; ++q) s[p][q] += w * vecs[p][i] * vecs[q][i];
  }
  Mat r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i][j] = C(s[i][j], s[i + 4][j]);
  return r;
}

inline Mat spin_flip(const Mat& rho) {
  const Mat yy = kron2(kY, kY);
  Mat conj_rho{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) conj_rho[i][j] = std::conj(rho[i][j]);
  return mul(yy, mul(conj_rho, yy));
}

/// Concurrence through the Hermitian matrix sqrt(rho) rho~ sqrt(rho), whose
/// eigenvalues are those of rho rho~.
inline double concurrence_hermitian(const Mat& rho, double* gap = nullptr) {
  const Mat s = hermitian_sqrt(rho);
  const Mat m = mul(s, mul(spin_flip(rho), s));
  auto ev = hermitian_eigenvalues(m);
  std::array<double, 4> l;
  for (int i = 0; i < 4; ++i) l[i] = std::sqrt(std::max(ev[i], 0.0));
  const double g = l[3] - l[2] - l[1] - l[0];
  if (gap) *gap = g;
  return std::max(0.0, g);
}

/// Eigenvalues of a general 4x4 matrix: characteristic polynomial by
/// Faddeev-LeVerrier, roots by Durand-Kerner.
inline std::array<C, 4> brute_force_eigenvalues(const Mat& a) {
  // p(x) = x^4 + c1 x^3 + c2 x^2 + c3 x + c4
  std::array<C, 5> coeff{1.0, 0.0, 0.0, 0.0, 0.0};
  Mat m = zero();
  for (int k = 1; k <= 4; ++k) {
    m = add(mul(a, m), identity(), coeff[k - 1]);
    const Mat am = mul(a, m);
    C tr = 0.0;
    for (int i = 0; i < 4; ++i) tr += am[i][i];
    coeff[k] = -tr / static_cast<double>(k);
  }
  auto p = [&](C x) { return (((x + coeff[1]) * x + coeff[2]) * x + coeff[3]) * x + coeff[4]; };
  std::array<C, 4> z;
  const C seed(0.4, 0.9);
  for (int i = 0; i < 4; ++i) z[i] = std::pow(seed, i);
  for (int it = 0; it < 500; ++it) {
    for (int i = 0; i < 4; ++i) {
      C denom = 1.0;
      for (int j = 0; j < 4; ++j)
        if (j != i) denom *= z[i] - z[j];
      z[i] -= p(z[i]) / denom;
    }
  }
  return z;
}

/// Concurrence from the brute-force eigenvalues of rho rho~.
inline double concurrence_brute_force(const Mat& rho) {
  auto ev = brute_force_eigenvalues(mul(rho, spin_flip(rho)));
  std::array<double, 4> l;
  for (int i = 0; i < 4; ++i) l[i] = std::sqrt(std::max(ev[i].real(), 0.0));
  std::sort(l.begin(), l.end());
  return std::max(0.0, l[3] - l[2] - l[1] - l[0]);
}

/// Werner state p |psi-><psi-| + (1 - p) I / 4 and its concurrence.
inline Mat werner(double p) {
  Mat r = scale((1.0 - p) / 4.0, identity());
  r[1][1] += p / 2;
  r[2][2] += p / 2;
  r[1][2] -= p / 2;
  r[2][1] -= p / 2;
  return r;
}
inline double werner_concurrence(double p) { return std::max(0.0, (3.0 * p - 1.0) / 2.0); }

// ---------------------------------------------------------------------------
// Random matrices

inline Mat random_matrix(std::mt19937_64& rng, double sigma = 1.0) {
  std::normal_distribution<double> g(0.0, sigma);
  Mat m{};
  for (auto& row : m)
    for (auto& x : row) x = C(g(rng), g(rng));
  return m;
}

inline Mat random_hermitian(std::mt19937_64& rng, double sigma = 1.0) {
  const Mat g = random_matrix(rng, sigma);
  return scale(0.5, add(g, dagger(g)));
}

/// G G^dagger / tr, a generic full-rank density matrix.
inline Mat random_density(std::mt19937_64& rng) {
  const Mat g = random_matrix(rng);
  Mat r = mul(g, dagger(g));
  C tr = 0.0;
  for (int i = 0; i < 4; ++i) tr += r[i][i];
  return scale(1.0 / tr, r);
}

// ---------------------------------------------------------------------------
// Bath coefficients and the hierarchy equation

struct Bath {
  double eta, gamma, beta;
};

inline std::vector<double> frequencies(const Bath& b, int K) {
  std::vector<double> g{b.gamma};
  for (int k = 1; k <= K; ++k) g.push_back(2.0 * std::numbers::pi * k / b.beta);
  return g;
}

inline std::vector<C> coefficients(const Bath& b, int K) {
  const auto g = frequencies(b, K);
  std::vector<C> c{b.eta * b.gamma / 2.0 * C(std::cos(b.beta * b.gamma / 2) /
                                                   std::sin(b.beta * b.gamma / 2),
                                               -1.0)};
  for (int k = 1; k <= K; ++k)
    c.push_back(2.0 * b.eta * b.gamma * g[k] / (b.beta * (g[k] * g[k] - b.gamma * b.gamma)));
  return c;
}

/// Delta_K from its definition (complex; the imaginary part should vanish).
inline C counterterm(const Bath& b, int K) {
  const auto g = frequencies(b, K);
  const auto c = coefficients(b, K);
  C d = C(1.0 / (b.beta * b.gamma), -0.5) * b.eta;
  for (int k = 0; k <= K; ++k) d -= c[k] / g[k];
  return d;
}

/// sum_{k > K} c_k / gamma_k by plain summation up to k = kmax.
inline long double tail_sum(const Bath& b, int K, long kmax) {
  long double s = 0.0L;
  const long double two_pi = 2.0L * std::numbers::pi_v<long double>;
  for (long k = kmax; k > K; --k) {  // smallest terms first
    const long double gk = two_pi * k / b.beta;
    s += 2.0L * b.eta * b.gamma / (b.beta * (gk * gk - (long double)b.gamma * b.gamma));
  }
  return s;
}

/// All multi-indices with 2(K+1) entries summing to at most L, keyed by the
/// index vector.
inline std::vector<std::vector<int>> multi_indices(int K, int L) {
  const int slots = 2 * (K + 1);
  std::vector<std::vector<int>> out;
  std::vector<int> n(slots, 0);
  while (true) {
    int sum = 0;
    for (int v : n) sum += v;
    if (sum <= L) out.push_back(n);
    int i = 0;
    while (i < slots) {
      if (++n[i] <= L) break;
      n[i] = 0;
      ++i;
    }
    if (i == slots) break;
  }
  return out;
}

/// d rho_n / dt for every n, transcribed directly:
///   -(i L_H + sum n_mk gamma_k) rho_n - Delta sum_m [V_m, [V_m, rho_n]]
///   - i sum_mk [V_m, rho_{n+e_mk}]
///   - i sum_mk n_mk (c_k V_m rho_{n-e_mk} - c_k^* rho_{n-e_mk} V_m)
inline std::map<std::vector<int>, Mat> hierarchy_rhs(
    const std::map<std::vector<int>, Mat>& ados, const Mat& h, const Bath& b, int K, int L) {
  const auto g = frequencies(b, K);
  const auto c = coefficients(b, K);
  const double delta = counterterm(b, K).real();
  const std::array<Mat, 2> v{v1(), v2()};
  const C i(0.0, 1.0);

  std::map<std::vector<int>, Mat> out;
  for (const auto& [n, rho] : ados) {
    double damping = 0.0;
    for (int m = 0; m < 2; ++m)
      for (int k = 0; k <= K; ++k) damping += n[m * (K + 1) + k] * g[k];
    Mat d = add(scale(-i, comm(h, rho)), rho, -damping);
    for (int m = 0; m < 2; ++m) d = add(d, comm(v[m], comm(v[m], rho)), -delta);

    int tier = 0;
    for (int x : n) tier += x;
    for (int m = 0; m < 2; ++m) {
      for (int k = 0; k <= K; ++k) {
        const int s = m * (K + 1) + k;
        if (tier < L) {
          auto up = n;
          ++up[s];
          d = add(d, comm(v[m], ados.at(up)), -i);
        }
        if (n[s] > 0) {
          auto down = n;
          --down[s];
          const Mat& r = ados.at(down);
          const Mat t = add(scale(c[k], mul(v[m], r)), scale(std::conj(c[k]), mul(r, v[m])), -1.0);
          d = add(d, t, -i * static_cast<double>(n[s]));
        }
      }
    }
    out[n] = d;
  }
  return out;
}

}  // namespace oracle
