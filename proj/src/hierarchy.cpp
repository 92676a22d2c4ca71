#include "heomesd/hierarchy.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "heomesd/error.hpp"

namespace heomesd {

namespace {

inline Complex cmul(const Complex& a, const Complex& b) {
  // Plain product; std::complex's operator* carries inf/nan recovery that
  // the hot loop does not need and the compiler will not inline.
  return {a.real() * b.real() - a.imag() * b.imag(),
          a.real() * b.imag() + a.imag() * b.real()};
}

// All compositions of `total` into `slots` parts, descending lexicographic.
void compositions(int total, int slots, std::vector<int>& prefix,
                  std::vector<int>& out) {
  if (slots == 1) {
    prefix.push_back(total);
    out.insert(out.end(), prefix.begin(), prefix.end());
    prefix.pop_back();
    return;
  }
  for (int first = total; first >= 0; --first) {
    prefix.push_back(first);
    compositions(total - first, slots - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// HierarchyIndex

std::size_t HierarchyIndex::count(int slots, int depth) {
  // C(depth + slots, slots), built incrementally to stay exact.
  std::size_t c = 1;
  for (int i = 1; i <= slots; ++i) {
    c = c * static_cast<std::size_t>(depth + i) / static_cast<std::size_t>(i);
  }
  return c;
}

HierarchyIndex::HierarchyIndex(int matsubara_order, int depth)
    : order_(matsubara_order), depth_(depth), slots_(2 * (matsubara_order + 1)) {
  if (matsubara_order < 0 || depth < 0) {
    throw Error(ErrorKind::Domain,
                "hierarchy needs non-negative Matsubara order and depth");
  }
  std::vector<int> prefix;
  prefix.reserve(slots_);
  for (int t = 0; t <= depth_; ++t) {
    const std::size_t before = counts_.size();
    compositions(t, slots_, prefix, counts_);
    tiers_.insert(tiers_.end(), (counts_.size() - before) / slots_, t);
  }
  size_ = tiers_.size();

  std::map<std::vector<int>, std::size_t> lookup;
  for (std::size_t i = 0; i < size_; ++i) {
    auto c = counts(i);
    lookup.emplace(std::vector<int>(c.begin(), c.end()), i);
  }

  raised_.assign(size_ * slots_, npos);
  lowered_.assign(size_ * slots_, npos);
  std::vector<int> probe(slots_);
  for (std::size_t i = 0; i < size_; ++i) {
    auto c = counts(i);
    std::copy(c.begin(), c.end(), probe.begin());
    for (int s = 0; s < slots_; ++s) {
      if (tiers_[i] < depth_) {
        ++probe[s];
        raised_[i * slots_ + s] = lookup.at(probe);
        --probe[s];
      }
      if (probe[s] > 0) {
        --probe[s];
        lowered_[i * slots_ + s] = lookup.at(probe);
        ++probe[s];
      }
    }
  }
}

std::size_t HierarchyIndex::find(std::span<const int> c) const {
  if (static_cast<int>(c.size()) != slots_) return npos;
  int t = 0;
  for (int v : c) {
    if (v < 0) return npos;
    t += v;
  }
  if (t > depth_) return npos;
  // Climb from the physical index along raised links.
  std::size_t offset = 0;
  for (int s = 0; s < slots_; ++s) {
    for (int j = 0; j < c[s]; ++j) offset = raised(offset, s);
  }
  return offset;
}

// ---------------------------------------------------------------------------
// HierarchyConfig

void HierarchyConfig::validate() const {
  if (matsubara_order < 0) {
    throw Error(ErrorKind::Domain, "matsubara order must be >= 0");
  }
  if (depth < 1) throw Error(ErrorKind::Domain, "hierarchy depth must be >= 1");
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw Error(ErrorKind::Domain, "dt must be positive");
  }
  if (!(t_final > 0.0) || !std::isfinite(t_final)) {
    throw Error(ErrorKind::Domain, "t_final must be positive");
  }
}

// ---------------------------------------------------------------------------
// HierarchyState

ComplexMatrix4 HierarchyState::ado(std::size_t offset) const {
  const double* b = block(offset);
  ComplexMatrix4 m;
  for (int j = 0; j < 16; ++j) m.data()[j] = {b[j], b[16 + j]};
  return m;
}

void HierarchyState::set_ado(std::size_t offset, const ComplexMatrix4& m) {
  double* b = block(offset);
  for (int j = 0; j < 16; ++j) {
    b[j] = m.data()[j].real();
    b[16 + j] = m.data()[j].imag();
  }
}

// ---------------------------------------------------------------------------
// HeomSystem

HeomSystem::HeomSystem(const ComplexMatrix4& hamiltonian,
                       const std::array<ComplexMatrix4, 2>& couplings,
                       const MatsubaraExpansion& expansion, int depth,
                       int threads)
    : index_(expansion.order, depth),
      expansion_(expansion),
      threads_(std::max(threads, 1)),
      couplings_(couplings) {
  if (static_cast<int>(expansion.frequencies.size()) != expansion.order + 1 ||
      static_cast<int>(expansion.coefficients.size()) != expansion.order + 1) {
    throw Error(ErrorKind::Structural,
                "Matsubara expansion arrays do not match its order");
  }

  // Local part: -i[H, X] - Delta sum_m [V_m, [V_m, X]], tabulated by
  // applying it to each basis matrix and keeping the structural non-zeros.
  const Complex minus_i{0.0, -1.0};
  const double delta = expansion.counterterm;
  for (int src = 0; src < 16; ++src) {
    ComplexMatrix4 basis;
    basis.data()[src] = 1.0;
    ComplexMatrix4 image = minus_i * commutator(hamiltonian, basis);
    for (const auto& v : couplings) {
      image -= delta * commutator(v, commutator(v, basis));
    }
    for (int dst = 0; dst < 16; ++dst) {
      const Complex c = image.data()[dst];
      if (c != Complex{}) local_.push_back({dst, src, c});
    }
  }
  std::sort(local_.begin(), local_.end(), [](const auto& a, const auto& b) {
    return a.dst != b.dst ? a.dst < b.dst : a.src < b.src;
  });

  auto is_real = [](const ComplexMatrix4& m) {
    for (int i = 0; i < 16; ++i)
      if (m.data()[i].imag() != 0.0) return false;
    return true;
  };
  const bool real_operators =
      is_real(hamiltonian) && is_real(couplings[0]) && is_real(couplings[1]);
  if (real_operators) {
    best_kernel_ = Kernel::Real;
    auto dense = [](const ComplexMatrix4& b) {
      std::array<double, 16> d{};
      for (int j = 0; j < 16; ++j) d[j] = b.data()[j].real();
      return d;
    };
    hamiltonian_dense_ = dense(hamiltonian);
    minus_hamiltonian_dense_ = dense(-1.0 * hamiltonian);

    ComplexMatrix4 square_sum;
    for (const auto& v : couplings) square_sum += v * v;
    const ComplexMatrix4 counter_square = -delta * square_sum;
    counter_square_dense_ = dense(counter_square);
    // S X + X S collapses to 2 s X when S = s I (true for spin-flip couplings).
    const double s0 = counter_square(0, 0).real();
    counter_square_scalar_ = counter_square == s0 * ComplexMatrix4::identity();
    counter_square_value_ = s0;

    for (int m = 0; m < 2; ++m) {
      coupling_dense_[m] = dense(couplings[m]);
    }

    const double flip = hamiltonian(0, 3).real();
    ComplexMatrix4 diagonal_part = hamiltonian - flip * (coupling_operator(1) * coupling_operator(2));
    bool diagonal = true;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c)
        if (r != c && diagonal_part(r, c) != Complex{}) diagonal = false;
    if (diagonal && couplings[0] == coupling_operator(1) &&
        couplings[1] == coupling_operator(2)) {
      best_kernel_ = Kernel::SpinFlip;
      hamiltonian_flip_ = flip;
      for (int r = 0; r < 4; ++r) hamiltonian_diagonal_[r] = diagonal_part(r, r).real();
    }
  }
  kernel_ = best_kernel_;

  const int slots = index_.slots();
  const int terms = expansion.order + 1;
  damping_.resize(index_.size());
  for (std::size_t i = 0; i < index_.size(); ++i) {
    auto n = index_.counts(i);
    double d = 0.0;
    for (int s = 0; s < slots; ++s) d += n[s] * expansion.frequencies[s % terms];
    damping_[i] = d;
  }
  for (const auto& c : expansion.coefficients) {
    coeff_re_.push_back(c.real());
    coeff_im_.push_back(c.imag());
  }
}

void HeomSystem::force_kernel(Kernel kernel) {
  if (static_cast<int>(kernel) > static_cast<int>(best_kernel_)) {
    throw Error(ErrorKind::Domain, "operators do not support the requested kernel");
  }
  kernel_ = kernel;
}

HierarchyState HeomSystem::make_state(const ComplexMatrix4& physical,
                                      double time) const {
  HierarchyState s(index_.size(), time);
  s.set_physical(physical);
  return s;
}

void HeomSystem::rhs_one_generic(const HierarchyState& in, std::size_t offset,
                                 double* out) const {
  const ComplexMatrix4 x = in.ado(offset);
  ComplexMatrix4 acc;
  for (const auto& e : local_) acc.data()[e.dst] += cmul(e.coeff, x.data()[e.src]);
  acc -= damping_[offset] * x;

  const Complex minus_i{0.0, -1.0};
  const int terms = expansion_.order + 1;
  const auto n = index_.counts(offset);
  for (int m = 0; m < 2; ++m) {
    // Everything that enters through -i[V_m, .] is summed first; the
    // imaginary parts of c_k enter through the anticommutator {V_m, .}.
    ComplexMatrix4 comm;
    ComplexMatrix4 anti;
    for (int k = 0; k < terms; ++k) {
      const int s = m * terms + k;
      const std::size_t up = index_.raised(offset, s);
      if (up != HierarchyIndex::npos) comm += in.ado(up);
      const std::size_t down = index_.lowered(offset, s);
      if (down != HierarchyIndex::npos) {
        const ComplexMatrix4 y = in.ado(down);
        comm += (n[s] * coeff_re_[k]) * y;
        anti += (n[s] * coeff_im_[k]) * y;
      }
    }
    const ComplexMatrix4& v = couplings_[m];
    acc += minus_i * commutator(v, comm);
    acc += v * anti + anti * v;
  }

  for (int j = 0; j < 16; ++j) {
    out[j] = acc.data()[j].real();
    out[16 + j] = acc.data()[j].imag();
  }
}

namespace {

// A block is 8 rows of 4 doubles: the real rows of a 4x4 matrix, then its
// imaginary rows. Real operators act on both halves alike.
using Row = double __attribute__((vector_size(32)));
using RowUnaligned = double __attribute__((vector_size(32), aligned(8)));

struct Block {
  Row row[8];
};

inline Block load_block(const double* p) {
  Block b;
  for (int j = 0; j < 8; ++j) b.row[j] = *reinterpret_cast<const RowUnaligned*>(p + 4 * j);
  return b;
}

inline void store_block(double* p, const Block& b) {
  for (int j = 0; j < 8; ++j) *reinterpret_cast<RowUnaligned*>(p + 4 * j) = b.row[j];
}

inline void add_scaled(Block& out, double w, const double* p) {
  for (int j = 0; j < 8; ++j)
    out.row[j] += w * *reinterpret_cast<const RowUnaligned*>(p + 4 * j);
}

// out += A x for a real A given row-major.
inline void left_mul_add(Block& out, const std::array<double, 16>& a,
                         const Block& x) {
  for (int h = 0; h < 8; h += 4) {
    for (int r = 0; r < 4; ++r) {
      out.row[h + r] += a[4 * r] * x.row[h] + a[4 * r + 1] * x.row[h + 1] +
                        a[4 * r + 2] * x.row[h + 2] + a[4 * r + 3] * x.row[h + 3];
    }
  }
}

// out += x B for a real B given by its rows.
inline void right_mul_add(Block& out, const Block& x, const Row* b) {
  for (int j = 0; j < 8; ++j) {
    const Row v = x.row[j];
    out.row[j] += v[0] * b[0] + v[1] * b[1] + v[2] * b[2] + v[3] * b[3];
  }
}

inline void load_rows(Row* dst, const std::array<double, 16>& m) {
  for (int r = 0; r < 4; ++r) dst[r] = *reinterpret_cast<const RowUnaligned*>(m.data() + 4 * r);
}

// Operator products for arbitrary real H, V_m, S = -Delta sum_m V_m^2.
struct DenseOps {
  const std::array<double, 16>* hamiltonian;
  const std::array<double, 16>* minus_hamiltonian;
  const std::array<double, 16>* square;
  const std::array<std::array<double, 16>, 2>* couplings;

  // out += [H, x]
  void add_hamiltonian_commutator(Block& out, const Block& x) const {
    Row b[4];
    left_mul_add(out, *hamiltonian, x);
    load_rows(b, *minus_hamiltonian);
    right_mul_add(out, x, b);
  }
  // out += S x + x S
  void add_square(Block& out, const Block& x) const {
    Row b[4];
    left_mul_add(out, *square, x);
    load_rows(b, *square);
    right_mul_add(out, x, b);
  }
  template <int M>
  void add_left(Block& out, const Block& x) const {
    left_mul_add(out, (*couplings)[M], x);
  }
  template <int M>
  void add_right(Block& out, const Block& x) const {
    Row b[4];
    load_rows(b, (*couplings)[M]);
    right_mul_add(out, x, b);
  }
};

// V_1 = X (x) I swaps rows (columns) 0<->2 and 1<->3, V_2 = I (x) X swaps
// 0<->1 and 2<->3; H = diag(d) + z X (x) X. No multiplications by zero.
struct SpinFlipOps {
  Row diagonal;
  double flip;

  void add_hamiltonian_commutator(Block& out, const Block& x) const {
    for (int h = 0; h < 8; h += 4) {
      for (int r = 0; r < 4; ++r) {
        const Row v = x.row[h + r];
        const Row reversed = {v[3], v[2], v[1], v[0]};
        out.row[h + r] += diagonal[r] * v + flip * x.row[h + 3 - r] - v * diagonal -
                          flip * reversed;
      }
    }
  }
  void add_square(Block&, const Block&) const {}
  template <int M>
  void add_left(Block& out, const Block& x) const {
    constexpr int mask = M == 0 ? 2 : 1;
    for (int j = 0; j < 8; ++j) out.row[j] += x.row[j ^ mask];
  }
  template <int M>
  void add_right(Block& out, const Block& x) const {
    for (int j = 0; j < 8; ++j) {
      const Row v = x.row[j];
      if constexpr (M == 0) {
        out.row[j] += Row{v[2], v[3], v[0], v[1]};
      } else {
        out.row[j] += Row{v[1], v[0], v[3], v[2]};
      }
    }
  }
};

}  // namespace

template <class Ops>
void HeomSystem::rhs_one_real(const Ops& ops, const HierarchyState& in,
                              std::size_t offset, double* out) const {
  const Block x = load_block(in.block(offset));
  Block acc;
  // [H, x], later added as -i [H, x].
  Block comm{};

  double diag = -damping_[offset];
  if (counter_square_scalar_) diag += 2.0 * counter_square_value_;
  for (int j = 0; j < 8; ++j) acc.row[j] = diag * x.row[j];
  if (!counter_square_scalar_) ops.add_square(acc, x);
  ops.add_hamiltonian_commutator(comm, x);

  const int terms = expansion_.order + 1;
  const double delta2 = 2.0 * expansion_.counterterm;
  const auto n = index_.counts(offset);
  for (int m = 0; m < 2; ++m) {
    // T collects raised neighbours and Re(c_k)-weighted lowered ones, A the
    // Im(c_k)-weighted lowered ones. The coupling terms
    //   -i[V, T] + {V, A} + 2 Delta V x V
    // are applied as V (A - iT) + (A + iT + 2 Delta V x) V.
    Block t{};
    Block a{};
    for (int k = 0; k < terms; ++k) {
      const int s = m * terms + k;
      const std::size_t up = index_.raised(offset, s);
      if (up != HierarchyIndex::npos) add_scaled(t, 1.0, in.block(up));
      const std::size_t down = index_.lowered(offset, s);
      if (down != HierarchyIndex::npos) {
        add_scaled(t, n[s] * coeff_re_[k], in.block(down));
        add_scaled(a, n[s] * coeff_im_[k], in.block(down));
      }
    }
    Block left;
    Block right{};
    if (m == 0) {
      ops.template add_left<0>(right, x);
    } else {
      ops.template add_left<1>(right, x);
    }
    for (int j = 0; j < 4; ++j) {
      left.row[j] = a.row[j] + t.row[4 + j];
      left.row[4 + j] = a.row[4 + j] - t.row[j];
      right.row[j] = delta2 * right.row[j] + a.row[j] - t.row[4 + j];
      right.row[4 + j] = delta2 * right.row[4 + j] + a.row[4 + j] + t.row[j];
    }
    if (m == 0) {
      ops.template add_left<0>(acc, left);
      ops.template add_right<0>(acc, right);
    } else {
      ops.template add_left<1>(acc, left);
      ops.template add_right<1>(acc, right);
    }
  }

  for (int j = 0; j < 4; ++j) {
    acc.row[j] += comm.row[4 + j];
    acc.row[4 + j] -= comm.row[j];
  }
  store_block(out, acc);
}

void HeomSystem::rhs(const HierarchyState& state,
                     HierarchyState& derivative) const {
  if (state.size() != index_.size()) {
    std::ostringstream ss;
    ss << "state holds " << state.size() << " ADOs, hierarchy expects "
       << index_.size();
    throw Error(ErrorKind::Structural, ss.str());
  }
  derivative.resize(index_.size());
  derivative.set_time(state.time());
  const auto count = static_cast<std::ptrdiff_t>(index_.size());
  const DenseOps dense{&hamiltonian_dense_, &minus_hamiltonian_dense_,
                       &counter_square_dense_, &coupling_dense_};
  const SpinFlipOps spin_flip{
      {hamiltonian_diagonal_[0], hamiltonian_diagonal_[1], hamiltonian_diagonal_[2],
       hamiltonian_diagonal_[3]},
      hamiltonian_flip_};
#pragma omp parallel for num_threads(threads_) schedule(static) if (threads_ > 1)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto offset = static_cast<std::size_t>(i);
    switch (kernel_) {
      case Kernel::SpinFlip:
        rhs_one_real(spin_flip, state, offset, derivative.block(offset));
        break;
      case Kernel::Real:
        rhs_one_real(dense, state, offset, derivative.block(offset));
        break;
      case Kernel::Generic:
        rhs_one_generic(state, offset, derivative.block(offset));
        break;
    }
  }
}

HierarchyState HeomSystem::rhs(const HierarchyState& state) const {
  HierarchyState d;
  rhs(state, d);
  return d;
}

// ---------------------------------------------------------------------------
// Integration

void check_finite(const HeomSystem& system, const HierarchyState& state) {
  const auto v = state.values();
  for (std::size_t q = 0; q < v.size(); ++q) {
    if (!std::isfinite(v[q])) {
      std::ostringstream ss;
      ss << "integration diverged at t = " << state.time()
         << " (non-finite ADO at tier "
         << system.index().tier(q / HierarchyState::kStride)
         << "); reduce dt or increase the hierarchy depth";
      throw Error(ErrorKind::Divergence, ss.str());
    }
  }
}

Rk4Integrator::Rk4Integrator(const HeomSystem& system) : system_(&system) {}

namespace {

// out = base + h * k
void axpy_into(const HierarchyState& base, double h, const HierarchyState& k,
               HierarchyState& out) {
  out.resize(base.size());
  const double* __restrict b = base.values().data();
  const double* __restrict d = k.values().data();
  double* __restrict o = out.values().data();
  const std::size_t n = base.values().size();
  for (std::size_t q = 0; q < n; ++q) o[q] = b[q] + h * d[q];
}

void axpy_inplace(double h, const HierarchyState& k, HierarchyState& out) {
  const double* __restrict d = k.values().data();
  double* __restrict o = out.values().data();
  const std::size_t n = out.values().size();
  for (std::size_t q = 0; q < n; ++q) o[q] += h * d[q];
}

}  // namespace

void Rk4Integrator::step(HierarchyState& state, double dt) {
  const double t0 = state.time();
  // accum gathers y + dt/6 (k1 + 2 k2 + 2 k3 + k4) stage by stage.
  system_->rhs(state, stage_);
  axpy_into(state, dt / 6.0, stage_, accum_);
  axpy_into(state, 0.5 * dt, stage_, probe_);

  system_->rhs(probe_, stage_);
  axpy_inplace(dt / 3.0, stage_, accum_);
  axpy_into(state, 0.5 * dt, stage_, probe_);

  system_->rhs(probe_, stage_);
  axpy_inplace(dt / 3.0, stage_, accum_);
  axpy_into(state, dt, stage_, probe_);

  system_->rhs(probe_, stage_);
  axpy_inplace(dt / 6.0, stage_, accum_);

  state.swap_values(accum_);
  state.set_time(t0 + dt);
  check_finite(*system_, state);
}

void Rk4Integrator::advance_to(HierarchyState& state, double t_target,
                               double dt) {
  const double t0 = state.time();
  const double span = t_target - t0;
  if (span <= 0.0) return;
  const auto whole = static_cast<long long>(std::floor(span / dt * (1.0 + 1e-12)));
  for (long long s = 1; s <= whole; ++s) {
    step(state, dt);
    state.set_time(t0 + static_cast<double>(s) * dt);
  }
  const double rest = t_target - state.time();
  if (rest > 1e-12 * dt) step(state, rest);
  state.set_time(t_target);
}

HierarchyState step_rk4(const HeomSystem& system, const HierarchyState& state,
                        double dt) {
  if (!(dt > 0.0)) throw Error(ErrorKind::Domain, "dt must be positive");
  HierarchyState next = state;
  Rk4Integrator integrator(system);
  integrator.step(next, dt);
  return next;
}

HeomSystem make_system(const SystemParams& system, const BathParams& bath,
                       const HierarchyConfig& config, int threads) {
  system.validate();
  config.validate();
  return HeomSystem(build_system_hamiltonian(system),
                    {coupling_operator(1), coupling_operator(2)},
                    build_matsubara_expansion(bath, config.matsubara_order),
                    config.depth, threads);
}

PhysicalTrajectory evolve(const HeomSystem& model, const DensityMatrix& initial,
                          const HierarchyConfig& config,
                          const EvolveOptions& options) {
  config.validate();
  if (options.sample_every < 1) {
    throw Error(ErrorKind::Domain, "sample_every must be >= 1");
  }
  if (model.index().depth() != config.depth ||
      model.index().matsubara_order() != config.matsubara_order) {
    throw Error(ErrorKind::Structural,
                "hierarchy model was built for a different (K, L)");
  }

  Rk4Integrator integrator(model);
  HierarchyState state;
  if (options.burn_in > 0.0) {
    state = model.make_state(options.preparation, -options.burn_in);
    integrator.advance_to(state, 0.0, config.dt);
    state.set_physical(initial.matrix());
  } else {
    state = model.make_state(initial.matrix());
  }
  state.set_time(0.0);

  const double dt = config.dt;
  const auto whole = static_cast<long long>(
      std::floor(config.t_final / dt * (1.0 + 1e-12)));

  PhysicalTrajectory out;
  std::size_t sample_no = 0;
  auto record = [&]() {
    const ComplexMatrix4 rho = state.physical();
    const double drift = std::abs(rho.trace() - 1.0);
    if (drift > kTraceDriftLimit) {
      std::ostringstream ss;
      ss << "trace of rho_0 drifted by " << drift << " at t = " << state.time()
         << "; reduce dt or increase the hierarchy depth";
      throw Error(ErrorKind::Accuracy, ss.str());
    }
    out.times.push_back(state.time());
    out.rho.push_back(rho);
    if (options.observer) options.observer(sample_no, state);
    ++sample_no;
  };

  record();
  for (long long s = 1; s <= whole; ++s) {
    integrator.step(state, dt);
    state.set_time(static_cast<double>(s) * dt);
    if (s % options.sample_every == 0) record();
  }
  const double rest = config.t_final - state.time();
  if (rest > 1e-12 * dt) {
    integrator.step(state, rest);
    state.set_time(config.t_final);
    record();
  } else if (whole % options.sample_every != 0) {
    record();
  }
  return out;
}

PhysicalTrajectory evolve(const DensityMatrix& initial,
                          const HierarchyConfig& config,
                          const SystemParams& system, const BathParams& bath,
                          const EvolveOptions& options) {
  const HeomSystem model = make_system(system, bath, config, options.threads);
  return evolve(model, initial, config, options);
}

}  // namespace heomesd
