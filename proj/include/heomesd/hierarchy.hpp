#pragma once

// Hierarchy of auxiliary density operators (ADOs) for two qubits, each
// coupled to its own Drude bath, and its fixed-step RK4 propagation.
//
// An ADO is labelled by a multi-index n with 2(K+1) non-negative entries
// laid out as n_10..n_1K, n_20..n_2K. The hierarchy is cut at tier
// sum(n) <= L; couplings to tier L+1 are dropped. Each ADO obeys
//
//   d rho_n/dt = -(i L_H + sum n_mk gamma_k) rho_n
//                - Delta_K sum_m [V_m, [V_m, rho_n]]
//                - i sum_mk [V_m, rho_{n+e_mk}]
//                - i sum_mk n_mk (c_k V_m rho_{n-e_mk} - c_k^* rho_{n-e_mk} V_m)
//
// rho_0 (all-zero index, offset 0) is the physical density matrix.

#include <array>
#include <cstddef>
#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "heomesd/bath.hpp"
#include "heomesd/qops.hpp"

namespace heomesd {

/// Enumeration of multi-indices up to a given tier, with neighbour tables.
/// Order: by tier, then descending lexicographic within a tier, so that
/// K=0, L=1 gives (0,0), (1,0), (0,1).
class HierarchyIndex {
 public:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  HierarchyIndex(int matsubara_order, int depth);

  /// Number of multi-indices with tier <= depth over `slots` entries:
  /// C(depth + slots, slots).
  static std::size_t count(int slots, int depth);

  int matsubara_order() const { return order_; }
  int depth() const { return depth_; }
  int slots() const { return slots_; }
  std::size_t size() const { return size_; }

  /// Slot of (qubit m in {0,1}, Matsubara term k).
  int slot(int qubit, int k) const { return qubit * (order_ + 1) + k; }

  std::span<const int> counts(std::size_t offset) const {
    return {counts_.data() + offset * slots_, static_cast<std::size_t>(slots_)};
  }
  int tier(std::size_t offset) const { return tiers_[offset]; }

  /// Offset of n + e_slot, or npos above the truncation depth.
  std::size_t raised(std::size_t offset, int slot) const {
    return raised_[offset * slots_ + slot];
  }
  /// Offset of n - e_slot, or npos if n_slot == 0.
  std::size_t lowered(std::size_t offset, int slot) const {
    return lowered_[offset * slots_ + slot];
  }

  /// Offset of a multi-index, or npos if it is not enumerated.
  std::size_t find(std::span<const int> counts) const;

 private:
  int order_;
  int depth_;
  int slots_;
  std::size_t size_ = 0;
  std::vector<int> counts_;
  std::vector<int> tiers_;
  std::vector<std::size_t> raised_;
  std::vector<std::size_t> lowered_;
};

struct HierarchyConfig {
  int matsubara_order = 2;  // K
  int depth = 8;            // L
  double dt = 1e-3;
  double t_final = 20.0;

  void validate() const;
};

/// All ADOs of one hierarchy at one time. Each ADO is stored as 32 doubles:
/// the 16 real parts row-major, then the 16 imaginary parts.
class HierarchyState {
 public:
  static constexpr std::size_t kStride = 32;

  HierarchyState() = default;
  explicit HierarchyState(std::size_t ado_count, double time = 0.0)
      : values_(ado_count * kStride, 0.0), time_(time) {}

  std::size_t size() const { return values_.size() / kStride; }
  double time() const { return time_; }
  void set_time(double t) { time_ = t; }

  ComplexMatrix4 ado(std::size_t offset) const;
  void set_ado(std::size_t offset, const ComplexMatrix4& m);

  ComplexMatrix4 physical() const { return ado(0); }
  void set_physical(const ComplexMatrix4& m) { set_ado(0, m); }

  /// Raw block of ADO `offset` (real parts, then imaginary parts).
  const double* block(std::size_t offset) const {
    return values_.data() + offset * kStride;
  }
  double* block(std::size_t offset) { return values_.data() + offset * kStride; }

  std::span<const double> values() const { return values_; }
  std::span<double> values() { return values_; }

  void resize(std::size_t ado_count) { values_.resize(ado_count * kStride); }
  void swap_values(HierarchyState& other) noexcept { values_.swap(other.values_); }

  friend bool operator==(const HierarchyState&, const HierarchyState&) = default;

 private:
  std::vector<double> values_;
  double time_ = 0.0;
};

/// Precomputed right-hand side for one (H, V_1, V_2, expansion, depth).
/// Immutable after construction; rhs() may run concurrently from several
/// callers. With threads > 1 a single rhs() call is split across ADOs; the
/// per-ADO summation order is fixed so results do not depend on threads.
class HeomSystem {
 public:
  HeomSystem(const ComplexMatrix4& hamiltonian,
             const std::array<ComplexMatrix4, 2>& couplings,
             const MatsubaraExpansion& expansion, int depth, int threads = 1);

  const HierarchyIndex& index() const { return index_; }
  const MatsubaraExpansion& expansion() const { return expansion_; }
  int threads() const { return threads_; }
  /// Kernel evaluating the right-hand side. All three give the same
  /// derivative up to rounding; the constructor picks the most specialised
  /// one the operators allow.
  enum class Kernel {
    Generic,   // complex H and V_m
    Real,      // real H and V_m
    SpinFlip,  // V_1 = X (x) I, V_2 = I (x) X, H = diagonal + z X (x) X
  };
  Kernel kernel() const { return kernel_; }
  /// Switches to a less specialised kernel (for cross-checking). Throws
  /// Error(Domain) if the operators do not support `kernel`.
  void force_kernel(Kernel kernel);

  /// State with the given physical matrix and every other ADO zero.
  HierarchyState make_state(const ComplexMatrix4& physical,
                            double time = 0.0) const;

  /// Writes d/dt of every ADO into `derivative` (resized as needed).
  /// Throws Error(Structural) if the state does not match the index.
  void rhs(const HierarchyState& state, HierarchyState& derivative) const;
  HierarchyState rhs(const HierarchyState& state) const;

 private:
  struct SuperEntry {
    int dst;
    int src;
    Complex coeff;
  };

  void rhs_one_generic(const HierarchyState& in, std::size_t offset,
                       double* out) const;
  // Same equation when H and both V_m are real: every operator product
  // splits into real row updates on the real and imaginary blocks.
  template <class Ops>
  void rhs_one_real(const Ops& ops, const HierarchyState& in,
                    std::size_t offset, double* out) const;

  HierarchyIndex index_;
  MatsubaraExpansion expansion_;
  int threads_;
  std::array<ComplexMatrix4, 2> couplings_;
  std::vector<SuperEntry> local_;
  std::vector<double> damping_;
  std::vector<double> coeff_re_;
  std::vector<double> coeff_im_;

  Kernel kernel_ = Kernel::Generic;
  Kernel best_kernel_ = Kernel::Generic;
  std::array<double, 16> hamiltonian_dense_{};
  std::array<double, 16> minus_hamiltonian_dense_{};
  std::array<double, 16> counter_square_dense_{};  // -Delta sum_m V_m^2
  bool counter_square_scalar_ = false;
  double counter_square_value_ = 0.0;
  std::array<std::array<double, 16>, 2> coupling_dense_{};
  std::array<double, 4> hamiltonian_diagonal_{};
  double hamiltonian_flip_ = 0.0;
};

/// Classical fourth-order Runge-Kutta. Holds stage buffers so repeated
/// steps do not allocate; one integrator per thread.
class Rk4Integrator {
 public:
  explicit Rk4Integrator(const HeomSystem& system);

  /// Advances state by dt. Throws Error(Divergence) naming the time and
  /// tier of the first non-finite ADO.
  void step(HierarchyState& state, double dt);

  /// Whole steps of dt up to `t_target`, then one shorter step to land on it.
  void advance_to(HierarchyState& state, double t_target, double dt);

 private:
  const HeomSystem* system_;
  HierarchyState stage_;
  HierarchyState probe_;
  HierarchyState accum_;
};

HierarchyState step_rk4(const HeomSystem& system, const HierarchyState& state,
                        double dt);

/// Throws Error(Divergence) if any ADO holds a non-finite entry.
void check_finite(const HeomSystem& system, const HierarchyState& state);

/// Maximum allowed |tr(rho_0) - 1| while evolving.
inline constexpr double kTraceDriftLimit = 1e-6;

struct EvolveOptions {
  int sample_every = 10;
  /// Optional equilibration before t = 0: propagate `preparation` (with
  /// zero ADOs) for this long, then overwrite rho_0 with the initial state
  /// and keep the accumulated ADOs.
  double burn_in = 0.0;
  ComplexMatrix4 preparation = 0.25 * ComplexMatrix4::identity();
  int threads = 1;
  /// Called at every sample with the sample number and the full state.
  std::function<void(std::size_t, const HierarchyState&)> observer;
};

struct PhysicalTrajectory {
  std::vector<double> times;
  std::vector<ComplexMatrix4> rho;
};

/// Builds the system model from physical parameters.
HeomSystem make_system(const SystemParams& system, const BathParams& bath,
                       const HierarchyConfig& config, int threads = 1);

/// Integrates from t = 0 to t_final, sampling rho_0 every `sample_every`
/// steps (and always at t_final). Throws Error(Accuracy) when the trace of
/// rho_0 drifts beyond kTraceDriftLimit.
PhysicalTrajectory evolve(const HeomSystem& model, const DensityMatrix& initial,
                          const HierarchyConfig& config,
                          const EvolveOptions& options = {});

PhysicalTrajectory evolve(const DensityMatrix& initial,
                          const HierarchyConfig& config,
                          const SystemParams& system, const BathParams& bath,
                          const EvolveOptions& options = {});

}  // namespace heomesd
