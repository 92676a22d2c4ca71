#pragma once

// Entanglement sudden death / rebirth detection on a sampled concurrence
// curve. Events are sign changes of the unclamped gap Lambda(t); each
// bracket is refined by bisection through a caller-supplied evaluator.

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace heomesd {

struct Sample {
  double time = 0.0;
  double concurrence = 0.0;
  double lambda_gap = 0.0;
  double trace_error = 0.0;
  double hermiticity_error = 0.0;
};

/// Time-ordered samples; times strictly increase and
/// concurrence == max(0, lambda_gap) at every sample.
class Trajectory {
 public:
  Trajectory() = default;
  explicit Trajectory(std::vector<Sample> samples);

  void push_back(const Sample& s);

  const std::vector<Sample>& samples() const { return samples_; }
  std::size_t size() const { return samples_.size(); }
  bool empty() const { return samples_.empty(); }
  const Sample& operator[](std::size_t i) const { return samples_[i]; }

 private:
  std::vector<Sample> samples_;
};

enum class TransitionKind { Death, Rebirth };

struct Transition {
  TransitionKind kind;
  double time;
};

/// Alternating death/rebirth events with strictly increasing times. A list
/// for an initially entangled trajectory starts with a death; one for an
/// initially separable trajectory starts with a rebirth (entanglement birth).
class TransitionList {
 public:
  explicit TransitionList(bool starts_entangled = true)
      : starts_entangled_(starts_entangled) {}

  /// Throws Error(Domain) if the event would break ordering or alternation.
  void push_back(const Transition& t);

  bool starts_entangled() const { return starts_entangled_; }
  const std::vector<Transition>& events() const { return events_; }
  std::size_t size() const { return events_.size(); }
  bool empty() const { return events_.empty(); }
  const Transition& operator[](std::size_t i) const { return events_[i]; }

 private:
  bool starts_entangled_;
  std::vector<Transition> events_;
};

/// Re-evaluates Lambda at time t, starting from stored sample `left` (the
/// lower end of the bracket). Must be safe to call repeatedly.
using GapEvaluator = std::function<double(std::size_t left, double t)>;

inline constexpr double kEventTimeTolerance = 1e-4;
/// |Lambda| below this at a sample counts as touching zero, not a sign.
inline constexpr double kGrazingBand = 1e-10;

/// +1, -1, or 0 inside the grazing band.
int gap_sign(double gap);

TransitionList detect_transitions(const Trajectory& trajectory,
                                  const GapEvaluator& refine,
                                  double time_tolerance = kEventTimeTolerance);

struct FirstPair {
  std::optional<double> death;
  std::optional<double> rebirth;
};

/// First death and the first rebirth after it.
FirstPair summarize_first_pair(const TransitionList& transitions);

}  // namespace heomesd
