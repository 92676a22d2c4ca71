#include "heomesd/events.hpp"

#include <algorithm>
#include <sstream>

#include "heomesd/error.hpp"

namespace heomesd {

int gap_sign(double gap) {
  if (gap > kGrazingBand) return 1;
  if (gap < -kGrazingBand) return -1;
  return 0;
}

Trajectory::Trajectory(std::vector<Sample> samples) {
  samples_.reserve(samples.size());
  for (const auto& s : samples) push_back(s);
}

void Trajectory::push_back(const Sample& s) {
  if (!samples_.empty() && !(s.time > samples_.back().time)) {
    std::ostringstream ss;
    ss << "trajectory times must strictly increase (" << s.time << " after "
       << samples_.back().time << ")";
    throw Error(ErrorKind::Domain, ss.str());
  }
  samples_.push_back(s);
}

void TransitionList::push_back(const Transition& t) {
  const TransitionKind expected =
      events_.empty()
          ? (starts_entangled_ ? TransitionKind::Death : TransitionKind::Rebirth)
          : (events_.back().kind == TransitionKind::Death ? TransitionKind::Rebirth
                                                          : TransitionKind::Death);
  if (t.kind != expected) {
    throw Error(ErrorKind::Domain, "transition tags must alternate");
  }
  if (!events_.empty() && !(t.time > events_.back().time)) {
    throw Error(ErrorKind::Domain, "transition times must strictly increase");
  }
  events_.push_back(t);
}

TransitionList detect_transitions(const Trajectory& trajectory,
                                  const GapEvaluator& refine,
                                  double time_tolerance) {
  if (trajectory.size() < 2) {
    throw Error(ErrorKind::InsufficientData,
                "event detection needs at least two samples");
  }
  const auto& samples = trajectory.samples();

  std::size_t left = 0;
  int left_sign = 0;
  for (; left < samples.size(); ++left) {
    left_sign = gap_sign(samples[left].lambda_gap);
    if (left_sign != 0) break;
  }
  // An initial state sitting exactly on the separability boundary is treated
  // as entangled; whichever way it leaves is then reported consistently.
  TransitionList transitions(left_sign >= 0);
  if (left_sign == 0) return transitions;

  for (std::size_t i = left + 1; i < samples.size(); ++i) {
    const int s = gap_sign(samples[i].lambda_gap);
    if (s == 0) continue;
    if (s == left_sign) {
      left = i;
      continue;
    }
    double lo = samples[left].time;
    double hi = samples[i].time;
    while (hi - lo >= time_tolerance) {
      const double mid = 0.5 * (lo + hi);
      const double gap = refine(left, mid);
      if ((gap > 0.0) == (left_sign > 0)) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    transitions.push_back({left_sign > 0 ? TransitionKind::Death
                                         : TransitionKind::Rebirth,
                           0.5 * (lo + hi)});
    left = i;
    left_sign = s;
  }
  return transitions;
}

FirstPair summarize_first_pair(const TransitionList& transitions) {
  FirstPair pair;
  for (const auto& t : transitions.events()) {
    if (!pair.death) {
      if (t.kind == TransitionKind::Death) pair.death = t.time;
    } else if (t.kind == TransitionKind::Rebirth) {
      pair.rebirth = t.time;
      break;
    }
  }
  return pair;
}

}  // namespace heomesd
