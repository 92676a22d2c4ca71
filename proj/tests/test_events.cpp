#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "heomesd/error.hpp"
#include "heomesd/events.hpp"

using namespace heomesd;

namespace {

Trajectory sample_curve(double (*f)(double), double t0, double t1, double dt) {
  Trajectory traj;
  const int n = static_cast<int>(std::round((t1 - t0) / dt));
  for (int i = 0; i <= n; ++i) {
    const double t = t0 + i * dt;
    Sample s;
    s.time = t;
    s.lambda_gap = f(t);
    s.concurrence = std::max(0.0, s.lambda_gap);
    traj.push_back(s);
  }
  return traj;
}

GapEvaluator exact(double (*f)(double)) {
  return [f](std::size_t, double t) { return f(t); };
}

double cosine(double t) { return std::cos(t); }
double linear_decay(double t) { return 1.0 - t; }
double one(double) { return 1.0; }
double touch(double t) { return (t - 1.0) * (t - 1.0); }
double near_touch(double t) { return (t - 1.0) * (t - 1.0) + 5e-11; }

}  // namespace

TEST(Events, ConstantConcurrenceHasNoEvents) {
  const auto list = detect_transitions(sample_curve(one, 0, 2, 0.01), exact(one));
  EXPECT_TRUE(list.empty());
}

TEST(Events, CosineRootsAreRecovered) {
  const auto traj = sample_curve(cosine, 0, 2 * std::numbers::pi, 0.01);
  const auto list = detect_transitions(traj, exact(cosine));
  ASSERT_EQ(list.size(), 2u);
  EXPECT_EQ(list[0].kind, TransitionKind::Death);
  EXPECT_NEAR(list[0].time, std::numbers::pi / 2, 1e-4);
  EXPECT_EQ(list[1].kind, TransitionKind::Rebirth);
  EXPECT_NEAR(list[1].time, 3 * std::numbers::pi / 2, 1e-4);
  // The reported time brackets the root within the tolerance.
  for (const auto& e : list.events()) {
    const double before = std::cos(e.time - kEventTimeTolerance);
    const double after = std::cos(e.time + kEventTimeTolerance);
    if (e.kind == TransitionKind::Death) {
      EXPECT_GT(before, 0.0);
      EXPECT_LT(after, 0.0);
    } else {
      EXPECT_LT(before, 0.0);
      EXPECT_GT(after, 0.0);
    }
  }
}

TEST(Events, MonotoneDecayHasOneDeath) {
  const auto list = detect_transitions(sample_curve(linear_decay, 0, 2, 0.013), exact(linear_decay));
  ASSERT_EQ(list.size(), 1u);
  EXPECT_EQ(list[0].kind, TransitionKind::Death);
  EXPECT_NEAR(list[0].time, 1.0, 1e-4);
}

TEST(Events, RefinedTimesDoNotDependOnSampling) {
  const auto coarse = detect_transitions(sample_curve(cosine, 0, 7, 0.1), exact(cosine));
  const auto fine = detect_transitions(sample_curve(cosine, 0, 7, 0.05), exact(cosine));
  ASSERT_EQ(coarse.size(), fine.size());
  for (std::size_t i = 0; i < coarse.size(); ++i) {
    EXPECT_LT(std::abs(coarse[i].time - fine[i].time), 2 * kEventTimeTolerance);
  }
}

TEST(Events, GrazingContactIsNotAnEvent) {
  // Exactly zero at one sample, positive on both sides.
  EXPECT_TRUE(detect_transitions(sample_curve(touch, 0, 2, 0.1), exact(touch)).empty());
  // Inside the grazing band without touching.
  EXPECT_TRUE(detect_transitions(sample_curve(near_touch, 0, 2, 0.1), exact(near_touch)).empty());
}

TEST(Events, SignChangeThroughGrazingBandIsOneEvent) {
  // A sample sits exactly on the root; the crossing is still reported once.
  const auto list = detect_transitions(sample_curve(linear_decay, 0, 2, 0.1), exact(linear_decay));
  ASSERT_EQ(list.size(), 1u);
  EXPECT_NEAR(list[0].time, 1.0, 1e-4);
}

TEST(Events, InitiallySeparableStartsWithRebirth) {
  auto rising = +[](double t) { return t - 0.5; };
  const auto list = detect_transitions(sample_curve(rising, 0, 1, 0.1), exact(rising));
  ASSERT_EQ(list.size(), 1u);
  EXPECT_FALSE(list.starts_entangled());
  EXPECT_EQ(list[0].kind, TransitionKind::Rebirth);
}

TEST(Events, RefinementStartsFromTheBracketSample) {
  std::vector<std::size_t> lefts;
  const auto traj = sample_curve(cosine, 0, 2 * std::numbers::pi, 0.5);
  detect_transitions(traj, [&](std::size_t left, double t) {
    lefts.push_back(left);
    EXPECT_GE(t, traj[left].time);
    return std::cos(t);
  });
  ASSERT_FALSE(lefts.empty());
  EXPECT_EQ(lefts.front(), 3u);  // pi/2 lies between samples 3 and 4
}

TEST(Events, TooFewSamples) {
  Trajectory traj;
  traj.push_back({0.0, 1.0, 1.0, 0.0, 0.0});
  try {
    detect_transitions(traj, exact(one));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InsufficientData);
  }
}

TEST(Events, TrajectoryTimesMustIncrease) {
  Trajectory traj;
  traj.push_back({1.0, 1.0, 1.0, 0.0, 0.0});
  EXPECT_THROW(traj.push_back({1.0, 1.0, 1.0, 0.0, 0.0}), Error);
  EXPECT_THROW(traj.push_back({0.5, 1.0, 1.0, 0.0, 0.0}), Error);
}

TEST(TransitionListTest, EnforcesAlternationAndOrder) {
  TransitionList list;
  list.push_back({TransitionKind::Death, 1.0});
  EXPECT_THROW(list.push_back({TransitionKind::Death, 2.0}), Error);
  EXPECT_THROW(list.push_back({TransitionKind::Rebirth, 0.5}), Error);
  list.push_back({TransitionKind::Rebirth, 2.0});
  EXPECT_EQ(list.size(), 2u);

  TransitionList separable(false);
  EXPECT_THROW(separable.push_back({TransitionKind::Death, 1.0}), Error);
}

TEST(FirstPairTest, Examples) {
  const auto empty = summarize_first_pair(TransitionList{});
  EXPECT_FALSE(empty.death);
  EXPECT_FALSE(empty.rebirth);

  TransitionList three;
  three.push_back({TransitionKind::Death, 3.1});
  three.push_back({TransitionKind::Rebirth, 5.2});
  three.push_back({TransitionKind::Death, 9.0});
  const auto pair = summarize_first_pair(three);
  EXPECT_EQ(pair.death, 3.1);
  EXPECT_EQ(pair.rebirth, 5.2);

  TransitionList death_only;
  death_only.push_back({TransitionKind::Death, 4.0});
  const auto single = summarize_first_pair(death_only);
  EXPECT_EQ(single.death, 4.0);
  EXPECT_FALSE(single.rebirth);

  // Birth of entanglement from a separable start is not a death.
  TransitionList birth(false);
  birth.push_back({TransitionKind::Rebirth, 1.0});
  birth.push_back({TransitionKind::Death, 2.0});
  birth.push_back({TransitionKind::Rebirth, 3.0});
  const auto later = summarize_first_pair(birth);
  EXPECT_EQ(later.death, 2.0);
  EXPECT_EQ(later.rebirth, 3.0);
}
