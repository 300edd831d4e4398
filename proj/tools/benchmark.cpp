#include "benchmark.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <vector>

#include "strongcolor/decomposition.hpp"
#include "strongcolor/errors.hpp"
#include "strongcolor/induced_matching.hpp"
#include "strongcolor/random.hpp"
#include "strongcolor/strong_chromatic.hpp"

namespace strongcolor {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Distinct instances per size, so repetitions cannot replay one branch history.
constexpr int kInstances = 4;

volatile std::uint64_t sink = 0;

}  // namespace

ScalingReport run_scaling_benchmark(std::uint64_t seed, int min_exponent, int max_exponent,
                                    int max_leaf_size, double min_seconds) {
  if (min_exponent < 0 || max_exponent < min_exponent || max_exponent > 8) {
    throw InputError("benchmark exponents must satisfy 0 <= min <= max <= 8");
  }
  ScalingReport report;
  Rng seeds(seed);
  std::uint64_t vertices = 1;
  for (int i = 0; i < min_exponent; ++i) vertices *= 10;
  for (int exponent = min_exponent; exponent <= max_exponent; ++exponent, vertices *= 10) {
    ScalingPoint point;
    point.vertices = vertices;
    std::vector<DecompositionTree> trees;
    for (int i = 0; i < kInstances; ++i) {
      const auto generate_start = Clock::now();
      trees.push_back(random_tree_cograph_with_size(seeds.below(UINT64_MAX), vertices, max_leaf_size));
      if (i == 0) point.generate_seconds = seconds_since(generate_start);
    }
    point.nodes = trees.front().size();

    // Per repetition, the mean over the instances; the fastest repetition wins.
    point.sci_seconds = point.im_seconds = std::numeric_limits<double>::infinity();
    double spent = 0;
    std::uint64_t checksum = 0;
    while (spent < min_seconds || point.repetitions < 3) {
      auto start = Clock::now();
      for (const DecompositionTree& tree : trees) checksum += sci(tree).value;
      const double sci_time = seconds_since(start);
      start = Clock::now();
      for (const DecompositionTree& tree : trees) checksum += im_value(tree);
      const double im_time = seconds_since(start);
      point.sci_seconds = std::min(point.sci_seconds, sci_time / kInstances);
      point.im_seconds = std::min(point.im_seconds, im_time / kInstances);
      spent += sci_time + im_time;
      ++point.repetitions;
    }
    sink = checksum;
    point.sci_value = sci(trees.front()).value;
    point.im_value = im_value(trees.front());
    report.points.push_back(point);
  }
  for (std::size_t i = 0; i + 1 < report.points.size(); ++i) {
    const ScalingPoint& a = report.points[i];
    const ScalingPoint& b = report.points[i + 1];
    report.sci_ratios.push_back(b.sci_seconds / a.sci_seconds);
    report.im_ratios.push_back(b.im_seconds / a.im_seconds);
    report.total_ratios.push_back((b.sci_seconds + b.im_seconds) / (a.sci_seconds + a.im_seconds));
  }
  return report;
}

}  // namespace strongcolor
