#pragma once

#include <cstdint>
#include <vector>

namespace strongcolor {

struct ScalingPoint {
  std::uint64_t vertices = 0;
  std::uint64_t nodes = 0;
  std::uint64_t sci_value = 0;
  std::uint64_t im_value = 0;
  double generate_seconds = 0;
  double sci_seconds = 0;  // fastest of the repeated runs
  double im_seconds = 0;
  std::uint64_t repetitions = 0;
};

struct ScalingReport {
  std::vector<ScalingPoint> points;
  // ratio[i] = time(points[i + 1]) / time(points[i])
  std::vector<double> sci_ratios;
  std::vector<double> im_ratios;
  std::vector<double> total_ratios;
};

/// Times the value-only strong chromatic index and induced matching folds on
/// random decomposition trees of 10^min_exponent .. 10^max_exponent
/// vertices, a few instances per size. Each size is repeated until at least
/// `min_seconds` of work has accumulated; the reported time is the fastest
/// repetition's mean over the instances. Values are those of the first
/// instance.
ScalingReport run_scaling_benchmark(std::uint64_t seed, int min_exponent, int max_exponent,
                                    int max_leaf_size = 16, double min_seconds = 0.25);

}  // namespace strongcolor
