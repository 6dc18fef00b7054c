#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "relufibre/param.hpp"

namespace relufibre {

/// M relu(A x + b) + c, exactly.
RatVec eval(const Parameter& theta, std::span<const Rat> x);

/// Sign (+1, 0, -1) of each pre-activation a_i . x + b_i.
std::vector<int> activation_pattern(const Parameter& theta, std::span<const Rat> x);

/// Complete equality test for m = 1, k = 1 parameters: compares values at
/// every breakpoint, one midpoint per bounded interval, and two probes past
/// each extreme breakpoint.
bool exact_equal_1d(const Parameter& theta1, const Parameter& theta2);

struct SampleComparison {
  bool equal = true;
  /// First sampled point where the outputs differ.
  std::optional<RatVec> counterexample;
};

/// Exact comparison at `count` integer points drawn from [-1000, 1000]^m.
/// `equal == false` is a certain inequality.
SampleComparison equal_on_samples(const Parameter& theta1, const Parameter& theta2,
                                  std::size_t count, std::uint64_t seed);

/// The integer sample points used by equal_on_samples.
std::vector<RatVec> sample_points(std::size_t m, std::size_t count, std::uint64_t seed);

struct BoundingBox {
  double x0 = -6, y0 = -6, x1 = 6, y1 = 6;
};

struct PlotOptions {
  BoundingBox bbox;
  std::size_t grid = 200;
  double opacity = 0.25;
  int pixels = 480;
};

/// SVG picture of the bent hyperplane arrangement of an m = 2, k = 1
/// parameter: one <line> per hyperplane crossing the box, the activated
/// half-plane of each neuron shaded, and the zero set of the realization
/// traced by marching squares as one <path>.
std::string arrangement_svg(const Parameter& theta, const PlotOptions& options = {});

}  // namespace relufibre
