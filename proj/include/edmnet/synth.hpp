#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <vector>

namespace edmnet::synth {

/// Angular law of the spectral measure on the positive quarter circle.
struct AngleLaw {
  enum class Kind { point_mass, uniform, axes };
  Kind kind = Kind::uniform;
  double phi0 = 0.0;  // point_mass only, radians in [0, pi/2]

  static AngleLaw point_mass(double phi) { return {Kind::point_mass, phi}; }
  static AngleLaw uniform() { return {Kind::uniform, 0.0}; }
  static AngleLaw axes() { return {Kind::axes, 0.0}; }
};

struct SyntheticSpec {
  double alpha = 2.0;         // Pareto tail index
  double radial_scale = 1.0;  // P(R > r) = (r / radial_scale)^-alpha for r >= radial_scale
  AngleLaw angle_law;
  std::uint64_t seed = 0;
};

struct SampleBatch {
  std::vector<std::array<double, 2>> pairs;
  SyntheticSpec spec;
  std::size_t count = 0;
};

void validate(const SyntheticSpec& spec);

/// Draws `count` pairs R * (cos Theta, sin Theta) with R ~ Pareto(alpha) by
/// inverse CDF and Theta from the angle law.
SampleBatch sample_mrv(const SyntheticSpec& spec, std::size_t count);

/// Closed-form tail cross-moment of the spectral measure.
double analytic_edm(const SyntheticSpec& spec);

/// Unit vector at angle phi in [0, pi/2]; exact at the axes and the diagonal.
std::array<double, 2> arc_direction(double phi);

void write_csv(std::ostream& out, const SampleBatch& batch);

}  // namespace edmnet::synth
