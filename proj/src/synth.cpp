#include "edmnet/synth.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <random>

#include "edmnet/error.hpp"
#include "edmnet/text.hpp"

namespace edmnet::synth {

namespace {
constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr double kQuarterPi = std::numbers::pi / 4.0;
}  // namespace

void validate(const SyntheticSpec& spec) {
  require(spec.alpha > 0.0, "alpha must be positive");
  require(spec.radial_scale > 0.0, "radial_scale must be positive");
  if (spec.angle_law.kind == AngleLaw::Kind::point_mass)
    require(spec.angle_law.phi0 >= 0.0 && spec.angle_law.phi0 <= kHalfPi, "phi0 must lie in [0, pi/2]");
}

std::array<double, 2> arc_direction(double phi) {
  if (phi == 0.0) return {1.0, 0.0};
  if (phi == kHalfPi) return {0.0, 1.0};
  if (phi == kQuarterPi) return {std::numbers::sqrt2 / 2.0, std::numbers::sqrt2 / 2.0};
  return {std::cos(phi), std::sin(phi)};
}

SampleBatch sample_mrv(const SyntheticSpec& spec, std::size_t count) {
  validate(spec);
  require(count >= 1, "sample count must be at least 1");

  std::mt19937_64 rng(spec.seed);
  // (0, 1]: U = 1 - canonical keeps the radius finite.
  auto unit = [&rng] { return 1.0 - std::generate_canonical<double, 64>(rng); };

  SampleBatch batch;
  batch.spec = spec;
  batch.count = count;
  batch.pairs.reserve(count);
  const auto fixed_dir = arc_direction(spec.angle_law.phi0);
  for (std::size_t i = 0; i < count; ++i) {
    const double radius = spec.radial_scale * std::pow(unit(), -1.0 / spec.alpha);
    std::array<double, 2> dir{};
    switch (spec.angle_law.kind) {
      case AngleLaw::Kind::point_mass: dir = fixed_dir; break;
      case AngleLaw::Kind::uniform: dir = arc_direction(kHalfPi * (1.0 - unit())); break;
      case AngleLaw::Kind::axes: dir = (rng() & 1U) ? std::array{0.0, 1.0} : std::array{1.0, 0.0}; break;
    }
    batch.pairs.push_back({radius * dir[0], radius * dir[1]});
  }
  return batch;
}

double analytic_edm(const SyntheticSpec& spec) {
  validate(spec);
  switch (spec.angle_law.kind) {
    case AngleLaw::Kind::point_mass: {
      const double phi = spec.angle_law.phi0;
      if (phi == 0.0 || phi == kHalfPi) return 0.0;
      return 0.5 * std::sin(2.0 * phi);  // cos(phi) sin(phi)
    }
    // (2/pi) * integral_0^{pi/2} cos(phi) sin(phi) dphi
    case AngleLaw::Kind::uniform: return 1.0 / std::numbers::pi;
    case AngleLaw::Kind::axes: return 0.0;
  }
  return 0.0;
}

void write_csv(std::ostream& out, const SampleBatch& batch) {
  out << "z1,z2\n";
  for (const auto& p : batch.pairs) out << format_double(p[0]) << ',' << format_double(p[1]) << '\n';
}

}  // namespace edmnet::synth
