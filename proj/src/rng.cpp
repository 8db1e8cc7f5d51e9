#include "radcal/rng.hpp"

#include <cmath>
#include <numbers>

namespace radcal {

double GaussianSampler::normal(double sigma) {
  if (spare_) {
    const double value = *spare_;
    spare_.reset();
    return sigma * value;
  }
  double u1 = 0.0;
  do {
    u1 = uniform();
  } while (u1 <= 0.0);
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  return sigma * radius * std::cos(angle);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  };
  return mix(mix(seed) ^ salt);
}

}  // namespace radcal
