// Deterministic random sampling shared by the simulator and the CLI.
// Box-Muller on top of mt19937_64 keeps the stream independent of the
// standard library's distribution implementations.
#pragma once

#include <cstdint>
#include <optional>
#include <random>

namespace radcal {

class GaussianSampler {
 public:
  explicit GaussianSampler(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double normal(double sigma);

 private:
  std::mt19937_64 engine_;
  std::optional<double> spare_;
};

// splitmix64-style mixing for deriving per-task seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

}  // namespace radcal
