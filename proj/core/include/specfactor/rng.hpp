#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace specfactor {

// Seedable generator with a fixed conversion from raw 64-bit words to
// doubles. std::mt19937_64's output sequence is pinned by the standard; the
// standard distributions are not, so they are not used here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0, 1) with 53 random bits.
  double uniform();
  // Standard normal, Marsaglia polar method.
  double normal();
  // Real and imaginary parts independent N(0, 1/2).
  std::complex<double> complex_normal();

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// Derives the seed of the i-th run in a sweep from a base seed (splitmix64).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

}  // namespace specfactor
