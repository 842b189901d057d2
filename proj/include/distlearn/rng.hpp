#pragma once

#include <cstdint>
#include <vector>

namespace distlearn {

// xoshiro256** seeded through splitmix64. Uniform doubles take the top 53
// bits; normals come from the Box-Muller transform, consumed in pairs.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64();
  // Uniform in [0, 1).
  double uniform();
  double uniform(double lo, double hi);
  double normal();
  // Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound);

  // Independent stream keyed by `stream`, derived from this generator's seed.
  Rng fork(std::uint64_t stream) const;

  bool operator==(const Rng&) const = default;

 private:
  std::uint64_t seed_;
  std::uint64_t s_[4];
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// `n` draws from N(mean, std²). Throws kInvalidArgument when std < 0.
std::vector<double> rng_normal(Rng& rng, std::size_t n, double mean, double std);

}  // namespace distlearn
