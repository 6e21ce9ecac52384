#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace qgamble {

// SplitMix64 finalizer. Shard substreams are seeded with
// splitmix64(splitmix64(seed) + shard_index); see docs/formats.md.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Source of uniform draws in [0, 1).
struct RandomStream {
  virtual ~RandomStream() = default;
  virtual double next() = 0;
};

// Draws come from std::mt19937_64 raw 64-bit output mapped onto the 53-bit
// mantissa: (word >> 11) * 2^-53. Both the generator and the mapping are
// fully specified, so a seed reproduces the same stream on every platform.
class Uniform01Stream final : public RandomStream {
 public:
  explicit Uniform01Stream(std::uint64_t seed) : gen_(seed) {}

  double next() override {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  static Uniform01Stream for_shard(std::uint64_t seed, std::uint64_t shard) {
    return Uniform01Stream(splitmix64(splitmix64(seed) + shard));
  }

 private:
  std::mt19937_64 gen_;
};

// Replays a fixed list of draws; for tests and documented examples.
class FixedStream final : public RandomStream {
 public:
  explicit FixedStream(std::vector<double> draws) : draws_(std::move(draws)) {}

  double next() override {
    if (pos_ >= draws_.size()) throw std::out_of_range("FixedStream exhausted");
    return draws_[pos_++];
  }

  std::size_t consumed() const { return pos_; }

 private:
  std::vector<double> draws_;
  std::size_t pos_ = 0;
};

}  // namespace qgamble
