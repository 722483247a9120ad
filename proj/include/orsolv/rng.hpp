#pragma once

#include <cstdint>

namespace orsolv {

/* splitmix64, bit-exact so survey runs reproduce across platforms and
 * languages. Not seeded from entropy anywhere; callers pass explicit seeds. */
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // modulo reduction; bias is irrelevant at the bounds used here
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t state_;
};

}  // namespace orsolv
