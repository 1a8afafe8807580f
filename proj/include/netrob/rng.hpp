#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace netrob {

// Seeded RNG with hand-rolled draw helpers. std::uniform_*_distribution output
// is implementation-defined, and reports must be byte-identical for a given
// seed, so we only rely on the mt19937_64 bit stream itself.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t bits() { return eng_(); }

  // uniform integer in [0, n), unbiased via rejection
  std::uint64_t below(std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = eng_();
    } while (x >= limit);
    return x % n;
  }

  std::size_t index(std::size_t n) { return static_cast<std::size_t>(below(n)); }

  // uniform double in [0, 1) with 53 random bits
  double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  bool chance(double p) { return unit() < p; }

  template <class T>
  void shuffle(std::vector<T>& xs) {
    for (std::size_t i = xs.size(); i > 1; --i) {
      std::swap(xs[i - 1], xs[index(i)]);
    }
  }

  // sample k distinct values from [0, n) in increasing order
  std::vector<std::uint32_t> sample(std::uint32_t n, std::uint32_t k);

 private:
  std::mt19937_64 eng_;
};

// Deterministic seed derivation for independent substreams (splitmix64 step).
inline std::uint64_t substream(std::uint64_t seed, std::uint64_t tag) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (tag + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace netrob
