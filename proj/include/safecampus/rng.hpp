#pragma once

#include <cstdint>
#include <random>

namespace safecampus {

// Stateless 64-bit mixer (splitmix64). Used to scramble user seeds and to
// derive independent stream seeds from a base seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  return splitmix64(base + 0x9E3779B97F4A7C15ULL * (stream + 1));
}

// Deterministic random stream. Draws are generated from the raw mt19937_64
// output so sequences are identical across standard libraries (the std
// distribution objects are implementation-defined; these are not).
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  void reseed(std::uint64_t seed) { engine_.seed(splitmix64(seed)); }

  // Uniform on [0, 1).
  double uniform_double() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform on {0, ..., n-1}, unbiased via rejection.
  int uniform_int(int n) {
    const std::uint64_t bound = ~std::uint64_t{0} - ~std::uint64_t{0} % static_cast<std::uint64_t>(n);
    std::uint64_t draw;
    do {
      draw = engine_();
    } while (draw >= bound);
    return static_cast<int>(draw % static_cast<std::uint64_t>(n));
  }

  friend bool operator==(const RandomStream& a, const RandomStream& b) {
    return a.engine_ == b.engine_;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace safecampus
