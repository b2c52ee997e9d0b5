#ifndef DEPNET_RNG_HPP
#define DEPNET_RNG_HPP

#include <cstdint>
#include <random>
#include <string_view>

namespace depnet {

/// Seeded generator with platform-independent output.
///
/// std::mt19937_64 has a fully specified sequence, but the standard
/// distributions do not, so bounded integers and unit reals are derived
/// here directly from the raw 64-bit words.
class Rng {
  __extension__ using u128 = unsigned __int128;

 public:
  static constexpr std::string_view kAlgorithm = "mt19937_64/lemire-rejection";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound). `bound` must be non-zero.
  std::uint64_t below(std::uint64_t bound) {
    // Lemire's nearly-divisionless method; rejection keeps it unbiased.
    u128 product = static_cast<u128>(next()) * bound;
    auto low = static_cast<std::uint64_t>(product);
    if (low < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        product = static_cast<u128>(next()) * bound;
        low = static_cast<std::uint64_t>(product);
      }
    }
    return static_cast<std::uint64_t>(product >> 64);
  }

  /// Uniform real in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace depnet

#endif  // DEPNET_RNG_HPP
