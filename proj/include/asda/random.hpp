#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <span>

namespace asda {

/// Seeded 64-bit generator with distribution helpers whose output does not
/// depend on the standard library's distribution implementations.
class Rng
{
public:
  using result_type = std::uint64_t;

  explicit Rng (std::uint64_t seed) : engine_ (seed) {}

  static constexpr result_type min () { return std::numeric_limits<result_type>::min (); }
  static constexpr result_type max () { return std::numeric_limits<result_type>::max (); }
  result_type operator() () { return engine_ (); }

  /// Uniform double in [0, 1).
  double uniform ();
  double uniform (double lo, double hi);
  /// Uniform integer in [0, bound); bound must be positive.
  std::uint64_t below (std::uint64_t bound);
  bool coin ();
  void fill (std::span<std::uint8_t> out);

private:
  std::mt19937_64 engine_;
};

// Independent streams derived from one run seed.
enum class Stream : std::uint64_t
{
  Topology = 1,
  Traffic = 2,
  Attack = 3,
  Crypto = 4,
};

std::uint64_t derive_seed (std::uint64_t seed, Stream stream);

} // namespace asda
