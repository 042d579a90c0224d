#include "asda/random.hpp"

#include <stdexcept>

namespace asda {

double
Rng::uniform ()
{
  return static_cast<double> (engine_ () >> 11) * 0x1.0p-53;
}

double
Rng::uniform (double lo, double hi)
{
  return lo + (hi - lo) * uniform ();
}

std::uint64_t
Rng::below (std::uint64_t bound)
{
  if (bound == 0)
    {
      throw std::invalid_argument ("Rng::below: bound must be positive");
    }
  // Rejection sampling over the largest multiple of bound.
  const std::uint64_t limit = max () - max () % bound;
  std::uint64_t draw = engine_ ();
  while (draw >= limit)
    {
      draw = engine_ ();
    }
  return draw % bound;
}

bool
Rng::coin ()
{
  return (engine_ () >> 63) != 0;
}

void
Rng::fill (std::span<std::uint8_t> out)
{
  std::size_t i = 0;
  while (i < out.size ())
    {
      std::uint64_t word = engine_ ();
      for (int b = 0; b < 8 && i < out.size (); ++b, ++i)
        {
          out[i] = static_cast<std::uint8_t> (word & 0xff);
          word >>= 8;
        }
    }
}

std::uint64_t
derive_seed (std::uint64_t seed, Stream stream)
{
  // splitmix64 finalizer over (seed, stream)
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t> (stream) + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

} // namespace asda
