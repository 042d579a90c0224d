#include "asda/crypto/bigint.hpp"

#include <array>
#include <stdexcept>

#include <boost/multiprecision/integer.hpp>

namespace asda::crypto {

namespace {

constexpr std::array<unsigned, 54> kSmallPrimes = {
  2,   3,   5,   7,   11,  13,  17,  19,  23,  29,  31,  37,  41,  43,  47,  53,  59,  61,
  67,  71,  73,  79,  83,  89,  97,  101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151,
  157, 163, 167, 173, 179, 181, 191, 193, 197, 199, 211, 223, 227, 229, 233, 239, 241, 251,
};

} // namespace

BigInt
mod_pow (const BigInt &base, const BigInt &exponent, const BigInt &modulus)
{
  if (modulus <= 0)
    {
      throw std::domain_error ("mod_pow: modulus must be positive");
    }
  if (exponent < 0)
    {
      throw std::domain_error ("mod_pow: negative exponent");
    }
  if (modulus == 1)
    {
      return 0;
    }
  BigInt b = base % modulus;
  if (b < 0)
    {
      b += modulus;
    }
  return boost::multiprecision::powm (b, exponent, modulus);
}

ExtendedGcd
extended_gcd (const BigInt &a, const BigInt &b)
{
  BigInt old_r = a, r = b;
  BigInt old_s = 1, s = 0;
  BigInt old_t = 0, t = 1;
  while (r != 0)
    {
      const BigInt q = old_r / r;
      BigInt tmp = old_r - q * r;
      old_r = r;
      r = tmp;
      tmp = old_s - q * s;
      old_s = s;
      s = tmp;
      tmp = old_t - q * t;
      old_t = t;
      t = tmp;
    }
  if (old_r < 0)
    {
      return {-old_r, -old_s, -old_t};
    }
  return {old_r, old_s, old_t};
}

BigInt
mod_inverse (const BigInt &a, const BigInt &m)
{
  if (m <= 1)
    {
      throw std::domain_error ("mod_inverse: modulus must exceed 1");
    }
  ExtendedGcd g = extended_gcd (a % m, m);
  if (g.gcd != 1)
    {
      throw std::domain_error ("mod_inverse: arguments are not coprime");
    }
  BigInt inv = g.x % m;
  if (inv < 0)
    {
      inv += m;
    }
  return inv;
}

bool
is_probable_prime (const BigInt &n, Rng &rng, unsigned rounds)
{
  if (n < 2)
    {
      return false;
    }
  for (unsigned p : kSmallPrimes)
    {
      if (n == p)
        {
          return true;
        }
      if (n % p == 0)
        {
          return false;
        }
    }
  // n - 1 = d * 2^s with d odd
  const BigInt n_minus_1 = n - 1;
  BigInt d = n_minus_1;
  unsigned s = 0;
  while (!boost::multiprecision::bit_test (d, 0))
    {
      d >>= 1;
      ++s;
    }
  for (unsigned round = 0; round < rounds; ++round)
    {
      const BigInt a = random_between (BigInt (2), n_minus_1, rng);
      BigInt x = mod_pow (a, d, n);
      if (x == 1 || x == n_minus_1)
        {
          continue;
        }
      bool witness = true;
      for (unsigned i = 1; i < s; ++i)
        {
          x = x * x % n;
          if (x == n_minus_1)
            {
              witness = false;
              break;
            }
        }
      if (witness)
        {
          return false;
        }
    }
  return true;
}

BigInt
random_prime (unsigned bits, Rng &rng)
{
  if (bits < 3)
    {
      throw std::invalid_argument ("random_prime: need at least 3 bits");
    }
  const std::size_t width = (bits + 7) / 8;
  std::vector<std::uint8_t> buf (width);
  for (;;)
    {
      rng.fill (buf);
      BigInt candidate = from_bytes (buf);
      candidate &= (BigInt (1) << bits) - 1;
      boost::multiprecision::bit_set (candidate, bits - 1);
      boost::multiprecision::bit_set (candidate, 0);
      // Scan odd numbers upward while staying within the bit width.
      for (unsigned step = 0; step < 4 * bits; ++step, candidate += 2)
        {
          if (bit_length (candidate) != bits)
            {
              break;
            }
          if (is_probable_prime (candidate, rng))
            {
              return candidate;
            }
        }
    }
}

BigInt
random_below (const BigInt &bound, Rng &rng)
{
  if (bound <= 0)
    {
      throw std::invalid_argument ("random_below: bound must be positive");
    }
  const std::size_t bits = bit_length (bound);
  const std::size_t width = (bits + 7) / 8;
  std::vector<std::uint8_t> buf (width);
  const BigInt mask = (BigInt (1) << bits) - 1;
  for (;;)
    {
      rng.fill (buf);
      BigInt v = from_bytes (buf) & mask;
      if (v < bound)
        {
          return v;
        }
    }
}

BigInt
random_between (const BigInt &lo, const BigInt &hi, Rng &rng)
{
  if (hi <= lo)
    {
      throw std::invalid_argument ("random_between: empty range");
    }
  return lo + random_below (hi - lo, rng);
}

std::size_t
bit_length (const BigInt &n)
{
  if (n == 0)
    {
      return 0;
    }
  return boost::multiprecision::msb (boost::multiprecision::abs (n)) + 1;
}

std::size_t
byte_length (const BigInt &n)
{
  return (bit_length (n) + 7) / 8;
}

BigInt
from_bytes (std::span<const std::uint8_t> big_endian)
{
  BigInt v = 0;
  for (std::uint8_t byte : big_endian)
    {
      v <<= 8;
      v |= byte;
    }
  return v;
}

std::vector<std::uint8_t>
to_bytes (const BigInt &n, std::size_t width)
{
  if (n < 0 || byte_length (n) > width)
    {
      throw std::invalid_argument ("to_bytes: value does not fit");
    }
  std::vector<std::uint8_t> out (width, 0);
  BigInt v = n;
  for (std::size_t i = width; i-- > 0 && v != 0;)
    {
      out[i] = static_cast<std::uint8_t> (static_cast<unsigned> (v & 0xff));
      v >>= 8;
    }
  return out;
}

} // namespace asda::crypto
