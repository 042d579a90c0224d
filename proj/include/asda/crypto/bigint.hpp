#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "asda/random.hpp"

namespace asda::crypto {

using BigInt = boost::multiprecision::mpz_int;

/// base^exponent mod modulus (GMP powm).
BigInt mod_pow (const BigInt &base, const BigInt &exponent, const BigInt &modulus);

struct ExtendedGcd
{
  BigInt gcd;
  BigInt x; // a*x + b*y = gcd
  BigInt y;
};

ExtendedGcd extended_gcd (const BigInt &a, const BigInt &b);

/// Inverse of a modulo m; throws std::domain_error when gcd(a, m) != 1.
BigInt mod_inverse (const BigInt &a, const BigInt &m);

/// Miller-Rabin with `rounds` random bases after trial division.
bool is_probable_prime (const BigInt &n, Rng &rng, unsigned rounds = 32);

/// Random prime with exactly `bits` bits (top bit set).
BigInt random_prime (unsigned bits, Rng &rng);

/// Uniform in [0, bound).
BigInt random_below (const BigInt &bound, Rng &rng);

/// Uniform in [lo, hi).
BigInt random_between (const BigInt &lo, const BigInt &hi, Rng &rng);

std::size_t bit_length (const BigInt &n);
std::size_t byte_length (const BigInt &n);

BigInt from_bytes (std::span<const std::uint8_t> big_endian);
std::vector<std::uint8_t> to_bytes (const BigInt &n, std::size_t width);

} // namespace asda::crypto
