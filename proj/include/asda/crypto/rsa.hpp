#pragma once

#include <stdexcept>

#include "asda/crypto/bigint.hpp"

namespace asda::crypto {

class RsaError : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

struct RsaPublicKey
{
  BigInt exponent;
  BigInt modulus;
};

struct RsaPrivateKey
{
  BigInt exponent;
  BigInt modulus;
};

/// Full key material. The primes and totient stay with the base station.
struct RsaKeyPair
{
  BigInt modulus;
  BigInt public_exponent;
  BigInt private_exponent;
  BigInt prime_s;
  BigInt prime_r;
  BigInt totient;
  // CRT parameters: d mod (S-1), d mod (R-1), R^-1 mod S
  BigInt exponent_s;
  BigInt exponent_r;
  BigInt coefficient;

  RsaPublicKey public_key () const { return {public_exponent, modulus}; }
  RsaPrivateKey private_key () const { return {private_exponent, modulus}; }
};

/// Builds a key pair from two distinct primes and a public exponent coprime
/// with (s-1)(r-1). The private exponent is the inverse of e mod the totient.
/// Throws RsaError on equal or composite primes, or a bad exponent.
RsaKeyPair rsa_keygen (const BigInt &prime_s, const BigInt &prime_r, const BigInt &public_exponent,
                       Rng &rng);

/// Draws two distinct primes of `prime_bits` bits and builds the pair.
RsaKeyPair rsa_generate (unsigned prime_bits, const BigInt &public_exponent, Rng &rng);

/// message^e mod m; requires 0 <= message < m.
BigInt rsa_encrypt (const BigInt &message, const RsaPublicKey &key);

/// ciphertext^d mod m; requires 0 <= ciphertext < m.
BigInt rsa_decrypt (const BigInt &ciphertext, const RsaPrivateKey &key);

/// Same result as the (d, m) form, computed modulo each prime and recombined.
BigInt rsa_decrypt (const BigInt &ciphertext, const RsaKeyPair &keys);

} // namespace asda::crypto
