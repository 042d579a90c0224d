#include "asda/crypto/rsa.hpp"

#include <boost/multiprecision/integer.hpp>

namespace asda::crypto {

RsaKeyPair
rsa_keygen (const BigInt &prime_s, const BigInt &prime_r, const BigInt &public_exponent, Rng &rng)
{
  if (prime_s == prime_r)
    {
      throw RsaError ("rsa_keygen: primes must differ");
    }
  if (!is_probable_prime (prime_s, rng) || !is_probable_prime (prime_r, rng))
    {
      throw RsaError ("rsa_keygen: composite prime input");
    }
  RsaKeyPair k;
  k.prime_s = prime_s;
  k.prime_r = prime_r;
  k.modulus = prime_s * prime_r;
  k.totient = (prime_s - 1) * (prime_r - 1);
  if (public_exponent <= 1 || public_exponent >= k.totient)
    {
      throw RsaError ("rsa_keygen: public exponent outside (1, totient)");
    }
  if (boost::multiprecision::gcd (public_exponent, k.totient) != 1)
    {
      throw RsaError ("rsa_keygen: public exponent shares a factor with the totient");
    }
  k.public_exponent = public_exponent;
  k.private_exponent = mod_inverse (public_exponent, k.totient);
  k.exponent_s = k.private_exponent % (prime_s - 1);
  k.exponent_r = k.private_exponent % (prime_r - 1);
  k.coefficient = mod_inverse (prime_r % prime_s, prime_s);
  return k;
}

RsaKeyPair
rsa_generate (unsigned prime_bits, const BigInt &public_exponent, Rng &rng)
{
  for (;;)
    {
      const BigInt s = random_prime (prime_bits, rng);
      const BigInt r = random_prime (prime_bits, rng);
      if (s == r)
        {
          continue;
        }
      const BigInt totient = (s - 1) * (r - 1);
      if (boost::multiprecision::gcd (public_exponent, totient) != 1 || public_exponent >= totient)
        {
          continue;
        }
      return rsa_keygen (s, r, public_exponent, rng);
    }
}

BigInt
rsa_encrypt (const BigInt &message, const RsaPublicKey &key)
{
  if (message < 0 || message >= key.modulus)
    {
      throw RsaError ("rsa_encrypt: message must lie in [0, m)");
    }
  return mod_pow (message, key.exponent, key.modulus);
}

BigInt
rsa_decrypt (const BigInt &ciphertext, const RsaPrivateKey &key)
{
  if (ciphertext < 0 || ciphertext >= key.modulus)
    {
      throw RsaError ("rsa_decrypt: ciphertext must lie in [0, m)");
    }
  return mod_pow (ciphertext, key.exponent, key.modulus);
}

BigInt
rsa_decrypt (const BigInt &ciphertext, const RsaKeyPair &keys)
{
  if (ciphertext < 0 || ciphertext >= keys.modulus)
    {
      throw RsaError ("rsa_decrypt: ciphertext must lie in [0, m)");
    }
  const BigInt ms = mod_pow (ciphertext, keys.exponent_s, keys.prime_s);
  const BigInt mr = mod_pow (ciphertext, keys.exponent_r, keys.prime_r);
  BigInt h = (ms - mr) % keys.prime_s;
  if (h < 0)
    {
      h += keys.prime_s;
    }
  h = keys.coefficient * h % keys.prime_s;
  return mr + h * keys.prime_r;
}

} // namespace asda::crypto
