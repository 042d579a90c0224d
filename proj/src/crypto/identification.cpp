#include "asda/crypto/identification.hpp"

#include <stdexcept>
#include <utility>

namespace asda::crypto {

IdentificationMaterial
make_identification (const BigInt &secret, const BigInt &modulus)
{
  if (!(secret > 1 && secret < modulus))
    {
      throw std::invalid_argument ("identification secret must satisfy 1 < P < G");
    }
  return {secret, modulus, secret * secret % modulus};
}

HonestProver::HonestProver (BigInt secret, BigInt modulus, Rng rng)
  : rng_ (rng), secret_ (std::move (secret)), modulus_ (std::move (modulus))
{
}

BigInt
HonestProver::commit ()
{
  nonce_ = random_between (BigInt (1), modulus_, rng_);
  BigInt t = nonce_ * nonce_ % modulus_;
  // s sharing a factor with G could square to 0; redraw.
  while (t == 0)
    {
      nonce_ = random_between (BigInt (1), modulus_, rng_);
      t = nonce_ * nonce_ % modulus_;
    }
  return t;
}

BigInt
HonestProver::respond (bool challenge)
{
  if (!challenge)
    {
      return nonce_;
    }
  return nonce_ * secret_ % modulus_;
}

GuessingProver::GuessingProver (BigInt modulus, BigInt square, Rng rng)
  : rng_ (rng), modulus_ (std::move (modulus)), square_ (std::move (square))
{
}

BigInt
GuessingProver::commit ()
{
  z_ = random_between (BigInt (1), modulus_, rng_);
  const bool guess = rng_.coin ();
  const BigInt z2 = z_ * z_ % modulus_;
  if (!guess)
    {
      return z2;
    }
  if (!square_inverse_)
    {
      square_inverse_ = mod_inverse (square_, modulus_);
    }
  return z2 * *square_inverse_ % modulus_;
}

BigInt
GuessingProver::respond (bool)
{
  return z_;
}

RandomResponder::RandomResponder (BigInt modulus, Rng rng) : rng_ (rng), modulus_ (std::move (modulus))
{
}

BigInt
RandomResponder::commit ()
{
  return random_between (BigInt (1), modulus_, rng_);
}

BigInt
RandomResponder::respond (bool)
{
  return random_between (BigInt (1), modulus_, rng_);
}

bool
fs_identify (Prover &prover, const PublicIdentity &id, std::uint32_t rounds, Rng &verifier_rng)
{
  if (rounds == 0)
    {
      throw std::invalid_argument ("fs_identify: at least one round required");
    }
  const BigInt &g = id.modulus;
  bool accepted = true;
  for (std::uint32_t i = 0; i < rounds; ++i)
    {
      const BigInt t = prover.commit ();
      const bool b = verifier_rng.coin ();
      const BigInt z = prover.respond (b);
      if (t <= 0 || t >= g || z <= 0 || z >= g)
        {
          return false;
        }
      const BigInt lhs = z * z % g;
      const BigInt rhs = b ? t * id.square % g : t;
      if (lhs != rhs)
        {
          // every round runs; the transcript length is fixed at `rounds`
          accepted = false;
        }
    }
  return accepted;
}

} // namespace asda::crypto
