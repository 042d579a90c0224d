#pragma once

#include <cstdint>
#include <optional>

#include "asda/crypto/bigint.hpp"

namespace asda::crypto {

/// Prover secret P with its public modulus G and published square F = P^2 mod G.
struct IdentificationMaterial
{
  BigInt secret;
  BigInt modulus;
  BigInt square;
};

/// Requires 1 < secret < modulus.
IdentificationMaterial make_identification (const BigInt &secret, const BigInt &modulus);

/// What the verifier obtains from the base station.
struct PublicIdentity
{
  BigInt modulus;
  BigInt square;
};

class Prover
{
public:
  virtual ~Prover () = default;
  virtual BigInt commit () = 0;
  virtual BigInt respond (bool challenge) = 0;
};

/// Knows P: commits t = s^2, answers z = s * P^b.
class HonestProver final : public Prover
{
public:
  HonestProver (BigInt secret, BigInt modulus, Rng rng);
  BigInt commit () override;
  BigInt respond (bool challenge) override;

private:
  Rng rng_;
  BigInt secret_;
  BigInt modulus_;
  BigInt nonce_;
};

/// Knows only (G, F). Guesses the challenge bit before committing; for a
/// guess of 1 it commits t = z^2 / F so that the b = 1 check passes.
class GuessingProver final : public Prover
{
public:
  GuessingProver (BigInt modulus, BigInt square, Rng rng);
  BigInt commit () override;
  BigInt respond (bool challenge) override;

private:
  Rng rng_;
  BigInt modulus_;
  BigInt square_;
  std::optional<BigInt> square_inverse_;
  BigInt z_;
};

/// Answers with uniformly random values regardless of the challenge.
class RandomResponder final : public Prover
{
public:
  RandomResponder (BigInt modulus, Rng rng);
  BigInt commit () override;
  BigInt respond (bool challenge) override;

private:
  Rng rng_;
  BigInt modulus_;
};

/// Runs `rounds` commit/challenge/response rounds; accepts iff every
/// z^2 == t * F^b (mod G). Zero or out-of-range commitments and responses
/// are rejected as malformed.
bool fs_identify (Prover &prover, const PublicIdentity &verifier_knows, std::uint32_t rounds,
                  Rng &verifier_rng);

} // namespace asda::crypto
