#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "asda/random.hpp"

namespace asda::crypto {

using Key128 = std::array<std::uint8_t, 16>;
using Block = std::array<std::uint8_t, 16>;
using Nonce = std::array<std::uint8_t, 12>;
using Tag = std::array<std::uint8_t, 16>;

/// Integrity tag did not verify: wrong key or tampered ciphertext.
class AuthenticationError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Single AES-128 block encryption (the raw cipher, no mode).
Block aes128_encrypt_block (const Key128 &key, const Block &plaintext);

/// Counter-mode ciphertext with its authentication tag (AES-128-GCM).
struct SealedMessage
{
  Nonce nonce{};
  std::vector<std::uint8_t> ciphertext;
  Tag tag{};

  std::size_t wire_bytes () const { return nonce.size () + ciphertext.size () + tag.size (); }
};

SealedMessage seal (const Key128 &key, const Nonce &nonce, std::span<const std::uint8_t> plaintext);
SealedMessage seal (const Key128 &key, std::span<const std::uint8_t> plaintext, Rng &rng);

/// Verifies the tag and returns the plaintext. Throws AuthenticationError on
/// a bad tag and std::invalid_argument on a malformed message.
std::vector<std::uint8_t> open (const Key128 &key, const SealedMessage &message);

Key128 random_key (Rng &rng);

} // namespace asda::crypto

namespace asda::crypto {

/// nonce || ciphertext || tag
std::vector<std::uint8_t> serialize (const SealedMessage &message);
/// Throws std::invalid_argument when the buffer is shorter than nonce + tag.
SealedMessage parse_sealed (std::span<const std::uint8_t> wire);

} // namespace asda::crypto
