#pragma once

#include <array>
#include <cstdint>
#include <span>

#include "asda/crypto/symmetric.hpp"

namespace asda::crypto {

using KeyHalf = std::array<std::uint8_t, 8>;

struct KeyHalves
{
  KeyHalf first{};
  KeyHalf second{};
};

KeyHalves split_key (const Key128 &key);

/// Concatenates two 8-byte halves; throws std::invalid_argument otherwise.
Key128 join_key (std::span<const std::uint8_t> first, std::span<const std::uint8_t> second);

enum class InterlockState : std::uint8_t
{
  Idle,
  SentFirstHalf,
  AwaitingResponse,
  Complete,
  Failed,
};

/// Initiator-side bookkeeping for one split-key transfer.
struct InterlockSession
{
  Key128 session_key{};
  KeyHalves halves;
  InterlockState state = InterlockState::Idle;
  std::uint32_t initiator = 0;
  std::uint32_t responder = 0;
};

} // namespace asda::crypto
