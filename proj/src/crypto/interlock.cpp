#include "asda/crypto/interlock.hpp"

#include <algorithm>
#include <stdexcept>

namespace asda::crypto {

KeyHalves
split_key (const Key128 &key)
{
  KeyHalves h;
  std::copy_n (key.begin (), h.first.size (), h.first.begin ());
  std::copy_n (key.begin () + h.first.size (), h.second.size (), h.second.begin ());
  return h;
}

Key128
join_key (std::span<const std::uint8_t> first, std::span<const std::uint8_t> second)
{
  if (first.size () != sizeof (KeyHalf) || second.size () != sizeof (KeyHalf))
    {
      throw std::invalid_argument ("join_key: each half must be 8 bytes");
    }
  Key128 key{};
  std::copy (first.begin (), first.end (), key.begin ());
  std::copy (second.begin (), second.end (), key.begin () + first.size ());
  return key;
}

} // namespace asda::crypto
