#include "asda/crypto/symmetric.hpp"

#include <algorithm>
#include <memory>

#include <openssl/evp.h>

namespace asda::crypto {

namespace {

struct CtxDeleter
{
  void operator() (EVP_CIPHER_CTX *ctx) const { EVP_CIPHER_CTX_free (ctx); }
};

using CipherCtx = std::unique_ptr<EVP_CIPHER_CTX, CtxDeleter>;

CipherCtx
make_ctx ()
{
  CipherCtx ctx (EVP_CIPHER_CTX_new ());
  if (!ctx)
    {
      throw std::runtime_error ("EVP_CIPHER_CTX_new failed");
    }
  return ctx;
}

void
check (int rc, const char *what)
{
  if (rc != 1)
    {
      throw std::runtime_error (what);
    }
}

} // namespace

Block
aes128_encrypt_block (const Key128 &key, const Block &plaintext)
{
  CipherCtx ctx = make_ctx ();
  check (EVP_EncryptInit_ex (ctx.get (), EVP_aes_128_ecb (), nullptr, key.data (), nullptr),
         "AES-128 init failed");
  EVP_CIPHER_CTX_set_padding (ctx.get (), 0);
  Block out{};
  int len = 0;
  check (EVP_EncryptUpdate (ctx.get (), out.data (), &len, plaintext.data (),
                            static_cast<int> (plaintext.size ())),
         "AES-128 block encryption failed");
  return out;
}

SealedMessage
seal (const Key128 &key, const Nonce &nonce, std::span<const std::uint8_t> plaintext)
{
  CipherCtx ctx = make_ctx ();
  check (EVP_EncryptInit_ex (ctx.get (), EVP_aes_128_gcm (), nullptr, nullptr, nullptr),
         "GCM init failed");
  check (EVP_CIPHER_CTX_ctrl (ctx.get (), EVP_CTRL_GCM_SET_IVLEN, static_cast<int> (nonce.size ()),
                              nullptr),
         "GCM nonce length");
  check (EVP_EncryptInit_ex (ctx.get (), nullptr, nullptr, key.data (), nonce.data ()),
         "GCM key setup failed");

  SealedMessage m;
  m.nonce = nonce;
  m.ciphertext.resize (plaintext.size ());
  int len = 0;
  if (!plaintext.empty ())
    {
      check (EVP_EncryptUpdate (ctx.get (), m.ciphertext.data (), &len, plaintext.data (),
                                static_cast<int> (plaintext.size ())),
             "GCM encrypt failed");
    }
  int tail = 0;
  check (EVP_EncryptFinal_ex (ctx.get (), m.ciphertext.data () + len, &tail), "GCM final failed");
  check (EVP_CIPHER_CTX_ctrl (ctx.get (), EVP_CTRL_GCM_GET_TAG, static_cast<int> (m.tag.size ()),
                              m.tag.data ()),
         "GCM tag retrieval failed");
  return m;
}

SealedMessage
seal (const Key128 &key, std::span<const std::uint8_t> plaintext, Rng &rng)
{
  Nonce nonce{};
  rng.fill (nonce);
  return seal (key, nonce, plaintext);
}

std::vector<std::uint8_t>
open (const Key128 &key, const SealedMessage &message)
{
  CipherCtx ctx = make_ctx ();
  check (EVP_DecryptInit_ex (ctx.get (), EVP_aes_128_gcm (), nullptr, nullptr, nullptr),
         "GCM init failed");
  check (EVP_CIPHER_CTX_ctrl (ctx.get (), EVP_CTRL_GCM_SET_IVLEN,
                              static_cast<int> (message.nonce.size ()), nullptr),
         "GCM nonce length");
  check (EVP_DecryptInit_ex (ctx.get (), nullptr, nullptr, key.data (), message.nonce.data ()),
         "GCM key setup failed");

  std::vector<std::uint8_t> plain (message.ciphertext.size ());
  int len = 0;
  if (!message.ciphertext.empty ())
    {
      check (EVP_DecryptUpdate (ctx.get (), plain.data (), &len, message.ciphertext.data (),
                                static_cast<int> (message.ciphertext.size ())),
             "GCM decrypt failed");
    }
  Tag tag = message.tag;
  check (EVP_CIPHER_CTX_ctrl (ctx.get (), EVP_CTRL_GCM_SET_TAG, static_cast<int> (tag.size ()),
                              tag.data ()),
         "GCM tag setup failed");
  int tail = 0;
  if (EVP_DecryptFinal_ex (ctx.get (), plain.data () + len, &tail) != 1)
    {
      throw AuthenticationError ("authentication tag mismatch");
    }
  return plain;
}

Key128
random_key (Rng &rng)
{
  Key128 k{};
  rng.fill (k);
  return k;
}

} // namespace asda::crypto

namespace asda::crypto {

std::vector<std::uint8_t>
serialize (const SealedMessage &message)
{
  std::vector<std::uint8_t> out;
  out.reserve (message.wire_bytes ());
  out.insert (out.end (), message.nonce.begin (), message.nonce.end ());
  out.insert (out.end (), message.ciphertext.begin (), message.ciphertext.end ());
  out.insert (out.end (), message.tag.begin (), message.tag.end ());
  return out;
}

SealedMessage
parse_sealed (std::span<const std::uint8_t> wire)
{
  SealedMessage m;
  if (wire.size () < m.nonce.size () + m.tag.size ())
    {
      throw std::invalid_argument ("sealed message shorter than nonce and tag");
    }
  std::copy_n (wire.begin (), m.nonce.size (), m.nonce.begin ());
  const auto body = wire.subspan (m.nonce.size (), wire.size () - m.nonce.size () - m.tag.size ());
  m.ciphertext.assign (body.begin (), body.end ());
  std::copy_n (wire.end () - static_cast<std::ptrdiff_t> (m.tag.size ()), m.tag.size (),
               m.tag.begin ());
  return m;
}

} // namespace asda::crypto
