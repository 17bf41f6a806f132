#include "ibc/hash.hpp"

#include <memory>

#include <openssl/evp.h>

#include "ibc/error.hpp"

namespace ibc::hash {

namespace {

struct CtxDeleter {
  void operator()(EVP_MD_CTX* ctx) const noexcept { EVP_MD_CTX_free(ctx); }
};
using CtxPtr = std::unique_ptr<EVP_MD_CTX, CtxDeleter>;

// EVP_MD_CTX allocation dominates for short inputs; one context per thread.
EVP_MD_CTX* thread_ctx() {
  thread_local CtxPtr ctx(EVP_MD_CTX_new());
  if (!ctx) throw std::runtime_error("EVP_MD_CTX_new failed");
  return ctx.get();
}

void digest_into(const EVP_MD* md, ByteView data, std::uint8_t* out, std::size_t out_len, bool xof) {
  EVP_MD_CTX* ctx = thread_ctx();
  if (EVP_DigestInit_ex(ctx, md, nullptr) != 1 ||
      EVP_DigestUpdate(ctx, data.data(), data.size()) != 1) {
    throw std::runtime_error("EVP digest update failed");
  }
  int ok = xof ? EVP_DigestFinalXOF(ctx, out, out_len) : EVP_DigestFinal_ex(ctx, out, nullptr);
  if (ok != 1) throw std::runtime_error("EVP digest final failed");
}

}  // namespace

Digest sha3_256(ByteView data) {
  static const EVP_MD* md = EVP_sha3_256();
  Digest out{};
  digest_into(md, data, out.data(), out.size(), false);
  return out;
}

Bytes shake256(ByteView data, std::size_t out_len) {
  static const EVP_MD* md = EVP_shake256();
  Bytes out(out_len);
  digest_into(md, data, out.data(), out.size(), true);
  return out;
}

BigInt sha3_256_int(ByteView data) { return from_be_bytes(sha3_256(data)); }

}  // namespace ibc::hash
