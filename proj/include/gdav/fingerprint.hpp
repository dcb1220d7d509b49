#pragma once

#include <openssl/evp.h>

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "gdav/errors.hpp"
#include "gdav/group.hpp"

namespace gdav {

/// SHA-256 (hex) of the normalized multiplication table: the order as a
/// 4-byte little-endian integer followed by every entry, row-major, as
/// 2-byte little-endian integers.
inline std::string group_fingerprint(const Group& g) {
  std::vector<unsigned char> bytes;
  const auto n = static_cast<std::uint32_t>(g.order());
  for (int i = 0; i < 4; ++i) bytes.push_back(static_cast<unsigned char>(n >> (8 * i)));
  for (Element e : g.table()) {
    bytes.push_back(static_cast<unsigned char>(e & 0xFF));
    bytes.push_back(static_cast<unsigned char>(e >> 8));
  }
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int digest_len = 0;
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), &EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), bytes.data(), bytes.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), digest, &digest_len) != 1)
    throw Error("SHA-256 computation failed");
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < digest_len; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 0xF];
  }
  return out;
}

}  // namespace gdav
