#include "padiclat/xof.hpp"

#include <memory>

#include <openssl/evp.h>

#include "padiclat/error.hpp"

namespace padiclat {

namespace {

struct MdCtxFree {
  void operator()(EVP_MD_CTX* ctx) const { EVP_MD_CTX_free(ctx); }
};

}  // namespace

std::uint64_t WordStream::next_below(std::uint64_t bound) {
  if (bound == 0) fail(ErrorKind::InvalidArgument, "empty range");
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound + 1) % bound;
  while (true) {
    const std::uint64_t w = next_u64();
    if (w <= limit) return w % bound;
  }
}

Shake256Stream::Shake256Stream(std::vector<std::uint8_t> seed) : seed_(std::move(seed)) {}

void Shake256Stream::refill() {
  std::unique_ptr<EVP_MD_CTX, MdCtxFree> ctx(EVP_MD_CTX_new());
  std::array<std::uint8_t, 8> ctr{};
  for (int i = 0; i < 8; ++i) ctr[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(counter_ >> (8 * i));
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_shake256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), seed_.data(), seed_.size()) != 1 ||
      EVP_DigestUpdate(ctx.get(), ctr.data(), ctr.size()) != 1 ||
      EVP_DigestFinalXOF(ctx.get(), block_.data(), block_.size()) != 1)
    fail(ErrorKind::HashFailure, "SHAKE256 unavailable");
  ++counter_;
  pos_ = 0;
}

std::uint64_t Shake256Stream::next_u64() {
  if (pos_ + 8 > block_.size()) refill();
  std::uint64_t w = 0;
  for (int i = 0; i < 8; ++i) w |= static_cast<std::uint64_t>(block_[pos_ + static_cast<std::size_t>(i)]) << (8 * i);
  pos_ += 8;
  return w;
}

std::uint64_t FixedStream::next_u64() {
  if (words_.empty()) return 0;
  const std::uint64_t w = words_[pos_];
  pos_ = (pos_ + 1) % words_.size();
  return w;
}

std::array<std::uint8_t, 32> sha256(std::string_view data) {
  std::array<std::uint8_t, 32> out{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), out.data(), &len, EVP_sha256(), nullptr) != 1 || len != out.size())
    fail(ErrorKind::HashFailure, "SHA-256 unavailable");
  return out;
}

std::string to_hex(const std::uint8_t* data, std::size_t size) {
  static const char* digits = "0123456789abcdef";
  std::string s;
  s.reserve(2 * size);
  for (std::size_t i = 0; i < size; ++i) {
    s.push_back(digits[data[i] >> 4]);
    s.push_back(digits[data[i] & 15]);
  }
  return s;
}

std::vector<std::uint8_t> from_hex(std::string_view hex) {
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
  };
  if (hex.size() % 2 != 0) fail(ErrorKind::ParseError, "odd-length hex string");
  std::vector<std::uint8_t> out;
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    const int hi = nibble(hex[i]), lo = nibble(hex[i + 1]);
    if (hi < 0 || lo < 0) fail(ErrorKind::ParseError, "bad hex digit");
    out.push_back(static_cast<std::uint8_t>(hi * 16 + lo));
  }
  return out;
}

}  // namespace padiclat
