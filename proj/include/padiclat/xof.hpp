#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace padiclat {

/// Source of uniformly random 64-bit words.
class WordStream {
 public:
  virtual ~WordStream() = default;
  virtual std::uint64_t next_u64() = 0;
  /// Uniform digit in [0, bound) by rejection.
  std::uint64_t next_below(std::uint64_t bound);
};

/// SHAKE256 in counter mode: block i is SHAKE256(seed || le64(i)).
class Shake256Stream final : public WordStream {
 public:
  explicit Shake256Stream(std::vector<std::uint8_t> seed);
  std::uint64_t next_u64() override;

 private:
  void refill();

  std::vector<std::uint8_t> seed_;
  std::uint64_t counter_ = 0;
  std::array<std::uint8_t, 136> block_{};
  std::size_t pos_ = block_.size();
};

/// Replays a fixed list of words, cycling; for tests.
class FixedStream final : public WordStream {
 public:
  explicit FixedStream(std::vector<std::uint64_t> words) : words_(std::move(words)) {}
  std::uint64_t next_u64() override;

 private:
  std::vector<std::uint64_t> words_;
  std::size_t pos_ = 0;
};

std::array<std::uint8_t, 32> sha256(std::string_view data);
std::string to_hex(const std::uint8_t* data, std::size_t size);
std::vector<std::uint8_t> from_hex(std::string_view hex);

}  // namespace padiclat
