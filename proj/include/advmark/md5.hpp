#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace advmark {

// RFC 1321 MD5. Used as the word-to-bucket mapping and for keyed
// deterministic randomness, not for security. Self-contained so digests are
// bit-identical on every platform.
struct Md5Digest {
  std::array<std::uint8_t, 16> bytes{};

  std::string hex() const;

  // Digest interpreted as a 128-bit big-endian unsigned integer, reduced
  // modulo m. m must be positive.
  std::uint64_t mod(std::uint64_t m) const;

  bool operator==(const Md5Digest&) const = default;
};

Md5Digest md5(std::span<const std::uint8_t> data);
Md5Digest md5(std::string_view data);

}  // namespace advmark
