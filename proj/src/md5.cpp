#include "advmark/md5.hpp"

#include <cstring>

namespace advmark {
namespace {

constexpr std::array<std::uint32_t, 64> kSines = {
    0xd76aa478, 0xe8c7b756, 0x242070db, 0xc1bdceee, 0xf57c0faf, 0x4787c62a,
    0xa8304613, 0xfd469501, 0x698098d8, 0x8b44f7af, 0xffff5bb1, 0x895cd7be,
    0x6b901122, 0xfd987193, 0xa679438e, 0x49b40821, 0xf61e2562, 0xc040b340,
    0x265e5a51, 0xe9b6c7aa, 0xd62f105d, 0x02441453, 0xd8a1e681, 0xe7d3fbc8,
    0x21e1cde6, 0xc33707d6, 0xf4d50d87, 0x455a14ed, 0xa9e3e905, 0xfcefa3f8,
    0x676f02d9, 0x8d2a4c8a, 0xfffa3942, 0x8771f681, 0x6d9d6122, 0xfde5380c,
    0xa4beea44, 0x4bdecfa9, 0xf6bb4b60, 0xbebfbc70, 0x289b7ec6, 0xeaa127fa,
    0xd4ef3085, 0x04881d05, 0xd9d4d039, 0xe6db99e5, 0x1fa27cf8, 0xc4ac5665,
    0xf4292244, 0x432aff97, 0xab9423a7, 0xfc93a039, 0x655b59c3, 0x8f0ccc92,
    0xffeff47d, 0x85845dd1, 0x6fa87e4f, 0xfe2ce6e0, 0xa3014314, 0x4e0811a1,
    0xf7537e82, 0xbd3af235, 0x2ad7d2bb, 0xeb86d391};

constexpr std::array<std::uint32_t, 64> kShifts = {
    7, 12, 17, 22, 7, 12, 17, 22, 7, 12, 17, 22, 7, 12, 17, 22,
    5, 9,  14, 20, 5, 9,  14, 20, 5, 9,  14, 20, 5, 9,  14, 20,
    4, 11, 16, 23, 4, 11, 16, 23, 4, 11, 16, 23, 4, 11, 16, 23,
    6, 10, 15, 21, 6, 10, 15, 21, 6, 10, 15, 21, 6, 10, 15, 21};

std::uint32_t rotl(std::uint32_t x, std::uint32_t c) {
  return (x << c) | (x >> (32 - c));
}

struct Md5State {
  std::uint32_t a = 0x67452301;
  std::uint32_t b = 0xefcdab89;
  std::uint32_t c = 0x98badcfe;
  std::uint32_t d = 0x10325476;

  void process(const std::uint8_t* block) {
    std::uint32_t m[16];
    for (int i = 0; i < 16; ++i) {
      m[i] = static_cast<std::uint32_t>(block[4 * i]) |
             static_cast<std::uint32_t>(block[4 * i + 1]) << 8 |
             static_cast<std::uint32_t>(block[4 * i + 2]) << 16 |
             static_cast<std::uint32_t>(block[4 * i + 3]) << 24;
    }
    std::uint32_t aa = a, bb = b, cc = c, dd = d;
    for (std::uint32_t i = 0; i < 64; ++i) {
      std::uint32_t f, g;
      if (i < 16) {
        f = (bb & cc) | (~bb & dd);
        g = i;
      } else if (i < 32) {
        f = (dd & bb) | (~dd & cc);
        g = (5 * i + 1) % 16;
      } else if (i < 48) {
        f = bb ^ cc ^ dd;
        g = (3 * i + 5) % 16;
      } else {
        f = cc ^ (bb | ~dd);
        g = (7 * i) % 16;
      }
      f += aa + kSines[i] + m[g];
      aa = dd;
      dd = cc;
      cc = bb;
      bb += rotl(f, kShifts[i]);
    }
    a += aa;
    b += bb;
    c += cc;
    d += dd;
  }
};

}  // namespace

Md5Digest md5(std::span<const std::uint8_t> data) {
  Md5State state;
  std::size_t full_blocks = data.size() / 64;
  for (std::size_t i = 0; i < full_blocks; ++i) {
    state.process(data.data() + 64 * i);
  }

  // Padding: 0x80, zeros, then the bit length as a 64-bit little-endian word.
  std::uint8_t tail[128] = {};
  std::size_t rem = data.size() - 64 * full_blocks;
  std::memcpy(tail, data.data() + 64 * full_blocks, rem);
  tail[rem] = 0x80;
  std::size_t tail_len = rem < 56 ? 64 : 128;
  std::uint64_t bit_len = static_cast<std::uint64_t>(data.size()) * 8;
  for (int i = 0; i < 8; ++i) {
    tail[tail_len - 8 + i] = static_cast<std::uint8_t>(bit_len >> (8 * i));
  }
  state.process(tail);
  if (tail_len == 128) state.process(tail + 64);

  Md5Digest out;
  const std::uint32_t words[4] = {state.a, state.b, state.c, state.d};
  for (int i = 0; i < 4; ++i) {
    out.bytes[4 * i] = static_cast<std::uint8_t>(words[i]);
    out.bytes[4 * i + 1] = static_cast<std::uint8_t>(words[i] >> 8);
    out.bytes[4 * i + 2] = static_cast<std::uint8_t>(words[i] >> 16);
    out.bytes[4 * i + 3] = static_cast<std::uint8_t>(words[i] >> 24);
  }
  return out;
}

Md5Digest md5(std::string_view data) {
  return md5(std::span<const std::uint8_t>(
      reinterpret_cast<const std::uint8_t*>(data.data()), data.size()));
}

std::string Md5Digest::hex() const {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(32);
  for (std::uint8_t b : bytes) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xf]);
  }
  return out;
}

std::uint64_t Md5Digest::mod(std::uint64_t m) const {
  // Big-endian base-256 fold; avoids 128-bit arithmetic.
  std::uint64_t r = 0;
  for (std::uint8_t b : bytes) {
    r = ((r << 8) % m + b) % m;
  }
  return r;
}

}  // namespace advmark
