#ifndef VOLFILT_DIGEST_HPP
#define VOLFILT_DIGEST_HPP

#include <bit>
#include <cstdint>
#include <cstring>
#include <string>
#include <vector>

namespace volfilt {

// FNV-1a over a canonical byte stream. Used to bind structure tables,
// manifests and tick data to the model they were produced from.
class Digest {
 public:
  void absorb_bytes(const void* data, std::size_t n) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
      state_ ^= p[i];
      state_ *= 0x100000001B3ull;
    }
  }

  void absorb(double x) {
    const std::uint64_t bits = std::bit_cast<std::uint64_t>(x);
    absorb_bytes(&bits, sizeof bits);
  }

  void absorb(std::uint64_t x) { absorb_bytes(&x, sizeof x); }
  void absorb(std::int64_t x) { absorb_bytes(&x, sizeof x); }
  void absorb(int x) { absorb(static_cast<std::int64_t>(x)); }

  void absorb(const std::vector<double>& xs) {
    absorb(static_cast<std::int64_t>(xs.size()));
    for (double x : xs) absorb(x);
  }

  std::uint64_t value() const { return state_; }

 private:
  std::uint64_t state_ = 0xCBF29CE484222325ull;
};

inline std::string digest_hex(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[i] = digits[v & 0xF];
    v >>= 4;
  }
  return s;
}

}  // namespace volfilt

#endif  // VOLFILT_DIGEST_HPP
