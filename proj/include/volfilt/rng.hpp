#ifndef VOLFILT_RNG_HPP
#define VOLFILT_RNG_HPP

#include <cmath>
#include <cstdint>
#include <limits>

namespace volfilt::rng {

// Stream tags. Chain, arrival and return sampling draw from separate
// counter-based streams of the same seed so that the conditional
// independence of the model holds by construction.
inline constexpr std::uint64_t kStreamChain = 1;
inline constexpr std::uint64_t kStreamArrivals = 2;
inline constexpr std::uint64_t kStreamReturns = 3;
inline constexpr std::uint64_t kStreamTable = 4;

// Tag in the top byte, payload (replicate, start state, sample id, ...)
// below. Distinct (tag, payload) pairs give independent streams.
inline constexpr std::uint64_t make_stream(std::uint64_t tag, std::uint64_t payload) {
  return (tag << 56) | (payload & 0x00FF'FFFF'FFFF'FFFFull);
}

inline constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Per-replicate seeds derived from one master seed.
inline constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(master ^ splitmix64(index));
}

// Philox4x32-10 counter-based generator (Salmon et al., SC'11).
// Key comes from the seed, the 128-bit counter holds the stream id in its
// upper half and a running block index in its lower half, so arbitrary
// substreams can be split off without touching shared state.
class Philox {
 public:
  using result_type = std::uint64_t;

  Philox(std::uint64_t seed, std::uint64_t stream) {
    const std::uint64_t k = splitmix64(seed);
    key0_ = static_cast<std::uint32_t>(k);
    key1_ = static_cast<std::uint32_t>(k >> 32);
    ctr2_ = static_cast<std::uint32_t>(stream);
    ctr3_ = static_cast<std::uint32_t>(stream >> 32);
  }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() {
    if (have_ == 0) {
      next_block();
      have_ = 2;
    }
    return out_[--have_];
  }

  // Uniform on [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  // Uniform on the open interval (0, 1); safe under log().
  double uniform_open() {
    return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53;
  }

  double exponential(double rate) { return -std::log(uniform_open()) / rate; }

  // Box-Muller; the second variate of each pair is cached.
  double normal() {
    if (has_cached_) {
      has_cached_ = false;
      return cached_;
    }
    const double u1 = uniform_open();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559005768 * u2;
    cached_ = r * std::sin(a);
    has_cached_ = true;
    return r * std::cos(a);
  }

  // Index into a discrete distribution by CDF inversion. `weights` need
  // not be normalized; `total` is their sum.
  template <class Vec>
  int discrete(const Vec& weights, int n, double total) {
    const double u = uniform01() * total;
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
      acc += weights[i];
      if (u < acc) return i;
    }
    return n - 1;
  }

 private:
  static void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) {
    const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
    hi = static_cast<std::uint32_t>(p >> 32);
    lo = static_cast<std::uint32_t>(p);
  }

  void next_block() {
    std::uint32_t c0 = ctr0_, c1 = ctr1_, c2 = ctr2_, c3 = ctr3_;
    std::uint32_t k0 = key0_, k1 = key1_;
    for (int round = 0; round < 10; ++round) {
      std::uint32_t hi0, lo0, hi1, lo1;
      mulhilo(0xD2511F53u, c0, hi0, lo0);
      mulhilo(0xCD9E8D57u, c2, hi1, lo1);
      const std::uint32_t n0 = hi1 ^ c1 ^ k0;
      const std::uint32_t n1 = lo1;
      const std::uint32_t n2 = hi0 ^ c3 ^ k1;
      const std::uint32_t n3 = lo0;
      c0 = n0;
      c1 = n1;
      c2 = n2;
      c3 = n3;
      k0 += 0x9E3779B9u;
      k1 += 0xBB67AE85u;
    }
    out_[1] = (static_cast<std::uint64_t>(c1) << 32) | c0;
    out_[0] = (static_cast<std::uint64_t>(c3) << 32) | c2;
    if (++ctr0_ == 0) ++ctr1_;
  }

  std::uint32_t key0_ = 0, key1_ = 0;
  std::uint32_t ctr0_ = 0, ctr1_ = 0, ctr2_ = 0, ctr3_ = 0;
  std::uint64_t out_[2] = {0, 0};
  int have_ = 0;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

}  // namespace volfilt::rng

#endif  // VOLFILT_RNG_HPP
