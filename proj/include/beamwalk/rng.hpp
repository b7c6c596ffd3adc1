#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace beamwalk {

// splitmix64, used to expand seeds into xoshiro state.
inline uint64_t splitmix64_next(uint64_t& s) {
  uint64_t z = (s += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// murmur3 finalizer; full avalanche on 64 bits.
inline uint64_t fmix64(uint64_t k) {
  k ^= k >> 33;
  k *= 0xFF51AFD7ED558CCDULL;
  k ^= k >> 33;
  k *= 0xC4CEB9FE1A85EC53ULL;
  k ^= k >> 33;
  return k;
}

// Deterministic sub-stream seed from (master, label, index). Every random
// artifact in the pipeline is drawn from a stream derived this way, so
// samples are reproducible independently of generation order.
inline uint64_t derive_seed(uint64_t master, uint64_t label, uint64_t index) {
  uint64_t h = fmix64(master ^ (0x9E3779B97F4A7C15ULL * (label + 1)));
  return fmix64(h ^ (index + 0xD6E8FEB86659FD93ULL));
}

namespace stream {
inline constexpr uint64_t kChannel = 1;
inline constexpr uint64_t kNoise = 2;
inline constexpr uint64_t kSelection = 3;
inline constexpr uint64_t kShuffle = 4;
inline constexpr uint64_t kInit = 5;
}  // namespace stream

// xoshiro256++ (Blackman/Vigna). Seeded via splitmix64.
class Xoshiro256pp {
 public:
  explicit Xoshiro256pp(uint64_t seed) {
    uint64_t sm = seed;
    for (auto& w : s_) w = splitmix64_next(sm);
  }

  uint64_t next() {
    const uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

 private:
  static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
  uint64_t s_[4];
};

// Seedable generator with the distributions the pipeline needs. Normal draws
// use Box-Muller (not std::normal_distribution) so streams are bit-identical
// across standard library implementations.
class Rng {
 public:
  explicit Rng(uint64_t seed) : seed_(seed), gen_(seed) {}

  uint64_t seed() const { return seed_; }
  uint64_t next_u64() { return gen_.next(); }

  // [0, 1)
  double uniform() { return static_cast<double>(gen_.next() >> 11) * 0x1.0p-53; }
  // (0, 1]
  double uniform_open() { return (static_cast<double>(gen_.next() >> 11) + 1.0) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = uniform_open();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * M_PI * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }

  // CN(0,1): real and imaginary parts i.i.d. N(0, 1/2).
  std::complex<double> cnormal() {
    const double inv_sqrt2 = 0.7071067811865475244;
    const double re = normal() * inv_sqrt2;
    const double im = normal() * inv_sqrt2;
    return {re, im};
  }

  // equiprobable +1/-1
  int sign() { return (gen_.next() >> 63) ? 1 : -1; }

 private:
  uint64_t seed_;
  Xoshiro256pp gen_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace beamwalk
