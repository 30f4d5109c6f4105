#ifndef POLYCTMC_RNG_HPP
#define POLYCTMC_RNG_HPP

#include <cmath>
#include <cstdint>

namespace polyctmc {

/// Philox4x32-10 counter-based generator (Salmon et al., SC 2011).
/// A block is a pure function of (key, counter), which gives the simulator
/// its parallel reproducibility: the stream for trial i of a run with seed s
/// is philox(key = s, counter = (draw, jump, i, i >> 32)) and depends on
/// nothing else.
class Philox {
 public:
  struct Block {
    uint32_t w[4];
  };

  static Block generate(uint64_t key, const uint32_t counter[4]) {
    uint32_t c[4] = {counter[0], counter[1], counter[2], counter[3]};
    uint32_t k0 = static_cast<uint32_t>(key);
    uint32_t k1 = static_cast<uint32_t>(key >> 32);
    for (int round = 0; round < 10; ++round) {
      const uint64_t p0 = static_cast<uint64_t>(kMulA) * c[0];
      const uint64_t p1 = static_cast<uint64_t>(kMulB) * c[2];
      const uint32_t hi0 = static_cast<uint32_t>(p0 >> 32), lo0 = static_cast<uint32_t>(p0);
      const uint32_t hi1 = static_cast<uint32_t>(p1 >> 32), lo1 = static_cast<uint32_t>(p1);
      uint32_t n0 = hi1 ^ c[1] ^ k0;
      uint32_t n1 = lo1;
      uint32_t n2 = hi0 ^ c[3] ^ k1;
      uint32_t n3 = lo0;
      c[0] = n0;
      c[1] = n1;
      c[2] = n2;
      c[3] = n3;
      k0 += kWeylA;
      k1 += kWeylB;
    }
    return Block{{c[0], c[1], c[2], c[3]}};
  }

 private:
  static constexpr uint32_t kMulA = 0xD2511F53;
  static constexpr uint32_t kMulB = 0xCD9E8D57;
  static constexpr uint32_t kWeylA = 0x9E3779B9;
  static constexpr uint32_t kWeylB = 0xBB67AE85;
};

/// Random stream for one trial, addressed by (seed, trial, jump, draw).
/// begin_jump(j) rewinds the draw counter so each jump event owns an
/// independent substream of unbounded length (rejection sampling may take
/// any number of draws without disturbing neighbouring jumps).
class RngStream {
 public:
  RngStream(uint64_t seed, uint64_t trial) : seed_(seed), trial_(trial) {}

  void begin_jump(uint64_t jump) {
    jump_ = jump;
    draw_ = 0;
  }

  uint64_t bits64() {
    uint32_t counter[4] = {static_cast<uint32_t>(draw_), static_cast<uint32_t>(jump_),
                           static_cast<uint32_t>(trial_), static_cast<uint32_t>(trial_ >> 32)};
    // jump_ may exceed 32 bits on very long trials; fold the high part into
    // the counter's unused entropy rather than truncating.
    counter[0] ^= static_cast<uint32_t>(draw_ >> 32);
    counter[1] ^= static_cast<uint32_t>(jump_ >> 32) * 0x9E3779B9u;
    ++draw_;
    const Philox::Block b = Philox::generate(seed_, counter);
    return (static_cast<uint64_t>(b.w[0]) << 32) | b.w[1];
  }

  /// Uniform in the open interval (0, 1).
  double u01() {
    const uint64_t x = bits64();
    return (static_cast<double>(x >> 11) + 0.5) * 0x1.0p-53;
  }

  double exponential(double rate) { return -std::log(u01()) / rate; }

 private:
  uint64_t seed_;
  uint64_t trial_;
  uint64_t jump_ = 0;
  uint64_t draw_ = 0;
};

}  // namespace polyctmc

#endif
