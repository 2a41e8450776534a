#pragma once

#include <array>
#include <cstdint>

namespace rainbow {

// Philox4x32-10 (Salmon et al., "Parallel random numbers: as easy as 1, 2, 3").
// Counter-based: the output block is a keyed bijection of the 128-bit counter,
// so distinct counters never collide for a fixed key.
struct Philox4x32 {
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static constexpr std::uint32_t kMul0 = 0xD2511F53u;
  static constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
  static constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
  static constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;
  static constexpr int kRounds = 10;

  static constexpr Counter block(Counter ctr, Key key) {
    for (int r = 0; r < kRounds; ++r) {
      const std::uint64_t p0 = std::uint64_t{kMul0} * ctr[0];
      const std::uint64_t p1 = std::uint64_t{kMul1} * ctr[2];
      const auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
      const auto lo0 = static_cast<std::uint32_t>(p0);
      const auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
      const auto lo1 = static_cast<std::uint32_t>(p1);
      ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
      key[0] += kWeyl0;
      key[1] += kWeyl1;
    }
    return ctr;
  }
};

// A reproducible substream: (master_seed, stream_index) fully determines the
// sequence. The seed is the Philox key; the stream index occupies the upper
// half of the counter and the draw position the lower half, so substreams are
// disjoint ranges of the counter space.
struct SeededStream {
  std::uint64_t master_seed = 0;
  std::uint64_t stream_index = 0;

  SeededStream substream(std::uint64_t index) const { return {master_seed, index}; }
};

// Sequential reader over a SeededStream. Identifier "philox4x32-10/v1" is
// recorded in run manifests.
class StreamGenerator {
 public:
  static constexpr const char* kName = "philox4x32-10/v1";

  explicit StreamGenerator(SeededStream stream) : stream_(stream) {}

  std::uint32_t next_u32() {
    if (slot_ == 4) refill();
    return buffer_[slot_++];
  }

  // Uniform integer in [0, bound) by rejection; bound >= 1.
  std::uint32_t uniform_below(std::uint32_t bound) {
    const std::uint32_t threshold = static_cast<std::uint32_t>(-bound) % bound;
    for (;;) {
      const std::uint32_t x = next_u32();
      if (x >= threshold) return x % bound;
    }
  }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform01() {
    const std::uint64_t hi = next_u32() >> 5;
    const std::uint64_t lo = next_u32() >> 6;
    return static_cast<double>(hi * 67108864u + lo) * (1.0 / 9007199254740992.0);
  }

 private:
  void refill() {
    const Philox4x32::Counter ctr = {
        static_cast<std::uint32_t>(block_), static_cast<std::uint32_t>(block_ >> 32),
        static_cast<std::uint32_t>(stream_.stream_index),
        static_cast<std::uint32_t>(stream_.stream_index >> 32)};
    const Philox4x32::Key key = {static_cast<std::uint32_t>(stream_.master_seed),
                                 static_cast<std::uint32_t>(stream_.master_seed >> 32)};
    buffer_ = Philox4x32::block(ctr, key);
    ++block_;
    slot_ = 0;
  }

  SeededStream stream_;
  std::uint64_t block_ = 0;
  Philox4x32::Counter buffer_{};
  int slot_ = 4;
};

}  // namespace rainbow
