#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace hypermap {

/// Philox4x32-10 counter-based generator (Salmon et al., Random123).
///
/// Every draw is a pure function of (key, counter), so a stream can be
/// addressed directly instead of consumed sequentially.
class Philox4x32 {
 public:
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static Counter block(Counter ctr, Key key);
};

/// Stream purposes; part of every counter so streams never overlap.
enum class StreamPurpose : std::uint32_t {
  kNodeAngle = 1,
  kEdgeDraw = 2,
  kInternalLinks = 3,
  kLinkSplit = 4,
  kRandomAngles = 5,
  kRoutingPairs = 6,
  kAucSampling = 7,
  kNodeLabels = 8,
};

/// A sequential substream identified by (seed, purpose, index).
///
/// Satisfies std::uniform_random_bit_generator. Output depends only on the
/// identifying triple and the number of values drawn from this stream.
class RandomStream {
 public:
  using result_type = std::uint64_t;

  RandomStream(std::uint64_t seed, StreamPurpose purpose, std::uint64_t index);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()();

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform();
  /// Uniform integer in [0, n), n > 0, by rejection (no modulo bias).
  std::uint64_t below(std::uint64_t n);

 private:
  Philox4x32::Key key_;
  Philox4x32::Counter ctr_;
  std::array<std::uint64_t, 2> buffer_{};
  int buffered_ = 0;
};

/// A single uniform [0,1) draw addressed by (seed, purpose, a, b).
double keyed_uniform(std::uint64_t seed, StreamPurpose purpose, std::uint64_t a, std::uint64_t b);

}  // namespace hypermap
