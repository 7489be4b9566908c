#include "hypermap/rng.hpp"

namespace hypermap {
namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) {
  const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
  hi = static_cast<std::uint32_t>(p >> 32);
  lo = static_cast<std::uint32_t>(p);
}

inline double to_unit(std::uint64_t x) { return static_cast<double>(x >> 11) * 0x1.0p-53; }

}  // namespace

Philox4x32::Counter Philox4x32::block(Counter ctr, Key key) {
  for (int round = 0; round < 10; ++round) {
    std::uint32_t hi0, lo0, hi1, lo1;
    mulhilo(kMul0, ctr[0], hi0, lo0);
    mulhilo(kMul1, ctr[2], hi1, lo1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    key[0] += kWeyl0;
    key[1] += kWeyl1;
  }
  return ctr;
}

RandomStream::RandomStream(std::uint64_t seed, StreamPurpose purpose, std::uint64_t index)
    : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
      ctr_{0u, static_cast<std::uint32_t>(purpose), static_cast<std::uint32_t>(index),
           static_cast<std::uint32_t>(index >> 32)} {}

RandomStream::result_type RandomStream::operator()() {
  if (buffered_ == 0) {
    const auto out = Philox4x32::block(ctr_, key_);
    ++ctr_[0];
    buffer_[0] = (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
    buffer_[1] = (static_cast<std::uint64_t>(out[2]) << 32) | out[3];
    buffered_ = 2;
  }
  return buffer_[static_cast<std::size_t>(2 - buffered_--)];
}

double RandomStream::uniform() { return to_unit((*this)()); }

std::uint64_t RandomStream::below(std::uint64_t n) {
  const std::uint64_t limit = max() - max() % n;
  for (;;) {
    const std::uint64_t x = (*this)();
    if (x < limit) return x % n;
  }
}

double keyed_uniform(std::uint64_t seed, StreamPurpose purpose, std::uint64_t a, std::uint64_t b) {
  // counter word 0 carries b, word 1 the purpose, words 2-3 carry a
  const Philox4x32::Counter ctr{static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(purpose) | 0x80000000u,
                                static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32)};
  const auto out = Philox4x32::block(ctr, {static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)});
  return to_unit((static_cast<std::uint64_t>(out[0]) << 32) | out[1]);
}

}  // namespace hypermap
