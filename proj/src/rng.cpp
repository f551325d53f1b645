#include "varex/rng.hpp"

namespace varex {

namespace {
constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;
}

std::uint64_t RandomStream::mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
}

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed), stream_id_(stream_id) {
    key_ = mix64(mix64(seed + kGamma) ^ (stream_id * kGamma + 0x632BE59BD9B4E019ull));
}

std::uint64_t RandomStream::next_u64() {
    const std::uint64_t v = mix64(key_ + (++counter_) * kGamma);
    return v;
}

double RandomStream::uniform() {
    // 53 high bits, offset half a grid step: range (0,1) exclusive.
    return (static_cast<double>(next_u64() >> 11) + 0.5) * (1.0 / 9007199254740992.0);
}

}  // namespace varex
