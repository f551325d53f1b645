#pragma once

#include <cstdint>

namespace varex {

/// Counter-based random stream: the variate at position i is a pure function
/// of (seed, stream_id, i). Replications can therefore be dealt to any number
/// of workers and still reproduce the serial sequence exactly.
class RandomStream {
public:
    RandomStream(std::uint64_t seed, std::uint64_t stream_id);

    std::uint64_t next_u64();
    /// Uniform variate strictly inside (0,1).
    double uniform();

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_id() const { return stream_id_; }

    static std::uint64_t mix64(std::uint64_t z);

private:
    std::uint64_t seed_;
    std::uint64_t stream_id_;
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace varex
