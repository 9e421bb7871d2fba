#pragma once

#include <cstdint>
#include <limits>

namespace rlab {

// Counter-based stream: draw k of (seed, stream_index) is a pure function of the triple.
class RngStream {
public:
    using result_type = std::uint64_t;

    RngStream(std::uint64_t seed, std::uint64_t stream_index);

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_index() const { return stream_; }
    std::uint64_t counter() const { return counter_; }

    std::uint64_t next_u64();
    result_type operator()() { return next_u64(); }
    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    double uniform01();                      // [0, 1)
    double uniform(double lo, double hi);    // [lo, hi)

private:
    std::uint64_t seed_, stream_, key_, counter_ = 0;
};

std::uint64_t mix64(std::uint64_t z);

}  // namespace rlab
