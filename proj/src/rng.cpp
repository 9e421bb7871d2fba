#include "rlab/rng.hpp"

namespace rlab {

namespace {
constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
}

// splitmix64 finalizer
std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_index)
    : seed_(seed), stream_(stream_index) {
    key_ = mix64(mix64(seed ^ 0x5851f42d4c957f2dULL) + mix64(stream_index + kGolden) * 0xd6e8feb86659fd93ULL);
}

std::uint64_t RngStream::next_u64() {
    std::uint64_t x = key_ + (counter_++ + 1) * kGolden;
    return mix64(x);
}

double RngStream::uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double RngStream::uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

}  // namespace rlab
