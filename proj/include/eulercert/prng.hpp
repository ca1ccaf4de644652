#pragma once

#include <cstdint>

namespace eulercert {

// splitmix64: tiny deterministic generator. Certificates record the seed, so
// the stream must be identical across platforms and standard libraries;
// <random> distributions do not guarantee that.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound]; bound + 1 need not divide 2^64, rejection keeps
    // it exact.
    std::uint64_t next_below(std::uint64_t bound_inclusive) {
        std::uint64_t const n = bound_inclusive + 1;
        if (n == 0) return next();
        std::uint64_t const limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % n;
    }

  private:
    std::uint64_t state_;
};

}  // namespace eulercert
