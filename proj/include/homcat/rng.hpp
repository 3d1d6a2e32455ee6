#pragma once

#include <cstdint>
#include <vector>

namespace homcat {

// SplitMix64. Used for all randomized verification so that reports are
// byte-identical across platforms and standard libraries (std::*_distribution
// output is implementation-defined, so we never use it).
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, n), n >= 1
    uint64_t below(uint64_t n) { return next() % n; }

    // uniform in [lo, hi] inclusive
    int64_t range(int64_t lo, int64_t hi) {
        return lo + static_cast<int64_t>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

    bool coin(uint64_t num = 1, uint64_t den = 2) { return below(den) < num; }

    template <class T>
    const T& pick(const std::vector<T>& v) {
        return v[below(v.size())];
    }

private:
    uint64_t state_;
};

} // namespace homcat
