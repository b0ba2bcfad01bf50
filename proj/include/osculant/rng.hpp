#pragma once

#include <cstdint>
#include <string>

namespace osculant::exper {

// Small deterministic generator (splitmix64 stream). Self-contained so
// record logs do not depend on standard-library distribution details.
class SeededRng {
  public:
    explicit SeededRng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t x = (state_ += 0x9e3779b97f4a7c15ull);
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
        return x ^ (x >> 31);
    }

    // uniform in [0, bound)
    uint64_t below(uint64_t bound) { return bound ? next() % bound : 0; }

    // uniform in [lo, hi], inclusive
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

  private:
    uint64_t state_;
};

// Per-instance seed: a pure function of master seed, osculation type,
// instance index, and resample attempt, so results are independent of
// scheduling order.
uint64_t derive_seed(uint64_t master, const std::string& type_text, uint64_t index,
                     uint64_t attempt);

} // namespace osculant::exper
