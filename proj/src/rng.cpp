#include "osculant/rng.hpp"

namespace osculant::exper {

namespace {
uint64_t fnv1a(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}
} // namespace

uint64_t derive_seed(uint64_t master, const std::string& type_text, uint64_t index,
                     uint64_t attempt) {
    SeededRng mixer(master ^ fnv1a(type_text));
    uint64_t a = mixer.next();
    SeededRng mixer2(a ^ (index * 0x9e3779b97f4a7c15ull) ^ (attempt << 32));
    return mixer2.next();
}

} // namespace osculant::exper
