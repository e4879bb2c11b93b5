#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace erog::rng {

// Counter-based stream: every draw is a pure function of (seed, stream,
// counter), so results do not depend on iteration order or thread count.

inline uint64_t splitmix(uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

inline uint64_t stream_key(uint64_t seed, uint64_t stream) {
    return splitmix(seed ^ splitmix(stream * 0xD1B54A32D192ED03ull + 0x8BB84B93962EACC9ull));
}

inline uint64_t draw(uint64_t key, uint64_t counter) {
    return splitmix(key + counter * 0x9E3779B97F4A7C15ull);
}

// Exactly uniform over [0, s) via rejection.
inline uint32_t uniform_int(uint64_t key, uint64_t counter, uint32_t s) {
    const uint64_t span = (~uint64_t{0} / s) * s;  // largest multiple of s
    for (uint64_t attempt = 0;; ++attempt) {
        uint64_t r = draw(key, counter * 64 + attempt);
        if (r < span) return static_cast<uint32_t>(r % s);
    }
}

// P(true) = round(p * 2^64) / 2^64; exact given the double p.
inline bool bernoulli(uint64_t key, uint64_t counter, double p) {
    if (p >= 1.0) return true;
    if (p <= 0.0) return false;
    const double scaled = std::ldexp(p, 64);
    const uint64_t threshold = static_cast<uint64_t>(scaled);
    return draw(key, counter) < threshold;
}

// In-place Fisher-Yates keyed by (key); used for greedy trial orders.
inline void shuffle(std::vector<int>& v, uint64_t key) {
    for (size_t i = v.size(); i > 1; --i) {
        uint32_t j = uniform_int(key, i, static_cast<uint32_t>(i));
        std::swap(v[i - 1], v[j]);
    }
}

}  // namespace erog::rng
