#pragma once
#include <cstdint>
#include <stdexcept>

namespace kzl {

// Arithmetic in the prime field F_p. Values are canonical representatives in [0, p).
namespace fp {

inline uint32_t normalize(int64_t v, uint32_t p) {
    int64_t r = v % static_cast<int64_t>(p);
    if (r < 0)
        r += p;
    return static_cast<uint32_t>(r);
}

inline uint32_t add(uint32_t a, uint32_t b, uint32_t p) { return (a + b) % p; }

inline uint32_t sub(uint32_t a, uint32_t b, uint32_t p) { return (a + p - b % p) % p; }

inline uint32_t neg(uint32_t a, uint32_t p) { return a == 0 ? 0 : p - a; }

inline uint32_t mul(uint32_t a, uint32_t b, uint32_t p) {
    return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % p);
}

inline uint32_t pow(uint32_t a, uint64_t e, uint32_t p) {
    uint32_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1)
            r = mul(r, a, p);
        a = mul(a, a, p);
        e >>= 1;
    }
    return r;
}

// p prime, so a^(p-2) inverts a.
inline uint32_t inv(uint32_t a, uint32_t p) {
    if (a % p == 0)
        throw std::domain_error("fp::inv: zero is not invertible");
    return pow(a, p - 2, p);
}

inline bool isPrime(uint32_t p) {
    if (p < 2)
        return false;
    for (uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

} // namespace fp
} // namespace kzl
