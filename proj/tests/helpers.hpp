#pragma once
#include <random>

#include "kzl/koszul.hpp"

namespace kzltest {

using namespace kzl;

// Deterministic generator for property tests; mt19937 sequences are pinned by
// the standard, so expected values frozen from these streams are portable.
struct Rng {
    std::mt19937 g;
    explicit Rng(uint32_t seed) : g(seed) {}
    int upTo(int n) { return std::uniform_int_distribution<int>(0, n)(g); }
};

inline RingElement randomRing(Rng& r, const Params& P, int maxTerms = 4, int maxExp = 3) {
    RingElement x;
    int k = r.upTo(maxTerms);
    for (int i = 0; i < k; ++i) {
        Monomial m;
        m.a = r.upTo(maxExp);
        for (int j = 1; j < P.n; ++j)
            m.e[j - 1] = static_cast<uint32_t>(r.upTo(maxExp));
        int maxCoef = static_cast<int>(P.p) - 2;
        x.addTerm(m, 1 + static_cast<uint32_t>(r.upTo(maxCoef > 0 ? maxCoef : 0)), P);
    }
    return x;
}

inline KoszulElement randomKoszul(Rng& r, const Params& P, int maxWords = 3) {
    KoszulElement x;
    int k = 1 + r.upTo(maxWords - 1);
    for (int i = 0; i < k; ++i) {
        Subset s = static_cast<Subset>(r.upTo((1 << P.n) - 1));
        x.addTerm(s, randomRing(r, P), P);
    }
    return x;
}

inline Monomial mono(int64_t a, std::initializer_list<uint32_t> es = {}) {
    Monomial m;
    m.a = a;
    size_t i = 0;
    for (uint32_t e : es)
        m.e[i++] = e;
    return m;
}

inline RingElement elem(const Params& P,
                        std::initializer_list<std::pair<Monomial, uint32_t>> terms) {
    RingElement x;
    for (const auto& [m, c] : terms)
        x.addTerm(m, c, P);
    return x;
}

} // namespace kzltest
