#pragma once
#include <cstdint>
#include <string>

#include "kzl/errors.hpp"
#include "kzl/fp.hpp"

namespace kzl {

// Global configuration of the engine.
//
//   p      prime characteristic of the ground field
//   n      number of Koszul generators; the coefficient ring is F_p[u_1..u_{n-1}][u]
//          with |u| = 2 and |u_i| = 0, and the convention that "u_n" means 1
//   N      adic precision: dimension counts keep monomials of order < N in (u_1..u_{n-1})
//   tMax   even bound on the internal degree of table windows
//
// All symbolic arithmetic is exact; N and tMax only delimit finite windows.
struct Params {
    uint32_t p = 2;
    int n = 2;
    int adicPrecision = 4;
    int64_t tMax = 0;

    // w(i) = p^i - 1: the u-exponent in the Koszul differentials d(vbar_i) = u_i u^{w(i)}.
    int64_t w(int i) const {
        int64_t r = 1;
        for (int k = 0; k < i; ++k)
            r *= p;
        return r - 1;
    }

    int uVarCount() const { return n - 1; }

    // Largest n accepted; n = 5 is admitted for experimental scans only and is
    // annotated as such in reports.
    static constexpr int maxHeight = 5;

    void validate() const {
        if (!fp::isPrime(p))
            throw Error(Errc::InvalidConfig, "p must be prime, got " + std::to_string(p));
        if (n < 1 || n > maxHeight)
            throw Error(Errc::InvalidConfig, "n must be in [1,5], got " + std::to_string(n));
        if (adicPrecision < 1)
            throw Error(Errc::InvalidConfig, "adic precision must be >= 1");
        if (tMax < 0 || tMax % 2 != 0)
            throw Error(Errc::InvalidConfig, "tMax must be even and >= 0");
    }

    // Default window: twice the sum of the generator degrees plus one extra top
    // generator degree. Large enough to contain every f-word bidegree and every
    // extension-candidate scan the reports run.
    static int64_t defaultTMax(uint32_t p, int n) {
        Params q{p, n, 1, 0};
        int64_t s = 0;
        for (int i = 1; i <= n; ++i)
            s += q.w(i);
        return 2 * s + 2 * q.w(n);
    }

    static Params make(uint32_t p, int n, int adicPrecision = 4, int64_t tMax = -1) {
        Params q;
        q.p = p;
        q.n = n;
        q.adicPrecision = adicPrecision;
        q.tMax = tMax < 0 ? defaultTMax(p, n) : tMax;
        q.validate();
        return q;
    }
};

} // namespace kzl
