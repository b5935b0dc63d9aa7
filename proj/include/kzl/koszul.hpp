#pragma once
#include <bit>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>

#include "kzl/ring.hpp"

namespace kzl {

// A subset of {1..n} packed as a bitmask: element i occupies bit i-1.  The
// induced integer order compares subsets at the largest differing element,
// which is the order the leading-term reduction runs on.
using Subset = uint32_t;

inline int subsetSize(Subset s) { return std::popcount(s); }

inline bool subsetContains(Subset s, int i) { return (s >> (i - 1)) & 1u; }

inline Subset subsetOf(std::initializer_list<int> xs) {
    Subset s = 0;
    for (int x : xs)
        s |= 1u << (x - 1);
    return s;
}

inline int subsetMin(Subset s) {
    if (s == 0)
        throw Error(Errc::ZeroElement, "min of empty subset");
    return std::countr_zero(s) + 1;
}

inline std::vector<int> subsetElements(Subset s) {
    std::vector<int> v;
    for (int i = 1; s; ++i, s >>= 1)
        if (s & 1u)
            v.push_back(i);
    return v;
}

// m(A,B) = #{(a,b) in A x B : a > b}, the sorting sign exponent for merging
// two ascending exterior words.
inline int sortingSign(Subset A, Subset B) {
    int m = 0;
    for (int b = 1; (B >> (b - 1)) != 0; ++b)
        if (subsetContains(B, b))
            m += std::popcount(A >> b);
    return m;
}

inline std::string subsetStr(Subset s) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (int x : subsetElements(s)) {
        if (!first)
            os << ",";
        os << x;
        first = false;
    }
    os << "}";
    return os.str();
}

// 2 * sum_{i in S} w(i): the internal degree of the exterior word vbar_S.
inline int64_t wordInternalDegree(Subset s, const Params& P) {
    int64_t d = 0;
    for (int i : subsetElements(s))
        d += 2 * P.w(i);
    return d;
}

// A sparse element of the Koszul complex K(u_i u^{w(i)} : 1 <= i <= n):
// a finite sum of exterior words vbar_S with RingElement coefficients.
struct KoszulElement {
    std::map<Subset, RingElement> terms;

    bool isZero() const { return terms.empty(); }

    static KoszulElement zero() { return {}; }

    static KoszulElement word(Subset s, const RingElement& r) {
        KoszulElement k;
        if (!r.isZero())
            k.terms[s] = r;
        return k;
    }

    static KoszulElement scalar(const RingElement& r) { return word(0, r); }

    void addTerm(Subset s, const RingElement& r, const Params& P) {
        if (r.isZero())
            return;
        auto it = terms.find(s);
        if (it == terms.end()) {
            terms[s] = r;
        } else {
            it->second = kzl::add(it->second, r, P);
            if (it->second.isZero())
                terms.erase(it);
        }
    }

    // (s, t) of a bihomogeneous element; throws on mixed degrees.
    std::pair<int, int64_t> bidegree(const Params& P) const {
        if (terms.empty())
            throw Error(Errc::ZeroElement, "zero has no bidegree");
        int s = subsetSize(terms.begin()->first);
        int64_t t = terms.begin()->second.internalDegree() +
                    wordInternalDegree(terms.begin()->first, P);
        for (const auto& [mask, coef] : terms) {
            if (subsetSize(mask) != s)
                throw Error(Errc::InhomogeneousInput, "mixed homological degrees");
            if (coef.internalDegree() + wordInternalDegree(mask, P) != t)
                throw Error(Errc::InhomogeneousInput, "mixed internal degrees");
        }
        return {s, t};
    }

    bool isBihomogeneous(const Params& P) const {
        try {
            if (!terms.empty())
                bidegree(P);
            return true;
        } catch (const Error&) {
            return false;
        }
    }

    int maxAdicOrder() const {
        int r = 0;
        for (const auto& [mask, coef] : terms)
            r = std::max(r, coef.maxAdicOrder());
        return r;
    }

    std::string str(const Params& P) const {
        if (terms.empty())
            return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [mask, coef] : terms) {
            if (!first)
                os << "  +  ";
            os << "(" << coef.str(P) << ")";
            if (mask)
                os << "*v" << subsetStr(mask);
            first = false;
        }
        return os.str();
    }

    friend bool operator==(const KoszulElement&, const KoszulElement&) = default;
};

inline KoszulElement add(const KoszulElement& x, const KoszulElement& y, const Params& P) {
    KoszulElement r = x;
    for (const auto& [s, c] : y.terms)
        r.addTerm(s, c, P);
    return r;
}

inline KoszulElement scale(const KoszulElement& x, uint32_t c, const Params& P) {
    KoszulElement r;
    for (const auto& [s, coef] : x.terms) {
        RingElement sc = kzl::scale(coef, c, P);
        if (!sc.isZero())
            r.terms[s] = sc;
    }
    return r;
}

inline KoszulElement neg(const KoszulElement& x, const Params& P) {
    return scale(x, P.p - 1, P);
}

inline KoszulElement sub(const KoszulElement& x, const KoszulElement& y, const Params& P) {
    return add(x, neg(y, P), P);
}

inline KoszulElement mulRing(const KoszulElement& x, const RingElement& r, const Params& P) {
    KoszulElement out;
    for (const auto& [s, coef] : x.terms) {
        RingElement prod = kzl::mul(coef, r, P);
        if (!prod.isZero())
            out.terms[s] = prod;
    }
    return out;
}

// d(r * vbar_S) = sum_k (-1)^{k-1} r u_{i_k} u^{w(i_k)} vbar_{S \ i_k} over the
// ascending enumeration of S.  Ring coefficients are even, so they contribute
// no sign.  Preserves internal degree, lowers homological degree by one.
inline KoszulElement differential(const KoszulElement& x, const Params& P) {
    KoszulElement out;
    for (const auto& [mask, coef] : x.terms) {
        int pos = 0;
        for (int i : subsetElements(mask)) {
            uint32_t sign = (pos % 2 == 0) ? 1 : P.p - 1;
            Monomial bump = Monomial{}.timesUPower(P.w(i)).timesVar(i, P);
            RingElement c = mulMonomial(coef, bump, sign, P);
            out.addTerm(mask & ~(1u << (i - 1)), c, P);
            ++pos;
        }
    }
    return out;
}

// (r vbar_S) ^ (r' vbar_T) = (-1)^{m(S,T)} r r' vbar_{S u T} when S,T are
// disjoint, zero otherwise; extended bilinearly.
inline KoszulElement wedge(const KoszulElement& x, const KoszulElement& y, const Params& P) {
    KoszulElement out;
    for (const auto& [s, cs] : x.terms) {
        for (const auto& [t, ct] : y.terms) {
            if (s & t)
                continue;
            uint32_t sign = (sortingSign(s, t) % 2 == 0) ? 1 : P.p - 1;
            RingElement c = kzl::scale(kzl::mul(cs, ct, P), sign, P);
            out.addTerm(s | t, c, P);
        }
    }
    return out;
}

// hat(x) = (-1)^{|x|+1} x for x homogeneous of total degree |x| = s + t.
inline KoszulElement hat(const KoszulElement& x, const Params& P) {
    if (x.isZero())
        return x;
    auto [s, t] = x.bidegree(P);
    int64_t total = s + t;
    return (total % 2 == 0) ? neg(x, P) : x;
}

inline KoszulElement vbar(int i, const Params& P) {
    return KoszulElement::word(1u << (i - 1), RingElement::one(P));
}

inline KoszulElement vbarWord(Subset s, const Params& P) {
    return KoszulElement::word(s, RingElement::one(P));
}

// The cycle f''_I = (1/alpha_I) d(vbar_I) with alpha_I = u^{w(min I)}.  The
// division is exact because w is monotonic; its failure would be an internal
// fault, not a user error.
inline KoszulElement psi(Subset I, const Params& P) {
    if (subsetSize(I) < 2)
        throw Error(Errc::BadIndexPair, "psi needs #I >= 2, got " + subsetStr(I));
    KoszulElement d = differential(vbarWord(I, P), P);
    int64_t k = P.w(subsetMin(I));
    KoszulElement out;
    for (const auto& [s, c] : d.terms)
        out.terms[s] = divideByUPower(c, k, P);
    return out;
}

// Leading term: the coefficient on the maximal support word, the order being
// bitmask-as-integer comparison.
inline std::pair<Subset, RingElement> leadingTerm(const KoszulElement& x) {
    if (x.isZero())
        throw Error(Errc::ZeroElement, "leading term of zero");
    auto it = std::prev(x.terms.end());
    return {it->first, it->second};
}

// The data of a triple Massey product <x,y,z>: witnesses with d(s) = hat(x)y
// and d(t) = hat(y)z.
struct DefiningSystem {
    KoszulElement x, y, z;
    KoszulElement s, t;

    void verify(const Params& P) const {
        if (differential(s, P) != wedge(hat(x, P), y, P))
            throw Error(Errc::InternalFault, "defining system: d(s) != hat(x)y");
        if (differential(t, P) != wedge(hat(y, P), z, P))
            throw Error(Errc::InternalFault, "defining system: d(t) != hat(y)z");
    }
};

} // namespace kzl
