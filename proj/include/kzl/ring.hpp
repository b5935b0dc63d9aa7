#pragma once
#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "kzl/errors.hpp"
#include "kzl/params.hpp"

namespace kzl {

// A monomial u^a * u_1^{e_1} ... u_{n-1}^{e_{n-1}} of the coefficient ring
// S = F_p[u_1..u_{n-1}][u].  Internal degree is 2a (the u_i sit in degree 0)
// and the adic order is e_1 + ... + e_{n-1}.
struct Monomial {
    int64_t a = 0;
    std::array<uint32_t, Params::maxHeight - 1> e{};

    int64_t internalDegree() const { return 2 * a; }

    int adicOrder() const {
        int s = 0;
        for (auto x : e)
            s += static_cast<int>(x);
        return s;
    }

    friend auto operator<=>(const Monomial&, const Monomial&) = default;

    // u_i-multiplication; index i = n acts as the identity (the convention u_n = 1).
    Monomial timesVar(int i, const Params& P) const {
        Monomial m = *this;
        if (i >= 1 && i < P.n)
            ++m.e[i - 1];
        return m;
    }

    Monomial timesUPower(int64_t k) const {
        Monomial m = *this;
        m.a += k;
        return m;
    }

    bool divisibleByVar(int i, const Params& P) const {
        if (i < 1 || i > P.n)
            return false;
        if (i == P.n)
            return true; // u_n = 1
        return e[i - 1] >= 1;
    }

    Monomial divideByVar(int i, const Params& P) const {
        Monomial m = *this;
        if (i >= 1 && i < P.n) {
            if (m.e[i - 1] == 0)
                throw Error(Errc::NotDivisible, "monomial not divisible by u_" + std::to_string(i));
            --m.e[i - 1];
        }
        return m;
    }

    std::string str(const Params& P) const {
        std::ostringstream os;
        bool first = true;
        auto emit = [&](const std::string& s) {
            if (!first)
                os << "*";
            os << s;
            first = false;
        };
        if (a == 1)
            emit("u");
        else if (a > 1)
            emit("u^" + std::to_string(a));
        for (int i = 1; i < P.n; ++i) {
            if (e[i - 1] == 1)
                emit("u" + std::to_string(i));
            else if (e[i - 1] > 1)
                emit("u" + std::to_string(i) + "^" + std::to_string(e[i - 1]));
        }
        if (first)
            os << "1";
        return os.str();
    }
};

// Canonical term order for printing and serialization: graded reverse
// lexicographic on the exponent vector (a, e_1, ..., e_{n-1}), leading term
// first.  Purely cosmetic.
inline bool degrevlexGreater(const Monomial& x, const Monomial& y) {
    int64_t dx = x.a, dy = y.a;
    for (auto v : x.e)
        dx += v;
    for (auto v : y.e)
        dy += v;
    if (dx != dy)
        return dx > dy;
    for (int i = static_cast<int>(x.e.size()) - 1; i >= 0; --i)
        if (x.e[i] != y.e[i])
            return x.e[i] < y.e[i];
    if (x.a != y.a)
        return x.a < y.a;
    return false;
}

// A sparse exact element of S: finitely many monomials with nonzero F_p
// coefficients.  All arithmetic is exact; truncation happens only through
// truncateAdic on request.
struct RingElement {
    std::map<Monomial, uint32_t> terms;

    bool isZero() const { return terms.empty(); }

    static RingElement zero() { return {}; }

    static RingElement monomial(const Monomial& m, uint32_t c, const Params& P) {
        RingElement r;
        c %= P.p;
        if (c != 0)
            r.terms[m] = c;
        return r;
    }

    static RingElement one(const Params& P) { return monomial(Monomial{}, 1, P); }

    static RingElement uPower(int64_t k, const Params& P) {
        return monomial(Monomial{}.timesUPower(k), 1, P);
    }

    // u_i, with u_n = 1 and u_0 = p = 0.
    static RingElement var(int i, const Params& P) {
        if (i == 0)
            return zero();
        return monomial(Monomial{}.timesVar(i, P), 1, P);
    }

    void addTerm(const Monomial& m, uint32_t c, const Params& P) {
        c %= P.p;
        if (c == 0)
            return;
        auto it = terms.find(m);
        if (it == terms.end()) {
            terms[m] = c;
        } else {
            it->second = (it->second + c) % P.p;
            if (it->second == 0)
                terms.erase(it);
        }
    }

    // Internal degree of a homogeneous element; throws on mixed degrees.
    int64_t internalDegree() const {
        if (terms.empty())
            throw Error(Errc::ZeroElement, "zero has no internal degree");
        int64_t d = terms.begin()->first.internalDegree();
        for (const auto& [m, c] : terms)
            if (m.internalDegree() != d)
                throw Error(Errc::InhomogeneousInput, "mixed internal degrees");
        return d;
    }

    bool isHomogeneous() const {
        if (terms.empty())
            return true;
        int64_t d = terms.begin()->first.internalDegree();
        for (const auto& [m, c] : terms)
            if (m.internalDegree() != d)
                return false;
        return true;
    }

    int minAdicOrder() const {
        int r = -1;
        for (const auto& [m, c] : terms) {
            int o = m.adicOrder();
            if (r < 0 || o < r)
                r = o;
        }
        return r;
    }

    int maxAdicOrder() const {
        int r = 0;
        for (const auto& [m, c] : terms)
            r = std::max(r, m.adicOrder());
        return r;
    }

    std::string str(const Params& P) const {
        if (terms.empty())
            return "0";
        std::vector<std::pair<Monomial, uint32_t>> v(terms.begin(), terms.end());
        std::sort(v.begin(), v.end(),
                  [](const auto& x, const auto& y) { return degrevlexGreater(x.first, y.first); });
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : v) {
            if (!first)
                os << " + ";
            if (c != 1)
                os << c << "*" << m.str(P);
            else
                os << m.str(P);
            first = false;
        }
        return os.str();
    }

    friend bool operator==(const RingElement&, const RingElement&) = default;
};

inline RingElement add(const RingElement& x, const RingElement& y, const Params& P) {
    RingElement r = x;
    for (const auto& [m, c] : y.terms)
        r.addTerm(m, c, P);
    return r;
}

inline RingElement scale(const RingElement& x, uint32_t c, const Params& P) {
    RingElement r;
    c %= P.p;
    if (c == 0)
        return r;
    for (const auto& [m, k] : x.terms)
        r.terms[m] = fp::mul(k, c, P.p);
    return r;
}

inline RingElement neg(const RingElement& x, const Params& P) {
    return scale(x, P.p - 1, P);
}

inline RingElement sub(const RingElement& x, const RingElement& y, const Params& P) {
    return add(x, neg(y, P), P);
}

inline RingElement mulMonomial(const RingElement& x, const Monomial& m, uint32_t c, const Params& P) {
    RingElement r;
    c %= P.p;
    if (c == 0)
        return r;
    for (const auto& [mx, cx] : x.terms) {
        Monomial prod = mx;
        prod.a += m.a;
        for (size_t i = 0; i < prod.e.size(); ++i)
            prod.e[i] += m.e[i];
        r.terms[prod] = fp::mul(cx, c, P.p);
    }
    return r;
}

inline RingElement mul(const RingElement& x, const RingElement& y, const Params& P) {
    RingElement r;
    for (const auto& [my, cy] : y.terms) {
        RingElement part = mulMonomial(x, my, cy, P);
        for (const auto& [m, c] : part.terms)
            r.addTerm(m, c, P);
    }
    return r;
}

// Exact division by u^k.  Every monomial must carry at least u^k; otherwise the
// caller has misused an alpha-division and we refuse.
inline RingElement divideByUPower(const RingElement& x, int64_t k, const Params& P) {
    RingElement r;
    for (const auto& [m, c] : x.terms) {
        if (m.a < k)
            throw Error(Errc::NotDivisible,
                        "monomial " + m.str(P) + " has u-exponent < " + std::to_string(k));
        Monomial q = m;
        q.a -= k;
        r.terms[q] = c;
    }
    return r;
}

// Write c = sum_j s_j * u_j over 1 <= j < j0, assigning each monomial to its
// smallest dividing index.  Exact; fails if some monomial avoids all u_j, j < j0.
inline std::map<int, RingElement> monomialIdealDecompose(const RingElement& c, int j0,
                                                         const Params& P) {
    std::map<int, RingElement> out;
    for (const auto& [m, coef] : c.terms) {
        int j = 0;
        for (int cand = 1; cand < j0 && cand < P.n; ++cand) {
            if (m.e[cand - 1] >= 1) {
                j = cand;
                break;
            }
        }
        if (j == 0)
            throw Error(Errc::NotInIdeal,
                        "monomial " + m.str(P) + " not divisible by any u_j with j < " +
                            std::to_string(j0));
        Monomial q = m;
        --q.e[j - 1];
        out[j].addTerm(q, coef, P);
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.isZero() ? out.erase(it) : std::next(it);
    return out;
}

// Drop terms of adic order >= N.  Used only for finite dimension windows.
inline RingElement truncateAdic(const RingElement& x, int N) {
    RingElement r;
    for (const auto& [m, c] : x.terms)
        if (m.adicOrder() < N)
            r.terms[m] = c;
    return r;
}

} // namespace kzl
