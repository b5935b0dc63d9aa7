#pragma once
#include <cstdint>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "kzl/homology.hpp"

namespace kzl {

// A word q * u^a * f_I of the presented algebra, I empty meaning a plain ring
// monomial.  Bidegree: (#I - 1, 2a + 2*sum_{i in I, i != min I} w(i)), or
// (0, 2a) without a word.
struct PresMonomial {
    Monomial m;
    Subset I = 0;

    std::pair<int, int64_t> bidegree(const Params& P) const {
        if (I == 0)
            return {0, m.internalDegree()};
        return {subsetSize(I) - 1, m.internalDegree() + fWordInternalDegree(I, P)};
    }

    static int64_t fWordInternalDegree(Subset I, const Params& P) {
        int64_t d = 0;
        int mn = subsetMin(I);
        for (int i : subsetElements(I))
            if (i != mn)
                d += 2 * P.w(i);
        return d;
    }

    std::string str(const Params& P) const {
        std::string s = m.str(P);
        if (I) {
            if (s == "1")
                return "f" + subsetStr(I);
            return s + "*f" + subsetStr(I);
        }
        return s;
    }

    friend auto operator<=>(const PresMonomial&, const PresMonomial&) = default;
};

// Image under the algebra map into the Koszul complex: f_I -> f''_I.
inline KoszulElement presToKoszul(const PresMonomial& pm, uint32_t coef, const Params& P) {
    KoszulElement base = pm.I ? psi(pm.I, P) : KoszulElement::scalar(RingElement::one(P));
    return mulRing(base, RingElement::monomial(pm.m, coef, P), P);
}

// Normal form of f_I * f_J: zero or a single word sign * u_c * f_L.  The
// reduction removes the smaller minimum from the second factor; when the first
// factor carries the strictly larger minimum the roles are swapped and the
// graded-commutativity sign (#I-1)(#J-1) is inserted, which keeps the two
// orders of every product consistent (this also settles the tie min I = min J,
// where both clauses of the relation could otherwise apply).
struct FProduct {
    bool zero = true;
    int signExp = 0; // result carries (-1)^signExp
    int uIndex = 0;  // u_c coefficient; c = n contributes no variable
    Subset word = 0;

    PresMonomial asMonomial(const Params& P) const {
        PresMonomial pm;
        pm.m = Monomial{}.timesVar(uIndex, P);
        pm.I = word;
        return pm;
    }

    uint32_t signValue(const Params& P) const { return signExp % 2 == 0 ? 1 : P.p - 1; }
};

inline FProduct productReduce(Subset I, Subset J, const Params&) {
    if (subsetSize(I) < 2 || subsetSize(J) < 2)
        throw Error(Errc::BadIndexPair, "productReduce needs #I, #J >= 2");
    FProduct r;
    int i0 = subsetMin(I), j0 = subsetMin(J);
    if (i0 <= j0) {
        Subset Jrest = J & ~(1u << (j0 - 1));
        if (I & Jrest)
            return r;
        r.zero = false;
        r.signExp = sortingSign(I, Jrest) % 2;
        r.uIndex = j0;
        r.word = I | Jrest;
    } else {
        Subset Irest = I & ~(1u << (i0 - 1));
        if (Irest & J)
            return r;
        r.zero = false;
        r.signExp =
            ((subsetSize(I) - 1) * (subsetSize(J) - 1) + sortingSign(J, Irest)) % 2;
        r.uIndex = i0;
        r.word = Irest | J;
    }
    return r;
}

enum class RelKind { UPowerTimesUi, AlphaTimesF, Exchange, Product };

// One generator of the relation ideal.
struct Relation {
    RelKind kind;
    int i = 0;          // UPowerTimesUi
    Subset I = 0;       // AlphaTimesF / Exchange (the common part) / Product lhs
    Subset J = 0;       // Product rhs
    int a = 0, b = 0;   // Exchange indices, a < b < min I
    bool vacuous = false; // the i = 0 instance (the prime itself) vanishes mod p

    std::string str(const Params& P) const {
        switch (kind) {
        case RelKind::UPowerTimesUi:
            if (i == 0)
                return "p (vacuous mod p)";
            if (i == P.n)
                return "u^" + std::to_string(P.w(i));
            return "u^" + std::to_string(P.w(i)) + "*u" + std::to_string(i);
        case RelKind::AlphaTimesF:
            return "u^" + std::to_string(P.w(subsetMin(I))) + "*f" + subsetStr(I);
        case RelKind::Exchange:
            return "u" + std::to_string(a) + "*f" + subsetStr(I | (1u << (b - 1))) + " - u" +
                   std::to_string(b) + "*f" + subsetStr(I | (1u << (a - 1)));
        case RelKind::Product: {
            FProduct pr = productReduce(I, J, P);
            std::string rhs = pr.zero ? "0"
                                      : std::string(pr.signExp ? "-" : "") + "u" +
                                            std::to_string(pr.uIndex) + "*f" + subsetStr(pr.word);
            return "f" + subsetStr(I) + "*f" + subsetStr(J) + " - (" + rhs + ")";
        }
        }
        return "";
    }
};

inline std::vector<Relation> relationGenerators(const Params& P) {
    std::vector<Relation> out;
    for (int i = 0; i <= P.n; ++i) {
        Relation r;
        r.kind = RelKind::UPowerTimesUi;
        r.i = i;
        r.vacuous = (i == 0);
        out.push_back(r);
    }
    for (Subset I = 0; I < (1u << P.n); ++I) {
        if (subsetSize(I) < 2)
            continue;
        Relation r;
        r.kind = RelKind::AlphaTimesF;
        r.I = I;
        out.push_back(r);
    }
    for (Subset I = 1; I < (1u << P.n); ++I) {
        if (I == 0)
            continue;
        int mn = subsetMin(I);
        for (int a = 1; a < mn; ++a) {
            for (int b = a + 1; b < mn; ++b) {
                Relation r;
                r.kind = RelKind::Exchange;
                r.I = I;
                r.a = a;
                r.b = b;
                out.push_back(r);
            }
        }
    }
    for (Subset I = 0; I < (1u << P.n); ++I) {
        if (subsetSize(I) < 2)
            continue;
        for (Subset J = I; J < (1u << P.n); ++J) {
            if (subsetSize(J) < 2)
                continue;
            Relation r;
            r.kind = RelKind::Product;
            r.I = I;
            r.J = J;
            out.push_back(r);
        }
    }
    return out;
}

struct PresSlice {
    int s = 0;
    int64_t t = 0;
    int dim = 0;
    std::vector<PresMonomial> basis; // labels surviving the relation span
};

struct PresOptions {
    bool useAlpha = true;
    bool useUPower = true;
    bool useExchange = true;
};

// Dimension of the slice of the quotient algebra at adic precision N: the span
// of single-word monomials modulo every relation multiple that lands in the
// slice.  Products of two or more f-words always collapse to a single word, so
// the single-word span is complete; the relation multiples fed here are the
// ideal generators times monomials and times at most one f-word (longer
// products reduce to these).
inline PresSlice presentationSlice(const Params& P, int s, int64_t t, int precisionOverride = -1,
                                   const PresOptions& opt = {}) {
    int N = precisionOverride > 0 ? precisionOverride : P.adicPrecision;
    if (s < 0 || s > P.n - 1 || t < 0 || t % 2 != 0)
        throw Error(Errc::BadBidegree,
                    "presentation slice (" + std::to_string(s) + "," + std::to_string(t) + ")");
    PresSlice out;
    out.s = s;
    out.t = t;

    auto evecs = detail::adicMonomials(P, N);
    std::vector<PresMonomial> labels;
    std::map<PresMonomial, size_t> index;
    auto pushLabels = [&](Subset I, int64_t a) {
        for (const auto& e : evecs) {
            PresMonomial pm;
            pm.m = Monomial{a, e};
            pm.I = I;
            index[pm] = labels.size();
            labels.push_back(pm);
        }
    };
    std::vector<std::pair<Subset, int64_t>> words; // slice words with their u-exponent
    if (s == 0) {
        words.emplace_back(0u, t / 2);
        pushLabels(0u, t / 2);
    } else {
        for (Subset I = 0; I < (1u << P.n); ++I) {
            if (subsetSize(I) != s + 1)
                continue;
            int64_t rest = t - PresMonomial::fWordInternalDegree(I, P);
            if (rest < 0 || rest % 2 != 0)
                continue;
            words.emplace_back(I, rest / 2);
            pushLabels(I, rest / 2);
        }
    }

    Span span(P.p, labels.size());
    // Coordinate of  coef * u^a * q * f_I  (dropped when the order leaves the window).
    auto feedTerm = [&](FpVec& vec, Subset I, int64_t a, const Monomial& q, uint32_t coef) {
        Monomial m = q;
        m.a = a;
        if (m.adicOrder() >= N)
            return;
        PresMonomial pm{m, I};
        auto it = index.find(pm);
        if (it == index.end())
            throw Error(Errc::InternalFault, "relation multiple missed the slice");
        vec[it->second] = fp::add(vec[it->second], coef % P.p, P.p);
    };
    auto feed = [&](FpVec&& vec) { span.add(vec); };

    if (s == 0 && opt.useUPower) {
        for (int i = 1; i <= P.n; ++i) {
            int64_t a = t / 2;
            if (a < P.w(i))
                continue;
            for (const auto& e : evecs) {
                Monomial q{0, e};
                FpVec vec(labels.size(), 0);
                feedTerm(vec, 0u, a, q.timesVar(i, P), 1);
                if (!isZeroVec(vec))
                    feed(std::move(vec));
            }
        }
    }
    if (s >= 1) {
        for (const auto& [I, aI] : words) {
            // alpha * f_I times monomials
            if (opt.useAlpha && aI >= P.w(subsetMin(I))) {
                for (const auto& e : evecs) {
                    FpVec vec(labels.size(), 0);
                    feedTerm(vec, I, aI, Monomial{0, e}, 1);
                    if (!isZeroVec(vec))
                        feed(std::move(vec));
                }
            }
            // u^{w(i)} u_i * f_I times monomials
            if (opt.useUPower) {
                for (int i = 1; i <= P.n; ++i) {
                    if (aI < P.w(i))
                        continue;
                    for (const auto& e : evecs) {
                        Monomial q{0, e};
                        FpVec vec(labels.size(), 0);
                        feedTerm(vec, I, aI, q.timesVar(i, P), 1);
                        if (!isZeroVec(vec))
                            feed(std::move(vec));
                    }
                }
            }
        }
        if (opt.useExchange) {
            // u_a f_{I'+b} - u_b f_{I'+a}, times monomials and times one f-word
            for (Subset Ip = 1; Ip < (1u << P.n); ++Ip) {
                int mn = subsetMin(Ip);
                for (int a = 1; a < mn; ++a) {
                    for (int b = a + 1; b < mn; ++b) {
                        Subset W1 = Ip | (1u << (b - 1));
                        Subset W2 = Ip | (1u << (a - 1));
                        if (subsetSize(W1) == s + 1) {
                            int64_t rest = t - PresMonomial::fWordInternalDegree(W1, P);
                            if (rest >= 0 && rest % 2 == 0) {
                                int64_t ap = rest / 2;
                                for (const auto& e : evecs) {
                                    Monomial q{0, e};
                                    FpVec vec(labels.size(), 0);
                                    feedTerm(vec, W1, ap, q.timesVar(a, P), 1);
                                    feedTerm(vec, W2, ap, q.timesVar(b, P), P.p - 1);
                                    if (!isZeroVec(vec))
                                        feed(std::move(vec));
                                }
                            }
                        }
                        for (Subset K = 0; K < (1u << P.n); ++K) {
                            if (subsetSize(K) < 2)
                                continue;
                            FProduct p1 = productReduce(W1, K, P);
                            FProduct p2 = productReduce(W2, K, P);
                            Subset anyWord = !p1.zero ? p1.word : (!p2.zero ? p2.word : 0);
                            if (anyWord == 0 || subsetSize(anyWord) != s + 1)
                                continue;
                            int64_t rest = t - PresMonomial::fWordInternalDegree(anyWord, P);
                            if (rest < 0 || rest % 2 != 0)
                                continue;
                            int64_t ap = rest / 2;
                            for (const auto& e : evecs) {
                                Monomial q{0, e};
                                FpVec vec(labels.size(), 0);
                                if (!p1.zero)
                                    feedTerm(vec, p1.word, ap,
                                             q.timesVar(a, P).timesVar(p1.uIndex, P),
                                             p1.signValue(P));
                                if (!p2.zero)
                                    feedTerm(vec, p2.word, ap,
                                             q.timesVar(b, P).timesVar(p2.uIndex, P),
                                             fp::neg(p2.signValue(P), P.p));
                                if (!isZeroVec(vec))
                                    feed(std::move(vec));
                            }
                        }
                    }
                }
            }
        }
        if (opt.useAlpha) {
            // u^{w(min I)} f_I * f_K, reduced; redundant with the families above
            // but kept so the fed span visibly covers every stated consequence.
            for (Subset I = 0; I < (1u << P.n); ++I) {
                if (subsetSize(I) < 2)
                    continue;
                for (Subset K = 0; K < (1u << P.n); ++K) {
                    if (subsetSize(K) < 2)
                        continue;
                    FProduct pr = productReduce(I, K, P);
                    if (pr.zero || subsetSize(pr.word) != s + 1)
                        continue;
                    int64_t rest = t - PresMonomial::fWordInternalDegree(pr.word, P);
                    if (rest < 0 || rest % 2 != 0)
                        continue;
                    int64_t ap = rest / 2;
                    if (ap < P.w(subsetMin(I)))
                        continue;
                    for (const auto& e : evecs) {
                        Monomial q{0, e};
                        FpVec vec(labels.size(), 0);
                        feedTerm(vec, pr.word, ap, q.timesVar(pr.uIndex, P), pr.signValue(P));
                        if (!isZeroVec(vec))
                            feed(std::move(vec));
                    }
                }
            }
        }
    }

    std::set<size_t> pivots = span.pivotCoordinates();
    for (size_t j = 0; j < labels.size(); ++j)
        if (!pivots.count(j))
            out.basis.push_back(labels[j]);
    out.dim = static_cast<int>(out.basis.size());
    return out;
}

struct PresTable {
    Params params;
    std::vector<PresSlice> slices;

    int dimAt(int s, int64_t t) const {
        for (const auto& sl : slices)
            if (sl.s == s && sl.t == t)
                return sl.dim;
        return 0;
    }
};

inline PresTable presentationTable(const Params& P, int precisionOverride = -1,
                                   const PresOptions& opt = {}) {
    PresTable T;
    T.params = P;
    for (int64_t t = 0; t <= P.tMax; t += 2) {
        for (int s = 0; s <= P.n - 1; ++s) {
            PresSlice sl = presentationSlice(P, s, t, precisionOverride, opt);
            if (sl.dim > 0)
                T.slices.push_back(std::move(sl));
        }
    }
    return T;
}

} // namespace kzl
