#pragma once
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kzl/koszul.hpp"
#include "kzl/matrix.hpp"
#include "kzl/util.hpp"

namespace kzl {

// Finite window of the complex in one bidegree.  Within a slice (s, t) the
// u-exponent of a coefficient monomial is determined per word S, namely
// a(S) = (t - 2*sum_{i in S} w(i)) / 2, so only the adic part varies and the
// slice is finite once orders >= precision are cut.
struct SliceBasis {
    int s = 0;
    int64_t t = 0;
    int precision = 0;
    std::vector<std::pair<Subset, Monomial>> entries;
    std::map<std::pair<Subset, Monomial>, size_t> index;

    size_t size() const { return entries.size(); }
};

namespace detail {

inline void enumerateAdicMonomials(int vars, int bound, std::array<uint32_t, 4>& cur, int slot,
                                   int used, std::vector<std::array<uint32_t, 4>>& out) {
    if (slot == vars) {
        out.push_back(cur);
        return;
    }
    for (int v = 0; used + v < bound; ++v) {
        cur[slot] = static_cast<uint32_t>(v);
        enumerateAdicMonomials(vars, bound, cur, slot + 1, used + v, out);
    }
    cur[slot] = 0;
}

inline std::vector<std::array<uint32_t, 4>> adicMonomials(const Params& P, int bound) {
    std::vector<std::array<uint32_t, 4>> out;
    std::array<uint32_t, 4> cur{};
    enumerateAdicMonomials(P.uVarCount(), bound, cur, 0, 0, out);
    return out;
}

} // namespace detail

inline SliceBasis sliceBasis(const Params& P, int s, int64_t t, int precision) {
    if (s < 0 || s > P.n || t < 0 || t % 2 != 0)
        throw Error(Errc::BadBidegree,
                    "slice (" + std::to_string(s) + "," + std::to_string(t) + ")");
    SliceBasis B;
    B.s = s;
    B.t = t;
    B.precision = precision;
    auto evecs = detail::adicMonomials(P, precision);
    for (Subset mask = 0; mask < (1u << P.n); ++mask) {
        if (subsetSize(mask) != s)
            continue;
        int64_t rest = t - wordInternalDegree(mask, P);
        if (rest < 0)
            continue;
        int64_t a = rest / 2;
        for (const auto& e : evecs) {
            Monomial m;
            m.a = a;
            m.e = e;
            B.index[{mask, m}] = B.entries.size();
            B.entries.emplace_back(mask, m);
        }
    }
    return B;
}

// Coordinates of x in the slice basis.  With truncate set, terms of adic order
// >= precision are dropped; otherwise every term must be representable.
inline FpVec toVector(const KoszulElement& x, const SliceBasis& B, const Params& P,
                      bool truncate) {
    FpVec v(B.size(), 0);
    for (const auto& [mask, coef] : x.terms) {
        for (const auto& [m, c] : coef.terms) {
            auto it = B.index.find({mask, m});
            if (it == B.index.end()) {
                if (truncate && m.adicOrder() >= B.precision)
                    continue;
                throw Error(Errc::InternalFault, "element does not fit slice basis");
            }
            v[it->second] = fp::add(v[it->second], c, P.p);
        }
    }
    return v;
}

inline KoszulElement fromVector(const FpVec& v, const SliceBasis& B, const Params& P) {
    KoszulElement x;
    for (size_t j = 0; j < B.size(); ++j)
        if (v[j])
            x.addTerm(B.entries[j].first,
                      RingElement::monomial(B.entries[j].second, v[j], P), P);
    return x;
}

// Columns of the differential from sliceBasis(s,t)@precision, dropping target
// terms of adic order >= precision: the truncated-window matrix.
struct DiffMatrix {
    SliceBasis source;
    SliceBasis target;
    std::vector<FpVec> columns;
};

inline DiffMatrix differentialMatrix(const Params& P, int s, int64_t t, int precision) {
    if (s < 1)
        throw Error(Errc::BadBidegree, "differentialMatrix needs s >= 1");
    DiffMatrix M;
    M.source = sliceBasis(P, s, t, precision);
    M.target = sliceBasis(P, s - 1, t, precision);
    for (const auto& [mask, mono] : M.source.entries) {
        KoszulElement d =
            differential(KoszulElement::word(mask, RingElement::monomial(mono, 1, P)), P);
        M.columns.push_back(toVector(d, M.target, P, /*truncate=*/true));
    }
    return M;
}

struct SliceHomology {
    int s = 0;
    int64_t t = 0;
    int dim = 0;
    std::vector<KoszulElement> representatives; // exact cycles
    std::vector<bool> truncationAdjacent;       // carries terms of order >= N - n
};

namespace detail {

// Exact cycles of the slice supported below the given adic precision: kernel
// of the untruncated differential, the target window one order deeper (enough,
// since the differential raises adic order by at most one).
inline std::vector<FpVec> exactCycleBasis(const Params& P, const SliceBasis& src) {
    if (src.s == 0) {
        std::vector<FpVec> units;
        units.reserve(src.size());
        for (size_t j = 0; j < src.size(); ++j) {
            FpVec unit(src.size(), 0);
            unit[j] = 1;
            units.push_back(std::move(unit));
        }
        return units;
    }
    SliceBasis tgt = sliceBasis(P, src.s - 1, src.t, src.precision + 1);
    std::vector<FpVec> columns;
    columns.reserve(src.size());
    for (const auto& [mask, mono] : src.entries) {
        KoszulElement d =
            differential(KoszulElement::word(mask, RingElement::monomial(mono, 1, P)), P);
        columns.push_back(toVector(d, tgt, P, /*truncate=*/false));
    }
    return kernelBasis(P.p, tgt.size(), columns);
}

} // namespace detail

// Homology of the slice counted at adic precision N: the dimension of
// H / m^N H for m = (u_1, ..., u_{n-1}), which matches counting presented
// monomials q u^a (f_I) with q of order below N.
//
// Everything is exact linear algebra over a window two orders past N:
//   cycles   Z: kernel of the untruncated differential on the window
//              (a truncated matrix would count windowing artifacts instead);
//   boundaries B: exact images of the window one degree up;
//   m^N Z:   order-N monomials times window cycles, which spans the order-N
//            multiples because the cycle space is generated by elements whose
//            terms straddle at most two adjacent adic orders.
// The report is dim Z / (B + m^N Z) with exact cycles as representatives.  The
// two-precision table and the reduction certificates downstream are the guards
// against a window that is too tight.
inline SliceHomology homologySlice(const Params& P, int s, int64_t t, int precisionOverride = -1) {
    int N = precisionOverride > 0 ? precisionOverride : P.adicPrecision;
    SliceHomology H;
    H.s = s;
    H.t = t;

    int M = N + 2;
    SliceBasis srcM = sliceBasis(P, s, t, M);
    SliceBasis coords = sliceBasis(P, s, t, M + 1);
    std::vector<FpVec> cycles = detail::exactCycleBasis(P, srcM);

    Span reducer(P.p, coords.size());
    if (s < P.n) {
        SliceBasis up = sliceBasis(P, s + 1, t, M);
        for (const auto& [mask, mono] : up.entries) {
            KoszulElement d =
                differential(KoszulElement::word(mask, RingElement::monomial(mono, 1, P)), P);
            reducer.add(toVector(d, coords, P, /*truncate=*/false));
        }
    }
    SliceBasis srcLow = sliceBasis(P, s, t, M - N);
    std::vector<FpVec> lowCycles = detail::exactCycleBasis(P, srcLow);
    std::vector<std::array<uint32_t, 4>> orderN;
    for (const auto& e : detail::adicMonomials(P, N + 1)) {
        int sum = 0;
        for (auto v : e)
            sum += static_cast<int>(v);
        if (sum == N)
            orderN.push_back(e);
    }
    for (const auto& kv : lowCycles) {
        KoszulElement z = fromVector(kv, srcLow, P);
        for (const auto& e : orderN) {
            Monomial mu;
            mu.e = e;
            reducer.add(toVector(mulRing(z, RingElement::monomial(mu, 1, P), P), coords, P,
                                 /*truncate=*/false));
        }
    }
    size_t rankQuotient = reducer.rank();

    for (const auto& kv : cycles) {
        KoszulElement cyc = fromVector(kv, srcM, P);
        if (reducer.add(toVector(cyc, coords, P, /*truncate=*/false))) {
            H.representatives.push_back(cyc);
            H.truncationAdjacent.push_back(cyc.maxAdicOrder() >= N - P.n);
        }
    }
    H.dim = static_cast<int>(reducer.rank() - rankQuotient);
    return H;
}

// Result of a boundary query.  A failure is certified when already the
// order-truncated system has no solution, which rules out an exact witness at
// any precision.
struct BoundaryResult {
    bool isBoundary = false;
    KoszulElement witness;
    bool certified = false;
    int precision = 0;
    std::string slice;
};

inline BoundaryResult isBoundary(const KoszulElement& c, const Params& P) {
    BoundaryResult R;
    if (c.isZero()) {
        R.isBoundary = true;
        return R;
    }
    auto [s, t] = c.bidegree(P);
    if (!differential(c, P).isZero())
        throw Error(Errc::NotACycle, "isBoundary: input is not a cycle");
    R.slice = "(" + std::to_string(s + 1) + "," + std::to_string(t) + ")";
    if (s >= P.n) {
        // No words above homological degree n: nonzero cycles there cannot bound.
        R.certified = true;
        return R;
    }
    int base = c.maxAdicOrder() + 2;
    for (int pass = 0; pass < 3; ++pass) {
        int prec = base + 2 * pass;
        SliceBasis src = sliceBasis(P, s + 1, t, prec);
        SliceBasis tgt = sliceBasis(P, s, t, prec + 1);
        Span sp(P.p, tgt.size());
        for (const auto& [mask, mono] : src.entries) {
            KoszulElement d =
                differential(KoszulElement::word(mask, RingElement::monomial(mono, 1, P)), P);
            sp.add(toVector(d, tgt, P, false));
        }
        auto sol = sp.express(toVector(c, tgt, P, false));
        if (sol) {
            KoszulElement w;
            for (size_t j = 0; j < src.size(); ++j)
                if ((*sol)[j])
                    w.addTerm(src.entries[j].first,
                              RingElement::monomial(src.entries[j].second, (*sol)[j], P), P);
            if (differential(w, P) != c)
                throw Error(Errc::InternalFault, "isBoundary: witness re-check failed");
            R.isBoundary = true;
            R.witness = w;
            R.precision = prec;
            return R;
        }
    }
    // Exact solve failed; try to certify via the truncated system.
    int prec = std::max(P.adicPrecision, base);
    DiffMatrix trunc = differentialMatrix(P, s + 1, t, prec);
    Span sp(P.p, trunc.target.size());
    for (const auto& col : trunc.columns)
        sp.add(col);
    FpVec proj = toVector(c, trunc.target, P, /*truncate=*/true);
    R.precision = prec;
    R.certified = !sp.contains(proj);
    return R;
}

// A cycle written as an S-linear combination of the f''_I, with enough data to
// re-verify the identity by exact expansion.
struct ReductionCertificate {
    KoszulElement input;
    std::vector<std::pair<Subset, RingElement>> fTerms; // sum coeff * f''_I
    RingElement degreeZeroPart;
    KoszulElement boundaryWitness; // b with input = sum + deg0 + d(b)

    KoszulElement expand(const Params& P) const {
        KoszulElement acc = KoszulElement::scalar(degreeZeroPart);
        for (const auto& [I, coef] : fTerms)
            acc = add(acc, mulRing(psi(I, P), coef, P), P);
        return add(acc, differential(boundaryWitness, P), P);
    }

    bool verify(const Params& P) const { return expand(P) == input; }

    std::string label(const Params& P) const {
        if (fTerms.empty() && degreeZeroPart.isZero())
            return "0";
        std::string out;
        if (!degreeZeroPart.isZero())
            out += degreeZeroPart.str(P);
        for (const auto& [I, coef] : fTerms) {
            if (!out.empty())
                out += " + ";
            bool unitCoef = coef.terms.size() == 1 && coef.terms.begin()->second == 1 &&
                            coef.terms.begin()->first == Monomial{};
            if (unitCoef)
                out += "f" + subsetStr(I);
            else if (coef.terms.size() == 1)
                out += coef.str(P) + "*f" + subsetStr(I);
            else
                out += "(" + coef.str(P) + ")*f" + subsetStr(I);
        }
        return out;
    }
};

// Leading-term reduction: repeatedly strip the maximal word J0 of the cycle by
// subtracting sum_j s_j f''_{J0 u j}, where c_{J0} = sum_j s_j u_j over
// j < min(J0).  Each pass removes the whole J0-coefficient and only introduces
// strictly smaller words, so the loop ends after at most 2^n passes.  All
// arithmetic is exact, never truncated.
inline ReductionCertificate reduceCycle(const KoszulElement& c, const Params& P) {
    ReductionCertificate cert;
    cert.input = c;
    if (c.isZero())
        return cert;
    if (!differential(c, P).isZero())
        throw Error(Errc::NotACycle, "reduceCycle: input is not a cycle");

    KoszulElement rem = c;
    auto deg0 = rem.terms.find(0u);
    if (deg0 != rem.terms.end()) {
        cert.degreeZeroPart = deg0->second;
        rem.terms.erase(0u);
    }

    std::map<Subset, RingElement> acc;
    int guard = 1 << (P.n + 1);
    while (!rem.isZero()) {
        if (--guard < 0)
            throw Error(Errc::InternalFault, "reduceCycle: leading term failed to descend");
        auto [J0, cJ0] = leadingTerm(rem);
        int j0 = subsetMin(J0);
        std::map<int, RingElement> parts;
        try {
            parts = monomialIdealDecompose(cJ0, j0, P);
        } catch (const Error& e) {
            if (e.code != Errc::NotInIdeal)
                throw;
            throw Error(Errc::IdealMembershipFailure,
                        "leading coefficient " + cJ0.str(P) + " on v" + subsetStr(J0) +
                            " is not in (u_j : j < " + std::to_string(j0) + ")");
        }
        KoszulElement c1;
        for (const auto& [j, sj] : parts) {
            Subset I = J0 | (1u << (j - 1));
            c1 = add(c1, mulRing(psi(I, P), sj, P), P);
            auto it = acc.find(I);
            if (it == acc.end())
                acc[I] = sj;
            else
                it->second = add(it->second, sj, P);
        }
        rem = sub(rem, c1, P);
        if (!rem.isZero() && leadingTerm(rem).first >= J0)
            throw Error(Errc::InternalFault, "reduceCycle: leading term did not decrease");
    }
    for (auto& [I, coef] : acc)
        if (!coef.isZero())
            cert.fTerms.emplace_back(I, coef);
    if (!cert.verify(P))
        throw Error(Errc::InternalFault, "reduceCycle: certificate failed to re-verify");
    return cert;
}

struct TableSlice {
    int s = 0;
    int64_t t = 0;
    int dim = 0;
    int dimNext = 0; // same slice at precision N + 1
    bool stable = false;
    std::vector<std::string> basis;
    std::vector<bool> truncationAdjacent;
};

struct BigradedTable {
    Params params;
    std::vector<TableSlice> slices; // populated slices in (t, s) order

    const TableSlice* find(int s, int64_t t) const {
        for (const auto& sl : slices)
            if (sl.s == s && sl.t == t)
                return &sl;
        return nullptr;
    }

    int dimAt(int s, int64_t t) const {
        const TableSlice* sl = find(s, t);
        return sl ? sl->dim : 0;
    }
};

inline std::string homologyLabel(const KoszulElement& rep, const Params& P) {
    auto [s, t] = rep.bidegree(P);
    if (s == 0)
        return rep.terms.at(0u).str(P);
    try {
        return reduceCycle(rep, P).label(P);
    } catch (const Error&) {
        return rep.str(P); // surfaced raw; reduction failures are reportable data
    }
}

// Dimensions over the whole window, evaluated at N and N + 1.  A slice whose
// two counts agree is marked stable; the window outside of that is reported,
// not trusted.  Slices are independent and evaluated in parallel when
// KZL_THREADS asks for it; the merge order is fixed.
inline BigradedTable homologyTable(const Params& P) {
    BigradedTable T;
    T.params = P;
    std::vector<std::pair<int, int64_t>> coords;
    for (int64_t t = 0; t <= P.tMax; t += 2)
        for (int s = 0; s <= P.n; ++s)
            coords.emplace_back(s, t);
    auto rows = parallelMap<TableSlice>(coords.size(), [&](size_t i) {
        auto [s, t] = coords[i];
        SliceHomology h = homologySlice(P, s, t);
        SliceHomology h2 = homologySlice(P, s, t, P.adicPrecision + 1);
        TableSlice sl;
        sl.s = s;
        sl.t = t;
        sl.dim = h.dim;
        sl.dimNext = h2.dim;
        sl.stable = h.dim == h2.dim;
        for (const auto& rep : h.representatives)
            sl.basis.push_back(homologyLabel(rep, P));
        sl.truncationAdjacent = h.truncationAdjacent;
        return sl;
    });
    for (auto& sl : rows)
        if (sl.dim != 0 || sl.dimNext != 0)
            T.slices.push_back(std::move(sl));
    return T;
}

} // namespace kzl
