#pragma once
#include <string>
#include <vector>

#include "kzl/homology.hpp"

namespace kzl {

// A computed triple Massey product <x,y,z>: one representative, the defining
// system that produced it, and the indeterminacy [x]H + H[z] described as a
// span of cycles together with its dimension modulo boundaries.
struct MasseyResult {
    KoszulElement x, y, z;
    DefiningSystem system;
    KoszulElement representative;
    int s = 0; // bidegree of the representative slot
    int64_t t = 0;
    std::vector<KoszulElement> indeterminacySpan;
    std::vector<std::string> indeterminacyLabels;
    int indeterminacyDim = 0;
    std::pair<int, int64_t> leftSlot{0, 0}, rightSlot{0, 0};
};

namespace detail {

inline void collectIndetPart(const KoszulElement& fixed, bool fixedOnLeft, int s, int64_t t,
                             const Params& P, MasseyResult& R) {
    if (s < 0 || s > P.n || t < 0)
        return;
    SliceHomology H = homologySlice(P, s, t);
    for (const auto& h : H.representatives) {
        KoszulElement prod = fixedOnLeft ? wedge(fixed, h, P) : wedge(h, fixed, P);
        if (prod.isZero())
            continue;
        R.indeterminacySpan.push_back(prod);
        R.indeterminacyLabels.push_back((fixedOnLeft ? "[x]*" : "") + homologyLabel(h, P) +
                                        (fixedOnLeft ? "" : "*[z]"));
    }
}

} // namespace detail

// <x, y, z> with the convention: witnesses d(s) = hat(x)y, d(t) = hat(y)z and
// representative hat(s)z + hat(x)t.  Both witnesses come from the boundary
// solver, so the choice is deterministic.
inline MasseyResult masseyTriple(const KoszulElement& x, const KoszulElement& y,
                                 const KoszulElement& z, const Params& P) {
    for (const KoszulElement* c : {&x, &y, &z})
        if (!differential(*c, P).isZero())
            throw Error(Errc::NotACycle, "masseyTriple: inputs must be cycles");
    MasseyResult R;
    R.x = x;
    R.y = y;
    R.z = z;

    KoszulElement xy = wedge(hat(x, P), y, P);
    BoundaryResult b1 = isBoundary(xy, P);
    if (!b1.isBoundary)
        throw Error(Errc::BracketUndefined, "[x][y] != 0: no witness for hat(x)y");
    KoszulElement yz = wedge(hat(y, P), z, P);
    BoundaryResult b2 = isBoundary(yz, P);
    if (!b2.isBoundary)
        throw Error(Errc::BracketUndefined, "[y][z] != 0: no witness for hat(y)z");

    R.system = DefiningSystem{x, y, z, b1.witness, b2.witness};
    R.system.verify(P);
    R.representative =
        add(wedge(hat(b1.witness, P), z, P), wedge(hat(x, P), b2.witness, P), P);
    if (!differential(R.representative, P).isZero())
        throw Error(Errc::InternalFault, "massey representative is not a cycle");

    if (x.isZero() || y.isZero() || z.isZero())
        return R; // slot degrees undetermined; class is zero with empty indeterminacy

    auto [sx, tx] = x.bidegree(P);
    auto [sy, ty] = y.bidegree(P);
    auto [sz, tz] = z.bidegree(P);
    R.s = sx + sy + sz + 1;
    R.t = tx + ty + tz;
    R.leftSlot = {R.s - sx, R.t - tx};
    R.rightSlot = {R.s - sz, R.t - tz};
    detail::collectIndetPart(x, true, R.leftSlot.first, R.leftSlot.second, P, R);
    detail::collectIndetPart(z, false, R.rightSlot.first, R.rightSlot.second, P, R);

    // Rank of the indeterminacy modulo boundaries, reported alongside the span.
    int prec = P.adicPrecision;
    for (const auto& v : R.indeterminacySpan)
        prec = std::max(prec, v.maxAdicOrder() + 2);
    SliceBasis B = sliceBasis(P, R.s, R.t, prec);
    Span sp(P.p, B.size());
    if (R.s >= 0 && R.s < P.n) {
        DiffMatrix img = differentialMatrix(P, R.s + 1, R.t, prec);
        for (const auto& col : img.columns)
            sp.add(col);
    }
    size_t r0 = sp.rank();
    for (const auto& v : R.indeterminacySpan)
        sp.add(toVector(v, B, P, true));
    R.indeterminacyDim = static_cast<int>(sp.rank() - r0);
    return R;
}

// Canonical defining system for <f''_I, u^{w(min J)}, f''_J> with I, J
// disjoint, min I < min J:
//   s = (-1)^{#I} u^{w(j0)-w(i0)} vbar_I,   t = -vbar_J.
// Expanding hat(s)z + hat(x)t collapses to a single word:
//   (-1)^{#I+1} (1/alpha_I) d(vbar_I vbar_J) = (-1)^{#I + m(I,J) + 1} f''_{I u J},
// exactly, not merely up to boundary.
struct CanonicalBracket {
    DefiningSystem system;
    KoszulElement representative;
    int signExp = 0; // representative = (-1)^signExp * f''_{I u J}
};

inline int bracketSignExp(Subset I, Subset J) {
    return (subsetSize(I) + sortingSign(I, J) + 1) % 2;
}

inline CanonicalBracket definingSystemForF(Subset I, Subset J, const Params& P) {
    if (subsetSize(I) < 2 || subsetSize(J) < 2)
        throw Error(Errc::BadIndexPair, "need #I, #J >= 2");
    if (I & J)
        throw Error(Errc::BadIndexPair, "I and J must be disjoint");
    if ((I | J) >= (1u << P.n))
        throw Error(Errc::BadIndexPair, "indices exceed the height");
    int i0 = subsetMin(I), j0 = subsetMin(J);
    if (j0 <= i0)
        throw Error(Errc::BadIndexPair, "need min J > min I");

    CanonicalBracket out;
    uint32_t sSign = subsetSize(I) % 2 == 0 ? 1 : P.p - 1;
    KoszulElement s =
        KoszulElement::word(I, RingElement::monomial(
                                   Monomial{}.timesUPower(P.w(j0) - P.w(i0)), sSign, P));
    KoszulElement t = neg(vbarWord(J, P), P);
    KoszulElement x = psi(I, P);
    KoszulElement y = KoszulElement::scalar(RingElement::uPower(P.w(j0), P));
    KoszulElement z = psi(J, P);
    out.system = DefiningSystem{x, y, z, s, t};
    out.system.verify(P);
    out.representative = add(wedge(hat(s, P), z, P), wedge(hat(x, P), t, P), P);
    out.signExp = bracketSignExp(I, J);
    KoszulElement expected = scale(psi(I | J, P), out.signExp ? P.p - 1 : 1, P);
    if (out.representative != expected)
        throw Error(Errc::InternalFault, "canonical bracket did not collapse to f''_{IuJ}");
    return out;
}

struct BracketReport {
    Subset I = 0, J = 0;
    bool pass = false;
    int signExp = 0;          // sign carried by the bracket element, as computed
    int alternateSignExp = 0; // (#I + m(I,J)) mod 2, the other common normalization
    bool signsAgree = false;  // whether the two conventions coincide here (p = 2)
    MasseyResult triple;
    CanonicalBracket canonical;
    int indeterminacyDim = 0;
    std::string note;
};

// Verify that the Massey product <f''_I, u^{w(min J)}, f''_J> contains the
// bracket element: the canonical defining system must collapse to it exactly,
// and the solver-built representative must agree with it modulo boundaries
// plus the computed indeterminacy span.
inline BracketReport bracketVerify(Subset I, Subset J, const Params& P) {
    BracketReport R;
    R.I = I;
    R.J = J;
    R.canonical = definingSystemForF(I, J, P);
    R.signExp = R.canonical.signExp;
    R.alternateSignExp = (subsetSize(I) + sortingSign(I, J)) % 2;
    R.signsAgree = P.p == 2 || R.signExp == R.alternateSignExp;

    KoszulElement x = psi(I, P);
    KoszulElement y = KoszulElement::scalar(RingElement::uPower(P.w(subsetMin(J)), P));
    KoszulElement z = psi(J, P);
    R.triple = masseyTriple(x, y, z, P);
    R.indeterminacyDim = R.triple.indeterminacyDim;

    KoszulElement expected = R.canonical.representative;
    KoszulElement diff = sub(R.triple.representative, expected, P);
    if (diff.isZero()) {
        R.pass = true;
        return R;
    }
    int prec = std::max(P.adicPrecision, diff.maxAdicOrder() + 2);
    for (const auto& v : R.triple.indeterminacySpan)
        prec = std::max(prec, v.maxAdicOrder() + 2);
    SliceBasis B = sliceBasis(P, R.triple.s, R.triple.t, prec + 1);
    Span sp(P.p, B.size());
    if (R.triple.s < P.n) {
        SliceBasis src = sliceBasis(P, R.triple.s + 1, R.triple.t, prec);
        for (const auto& [mask, mono] : src.entries) {
            KoszulElement d =
                differential(KoszulElement::word(mask, RingElement::monomial(mono, 1, P)), P);
            sp.add(toVector(d, B, P, false));
        }
    }
    for (const auto& v : R.triple.indeterminacySpan)
        sp.add(toVector(v, B, P, false));
    R.pass = sp.contains(toVector(diff, B, P, false));
    if (!R.pass)
        R.note = "representative differs from the bracket element by a class outside "
                 "boundaries + indeterminacy";
    return R;
}

} // namespace kzl
