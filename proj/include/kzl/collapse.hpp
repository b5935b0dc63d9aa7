#pragma once
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "kzl/page.hpp"

namespace kzl {

// Status of one relation x*y = 0 transported from the page to the target ring:
// no eligible candidate below the product's filtration in its total degree
// means the relation persists.
struct ExtensionRow {
    std::string relation;
    int64_t totalDegree = 0;
    int filtration = 0;
    std::string status; // HOLDS | HOLDS-BY-RELATION | UNKNOWN
    std::vector<std::string> candidates;
};

namespace collapsedetail {

// Can u^{w} * (page label q u^k f_W) be nonzero on the page?  All quotient
// relations apply here, this is a page-level question.
inline bool pageNonzeroAfterU(const ExtCandidate& c, int64_t w, int qDivisor, const Params& P) {
    int64_t k = c.uExp + w;
    if (k >= P.w(P.n))
        return false;
    if (c.word != 0 && k >= P.w(subsetMin(c.word)))
        return false;
    if (qDivisor >= 1 && k >= P.w(qDivisor))
        return false;
    return true;
}

inline bool pageNonzero(const ExtCandidate& c, int qDivisor, const Params& P) {
    return pageNonzeroAfterU(c, 0, qDivisor, P) && !c.vanishesByAlpha;
}

// A candidate blocks the relation when some member of its family is nonzero on
// the page yet is killed by every listed annihilator of the product, exactly
// the eligibility the case analyses rule out by degrees.
inline bool blocks(const ExtCandidate& c, const std::vector<int64_t>& annihilators,
                   const Params& P) {
    for (int qDiv = 0; qDiv < P.n; ++qDiv) { // 0: q = 1; j >= 1: q divisible by u_j
        if (!pageNonzero(c, qDiv, P))
            continue;
        bool killedByAll = true;
        for (int64_t w : annihilators)
            if (pageNonzeroAfterU(c, w, qDiv, P)) {
                killedByAll = false;
                break;
            }
        if (killedByAll)
            return true;
    }
    return false;
}

// u^{w(min I)} f_I = 0 is established in the target for pairs (odd total
// degree) and whenever the top index sits in I; other words stay open.
inline std::optional<int64_t> establishedAnnihilator(Subset I, const Params& P) {
    if (subsetSize(I) == 2 || subsetContains(I, P.n))
        return P.w(subsetMin(I));
    return std::nullopt;
}

inline ExtensionRow classifyRelation(const std::string& name, int64_t totalDegree, int filtration,
                                     const std::vector<int64_t>& annihilators, const Params& P) {
    ExtensionRow row;
    row.relation = name;
    row.totalDegree = totalDegree;
    row.filtration = filtration;
    auto cands = extensionSearch(P, totalDegree, filtration);
    bool anyBlock = false, anyAnnotated = false;
    for (const auto& c : cands) {
        row.candidates.push_back(c.label + (c.vanishesByAlpha ? " (vanishes by annihilator)" : ""));
        if (c.vanishesByAlpha)
            anyAnnotated = true;
        else if (blocks(c, annihilators, P))
            anyBlock = true;
    }
    row.status = anyBlock ? "UNKNOWN" : (anyAnnotated ? "HOLDS-BY-RELATION" : "HOLDS");
    return row;
}

} // namespace collapsedetail

struct CollapseRow {
    GeneratorSpec g;
    std::string verdict; // PERMANENT-BY-DEGREE | PERMANENT-BY-MASSEY | UNRESOLVED
    std::string reason;
};

struct CollapseReport {
    Params params;
    bool coefficientFactor = true;
    bool includePbar = true;
    bool pass = true; // no UNRESOLVED generator
    std::vector<CollapseRow> rows;
    std::vector<ExtensionRow> extensions;
    std::vector<std::string> notes;
};

inline ExtensionRow alphaRelationRow(Subset I, const Params& P) {
    int64_t d = (subsetSize(I) - 1) + 2 * P.w(subsetMin(I)) + PresMonomial::fWordInternalDegree(I, P);
    std::vector<int64_t> ann; // no annihilator bootstrap for the alpha rows themselves
    return collapsedetail::classifyRelation(
        "u^" + std::to_string(P.w(subsetMin(I))) + "*f" + subsetStr(I), d, subsetSize(I) - 1, ann,
        P);
}

inline ExtensionRow squareRelationRow(Subset I, const Params& P) {
    int s = subsetSize(I) - 1;
    int64_t totalF = s + PresMonomial::fWordInternalDegree(I, P);
    std::string name = "f" + subsetStr(I) + "^2";
    if (P.p != 2 && totalF % 2 != 0) {
        ExtensionRow row;
        row.relation = name;
        row.totalDegree = 2 * totalF;
        row.filtration = 2 * s;
        row.status = "HOLDS"; // odd square in a graded-commutative ring
        return row;
    }
    std::vector<int64_t> ann;
    if (auto a = collapsedetail::establishedAnnihilator(I, P))
        ann.push_back(*a);
    return collapsedetail::classifyRelation(name, 2 * totalF, 2 * s, ann, P);
}

// Permanence of every page generator.  Filtration and parity settle everything
// through the 2-line; four-element and larger words ride a Massey bracket on
// two permanent classes, which needs the bracket verified, the side relations
// persistent, and no crossing differentials for the defining system.
inline CollapseReport collapseReport(const Params& P, bool includePbar = true) {
    CollapseReport R;
    R.params = P;
    R.includePbar = includePbar;
    R.coefficientFactor = P.n <= 4;
    if (!R.coefficientFactor)
        R.notes.push_back("height 5 runs the degenerate-coefficient variant of the page");
    PageTable T = e2Table(P, includePbar, R.coefficientFactor);
    for (const auto& note : T.notes)
        R.notes.push_back(note);

    for (const auto& g : T.generators) {
        CollapseRow row;
        row.g = g;
        if (g.s == 0) {
            row.verdict = "PERMANENT-BY-DEGREE";
            row.reason = "filtration 0";
            R.rows.push_back(std::move(row));
            continue;
        }
        bool allTargetsVanish = true;
        std::ostringstream why;
        for (int r = 2; r <= g.s; ++r) {
            TargetScan scan = differentialTargetScan(T, g.s, g.t, r);
            if (scan.dim != 0) {
                allTargetsVanish = false;
                why.str("");
                why << "d" << r << " target (" << scan.s << "," << scan.t << ") has dimension "
                    << scan.dim;
                break;
            }
            why << "d" << r << ": " << (scan.comment.empty() ? "empty slice" : scan.comment)
                << "; ";
        }
        if (g.s < 2)
            why << "pages beyond the filtration land below 0";
        if (allTargetsVanish) {
            row.verdict = "PERMANENT-BY-DEGREE";
            row.reason = why.str();
            R.rows.push_back(std::move(row));
            continue;
        }

        // f-words of size >= 4: bracket on the two smallest indices against the rest.
        if (g.word != 0) {
            Subset I = g.word;
            auto elems = subsetElements(I);
            if (elems.size() >= 4) {
                Subset pair = (1u << (elems[0] - 1)) | (1u << (elems[1] - 1));
                Subset rest = I & ~pair;
                std::string blocker;

                BracketReport br = bracketVerify(pair, rest, P);
                if (!br.pass)
                    blocker = "bracket verification failed";

                if (blocker.empty()) {
                    int64_t dRight = (subsetSize(rest) - 1) + 2 * P.w(subsetMin(rest)) +
                                     PresMonomial::fWordInternalDegree(rest, P);
                    ExtensionRow right = collapsedetail::classifyRelation(
                        "u^" + std::to_string(P.w(subsetMin(rest))) + "*f" + subsetStr(rest),
                        dRight, subsetSize(rest) - 1, {}, P);
                    int64_t dLeft = 1 + 2 * P.w(subsetMin(rest)) +
                                    PresMonomial::fWordInternalDegree(pair, P);
                    ExtensionRow left = collapsedetail::classifyRelation(
                        "f" + subsetStr(pair) + "*u^" + std::to_string(P.w(subsetMin(rest))),
                        dLeft, 1, {}, P);
                    if (right.status == "UNKNOWN" || left.status == "UNKNOWN")
                        blocker = "side relation not persistent";
                }

                if (blocker.empty()) {
                    auto [ss, ts] = br.canonical.system.s.bidegree(P);
                    auto [st_, tt] = br.canonical.system.t.bidegree(P);
                    std::vector<DiffCandidate> cands = {{ss, ss + ts, 1}, {st_, st_ + tt, 1}};
                    auto crossings = crossingDifferentialCheck(T, cands, P.tMax);
                    if (!crossings.empty())
                        blocker = "crossing differential candidates found";
                }

                if (blocker.empty()) {
                    row.verdict = "PERMANENT-BY-MASSEY";
                    row.reason = "bracket on f" + subsetStr(pair) + ", u^" +
                                 std::to_string(P.w(subsetMin(rest))) + ", f" + subsetStr(rest) +
                                 "; side relations persist; no crossing differentials";
                } else {
                    row.verdict = "UNRESOLVED";
                    row.reason = blocker;
                    R.pass = false;
                }
                R.rows.push_back(std::move(row));
                continue;
            }
        }
        row.verdict = "UNRESOLVED";
        row.reason = why.str();
        R.pass = false;
        R.rows.push_back(std::move(row));
    }

    // Relation persistence inventory.
    for (int i = 1; i <= P.n; ++i)
        for (int j = i + 1; j <= P.n; ++j) {
            Subset W = subsetOf({i, j});
            int64_t d = 1 + 2 * P.w(i) + PresMonomial::fWordInternalDegree(W, P);
            R.extensions.push_back(collapsedetail::classifyRelation(
                "u^" + std::to_string(P.w(i)) + "*f" + subsetStr(W), d, 1, {}, P));
        }
    for (Subset I = 0; I < (1u << P.n); ++I)
        if (subsetSize(I) >= 3)
            R.extensions.push_back(alphaRelationRow(I, P));
    for (Subset I = 0; I < (1u << P.n); ++I)
        if (subsetSize(I) >= 2)
            R.extensions.push_back(squareRelationRow(I, P));
    return R;
}

} // namespace kzl
