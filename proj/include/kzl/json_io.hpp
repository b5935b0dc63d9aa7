#pragma once
#include <string>
#include <vector>

#include <json.hpp>

#include "kzl/collapse.hpp"
#include "kzl/verify.hpp"

namespace kzl {

using nlohmann::json;

// Serialized term list: [coeff, a, e_1, ..., e_{n-1}], canonical order.
inline json toJson(const RingElement& x, const Params& P) {
    std::vector<std::pair<Monomial, uint32_t>> v(x.terms.begin(), x.terms.end());
    std::sort(v.begin(), v.end(),
              [](const auto& a, const auto& b) { return degrevlexGreater(a.first, b.first); });
    json terms = json::array();
    for (const auto& [m, c] : v) {
        json t = json::array();
        t.push_back(c);
        t.push_back(m.a);
        for (int i = 1; i < P.n; ++i)
            t.push_back(m.e[i - 1]);
        terms.push_back(std::move(t));
    }
    return terms;
}

// Serialized as a list of [subset bitmask, term list] pairs.
inline json toJson(const KoszulElement& x, const Params& P) {
    json out = json::array();
    for (const auto& [mask, coef] : x.terms)
        out.push_back(json::array({mask, toJson(coef, P)}));
    return out;
}

inline json configJson(const Params& P, const std::string& command, bool includePbar,
                       uint64_t seed) {
    return json{{"command", command},
                {"p", P.p},
                {"n", P.n},
                {"adicPrecision", P.adicPrecision},
                {"tMax", P.tMax},
                {"includePbar", includePbar},
                {"seed", seed}};
}

inline json toJson(const BigradedTable& T) {
    const Params& P = T.params;
    json slices = json::array();
    for (const auto& sl : T.slices) {
        json row{{"s", sl.s},
                 {"t", sl.t},
                 {"dim", sl.dim},
                 {"dimNext", sl.dimNext},
                 {"stable", sl.stable},
                 {"basis", sl.basis}};
        row["truncationAdjacent"] = sl.truncationAdjacent;
        slices.push_back(std::move(row));
    }
    return json{{"p", P.p},
                {"n", P.n},
                {"N", P.adicPrecision},
                {"tMax", P.tMax},
                {"slices", std::move(slices)}};
}

inline std::string toTsv(const BigradedTable& T) {
    std::string out = "s\tt\tdim\n";
    for (const auto& sl : T.slices)
        out += std::to_string(sl.s) + "\t" + std::to_string(sl.t) + "\t" +
               std::to_string(sl.dim) + "\n";
    return out;
}

inline json toJson(const PresentationReport& R) {
    json symbolic = json::array();
    for (const auto& row : R.symbolic)
        symbolic.push_back(
            json{{"relation", row.relation}, {"ok", row.ok}, {"witness", row.witness}});
    json dims = json::array();
    for (const auto& row : R.dims)
        dims.push_back(json{{"s", row.s},
                            {"t", row.t},
                            {"homology", row.homology},
                            {"presentation", row.presentation},
                            {"stable", row.stable},
                            {"ok", row.ok}});
    json surj = json::array();
    for (const auto& row : R.surjectivity)
        surj.push_back(json{{"s", row.s},
                            {"t", row.t},
                            {"representative", row.representative},
                            {"reduction", row.reduction},
                            {"ok", row.ok}});
    return json{{"symbolic", std::move(symbolic)},
                {"dims", std::move(dims)},
                {"surjectivity", std::move(surj)},
                {"verdict", R.pass ? "PASS" : "FAIL"},
                {"firstFailure", R.firstFailure},
                {"notes", R.notes}};
}

inline json toJson(const MasseyResult& M, const Params& P) {
    return json{{"x", toJson(M.x, P)},
                {"y", toJson(M.y, P)},
                {"z", toJson(M.z, P)},
                {"witnessS", toJson(M.system.s, P)},
                {"witnessT", toJson(M.system.t, P)},
                {"representative", toJson(M.representative, P)},
                {"s", M.s},
                {"t", M.t},
                {"indeterminacyDimension", M.indeterminacyDim},
                {"indeterminacyLabels", M.indeterminacyLabels}};
}

inline json toJson(const BracketReport& R, const Params& P) {
    return json{{"I", subsetStr(R.I)},
                {"J", subsetStr(R.J)},
                {"verdict", R.pass ? "PASS" : "FAIL"},
                {"sign", R.signExp ? -1 : 1},
                {"alternateConventionSign", R.alternateSignExp ? -1 : 1},
                {"signsAgree", R.signsAgree},
                {"triple", toJson(R.triple, P)},
                {"canonicalRepresentative", toJson(R.canonical.representative, P)},
                {"indeterminacyDimension", R.indeterminacyDim},
                {"note", R.note}};
}

inline json toJson(const PageTable& T) {
    json dots = json::array();
    for (const auto& [st, d] : T.dims) {
        if (d == 0)
            continue;
        dots.push_back(json{{"s", st.first},
                            {"t", st.second},
                            {"dim", d},
                            {"labels", sliceLabels(T, st.first, st.second)}});
    }
    json gens = json::array();
    for (const auto& g : T.generators) {
        const char* kind = g.kind == GeneratorSpec::Kind::Polynomial ? "polynomial"
                           : g.kind == GeneratorSpec::Kind::Exterior ? "exterior"
                                                                     : "torModule";
        gens.push_back(json{{"name", g.name}, {"kind", kind}, {"s", g.s}, {"t", g.t}});
    }
    return json{{"dots", std::move(dots)},
                {"generators", std::move(gens)},
                {"report", json{{"includePbar", T.includePbar},
                                {"coefficientFactor", T.coefficientFactor},
                                {"notes", T.notes}}}};
}

inline std::string toTsv(const PageTable& T) {
    std::string out = "s\tt\tdim\n";
    for (const auto& [st, d] : T.dims) {
        if (d == 0)
            continue;
        out += std::to_string(st.first) + "\t" + std::to_string(st.second) + "\t" +
               std::to_string(d) + "\n";
    }
    return out;
}

inline json toJson(const std::vector<ExtCandidate>& cands) {
    json out = json::array();
    for (const auto& c : cands)
        out.push_back(json{{"s", c.s},
                           {"t", c.t},
                           {"uExponent", c.uExp},
                           {"word", c.word ? subsetStr(c.word) : ""},
                           {"label", c.label},
                           {"vanishesByAnnihilator", c.vanishesByAlpha},
                           {"qKillers", c.qKillers}});
    return out;
}

inline json toJson(const SplittingReport& R) {
    return json{{"verdict", R.pass ? "PASS" : "FAIL"},
                {"firstMismatch", R.firstMismatch},
                {"seriesLeft", R.left},
                {"seriesRight", R.right}};
}

inline json toJson(const CollapseReport& R) {
    json rows = json::array();
    for (const auto& r : R.rows)
        rows.push_back(json{{"generator", r.g.name},
                            {"s", r.g.s},
                            {"t", r.g.t},
                            {"verdict", r.verdict},
                            {"reason", r.reason}});
    json ext = json::array();
    for (const auto& e : R.extensions)
        ext.push_back(json{{"relation", e.relation},
                           {"totalDegree", e.totalDegree},
                           {"filtration", e.filtration},
                           {"status", e.status},
                           {"candidates", e.candidates}});
    return json{{"verdict", R.pass ? "PASS" : "FAIL"},
                {"generators", std::move(rows)},
                {"extensions", std::move(ext)},
                {"notes", R.notes}};
}

} // namespace kzl
