#pragma once
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "kzl/fp.hpp"

namespace kzl {

using FpVec = std::vector<uint32_t>;

inline bool isZeroVec(const FpVec& v) {
    for (auto x : v)
        if (x)
            return false;
    return true;
}

// Incremental Gaussian elimination over F_p with augmentation.
//
// Generators are fed in a fixed order; each stored row is kept reduced with a
// unit pivot and remembers its expression in terms of the generators fed so
// far.  Pivoting is by first nonzero coordinate, so all results are
// deterministic functions of the insertion order.  This one structure serves
// as rank/span (add), membership with certificate (express), and kernel
// extraction (addTracked returning the dependency when a generator reduces to
// zero).
class Span {
public:
    Span(uint32_t p, size_t dim) : p_(p), dim_(dim) {}

    size_t rank() const { return rows_.size(); }
    size_t dim() const { return dim_; }
    size_t generatorsFed() const { return fed_; }

    // Feed a generator; returns true if it increased the rank.
    bool add(const FpVec& v) { return addTracked(v).second; }

    // Feed a generator, tracking its expression.  Returns {dependency, fresh}:
    // if fresh is false, dependency holds coefficients c_j over the previously
    // fed generators with  v = sum_j c_j * gen_j.
    std::pair<FpVec, bool> addTracked(const FpVec& v) {
        FpVec red = v;
        FpVec expr(fed_ + 1, 0);
        expr[fed_] = 1;
        reduceInPlace(red, expr);
        ++fed_;
        if (isZeroVec(red)) {
            // v = -(expr minus the v slot itself) ... expr records v - sum = 0.
            FpVec dep(fed_ - 1, 0);
            for (size_t j = 0; j + 1 < expr.size(); ++j)
                dep[j] = fp::neg(expr[j], p_);
            return {dep, false};
        }
        normalizeAndStore(std::move(red), std::move(expr));
        return {{}, true};
    }

    // Does v lie in the current span?  If so, return coefficients over the fed
    // generators with v = sum_j c_j * gen_j.
    std::optional<FpVec> express(const FpVec& v) const {
        FpVec red = v;
        FpVec expr(fed_ + 1, 0);
        expr[fed_] = 1;
        reduceInPlace(red, expr);
        if (!isZeroVec(red))
            return std::nullopt;
        FpVec dep(fed_, 0);
        for (size_t j = 0; j < fed_; ++j)
            dep[j] = fp::neg(expr[j], p_);
        return dep;
    }

    bool contains(const FpVec& v) const {
        FpVec red = v;
        FpVec expr;
        reduceInPlace(red, expr);
        return isZeroVec(red);
    }

    // Remainder of v after reduction against the span (deterministic normal form).
    FpVec reduce(const FpVec& v) const {
        FpVec red = v;
        FpVec expr;
        reduceInPlace(red, expr);
        return red;
    }

    std::set<size_t> pivotCoordinates() const {
        std::set<size_t> s;
        for (const auto& [piv, idx] : pivotRow_)
            s.insert(piv);
        return s;
    }

private:
    void reduceInPlace(FpVec& v, FpVec& expr) const {
        for (const auto& [piv, idx] : pivotRow_) {
            uint32_t c = v[piv];
            if (c == 0)
                continue;
            const FpVec& row = rows_[idx];
            for (size_t k = piv; k < dim_; ++k)
                if (row[k])
                    v[k] = fp::sub(v[k], fp::mul(c, row[k], p_), p_);
            if (!expr.empty()) {
                const FpVec& rex = exprs_[idx];
                if (expr.size() < rex.size())
                    expr.resize(rex.size(), 0);
                for (size_t k = 0; k < rex.size(); ++k)
                    if (rex[k])
                        expr[k] = fp::sub(expr[k], fp::mul(c, rex[k], p_), p_);
            }
        }
    }

    void normalizeAndStore(FpVec row, FpVec expr) {
        size_t piv = 0;
        while (piv < dim_ && row[piv] == 0)
            ++piv;
        uint32_t c = fp::inv(row[piv], p_);
        for (size_t k = piv; k < dim_; ++k)
            row[k] = fp::mul(row[k], c, p_);
        for (auto& x : expr)
            x = fp::mul(x, c, p_);
        // Back-substitute into existing rows so membership tests stay one pass.
        for (auto& [q, idx] : pivotRow_) {
            uint32_t d = rows_[idx][piv];
            if (d == 0)
                continue;
            for (size_t k = piv; k < dim_; ++k)
                if (row[k])
                    rows_[idx][k] = fp::sub(rows_[idx][k], fp::mul(d, row[k], p_), p_);
            FpVec& rex = exprs_[idx];
            if (rex.size() < expr.size())
                rex.resize(expr.size(), 0);
            for (size_t k = 0; k < expr.size(); ++k)
                if (expr[k])
                    rex[k] = fp::sub(rex[k], fp::mul(d, expr[k], p_), p_);
        }
        pivotRow_[piv] = rows_.size();
        rows_.push_back(std::move(row));
        exprs_.push_back(std::move(expr));
    }

    uint32_t p_;
    size_t dim_;
    size_t fed_ = 0;
    std::vector<FpVec> rows_;
    std::vector<FpVec> exprs_;
    std::map<size_t, size_t> pivotRow_; // pivot coordinate -> row index
};

// Kernel basis of the linear map sending generator j to columns[j], computed by
// feeding columns in order and collecting dependencies.  Deterministic.
inline std::vector<FpVec> kernelBasis(uint32_t p, size_t targetDim,
                                      const std::vector<FpVec>& columns) {
    Span sp(p, targetDim);
    std::vector<FpVec> kernel;
    for (const auto& col : columns) {
        auto [dep, fresh] = sp.addTracked(col);
        if (!fresh) {
            // dep expresses col = sum_j dep_j * col_j over earlier columns,
            // so col - sum_j dep_j col_j is a kernel vector.
            FpVec k(columns.size(), 0);
            for (size_t j = 0; j < dep.size(); ++j)
                k[j] = fp::neg(dep[j], p);
            k[sp.generatorsFed() - 1] = 1;
            kernel.push_back(std::move(k));
        }
    }
    return kernel;
}

inline size_t rankOf(uint32_t p, size_t targetDim, const std::vector<FpVec>& columns) {
    Span sp(p, targetDim);
    for (const auto& col : columns)
        sp.add(col);
    return sp.rank();
}

} // namespace kzl
