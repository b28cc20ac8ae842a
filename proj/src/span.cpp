#include "glmn/span.hpp"

#include <algorithm>

namespace glmn {

namespace {

using Terms = std::vector<std::pair<SuperMonomial, Scalar>>;

// work -= c * row, both sorted descending
void axpy(Terms& work, const Scalar& c, const Terms& row) {
    Terms out;
    out.reserve(work.size() + row.size());
    std::size_t a = 0, b = 0;
    while (a < work.size() || b < row.size()) {
        if (b == row.size() || (a < work.size() && row[b].first < work[a].first)) {
            out.push_back(work[a++]);
        } else if (a == work.size() || work[a].first < row[b].first) {
            out.emplace_back(row[b].first, -(c * row[b].second));
            ++b;
        } else {
            Scalar s = work[a].second - c * row[b].second;
            if (!s.is_zero()) out.emplace_back(work[a].first, s);
            ++a, ++b;
        }
    }
    work = std::move(out);
}

}  // namespace

SpanMatrix::SpanMatrix(RingSpec ring) : ring_(ring) {}

std::vector<std::pair<SuperMonomial, Scalar>> SpanMatrix::cleared(const SuperElem& v) const {
    auto rescaled = v.numerator_rescaled(den1_ - v.den1(), den2_ - v.den2());
    std::vector<std::pair<SuperMonomial, Scalar>> terms(rescaled.begin(), rescaled.end());
    std::reverse(terms.begin(), terms.end());  // descending, pivot first
    return terms;
}

void SpanMatrix::raise_denominator(int a, int b) {
    if (a <= den1_ && b <= den2_) return;
    int da = std::max(a, den1_) - den1_, db = std::max(b, den2_) - den2_;
    SuperElem scale = SuperElem::constant(ring_, 1);
    if (da) scale = scale * det_block(ring_, Block::I11).pow(da);
    if (db) scale = scale * det_block(ring_, Block::I22).pow(db);
    // Multiplying every row by the same even polynomial keeps the pivots
    // distinct (the monomial order is multiplicative), so the triangular
    // shape survives even though reduced form does not.
    pivots_.clear();
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        auto& row = rows_[r];
        SuperElem p = SuperElem::make(
            ring_, std::map<SuperMonomial, Scalar>(row.poly.begin(), row.poly.end()), 0, 0);
        p = p * scale;
        row.poly.assign(p.terms().begin(), p.terms().end());
        std::reverse(row.poly.begin(), row.poly.end());
        pivots_.emplace(row.poly.front().first, r);
    }
    den1_ += da;
    den2_ += db;
}

// Reduce work against the rows, accumulating the coefficient of each
// independent basis vector. Returns the surviving terms.
Terms SpanMatrix::reduce(Terms work, std::vector<Scalar>& coords) const {
    coords.assign(rows_.size() ? rows_[0].combo.size() : 0, Scalar::zero(ring_.characteristic));
    while (!work.empty()) {
        auto hit = pivots_.find(work.front().first);
        if (hit == pivots_.end()) break;
        const Row& row = rows_[hit->second];
        Scalar c = work.front().second * row.poly.front().second.inverse();
        axpy(work, c, row.poly);
        for (std::size_t k = 0; k < row.combo.size(); ++k) coords[k] += c * row.combo[k];
    }
    return work;
}

bool SpanMatrix::add(const SuperElem& v) {
    if (!(v.ring() == ring_)) throw DimensionError("span vector from a different ring");
    if (v.is_zero()) return false;
    raise_denominator(v.den1(), v.den2());
    std::vector<Scalar> partial;
    Terms residual = reduce(cleared(v), partial);
    if (residual.empty()) return false;

    // residual = v - sum_k partial[k] * basis_k
    Row row;
    row.poly = std::move(residual);
    row.combo.assign(rank() + 1, Scalar::zero(ring_.characteristic));
    for (std::size_t k = 0; k < partial.size(); ++k) row.combo[k] = -partial[k];
    row.combo[rank()] = Scalar::one(ring_.characteristic);
    for (auto& r : rows_) r.combo.resize(rank() + 1, Scalar::zero(ring_.characteristic));
    pivots_.emplace(row.poly.front().first, rows_.size());
    rows_.push_back(std::move(row));
    return true;
}

bool SpanMatrix::contains(const SuperElem& v) { return coordinates(v).has_value(); }

std::optional<std::vector<Scalar>> SpanMatrix::coordinates(const SuperElem& v) {
    if (!(v.ring() == ring_)) throw DimensionError("span query from a different ring");
    if (v.is_zero()) return std::vector<Scalar>(rank(), Scalar::zero(ring_.characteristic));
    raise_denominator(v.den1(), v.den2());
    std::vector<Scalar> coords;
    Terms residual = reduce(cleared(v), coords);
    if (!residual.empty()) return std::nullopt;
    coords.resize(rank(), Scalar::zero(ring_.characteristic));
    return coords;
}

std::optional<std::vector<Scalar>> span_membership(const SuperElem& v,
                                                   const std::vector<SuperElem>& basis) {
    if (basis.empty()) {
        if (v.is_zero()) return std::vector<Scalar>{};
        return std::nullopt;
    }
    SpanMatrix span(v.ring());
    std::vector<int> independent;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (span.add(basis[i])) independent.push_back(static_cast<int>(i));
    auto coords = span.coordinates(v);
    if (!coords) return std::nullopt;
    std::vector<Scalar> full(basis.size(), Scalar::zero(v.characteristic()));
    for (std::size_t k = 0; k < independent.size(); ++k) full[independent[k]] = (*coords)[k];
    return full;
}

}  // namespace glmn
