#pragma once

#include <map>
#include <optional>
#include <vector>

#include "glmn/superelem.hpp"

namespace glmn {

/// Exact K-linear span of a family of ring elements, kept as a triangular
/// sparse basis over the canonical monomial order. Vectors are cleared to a
/// common denominator D1^a D2^b before reduction.
class SpanMatrix {
public:
    explicit SpanMatrix(RingSpec ring);

    /// Inserts v. Returns true when v enlarged the span (v independent of
    /// the vectors inserted so far).
    bool add(const SuperElem& v);

    /// Queries may raise the internal common denominator, hence non-const.
    bool contains(const SuperElem& v);

    /// Exact coordinates of v in terms of the independent vectors inserted
    /// so far (indexed by insertion order of the successful adds), or
    /// nothing when v is outside the span.
    std::optional<std::vector<Scalar>> coordinates(const SuperElem& v);

    int rank() const { return static_cast<int>(rows_.size()); }
    int den1() const { return den1_; }
    int den2() const { return den2_; }

private:
    struct Row {
        // terms sorted descending; front() is the pivot
        std::vector<std::pair<SuperMonomial, Scalar>> poly;
        std::vector<Scalar> combo;  // expression in the independent vectors
    };

    // numerator of v rescaled to the common denominator, terms descending
    std::vector<std::pair<SuperMonomial, Scalar>> cleared(const SuperElem& v) const;
    void raise_denominator(int a, int b);
    std::vector<std::pair<SuperMonomial, Scalar>> reduce(
        std::vector<std::pair<SuperMonomial, Scalar>> work, std::vector<Scalar>& coords) const;

    RingSpec ring_;
    int den1_ = 0, den2_ = 0;
    std::vector<Row> rows_;
    std::map<SuperMonomial, std::size_t> pivots_;  // pivot monomial -> row
};

/// Coordinates of v in the span of the given vectors, or nothing.
std::optional<std::vector<Scalar>> span_membership(const SuperElem& v,
                                                   const std::vector<SuperElem>& basis);

}  // namespace glmn
