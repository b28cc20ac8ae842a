#pragma once

#include <map>
#include <vector>

#include "glmn/superelem.hpp"
#include "glmn/weights.hpp"

namespace glmn {

/// Filling of a Young diagram with positive integers, stored row-major.
class Tableau {
public:
    Tableau() = default;
    Tableau(Partition shape, std::vector<std::vector<int>> rows);

    /// Row k filled entirely with k (1-based).
    static Tableau canonical(const Partition& shape);

    /// Entries taken row-major from a flat list.
    static Tableau from_flat(const Partition& shape, const std::vector<int>& entries);

    const Partition& shape() const { return shape_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int entry(int row, int col) const { return rows_[row][col]; }  // 0-based

    /// Rows weakly increase, columns strictly increase.
    bool semistandard() const;

    /// Entries of column c, top to bottom.
    std::vector<int> column(int c) const;

    /// Multiplicity vector of the entries 1..alphabet.
    std::vector<int> content(int alphabet) const;

    std::string str() const;

    bool operator==(const Tableau&) const = default;
    bool operator<(const Tableau& o) const {
        return rows_ != o.rows_ ? rows_ < o.rows_ : shape_ < o.shape_;
    }

private:
    Partition shape_;
    std::vector<std::vector<int>> rows_;
};

/// All semistandard fillings of the shape with entries in 1..alphabet.
std::vector<Tableau> enumerate_semistandard(const Partition& shape, int alphabet);

/// Bideterminant T(i:j): a shape with two fillings over the alphabet of one
/// diagonal block. Expands to the product over columns of the minors of the
/// generic matrix picked out by the two fillings.
struct Bidet {
    Partition shape;
    Tableau left, right;
    Block block = Block::I11;  // I11 (alphabet m) or I22 (alphabet n)

    bool operator==(const Bidet&) const = default;
    bool operator<(const Bidet& o) const;
    std::string str() const;
};

/// Bideterminant shifted by an integer power of the block determinant.
struct GenBidet {
    Bidet bidet;
    int det_exp = 0;

    bool operator==(const GenBidet&) const = default;
    bool operator<(const GenBidet& o) const {
        return det_exp != o.det_exp ? det_exp < o.det_exp : bidet < o.bidet;
    }
    std::string str() const;
};

SuperElem bidet_expand(RingSpec ring, const Bidet& b);
SuperElem genbidet_expand(RingSpec ring, const GenBidet& g);

/// All pairs of semistandard fillings of the shape.
std::vector<std::pair<Tableau, Tableau>> semistandard_pairs(const Partition& shape, int alphabet);

/// Writes the expansion of g exactly as a combination of semistandard-pair
/// generalized bideterminants of shapes dominated by shape_bound (same size,
/// same determinant shift, same block). Throws when the expansion is not in
/// that span, which the classical basis statement rules out.
std::map<GenBidet, Scalar> straighten(RingSpec ring, const GenBidet& g,
                                      const Partition& shape_bound);

std::map<GenBidet, Scalar> straighten(RingSpec ring, const GenBidet& g);

}  // namespace glmn
