#include "glmn/tableau.hpp"

#include <algorithm>

#include "glmn/span.hpp"

namespace glmn {

// ---------------------------------------------------------------------------
// Tableau

Tableau::Tableau(Partition shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
    if (static_cast<int>(rows_.size()) != shape_.rows())
        throw Error("tableau rows do not match the shape");
    for (int r = 0; r < shape_.rows(); ++r)
        if (static_cast<int>(rows_[r].size()) != shape_.part(r))
            throw Error("tableau row length does not match the shape");
}

Tableau Tableau::canonical(const Partition& shape) {
    std::vector<std::vector<int>> rows;
    for (int r = 0; r < shape.rows(); ++r)
        rows.emplace_back(shape.part(r), r + 1);
    return Tableau(shape, std::move(rows));
}

Tableau Tableau::from_flat(const Partition& shape, const std::vector<int>& entries) {
    if (static_cast<int>(entries.size()) != shape.size())
        throw Error("flat entry list does not match the shape size");
    std::vector<std::vector<int>> rows;
    std::size_t at = 0;
    for (int r = 0; r < shape.rows(); ++r) {
        rows.emplace_back(entries.begin() + at, entries.begin() + at + shape.part(r));
        at += shape.part(r);
    }
    return Tableau(shape, std::move(rows));
}

bool Tableau::semistandard() const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        for (std::size_t c = 0; c < rows_[r].size(); ++c) {
            if (c > 0 && rows_[r][c] < rows_[r][c - 1]) return false;
            if (r > 0 && c < rows_[r - 1].size() && rows_[r][c] <= rows_[r - 1][c]) return false;
        }
    }
    return true;
}

std::vector<int> Tableau::column(int c) const {
    std::vector<int> out;
    for (auto& row : rows_)
        if (c < static_cast<int>(row.size())) out.push_back(row[c]);
    return out;
}

std::vector<int> Tableau::content(int alphabet) const {
    std::vector<int> out(alphabet, 0);
    for (auto& row : rows_)
        for (int e : row) {
            if (e < 1 || e > alphabet) throw Error("tableau entry outside the alphabet");
            ++out[e - 1];
        }
    return out;
}

std::string Tableau::str() const {
    std::string s;
    for (auto& row : rows_) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) s += " ";
            s += std::to_string(row[c]);
        }
        s += "\n";
    }
    return s;
}

std::vector<Tableau> enumerate_semistandard(const Partition& shape, int alphabet) {
    std::vector<Tableau> out;
    if (shape.rows() > alphabet && shape.rows() > 0) return out;  // no column-strict filling
    std::vector<std::vector<int>> rows;
    for (int r = 0; r < shape.rows(); ++r) rows.emplace_back(shape.part(r), 0);

    // fill row-major; rows weakly increase left to right, columns strictly
    // increase downward
    auto rec = [&](auto&& self, int r, int c) -> void {
        if (r == shape.rows()) {
            out.emplace_back(shape, rows);
            return;
        }
        int nr = r, nc = c + 1;
        if (nc == shape.part(r)) {
            nr = r + 1;
            nc = 0;
        }
        int lo = 1;
        if (c > 0) lo = std::max(lo, rows[r][c - 1]);
        if (r > 0) lo = std::max(lo, rows[r - 1][c] + 1);
        for (int v = lo; v <= alphabet; ++v) {
            rows[r][c] = v;
            self(self, nr, nc);
        }
        rows[r][c] = 0;
    };
    if (shape.rows() == 0)
        out.emplace_back(shape, rows);
    else
        rec(rec, 0, 0);
    return out;
}

std::vector<std::pair<Tableau, Tableau>> semistandard_pairs(const Partition& shape,
                                                            int alphabet) {
    auto singles = enumerate_semistandard(shape, alphabet);
    std::vector<std::pair<Tableau, Tableau>> out;
    out.reserve(singles.size() * singles.size());
    for (auto& a : singles)
        for (auto& b : singles) out.emplace_back(a, b);
    return out;
}

// ---------------------------------------------------------------------------
// bideterminants

bool Bidet::operator<(const Bidet& o) const {
    if (block != o.block) return block < o.block;
    if (shape != o.shape) return shape < o.shape;
    if (left != o.left) return left < o.left;
    return right < o.right;
}

std::string Bidet::str() const {
    std::string s = "T^" + shape.str() + "(";
    auto flat = [](const Tableau& t) {
        std::string f;
        for (auto& row : t.rows())
            for (int e : row) f += std::to_string(e);
        return f;
    };
    s += flat(left) + ":" + flat(right) + ")";
    if (block == Block::I22) s += "-";
    return s;
}

std::string GenBidet::str() const {
    std::string det = bidet.block == Block::I11 ? "Det1" : "Det2";
    if (det_exp == 0) return bidet.str();
    return det + "^" + std::to_string(det_exp) + " " + bidet.str();
}

SuperElem bidet_expand(RingSpec ring, const Bidet& b) {
    if (b.left.shape() != b.shape || b.right.shape() != b.shape)
        throw Error("bideterminant fillings must match the shape");
    const int offset = b.block == Block::I11 ? 0 : ring.m;
    const int alphabet = b.block == Block::I11 ? ring.m : ring.n;
    SuperElem out = SuperElem::constant(ring, 1);
    const int width = b.shape.rows() ? b.shape.part(0) : 0;
    for (int c = 0; c < width; ++c) {
        std::vector<int> li = b.left.column(c), ri = b.right.column(c);
        const std::size_t h = li.size();
        // det of the h x h minor with rows li, columns ri
        std::vector<int> perm(h);
        for (std::size_t i = 0; i < h; ++i) {
            if (li[i] < 1 || li[i] > alphabet || ri[i] < 1 || ri[i] > alphabet)
                throw Error("bideterminant entry outside the block alphabet");
            perm[i] = static_cast<int>(i);
        }
        std::sort(perm.begin(), perm.end());
        SuperElem minor = SuperElem::zero(ring);
        do {
            int sign = 1;
            for (std::size_t i = 0; i < h; ++i)
                for (std::size_t j = i + 1; j < h; ++j)
                    if (perm[i] > perm[j]) sign = -sign;
            SuperElem prod = SuperElem::constant(ring, sign);
            for (std::size_t i = 0; i < h; ++i)
                prod *= SuperElem::variable(ring, offset + li[i], offset + ri[perm[i]]);
            minor += prod;
        } while (std::next_permutation(perm.begin(), perm.end()));
        out *= minor;
    }
    return out;
}

SuperElem genbidet_expand(RingSpec ring, const GenBidet& g) {
    SuperElem e = bidet_expand(ring, g.bidet);
    Block diag = g.bidet.block == Block::I11 ? Block::I11 : Block::I22;
    return e.times_det_power(diag, g.det_exp);
}

// ---------------------------------------------------------------------------
// straightening by expansion and exact linear algebra

std::map<GenBidet, Scalar> straighten(RingSpec ring, const GenBidet& g,
                                      const Partition& shape_bound) {
    if (!partition_dominance_le(g.bidet.shape, shape_bound))
        throw Error("straighten: bound does not dominate the input shape");
    const int alphabet = g.bidet.block == Block::I11 ? ring.m : ring.n;
    SuperElem target = genbidet_expand(ring, g);
    std::map<GenBidet, Scalar> out;
    if (target.is_zero()) return out;

    std::vector<int> cl = g.bidet.left.content(alphabet);
    std::vector<int> cr = g.bidet.right.content(alphabet);

    // candidate standard generalized bideterminants: same size, same shift,
    // shapes dominated by the bound, fillings with the same two contents
    std::vector<GenBidet> candidates;
    std::vector<SuperElem> expansions;
    const int size = g.bidet.shape.size();
    for (const Partition& shape : enumerate_partitions(std::min(size, alphabet), size)) {
        if (!partition_dominance_le(shape, shape_bound)) continue;
        auto fillings = enumerate_semistandard(shape, alphabet);
        for (auto& li : fillings) {
            if (li.content(alphabet) != cl) continue;
            for (auto& ri : fillings) {
                if (ri.content(alphabet) != cr) continue;
                GenBidet cand{Bidet{shape, li, ri, g.bidet.block}, g.det_exp};
                candidates.push_back(cand);
                expansions.push_back(genbidet_expand(ring, cand));
            }
        }
    }
    auto coords = span_membership(target, expansions);
    if (!coords)
        throw Error("straighten: expansion escaped the standard span of " + g.str());
    for (std::size_t i = 0; i < candidates.size(); ++i)
        if (!(*coords)[i].is_zero()) out.emplace(candidates[i], (*coords)[i]);
    return out;
}

std::map<GenBidet, Scalar> straighten(RingSpec ring, const GenBidet& g) {
    return straighten(ring, g, g.bidet.shape);
}

}  // namespace glmn
