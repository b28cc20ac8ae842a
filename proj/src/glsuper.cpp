#include "glmn/glsuper.hpp"

#include <algorithm>

namespace glmn {

namespace {

// determinant of the submatrix of X11 with the given (1-based, increasing)
// rows and columns
SuperElem minor_det(RingSpec ring, const std::vector<int>& rows, const std::vector<int>& cols) {
    std::size_t size = rows.size();
    std::vector<int> perm(size);
    for (std::size_t i = 0; i < size; ++i) perm[i] = static_cast<int>(i);
    SuperElem out = SuperElem::zero(ring);
    std::map<SuperMonomial, Scalar> terms;
    do {
        int sign = 1;
        for (std::size_t i = 0; i < size; ++i)
            for (std::size_t j = i + 1; j < size; ++j)
                if (perm[i] > perm[j]) sign = -sign;
        SuperMonomial mono;
        for (std::size_t i = 0; i < size; ++i)
            mono.even.emplace_back(var_code(rows[i], cols[perm[i]]), 1);
        std::sort(mono.even.begin(), mono.even.end());
        Scalar c = Scalar::of(sign, ring.characteristic);
        auto [it, fresh] = terms.emplace(std::move(mono), c);
        if (!fresh) it->second += c;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return SuperElem::make(ring, std::move(terms), 0, 0);
}

std::vector<int> complement(int m, std::initializer_list<int> removed) {
    std::vector<int> out;
    for (int i = 1; i <= m; ++i)
        if (std::find(removed.begin(), removed.end(), i) == removed.end()) out.push_back(i);
    return out;
}

int sgn_lt(int a, int b) { return a < b ? 1 : -1; }

}  // namespace

GenericMatrix::GenericMatrix(RingSpec ring)
    : ring_(ring), d1_(det_block(ring, Block::I11)), d2_(det_block(ring, Block::I22)) {
    cof_.resize(ring_.m);
    for (int u = 1; u <= ring_.m; ++u)
        for (int v = 1; v <= ring_.m; ++v) {
            SuperElem c = minor_det(ring_, complement(ring_.m, {u}), complement(ring_.m, {v}));
            if ((u + v) & 1) c = -c;
            cof_[u - 1].push_back(std::move(c));
        }
}

const SuperElem& GenericMatrix::det(Block diag) const {
    if (diag == Block::I11) return d1_;
    if (diag == Block::I22) return d2_;
    throw Error("det expects a diagonal block");
}

const SuperElem& GenericMatrix::cofactor(int u, int v) const {
    if (u < 1 || v < 1 || u > ring_.m || v > ring_.m)
        throw IndexError("cofactor index outside the X11 block");
    return cof_[u - 1][v - 1];
}

SuperElem GenericMatrix::complementary_minor(int u, int k, int v, int j) const {
    if (u == k || v == j) throw IndexError("complementary_minor needs distinct rows and columns");
    if (ring_.m < 2) throw IndexError("complementary_minor needs m >= 2");
    if (u < 1 || k < 1 || v < 1 || j < 1 || u > ring_.m || k > ring_.m || v > ring_.m ||
        j > ring_.m)
        throw IndexError("complementary_minor index outside the X11 block");
    return minor_det(ring_, complement(ring_.m, {u, k}), complement(ring_.m, {v, j}));
}

bool GenericMatrix::jacobi_check(int u, int j, int k, int v) const {
    SuperElem lhs = cofactor(u, v) * cofactor(k, j) - cofactor(u, j) * cofactor(k, v);
    SuperElem rhs = d1_ * complementary_minor(u, k, v, j);
    int sign = sgn_lt(u, k) * sgn_lt(v, j) * (((u + j + k + v) & 1) ? -1 : 1);
    if (sign < 0) rhs = -rhs;
    return lhs == rhs;
}

bool GenericMatrix::laplace_check(int u, int j, int k) const {
    if (k == j) throw IndexError("laplace_check expands along a column k != j");
    SuperElem rhs = SuperElem::zero(ring_);
    for (int v = 1; v <= ring_.m; ++v) {
        if (v == u) continue;
        SuperElem term = minor_det(ring_, complement(ring_.m, {u, v}), complement(ring_.m, {j, k}));
        term = term * SuperElem::variable(ring_, v, k);
        int sign = sgn_lt(u, v) * sgn_lt(j, k) * (((u + j + v + k) & 1) ? -1 : 1);
        if (sign < 0) term = -term;
        rhs += term;
    }
    return cofactor(u, j) == rhs;
}

void GenericMatrix::ensure_phi() const {
    std::call_once(phi_once_, [this] {
        const int m = ring_.m, d = ring_.dim();
        y_.resize(d);
        for (int i = 1; i <= d; ++i) {
            for (int j = 1; j <= d; ++j) {
                Block b = ring_.block(i, j);
                SuperElem e = SuperElem::zero(ring_);
                switch (b) {
                    case Block::I11:
                        e = SuperElem::variable(ring_, i, j);
                        break;
                    case Block::I12:
                        // (X11^-1 X12)_ij = sum_u A_ui x_uj / D1
                        for (int u = 1; u <= m; ++u)
                            e += cof_[u - 1][i - 1] * SuperElem::variable(ring_, u, j);
                        e = e.times_det_power(Block::I11, -1);
                        break;
                    case Block::I21:
                        // (X21 X11^-1)_ij = sum_u x_iu A_ju / D1
                        for (int u = 1; u <= m; ++u)
                            e += SuperElem::variable(ring_, i, u) * cof_[j - 1][u - 1];
                        e = e.times_det_power(Block::I11, -1);
                        break;
                    case Block::I22:
                        // x_ij - (X21 X11^-1 X12)_ij
                        e = SuperElem::variable(ring_, i, j);
                        for (int u = 1; u <= m; ++u)
                            for (int v = 1; v <= m; ++v) {
                                SuperElem t = SuperElem::variable(ring_, i, u) *
                                              cof_[v - 1][u - 1] *
                                              SuperElem::variable(ring_, v, j);
                                e -= t.times_det_power(Block::I11, -1);
                            }
                        break;
                }
                y_[i - 1].push_back(std::move(e));
            }
        }
        // det of the n x n matrix (y_ij) over the I22 index range
        const int n = ring_.n;
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        SuperElem det2img = SuperElem::zero(ring_);
        do {
            int sign = 1;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (perm[i] > perm[j]) sign = -sign;
            SuperElem prod = SuperElem::constant(ring_, sign);
            for (int i = 0; i < n; ++i) prod *= y_[m + i][m + perm[i]];
            det2img += prod;
        } while (std::next_permutation(perm.begin(), perm.end()));
        det2_img_ = std::make_unique<SuperElem>(det2img);
        det2_inv_ = std::make_unique<SuperElem>(invert_even_unit(det2img));
    });
}

const SuperElem& GenericMatrix::y(int i, int j) const {
    ring_.check_index(i, j);
    ensure_phi();
    return y_[i - 1][j - 1];
}

const SuperElem& GenericMatrix::det2_image() const {
    ensure_phi();
    return *det2_img_;
}

const SuperElem& GenericMatrix::det2_image_inverse() const {
    ensure_phi();
    return *det2_inv_;
}

SuperElem GenericMatrix::phistar(const SuperElem& f) const {
    ensure_phi();
    SuperElem out = SuperElem::zero(ring_);
    for (auto& [mono, c] : f.terms()) {
        if (!mono.odd.empty())
            throw Error("phistar expects an element of the even subring, got " + mono.str());
        SuperElem term = SuperElem::constant(ring_, c);
        for (auto& [code, e] : mono.even) {
            int i = var_row(code), j = var_col(code);
            if (ring_.block(i, j) == Block::I11)
                term *= SuperElem::variable(ring_, i, j).pow(e);
            else
                term *= y(i, j).pow(e);
        }
        out += term;
    }
    out = out.times_det_power(Block::I11, -f.den1());
    if (f.den2() > 0) out *= det2_image_inverse().pow(f.den2());
    return out;
}

}  // namespace glmn
