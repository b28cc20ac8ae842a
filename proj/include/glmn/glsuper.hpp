#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "glmn/superelem.hpp"

namespace glmn {

/// The generic matrix X of a ring (m|n): block determinants, cofactors of
/// the X11 block, the classical minor identities, and the images y_ij of the
/// generators under the factorization map.
///
/// Determinants and cofactors are computed once per instance; the y_ij and
/// the inverse of det(Y22) are built on first use. Instances are safe to
/// share across threads.
class GenericMatrix {
public:
    explicit GenericMatrix(RingSpec ring);

    const RingSpec& ring() const { return ring_; }

    /// D1 or D2.
    const SuperElem& det(Block diag) const;

    /// Cofactor A_uv of the X11 block: (-1)^(u+v) times the determinant of
    /// X11 with row u and column v deleted. Satisfies
    /// sum_v x_uv A_wv = delta_uw D1.
    const SuperElem& cofactor(int u, int v) const;

    /// Determinant of X11 with rows {u,k} and columns {v,j} deleted, indices
    /// as unordered pairs, remaining rows and columns in natural order. The
    /// empty determinant (m = 2) is 1.
    SuperElem complementary_minor(int u, int k, int v, int j) const;

    /// Verifies the Jacobi minor identity for the cofactor matrix:
    ///   A_uv A_kj - A_uj A_kv = s(u,k) s(v,j) (-1)^(u+j+k+v) D1 A({u,k}|{v,j})
    /// where s(a,b) = +1 if a < b and -1 otherwise. Requires u != k, v != j.
    bool jacobi_check(int u, int j, int k, int v) const;

    /// Verifies the Laplace expansion of the cofactor A_uj along column k,
    /// for k != j:
    ///   A_uj = sum_{v != u} (-1)^(u+j+v+k) s(u,v) s(j,k) A({u,v}|{j,k}) x_vk.
    bool laplace_check(int u, int j, int k) const;

    /// y_ij, the image of x_ij under the factorization
    /// X21 -> X21 X11^-1, X11 -> X11, X22 -> X22 - X21 X11^-1 X12,
    /// X12 -> X11^-1 X12.
    const SuperElem& y(int i, int j) const;

    /// det(Y22) = image of D2, and its inverse in the localized ring.
    const SuperElem& det2_image() const;
    const SuperElem& det2_image_inverse() const;

    /// Algebra-map extension of y to the even subring generated by the X11
    /// and X22 variables and D1^-1, D2^-1. Throws if f contains an odd
    /// variable.
    SuperElem phistar(const SuperElem& f) const;

private:
    void ensure_phi() const;

    RingSpec ring_;
    SuperElem d1_, d2_;
    std::vector<std::vector<SuperElem>> cof_;  // [u-1][v-1], u,v <= m

    mutable std::once_flag phi_once_;
    mutable std::vector<std::vector<SuperElem>> y_;  // [i-1][j-1], full matrix
    mutable std::unique_ptr<SuperElem> det2_img_, det2_inv_;
};

}  // namespace glmn
