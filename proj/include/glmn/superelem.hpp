#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "glmn/ring.hpp"
#include "glmn/scalar.hpp"

namespace glmn {

/// A monomial of the supercommutative ring: even variables with exponents,
/// plus a square-free product of odd variables.
///
/// The even part is kept sorted by variable code; the odd part is kept
/// strictly increasing in the canonical odd order (which equals code order).
/// A construction from unsorted odd input must account for the sign of the
/// sorting permutation; see mono_mul.
struct SuperMonomial {
    std::vector<std::pair<VarCode, int>> even;  // exponents > 0
    std::vector<VarCode> odd;                   // strictly increasing

    bool is_one() const { return even.empty() && odd.empty(); }
    int parity() const { return static_cast<int>(odd.size()) & 1; }

    int degree() const {
        int d = static_cast<int>(odd.size());
        for (auto& [c, e] : even) d += e;
        return d;
    }

    int even_exponent(VarCode c) const;

    bool operator==(const SuperMonomial&) const = default;

    /// Canonical total order: odd parts lexicographically, then the even
    /// parts in lex order (larger exponent on an earlier variable wins).
    /// Restricted to even monomials this order is multiplicative, which is
    /// what exact polynomial division relies on.
    bool operator<(const SuperMonomial& o) const;

    std::string str() const;
};

/// Signed product of two monomials. Returns nothing when the odd parts
/// intersect (an odd square vanishes); otherwise the sign of interleaving
/// the two odd lists and the merged monomial.
std::optional<std::pair<int, SuperMonomial>> mono_mul(const SuperMonomial& u,
                                                      const SuperMonomial& v);

/// Divide u by v variable-wise, ignoring signs. Nothing if v does not divide u.
std::optional<SuperMonomial> mono_divide(const SuperMonomial& u, const SuperMonomial& v);

/// Element of K[x_ij]_{D1 D2}: a sparse numerator polynomial over a common
/// denominator D1^a D2^b with a, b >= 0.
///
/// Canonical form invariants:
///  - no zero coefficients are stored;
///  - whenever a > 0 and the numerator is exactly divisible by the
///    determinant polynomial D1 the reduction is applied, and likewise for
///    D2, so equal elements are structurally equal.
class SuperElem {
public:
    explicit SuperElem(RingSpec ring) : ring_(ring) {}

    static SuperElem zero(RingSpec ring) { return SuperElem(ring); }
    static SuperElem constant(RingSpec ring, const Scalar& c);
    static SuperElem constant(RingSpec ring, long c);
    static SuperElem variable(RingSpec ring, int i, int j);
    static SuperElem monomial(RingSpec ring, const SuperMonomial& mono, const Scalar& c);

    const RingSpec& ring() const { return ring_; }
    unsigned characteristic() const { return ring_.characteristic; }
    int den1() const { return den1_; }
    int den2() const { return den2_; }
    const std::map<SuperMonomial, Scalar>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// 0 or 1 when parity-homogeneous, nothing for mixed elements.
    std::optional<int> parity() const;

    SuperElem operator-() const;
    SuperElem operator+(const SuperElem& g) const;
    SuperElem operator-(const SuperElem& g) const;
    SuperElem operator*(const SuperElem& g) const;
    SuperElem operator*(const Scalar& c) const;
    SuperElem& operator+=(const SuperElem& g) { return *this = *this + g; }
    SuperElem& operator-=(const SuperElem& g) { return *this = *this - g; }
    SuperElem& operator*=(const SuperElem& g) { return *this = *this * g; }

    SuperElem pow(int e) const;  // e >= 0

    /// Multiply by D1^k or D2^k for any integer k. Negative powers raise the
    /// denominator exponent, positive powers cancel against it first.
    SuperElem times_det_power(Block diag, int k) const;

    /// Numerator polynomial multiplied by D1^da * D2^db, db, da >= 0, with
    /// the denominator exponents left untouched. This is the rescaling step
    /// that brings an element to a larger common denominator.
    std::map<SuperMonomial, Scalar> numerator_rescaled(int da, int db) const;

    bool operator==(const SuperElem& o) const;
    bool operator!=(const SuperElem& o) const { return !(*this == o); }

    std::string str() const;

    /// Assemble from raw parts and bring to canonical form.
    static SuperElem make(RingSpec ring, std::map<SuperMonomial, Scalar> terms, int a, int b);

private:
    friend std::optional<SuperElem> exact_divide(const SuperElem&, const SuperElem&);

    void add_term(const SuperMonomial& mono, const Scalar& c);
    void normalize();

    RingSpec ring_;
    std::map<SuperMonomial, Scalar> terms_;
    int den1_ = 0;
    int den2_ = 0;
};

inline SuperElem operator*(const Scalar& c, const SuperElem& f) { return f * c; }

/// Exact quotient f / d for a nonzero purely even polynomial d (no
/// denominators). Nothing when d does not divide f.
std::optional<SuperElem> exact_divide(const SuperElem& f, const SuperElem& d);

/// Inverse of a unit of the localized ring. Units have the shape
/// c * D1^s * D2^t * (1 + nu) with nu nilpotent (every monomial of nu
/// contains an odd variable); the inverse is computed with the finite
/// geometric series of nu. Throws NotAUnitError otherwise.
SuperElem invert_even_unit(const SuperElem& f);

/// Determinant polynomial of the chosen diagonal block (D1 or D2).
SuperElem det_block(RingSpec ring, Block diag);

}  // namespace glmn
