#pragma once

#include <optional>
#include <string>
#include <vector>

#include "glmn/derivation.hpp"
#include "glmn/glsuper.hpp"
#include "glmn/span.hpp"
#include "glmn/tableau.hpp"
#include "glmn/weights.hpp"

namespace glmn {

/// Order used to truncate weight prefixes. Only the interleaved per-bidegree
/// order has finite prefixes, so it is the one on offer.
enum class OrderTag { Interleaved };

/// Basis vector of M_{<=lambda}: a product of two generalized bideterminants,
/// one per diagonal block, with its expansion in the x variables.
struct EvBasisVector {
    SuperWeight mu;  // weight layer contributing this vector
    GenBidet plus, minus;
    SuperElem expansion;

    std::string str() const;
};

/// Basis of M_{<=lambda}: for every mu up to lambda in the bidegree order,
/// all products Det1^(mu+_m) T(i+:j+) * Det2^(mu-_n) T(i-:j-) over
/// semistandard filling pairs of the shapes of mu.
std::vector<EvBasisVector> m_leq_basis(const GenericMatrix& gm, const SuperWeight& lambda,
                                       OrderTag order = OrderTag::Interleaved);

struct LevelBasis {
    bool dominant = true;  // false when lambda - l*alpha is not dominant
    std::vector<EvBasisVector> vectors;
};

/// M_{lambda,l} = M_{<= lambda - l*alpha}.
LevelBasis m_lambda_l(const GenericMatrix& gm, const SuperWeight& lambda, int l);

/// Basis vector of the truncated C module: odd masks around the image of an
/// even vector under the factorization map.
struct CBasisVector {
    std::vector<std::pair<int, int>> mask12;  // I12 positions with exponent 1, row-major
    std::vector<std::pair<int, int>> mask21;
    EvBasisVector ev;
    int level = 0;
    SuperElem expansion;

    std::string str() const;
};

/// All mask12 x phistar(M_{lambda,l}) x mask21 products at one level,
/// unpruned.
std::vector<CBasisVector> c_level_vectors(const GenericMatrix& gm, const SuperWeight& lambda,
                                          int level);

/// Quotient basis of C_{<=lambda}/C_{<lambda}: masks around the lambda layer
/// with all four tableaux semistandard. Count is 2^(2mn) K+ K-.
std::vector<CBasisVector> c_quotient_basis(const GenericMatrix& gm, const SuperWeight& lambda);

/// Union of the levels 0..lmax, pruned to a linearly independent family in
/// insertion order.
std::vector<CBasisVector> c_leq_basis_truncated(const GenericMatrix& gm,
                                                const SuperWeight& lambda, int lmax);

struct MembershipCheck {
    std::string vector;
    std::string derivation;
    bool pass = false;             // image lies in the span of levels <= lmax
    bool even_same_level = true;   // for even positions: image stays in levels <= lmax-1
    std::string residual;          // rendered image on failure
};

struct ClosureReport {
    SuperWeight lambda{};
    int lmax = 0;
    std::size_t source_count = 0;
    std::vector<MembershipCheck> checks;

    bool all_pass() const;
    std::size_t fail_count() const;
    std::string text() const;
};

/// For every vector of the lmax-1 truncation and every superderivation,
/// checks that the image lies in the span of the lmax truncation; for even
/// derivation positions the image must stay at the same truncation.
ClosureReport verify_closure(const GenericMatrix& gm, const SuperWeight& lambda, int lmax);

struct QuotientReport {
    SuperWeight lambda{};
    std::size_t count = 0;
    long expected = 0;  // 2^(2mn) K+ K-
    bool independent_mod_lower = false;

    bool pass() const { return static_cast<long>(count) == expected && independent_mod_lower; }
    std::string text() const;
};

/// Checks the quotient dimension formula and that the quotient vectors stay
/// independent modulo the truncated span of C_{<lambda}.
QuotientReport verify_quotient_iso_dims(const GenericMatrix& gm, const SuperWeight& lambda,
                                        int lower_lmax = 2);

/// Witness that a single level is not closed under the odd superderivations:
/// some level-l vector has an odd-derivation image outside the level-l span.
struct LevelEscape {
    bool found = false;
    std::string vector, derivation;
};
LevelEscape find_level_escape(const GenericMatrix& gm, const SuperWeight& lambda, int level = 0);

// ---------------------------------------------------------------------------
// the GL(1|1) suite

enum class Gl11Kind { A, B, C, D };

/// A = y11^i y22^j, B = A y12, C = A y21, D = A y12 y21 at (m|n) = (1|1),
/// expanded over the x variables. Negative exponents go through the
/// localized inverses.
SuperElem gl11_monomial(const GenericMatrix& gm, Gl11Kind kind, int i, int j);

/// The sixteen symbolic derivation identities for the y_ij at (1|1).
TableReport verify_gl11_generator_actions(unsigned characteristic = 0);

/// The sixteen identities for A, B, C, D at the sampled weights and
/// characteristics; r = i + j enters as a scalar of the coefficient field.
TableReport verify_gl11_monomial_actions(
    const std::vector<std::pair<std::pair<int, int>, unsigned>>& samples);

}  // namespace glmn
