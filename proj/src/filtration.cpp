#include "glmn/filtration.hpp"

#include <algorithm>

namespace glmn {

// ---------------------------------------------------------------------------
// even bases

std::string EvBasisVector::str() const {
    return plus.str() + " " + minus.str() + " [" + mu.body() + "]";
}

std::vector<EvBasisVector> m_leq_basis(const GenericMatrix& gm, const SuperWeight& lambda,
                                       OrderTag) {
    const RingSpec& ring = gm.ring();
    if (lambda.plus.m() != ring.m || lambda.minus.m() != ring.n)
        throw DimensionError("weight does not match the ring dimensions");
    std::vector<EvBasisVector> out;
    for (const SuperWeight& mu : dk_prefix_upto(lambda)) {
        auto [gp, ep] = weight_tilde(mu.plus);
        auto [gq, eq] = weight_tilde(mu.minus);
        auto pairs_p = semistandard_pairs(gp, ring.m);
        auto pairs_q = semistandard_pairs(gq, ring.n);
        for (auto& [pi, pj] : pairs_p)
            for (auto& [qi, qj] : pairs_q) {
                EvBasisVector v{mu,
                                GenBidet{Bidet{gp, pi, pj, Block::I11}, ep},
                                GenBidet{Bidet{gq, qi, qj, Block::I22}, eq},
                                SuperElem::zero(ring)};
                v.expansion = genbidet_expand(ring, v.plus) * genbidet_expand(ring, v.minus);
                out.push_back(std::move(v));
            }
    }
    return out;
}

LevelBasis m_lambda_l(const GenericMatrix& gm, const SuperWeight& lambda, int l) {
    if (l < 0) throw Error("m_lambda_l needs l >= 0");
    SuperWeight shifted = alpha_shift(lambda, l);
    if (!is_dominant(shifted)) return LevelBasis{false, {}};
    return LevelBasis{true, m_leq_basis(gm, shifted)};
}

// ---------------------------------------------------------------------------
// C bases

std::string CBasisVector::str() const {
    std::string s;
    for (auto& [i, j] : mask12) s += "y" + std::to_string(i) + std::to_string(j) + " ";
    s += "phi[" + ev.plus.str() + " " + ev.minus.str() + "]";
    for (auto& [i, j] : mask21) s += " y" + std::to_string(i) + std::to_string(j);
    s += " @l" + std::to_string(level);
    return s;
}

namespace {

// all subsets of the odd positions of one block, row-major within the block
std::vector<std::vector<std::pair<int, int>>> odd_masks(const RingSpec& ring, Block b) {
    std::vector<std::pair<int, int>> positions;
    if (b == Block::I12) {
        for (int i = 1; i <= ring.m; ++i)
            for (int j = ring.m + 1; j <= ring.dim(); ++j) positions.emplace_back(i, j);
    } else {
        for (int i = ring.m + 1; i <= ring.dim(); ++i)
            for (int j = 1; j <= ring.m; ++j) positions.emplace_back(i, j);
    }
    std::vector<std::vector<std::pair<int, int>>> out;
    const std::size_t total = std::size_t(1) << positions.size();
    for (std::size_t bits = 0; bits < total; ++bits) {
        std::vector<std::pair<int, int>> mask;
        for (std::size_t t = 0; t < positions.size(); ++t)
            if (bits & (std::size_t(1) << t)) mask.push_back(positions[t]);
        out.push_back(std::move(mask));
    }
    return out;
}

SuperElem mask_product(const GenericMatrix& gm, const std::vector<std::pair<int, int>>& mask) {
    SuperElem e = SuperElem::constant(gm.ring(), 1);
    for (auto& [i, j] : mask) e *= gm.y(i, j);
    return e;
}

std::vector<CBasisVector> masked_family(const GenericMatrix& gm,
                                        const std::vector<EvBasisVector>& evs, int level) {
    auto masks12 = odd_masks(gm.ring(), Block::I12);
    auto masks21 = odd_masks(gm.ring(), Block::I21);
    std::vector<CBasisVector> out;
    out.reserve(masks12.size() * masks21.size() * evs.size());
    for (auto& m12 : masks12) {
        SuperElem left = mask_product(gm, m12);
        for (const EvBasisVector& ev : evs) {
            SuperElem mid = left * gm.phistar(ev.expansion);
            for (auto& m21 : masks21) {
                CBasisVector v{m12, m21, ev, level, mid * mask_product(gm, m21)};
                out.push_back(std::move(v));
            }
        }
    }
    return out;
}

}  // namespace

std::vector<CBasisVector> c_level_vectors(const GenericMatrix& gm, const SuperWeight& lambda,
                                          int level) {
    LevelBasis lb = m_lambda_l(gm, lambda, level);
    if (!lb.dominant) return {};
    return masked_family(gm, lb.vectors, level);
}

std::vector<CBasisVector> c_quotient_basis(const GenericMatrix& gm, const SuperWeight& lambda) {
    const RingSpec& ring = gm.ring();
    auto [gp, ep] = weight_tilde(lambda.plus);
    auto [gq, eq] = weight_tilde(lambda.minus);
    std::vector<EvBasisVector> layer;
    for (auto& [pi, pj] : semistandard_pairs(gp, ring.m))
        for (auto& [qi, qj] : semistandard_pairs(gq, ring.n)) {
            EvBasisVector v{lambda,
                            GenBidet{Bidet{gp, pi, pj, Block::I11}, ep},
                            GenBidet{Bidet{gq, qi, qj, Block::I22}, eq},
                            SuperElem::zero(ring)};
            v.expansion = genbidet_expand(ring, v.plus) * genbidet_expand(ring, v.minus);
            layer.push_back(std::move(v));
        }
    return masked_family(gm, layer, 0);
}

std::vector<CBasisVector> c_leq_basis_truncated(const GenericMatrix& gm,
                                                const SuperWeight& lambda, int lmax) {
    if (lmax < 0) throw Error("c_leq_basis_truncated needs lmax >= 0");
    SpanMatrix span(gm.ring());
    std::vector<CBasisVector> out;
    for (int l = 0; l <= lmax; ++l)
        for (CBasisVector& v : c_level_vectors(gm, lambda, l))
            if (span.add(v.expansion)) out.push_back(std::move(v));
    return out;
}

// ---------------------------------------------------------------------------
// closure and quotient verification

bool ClosureReport::all_pass() const { return fail_count() == 0; }

std::size_t ClosureReport::fail_count() const {
    std::size_t k = 0;
    for (auto& c : checks)
        if (!c.pass || !c.even_same_level) ++k;
    return k;
}

std::string ClosureReport::text() const {
    std::string s = "closure " + lambda.str() + " lmax=" + std::to_string(lmax) + ": " +
                    std::to_string(checks.size() - fail_count()) + "/" +
                    std::to_string(checks.size()) + " derivation images in span\n";
    for (auto& c : checks)
        if (!c.pass || !c.even_same_level) {
            s += "  FAIL " + c.derivation + " on " + c.vector;
            if (!c.pass) s += " escapes the truncation";
            if (!c.even_same_level) s += " leaves its level under an even derivation";
            if (!c.residual.empty()) s += "\n    image " + c.residual;
            s += "\n";
        }
    return s;
}

ClosureReport verify_closure(const GenericMatrix& gm, const SuperWeight& lambda, int lmax) {
    if (lmax < 1) throw Error("verify_closure needs lmax >= 1");
    const RingSpec& ring = gm.ring();
    ClosureReport rep;
    rep.lambda = lambda;
    rep.lmax = lmax;

    std::vector<CBasisVector> source = c_leq_basis_truncated(gm, lambda, lmax - 1);
    rep.source_count = source.size();
    SpanMatrix lo(ring), hi(ring);
    for (int l = 0; l <= lmax; ++l)
        for (const CBasisVector& v : c_level_vectors(gm, lambda, l)) {
            if (l <= lmax - 1) lo.add(v.expansion);
            hi.add(v.expansion);
        }

    const int d = ring.dim();
    for (const CBasisVector& v : source) {
        for (Side side : {Side::Right, Side::Left})
            for (int k = 1; k <= d; ++k)
                for (int l = 1; l <= d; ++l) {
                    Derivation der{side, k, l};
                    SuperElem img = derive(der, v.expansion);
                    MembershipCheck mc;
                    mc.vector = v.str();
                    mc.derivation = der.str();
                    mc.pass = hi.contains(img);
                    if (!der.odd(ring)) mc.even_same_level = lo.contains(img);
                    if (!mc.pass || !mc.even_same_level) mc.residual = img.str();
                    rep.checks.push_back(std::move(mc));
                }
    }
    return rep;
}

std::string QuotientReport::text() const {
    std::string s = "quotient " + lambda.str() + ": dimension " + std::to_string(count) +
                    ", expected " + std::to_string(expected) + ", independent mod lower: " +
                    (independent_mod_lower ? "yes" : "no");
    return s;
}

QuotientReport verify_quotient_iso_dims(const GenericMatrix& gm, const SuperWeight& lambda,
                                        int lower_lmax) {
    const RingSpec& ring = gm.ring();
    QuotientReport rep;
    rep.lambda = lambda;

    auto quotient = c_quotient_basis(gm, lambda);
    rep.count = quotient.size();
    auto [gp, ep] = weight_tilde(lambda.plus);
    auto [gq, eq] = weight_tilde(lambda.minus);
    long kplus = static_cast<long>(enumerate_semistandard(gp, ring.m).size());
    long kminus = static_cast<long>(enumerate_semistandard(gq, ring.n).size());
    rep.expected = (1L << (2 * ring.m * ring.n)) * kplus * kplus * kminus * kminus;

    // span of the truncated C_{<lambda}: the order predecessor's full
    // truncation plus the levels l >= 1 of lambda itself
    SpanMatrix lower(ring);
    if (auto prev = dk_predecessor_in_order(lambda))
        for (const CBasisVector& v : c_leq_basis_truncated(gm, *prev, lower_lmax))
            lower.add(v.expansion);
    for (int l = 1; l <= lower_lmax; ++l)
        for (const CBasisVector& v : c_level_vectors(gm, lambda, l)) lower.add(v.expansion);

    rep.independent_mod_lower = true;
    for (const CBasisVector& v : quotient)
        if (!lower.add(v.expansion)) {
            rep.independent_mod_lower = false;
            break;
        }
    return rep;
}

LevelEscape find_level_escape(const GenericMatrix& gm, const SuperWeight& lambda, int level) {
    const RingSpec& ring = gm.ring();
    auto family = c_level_vectors(gm, lambda, level);
    SpanMatrix span(ring);
    for (const CBasisVector& v : family) span.add(v.expansion);
    const int d = ring.dim();
    for (const CBasisVector& v : family)
        for (Side side : {Side::Right, Side::Left})
            for (int k = 1; k <= d; ++k)
                for (int l = 1; l <= d; ++l) {
                    Derivation der{side, k, l};
                    if (!der.odd(ring)) continue;
                    SuperElem img = derive(der, v.expansion);
                    if (!span.contains(img)) return LevelEscape{true, v.str(), der.str()};
                }
    return LevelEscape{};
}

// ---------------------------------------------------------------------------
// GL(1|1)

SuperElem gl11_monomial(const GenericMatrix& gm, Gl11Kind kind, int i, int j) {
    const RingSpec& ring = gm.ring();
    if (ring.m != 1 || ring.n != 1) throw DimensionError("gl11_monomial needs the (1|1) ring");
    SuperElem e = SuperElem::constant(ring, 1).times_det_power(Block::I11, i);  // y11^i = x11^i
    const SuperElem& y22 = gm.y(2, 2);
    if (j >= 0)
        e *= y22.pow(j);
    else
        e *= gm.det2_image_inverse().pow(-j);
    if (kind == Gl11Kind::B || kind == Gl11Kind::D) e *= gm.y(1, 2);
    if (kind == Gl11Kind::C || kind == Gl11Kind::D) e *= gm.y(2, 1);
    return e;
}

TableReport verify_gl11_generator_actions(unsigned characteristic) {
    GenericMatrix gm(RingSpec(1, 1, characteristic));
    const RingSpec& ring = gm.ring();
    TableReport rep;
    rep.title = "gl11 derivation identities" + std::string(characteristic ? " mod " : "") +
                (characteristic ? std::to_string(characteristic) : "");

    SuperElem one = SuperElem::constant(ring, 1);
    SuperElem zero = SuperElem::zero(ring);
    SuperElem inv11 = one.times_det_power(Block::I11, -1);
    struct Case {
        const char* name;
        Derivation d;
        int yi, yj;
        SuperElem expected;
    };
    const SuperElem y11 = gm.y(1, 1), y12 = gm.y(1, 2), y21 = gm.y(2, 1), y22 = gm.y(2, 2);
    std::vector<Case> cases = {
        {"(y11)_12D", {Side::Right, 1, 2}, 1, 1, y11 * y12},
        {"(y11)_21D", {Side::Right, 2, 1}, 1, 1, zero},
        {"D_21(y11)", {Side::Left, 2, 1}, 1, 1, y21 * y11},
        {"D_12(y11)", {Side::Left, 1, 2}, 1, 1, zero},
        {"(y12)_12D", {Side::Right, 1, 2}, 1, 2, zero},
        {"(y12)_21D", {Side::Right, 2, 1}, 1, 2, one},
        {"D_21(y12)", {Side::Left, 2, 1}, 1, 2, inv11 * y22},
        {"D_12(y12)", {Side::Left, 1, 2}, 1, 2, zero},
        {"(y21)_12D", {Side::Right, 1, 2}, 2, 1, inv11 * y22},
        {"(y21)_21D", {Side::Right, 2, 1}, 2, 1, zero},
        {"D_21(y21)", {Side::Left, 2, 1}, 2, 1, zero},
        {"D_12(y21)", {Side::Left, 1, 2}, 2, 1, one},
        {"(y22)_12D", {Side::Right, 1, 2}, 2, 2, y22 * y12},
        {"(y22)_21D", {Side::Right, 2, 1}, 2, 2, zero},
        {"D_21(y22)", {Side::Left, 2, 1}, 2, 2, y21 * y22},
        {"D_12(y22)", {Side::Left, 1, 2}, 2, 2, zero},
    };
    for (auto& c : cases) {
        SuperElem got = derive(c.d, gm.y(c.yi, c.yj));
        CellCheck cc;
        cc.cell = c.name;
        cc.pass = got == c.expected;
        if (!cc.pass) {
            cc.expected_str = c.expected.str();
            cc.computed_str = got.str();
        }
        rep.cells.push_back(std::move(cc));
    }
    return rep;
}

TableReport verify_gl11_monomial_actions(
    const std::vector<std::pair<std::pair<int, int>, unsigned>>& samples) {
    TableReport rep;
    rep.title = "gl11 monomial family identities";
    for (auto& [mu, p] : samples) {
        auto [i, j] = mu;
        GenericMatrix gm(RingSpec(1, 1, p));
        Scalar r = Scalar::of(i + j, p);
        SuperElem A = gl11_monomial(gm, Gl11Kind::A, i, j);
        SuperElem B = gl11_monomial(gm, Gl11Kind::B, i, j);
        SuperElem C = gl11_monomial(gm, Gl11Kind::C, i, j);
        SuperElem D = gl11_monomial(gm, Gl11Kind::D, i, j);
        SuperElem Am = gl11_monomial(gm, Gl11Kind::A, i - 1, j + 1);
        SuperElem Bm = gl11_monomial(gm, Gl11Kind::B, i - 1, j + 1);
        SuperElem Cm = gl11_monomial(gm, Gl11Kind::C, i - 1, j + 1);
        SuperElem zero = SuperElem::zero(gm.ring());
        Derivation r12{Side::Right, 1, 2}, r21{Side::Right, 2, 1};
        Derivation l21{Side::Left, 2, 1}, l12{Side::Left, 1, 2};

        struct Case {
            const char* name;
            Derivation d;
            const SuperElem* arg;
            SuperElem expected;
        };
        std::vector<Case> cases = {
            {"(A)_12D", r12, &A, r * B},        {"(A)_21D", r21, &A, zero},
            {"D_21(A)", l21, &A, r * C},        {"D_12(A)", l12, &A, zero},
            {"(B)_12D", r12, &B, zero},         {"(B)_21D", r21, &B, A},
            {"D_21(B)", l21, &B, Am - r * D},   {"D_12(B)", l12, &B, zero},
            {"(C)_12D", r12, &C, Am - r * D},   {"(C)_21D", r21, &C, zero},
            {"D_21(C)", l21, &C, zero},         {"D_12(C)", l12, &C, A},
            {"(D)_12D", r12, &D, Bm},           {"(D)_21D", r21, &D, -C},
            {"D_21(D)", l21, &D, Cm},           {"D_12(D)", l12, &D, -B},
        };
        std::string tag = " at (" + std::to_string(i) + "|" + std::to_string(j) + ")" +
                          (p ? " mod " + std::to_string(p) : "");
        for (auto& c : cases) {
            SuperElem got = derive(c.d, *c.arg);
            CellCheck cc;
            cc.cell = c.name + tag;
            cc.pass = got == c.expected;
            if (!cc.pass) {
                cc.expected_str = c.expected.str();
                cc.computed_str = got.str();
            }
            rep.cells.push_back(std::move(cc));
        }
    }
    return rep;
}

}  // namespace glmn
