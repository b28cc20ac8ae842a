#include "glmn/derivation.hpp"

#include <algorithm>
#include <map>

namespace glmn {

namespace {

// image variable of x_uv under d, or 0 when the position does not match
std::optional<VarCode> gen_image(const Derivation& d, VarCode x) {
    int u = var_row(x), v = var_col(x);
    if (d.side == Side::Right) {
        if (v != d.k) return std::nullopt;
        return var_code(u, d.l);
    }
    if (u != d.l) return std::nullopt;
    return var_code(d.k, v);
}

// Derivative of a single monomial (no denominators), accumulated into out.
void derive_monomial(const RingSpec& ring, const Derivation& d, const SuperMonomial& mono,
                     const Scalar& coeff, std::map<SuperMonomial, Scalar>& out) {
    const bool d_odd = d.odd(ring);
    const int odd_count = static_cast<int>(mono.odd.size());
    auto emit = [&](const SuperMonomial& m, Scalar c) {
        if (c.is_zero()) return;
        auto [it, fresh] = out.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) out.erase(it);
        }
    };

    // Even slots. The monomial is ordered with all even factors before the
    // odd ones, so a right derivation crosses every odd factor, a left one
    // crosses none.
    for (std::size_t t = 0; t < mono.even.size(); ++t) {
        auto [code, exp] = mono.even[t];
        auto w = gen_image(d, code);
        if (!w) continue;
        Scalar c = coeff * Scalar::of(exp, ring.characteristic);
        if (d_odd && d.side == Side::Right && (odd_count & 1)) c = -c;
        SuperMonomial m;
        m.even = mono.even;
        if (--m.even[t].second == 0) m.even.erase(m.even.begin() + t);
        int wi = var_row(*w), wj = var_col(*w);
        if (!ring.odd(wi, wj)) {
            bool placed = false;
            for (auto& [vc, ve] : m.even)
                if (vc == *w) {
                    ++ve;
                    placed = true;
                    break;
                }
            if (!placed) {
                m.even.emplace_back(*w, 1);
                std::sort(m.even.begin(), m.even.end());
            }
            m.odd = mono.odd;
        } else {
            // insert the new odd factor: it starts in front of the odd block
            // and moves right past every smaller odd factor
            if (std::binary_search(mono.odd.begin(), mono.odd.end(), *w)) continue;
            m.odd = mono.odd;
            auto pos = std::lower_bound(m.odd.begin(), m.odd.end(), *w);
            if ((pos - m.odd.begin()) & 1) c = -c;
            m.odd.insert(pos, *w);
        }
        emit(m, c);
    }

    // Odd slots.
    for (int t = 0; t < odd_count; ++t) {
        VarCode o = mono.odd[t];
        auto w = gen_image(d, o);
        if (!w) continue;
        Scalar c = coeff;
        if (d_odd) {
            int crossed = d.side == Side::Right ? odd_count - 1 - t : t;
            if (crossed & 1) c = -c;
        }
        SuperMonomial m;
        m.even = mono.even;
        m.odd = mono.odd;
        m.odd.erase(m.odd.begin() + t);
        int wi = var_row(*w), wj = var_col(*w);
        if (!ring.odd(wi, wj)) {
            bool placed = false;
            for (auto& [vc, ve] : m.even)
                if (vc == *w) {
                    ++ve;
                    placed = true;
                    break;
                }
            if (!placed) {
                m.even.emplace_back(*w, 1);
                std::sort(m.even.begin(), m.even.end());
            }
        } else {
            if (std::binary_search(m.odd.begin(), m.odd.end(), *w)) continue;
            auto pos = std::lower_bound(m.odd.begin(), m.odd.end(), *w);
            // the image sits at slot t of the reduced list; moving it to its
            // sorted position crosses |t - p| odd factors
            int p = static_cast<int>(pos - m.odd.begin());
            if ((t + p) & 1) c = -c;
            m.odd.insert(pos, *w);
        }
        emit(m, c);
    }
}

SuperElem derive_poly(const RingSpec& ring, const Derivation& d,
                      const std::map<SuperMonomial, Scalar>& terms) {
    std::map<SuperMonomial, Scalar> out;
    for (auto& [mono, c] : terms) derive_monomial(ring, d, mono, c, out);
    return SuperElem::make(ring, std::move(out), 0, 0);
}

// numerator with each term sign-twisted by (-1)^{parity * d_parity}; this is
// the factor a left derivation picks up crossing the numerator
SuperElem parity_twist(const SuperElem& f, bool d_odd) {
    if (!d_odd) return f;
    std::map<SuperMonomial, Scalar> out;
    for (auto& [mono, c] : f.terms()) out.emplace(mono, mono.parity() ? -c : c);
    return SuperElem::make(f.ring(), std::move(out), f.den1(), f.den2());
}

}  // namespace

SuperElem derive_gen(RingSpec ring, const Derivation& d, int u, int v) {
    ring.check_index(u, v);
    ring.check_index(d.k, d.l);
    auto w = gen_image(d, var_code(u, v));
    if (!w) return SuperElem::zero(ring);
    return SuperElem::variable(ring, var_row(*w), var_col(*w));
}

SuperElem derive(const Derivation& d, const SuperElem& f) {
    const RingSpec& ring = f.ring();
    ring.check_index(d.k, d.l);
    if (f.is_zero()) return f;

    SuperElem num = SuperElem::make(ring, f.terms(), 0, 0);
    SuperElem dnum = derive_poly(ring, d, num.terms());
    const int a = f.den1(), b = f.den2();
    if (a == 0 && b == 0) return dnum;

    // quotient rule: d(N / (D1^a D2^b)) =
    //   [d(N) D1 D2 - a N' d(D1) D2 - b N' d(D2) D1] / (D1^(a+1) D2^(b+1))
    // where N' = N for right derivations and the parity twist of N for left
    // ones (the derivation crosses the numerator to reach the denominator).
    SuperElem d1 = det_block(ring, Block::I11);
    SuperElem d2 = det_block(ring, Block::I22);
    SuperElem result = dnum * d1 * d2;
    SuperElem twisted = d.side == Side::Left ? parity_twist(num, d.odd(ring)) : num;
    if (a != 0) {
        SuperElem dd1 = derive_poly(ring, d, d1.terms());
        result -= Scalar::of(a, ring.characteristic) * (twisted * dd1 * d2);
    }
    if (b != 0) {
        SuperElem dd2 = derive_poly(ring, d, d2.terms());
        result -= Scalar::of(b, ring.characteristic) * (twisted * dd2 * d1);
    }
    return result.times_det_power(Block::I11, -(a + 1)).times_det_power(Block::I22, -(b + 1));
}

// ---------------------------------------------------------------------------
// table verification

namespace {

Scalar delta(const RingSpec& ring, int a, int b) {
    return Scalar::of(a == b ? 1 : 0, ring.characteristic);
}

// expected value of (y_ij) _{kl}D
SuperElem right_table_entry(const GenericMatrix& gm, int i, int j, int k, int l) {
    const RingSpec& ring = gm.ring();
    Block bij = ring.block(i, j), bkl = ring.block(k, l);
    SuperElem zero = SuperElem::zero(ring);
    switch (bij) {
        case Block::I11:
            if (bkl == Block::I11) return delta(ring, j, k) * gm.y(i, l);
            if (bkl == Block::I12) {
                if (j != k) return zero;
                SuperElem s = zero;
                for (int u = 1; u <= ring.m; ++u) s += gm.y(i, u) * gm.y(u, l);
                return s;
            }
            return zero;
        case Block::I12:
            if (bkl == Block::I11) {
                if (i != l || k == i) return zero;
                return -gm.y(k, j);
            }
            if (bkl == Block::I12) return gm.y(i, l) * gm.y(k, j);
            if (bkl == Block::I21)
                return SuperElem::constant(ring, (j == k && i == l) ? 1 : 0);
            return delta(ring, j, k) * gm.y(i, l);
        case Block::I21:
            // the adjugate entry at (k,j), i.e. the cofactor at (j,k)
            if (bkl == Block::I12)
                return (gm.y(i, l) * gm.cofactor(j, k)).times_det_power(Block::I11, -1);
            return zero;
        case Block::I22:
            if (bkl == Block::I12) return gm.y(i, l) * gm.y(k, j);
            if (bkl == Block::I22) return delta(ring, j, k) * gm.y(i, l);
            return zero;
    }
    return zero;
}

// expected value of D_{kl}(y_ij)
SuperElem left_table_entry(const GenericMatrix& gm, int i, int j, int k, int l) {
    const RingSpec& ring = gm.ring();
    Block bij = ring.block(i, j), bkl = ring.block(k, l);
    SuperElem zero = SuperElem::zero(ring);
    switch (bij) {
        case Block::I11:
            if (bkl == Block::I11) return delta(ring, i, l) * gm.y(k, j);
            if (bkl == Block::I21) {
                if (i != l) return zero;
                SuperElem s = zero;
                for (int u = 1; u <= ring.m; ++u) s += gm.y(k, u) * gm.y(u, j);
                return s;
            }
            return zero;
        case Block::I21:
            if (bkl == Block::I11) {
                if (j != k || l == j) return zero;
                return -gm.y(i, l);
            }
            // both factors odd: the mirror of the right table reverses the order
            if (bkl == Block::I21) return gm.y(i, l) * gm.y(k, j);
            if (bkl == Block::I12)
                return SuperElem::constant(ring, (i == l && j == k) ? 1 : 0);
            return delta(ring, i, l) * gm.y(k, j);
        case Block::I12:
            // the adjugate entry at (i,l), i.e. the cofactor at (l,i)
            if (bkl == Block::I21)
                return (gm.y(k, j) * gm.cofactor(l, i)).times_det_power(Block::I11, -1);
            return zero;
        case Block::I22:
            if (bkl == Block::I21) return gm.y(k, j) * gm.y(i, l);
            if (bkl == Block::I22) return delta(ring, i, l) * gm.y(k, j);
            return zero;
    }
    return zero;
}

bool same_diag_block(const RingSpec& ring, int k, int l) {
    Block b = ring.block(k, l);
    return b == Block::I11 || b == Block::I22;
}

}  // namespace

std::string TableReport::text() const {
    std::string out = title + ": " + std::to_string(cells.size() - fail_count()) + "/" +
                      std::to_string(cells.size()) + " cells pass\n";
    for (auto& c : cells)
        if (!c.pass)
            out += "  FAIL " + c.cell + "\n    expected " + c.expected_str + "\n    computed " +
                   c.computed_str + "\n";
    return out;
}

// One report cell per block pair of the printed table; every index instance
// of the pair is compared and failing instances are rendered.
template <typename Entry>
static TableReport verify_table(const GenericMatrix& gm, Side side, const char* title,
                                Entry entry) {
    const RingSpec& ring = gm.ring();
    TableReport rep;
    rep.title = std::string(title) + " " + ring.str();
    const int d = ring.dim();
    std::map<std::pair<Block, Block>, CellCheck> cells;
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j)
            for (int k = 1; k <= d; ++k)
                for (int l = 1; l <= d; ++l) {
                    if (k == l && same_diag_block(ring, k, l)) continue;
                    Derivation der{side, k, l};
                    SuperElem computed = derive(der, gm.y(i, j));
                    SuperElem expected = entry(i, j, k, l);
                    auto key = std::make_pair(ring.block(i, j), ring.block(k, l));
                    auto [it, fresh] = cells.try_emplace(key);
                    if (fresh) {
                        it->second.cell = std::string(block_name(key.first)) + " x " +
                                          block_name(key.second);
                        it->second.pass = true;
                    }
                    if (computed != expected) {
                        it->second.pass = false;
                        std::string inst = side == Side::Right
                                               ? "(y_" + std::to_string(i) + std::to_string(j) +
                                                     ") " + der.str()
                                               : der.str() + "(y_" + std::to_string(i) +
                                                     std::to_string(j) + ")";
                        it->second.expected_str += inst + " = " + expected.str() + "; ";
                        it->second.computed_str += inst + " = " + computed.str() + "; ";
                    }
                }
    for (auto& [key, cc] : cells) rep.cells.push_back(std::move(cc));
    return rep;
}

TableReport verify_right_table(const GenericMatrix& gm) {
    return verify_table(gm, Side::Right, "right action table",
                        [&gm](int i, int j, int k, int l) {
                            return right_table_entry(gm, i, j, k, l);
                        });
}

TableReport verify_left_table(const GenericMatrix& gm) {
    return verify_table(gm, Side::Left, "left action table",
                        [&gm](int i, int j, int k, int l) {
                            return left_table_entry(gm, i, j, k, l);
                        });
}

TableReport verify_divided_powers(const GenericMatrix& gm) {
    const RingSpec& ring = gm.ring();
    TableReport rep;
    rep.title = "divided powers " + ring.str();
    const int d = ring.dim();
    for (Side side : {Side::Right, Side::Left})
        for (int k = 1; k <= d; ++k)
            for (int l = 1; l <= d; ++l) {
                if (k == l) continue;
                Derivation der{side, k, l};
                for (int i = 1; i <= d; ++i)
                    for (int j = 1; j <= d; ++j) {
                        SuperElem twice = derive(der, derive(der, gm.y(i, j)));
                        CellCheck cc;
                        cc.cell = der.str() + "^2 on y_" + std::to_string(i) + std::to_string(j);
                        cc.pass = twice.is_zero();
                        if (!cc.pass) {
                            cc.expected_str = "0";
                            cc.computed_str = twice.str();
                        }
                        rep.cells.push_back(std::move(cc));
                    }
            }
    return rep;
}

TableReport verify_det_derivative(const GenericMatrix& gm) {
    const RingSpec& ring = gm.ring();
    TableReport rep;
    rep.title = "determinant derivative " + ring.str();
    const int d = ring.dim();
    for (Side side : {Side::Right, Side::Left})
        for (int k = 1; k <= d; ++k)
            for (int l = 1; l <= d; ++l) {
                Block b = ring.block(k, l);
                bool odd = b == Block::I12 || b == Block::I21;
                if (!odd && k == l) continue;
                Derivation der{side, k, l};
                SuperElem computed = derive(der, gm.det(Block::I11));
                // a right derivation replaces a column, so it reaches D1 only
                // from I12; a left derivation replaces a row and reaches D1
                // only from I21
                bool hits = (side == Side::Right && b == Block::I12) ||
                            (side == Side::Left && b == Block::I21);
                SuperElem expected =
                    hits ? gm.det(Block::I11) * gm.y(k, l) : SuperElem::zero(ring);
                CellCheck cc;
                cc.cell = der.str() + " on D1";
                cc.pass = computed == expected;
                if (!cc.pass) {
                    cc.expected_str = expected.str();
                    cc.computed_str = computed.str();
                }
                rep.cells.push_back(std::move(cc));
            }
    return rep;
}

}  // namespace glmn
