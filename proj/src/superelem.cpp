#include "glmn/superelem.hpp"

#include <algorithm>

namespace glmn {

// ---------------------------------------------------------------------------
// SuperMonomial

int SuperMonomial::even_exponent(VarCode c) const {
    for (auto& [v, e] : even)
        if (v == c) return e;
    return 0;
}

bool SuperMonomial::operator<(const SuperMonomial& o) const {
    if (odd != o.odd) return odd < o.odd;
    // lex on even exponent vectors: walk codes in increasing order; the
    // monomial with the higher exponent at the first differing code is larger
    std::size_t a = 0, b = 0;
    while (a < even.size() && b < o.even.size()) {
        if (even[a].first == o.even[b].first) {
            if (even[a].second != o.even[b].second) return even[a].second < o.even[b].second;
            ++a, ++b;
        } else if (even[a].first < o.even[b].first) {
            return false;  // this has a positive exponent at an earlier code
        } else {
            return true;
        }
    }
    if (a < even.size()) return false;
    if (b < o.even.size()) return true;
    return false;
}

std::string SuperMonomial::str() const {
    if (is_one()) return "1";
    std::string s;
    auto app = [&s](const std::string& t) {
        if (!s.empty()) s += "*";
        s += t;
    };
    for (auto& [c, e] : even) {
        if (e == 1)
            app(var_str(c));
        else
            app(var_str(c) + "^" + std::to_string(e));
    }
    for (VarCode c : odd) app(var_str(c));
    return s;
}

std::optional<std::pair<int, SuperMonomial>> mono_mul(const SuperMonomial& u,
                                                      const SuperMonomial& v) {
    SuperMonomial out;
    out.even.reserve(u.even.size() + v.even.size());
    std::size_t a = 0, b = 0;
    while (a < u.even.size() || b < v.even.size()) {
        if (b == v.even.size() || (a < u.even.size() && u.even[a].first < v.even[b].first))
            out.even.push_back(u.even[a++]);
        else if (a == u.even.size() || v.even[b].first < u.even[a].first)
            out.even.push_back(v.even[b++]);
        else {
            out.even.emplace_back(u.even[a].first, u.even[a].second + v.even[b].second);
            ++a, ++b;
        }
    }
    // merge odd lists; sign of the interleaving permutation is (-1)^k where
    // k counts pairs (x in u, y in v) with y < x
    int sign = 1;
    out.odd.reserve(u.odd.size() + v.odd.size());
    a = 0, b = 0;
    while (a < u.odd.size() || b < v.odd.size()) {
        if (b == v.odd.size()) {
            out.odd.push_back(u.odd[a++]);
        } else if (a == u.odd.size()) {
            out.odd.push_back(v.odd[b++]);
        } else if (u.odd[a] < v.odd[b]) {
            out.odd.push_back(u.odd[a++]);
        } else if (v.odd[b] < u.odd[a]) {
            // v's factor moves left past the remaining factors of u
            if ((u.odd.size() - a) & 1) sign = -sign;
            out.odd.push_back(v.odd[b++]);
        } else {
            return std::nullopt;  // repeated odd variable squares to zero
        }
    }
    return std::make_pair(sign, std::move(out));
}

std::optional<SuperMonomial> mono_divide(const SuperMonomial& u, const SuperMonomial& v) {
    SuperMonomial out;
    std::size_t a = 0;
    for (auto& [c, e] : v.even) {
        while (a < u.even.size() && u.even[a].first < c) out.even.push_back(u.even[a++]);
        if (a == u.even.size() || u.even[a].first != c || u.even[a].second < e)
            return std::nullopt;
        if (u.even[a].second > e) out.even.emplace_back(c, u.even[a].second - e);
        ++a;
    }
    while (a < u.even.size()) out.even.push_back(u.even[a++]);
    std::size_t b = 0;
    for (VarCode c : v.odd) {
        while (b < u.odd.size() && u.odd[b] < c) out.odd.push_back(u.odd[b++]);
        if (b == u.odd.size() || u.odd[b] != c) return std::nullopt;
        ++b;
    }
    while (b < u.odd.size()) out.odd.push_back(u.odd[b++]);
    return out;
}

// ---------------------------------------------------------------------------
// SuperElem construction

SuperElem SuperElem::constant(RingSpec ring, const Scalar& c) {
    SuperElem f(ring);
    if (c.characteristic() != ring.characteristic)
        throw CharacteristicError("scalar characteristic does not match ring");
    if (!c.is_zero()) f.terms_.emplace(SuperMonomial{}, c);
    return f;
}

SuperElem SuperElem::constant(RingSpec ring, long c) {
    return constant(ring, Scalar::of(c, ring.characteristic));
}

SuperElem SuperElem::variable(RingSpec ring, int i, int j) {
    ring.check_index(i, j);
    SuperMonomial mono;
    if (ring.odd(i, j))
        mono.odd.push_back(var_code(i, j));
    else
        mono.even.emplace_back(var_code(i, j), 1);
    return monomial(ring, mono, Scalar::one(ring.characteristic));
}

SuperElem SuperElem::monomial(RingSpec ring, const SuperMonomial& mono, const Scalar& c) {
    SuperElem f(ring);
    if (!c.is_zero()) f.terms_.emplace(mono, c);
    return f;
}

SuperElem SuperElem::make(RingSpec ring, std::map<SuperMonomial, Scalar> terms, int a, int b) {
    SuperElem f(ring);
    f.terms_ = std::move(terms);
    f.den1_ = a;
    f.den2_ = b;
    for (auto it = f.terms_.begin(); it != f.terms_.end();)
        it = it->second.is_zero() ? f.terms_.erase(it) : std::next(it);
    f.normalize();
    return f;
}

void SuperElem::add_term(const SuperMonomial& mono, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(mono, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

std::optional<int> SuperElem::parity() const {
    std::optional<int> p;
    for (auto& [mono, c] : terms_) {
        if (!p)
            p = mono.parity();
        else if (*p != mono.parity())
            return std::nullopt;
    }
    if (!p) return 0;  // zero is even
    return p;
}

// ---------------------------------------------------------------------------
// arithmetic

SuperElem SuperElem::operator-() const {
    SuperElem f(*this);
    for (auto& [mono, c] : f.terms_) c = -c;
    return f;
}

std::map<SuperMonomial, Scalar> SuperElem::numerator_rescaled(int da, int db) const {
    if (da < 0 || db < 0) throw Error("numerator_rescaled expects nonnegative powers");
    if (da == 0 && db == 0) return terms_;
    SuperElem p(ring_);
    p.terms_ = terms_;  // denominators zero: plain polynomial arithmetic
    if (da) p = p * det_block(ring_, Block::I11).pow(da);
    if (db) p = p * det_block(ring_, Block::I22).pow(db);
    return p.terms_;
}

SuperElem SuperElem::operator+(const SuperElem& g) const {
    if (ring_.m != g.ring_.m || ring_.n != g.ring_.n)
        throw DimensionError("adding elements of different rings");
    if (ring_.characteristic != g.ring_.characteristic)
        throw CharacteristicError("adding elements of different characteristic");
    // bring to the common denominator D1^max D2^max
    int a = std::max(den1_, g.den1_), b = std::max(den2_, g.den2_);
    SuperElem out(ring_);
    out.terms_ = numerator_rescaled(a - den1_, b - den2_);
    out.den1_ = a;
    out.den2_ = b;
    for (auto& [mono, c] : g.numerator_rescaled(a - g.den1_, b - g.den2_)) out.add_term(mono, c);
    out.normalize();
    return out;
}

SuperElem SuperElem::operator-(const SuperElem& g) const { return *this + (-g); }

SuperElem SuperElem::operator*(const SuperElem& g) const {
    if (ring_.m != g.ring_.m || ring_.n != g.ring_.n)
        throw DimensionError("multiplying elements of different rings");
    if (ring_.characteristic != g.ring_.characteristic)
        throw CharacteristicError("multiplying elements of different characteristic");
    SuperElem out(ring_);
    out.den1_ = den1_ + g.den1_;
    out.den2_ = den2_ + g.den2_;
    for (auto& [mu, cu] : terms_)
        for (auto& [mv, cv] : g.terms_) {
            auto prod = mono_mul(mu, mv);
            if (!prod) continue;
            Scalar c = cu * cv;
            if (prod->first < 0) c = -c;
            out.add_term(prod->second, c);
        }
    out.normalize();
    return out;
}

SuperElem SuperElem::operator*(const Scalar& c) const {
    if (c.characteristic() != ring_.characteristic)
        throw CharacteristicError("scalar characteristic does not match ring");
    SuperElem out(ring_);
    if (c.is_zero()) return out;
    out.den1_ = den1_;
    out.den2_ = den2_;
    for (auto& [mono, coeff] : terms_) out.terms_.emplace(mono, coeff * c);
    return out;
}

SuperElem SuperElem::pow(int e) const {
    if (e < 0) throw Error("pow expects a nonnegative exponent");
    SuperElem acc = constant(ring_, 1);
    SuperElem base = *this;
    while (e) {
        if (e & 1) acc *= base;
        base = (e >>= 1) ? base * base : base;
    }
    return acc;
}

SuperElem SuperElem::times_det_power(Block diag, int k) const {
    if (diag != Block::I11 && diag != Block::I22)
        throw Error("times_det_power expects a diagonal block");
    if (k == 0 || is_zero()) return *this;
    SuperElem out = *this;
    int& den = (diag == Block::I11) ? out.den1_ : out.den2_;
    if (k < 0) {
        den += -k;
        out.normalize();
        return out;
    }
    int cancel = std::min(den, k);
    den -= cancel;
    k -= cancel;
    if (k > 0) {
        SuperElem d = det_block(ring_, diag).pow(k);
        int a = out.den1_, b = out.den2_;
        out.den1_ = out.den2_ = 0;
        out = out * d;
        out.den1_ += a;
        out.den2_ += b;
    }
    out.normalize();
    return out;
}

bool SuperElem::operator==(const SuperElem& o) const {
    return ring_ == o.ring_ && den1_ == o.den1_ && den2_ == o.den2_ && terms_ == o.terms_;
}

// ---------------------------------------------------------------------------
// exact division and canonical form

namespace {

// Leading (largest) term of a polynomial under the canonical monomial order.
using TermMap = std::map<SuperMonomial, Scalar>;

// Single-divisor division of a purely even polynomial: succeeds iff the
// division leaves no remainder, and with one divisor the first leading term
// not divisible by lt(d) already certifies failure.
std::optional<TermMap> divide_even_poly(TermMap num, const SuperMonomial& lead_d,
                                        const Scalar& lead_c, const TermMap& d) {
    TermMap quot;
    while (!num.empty()) {
        auto lead = std::prev(num.end());
        auto q = mono_divide(lead->first, lead_d);
        if (!q) return std::nullopt;
        Scalar qc = lead->second * lead_c.inverse();
        quot.emplace(*q, qc);
        for (auto& [mono, c] : d) {
            auto prod = mono_mul(*q, mono);  // all even: sign +1, never zero
            Scalar delta = -(qc * c);
            auto [it, fresh] = num.emplace(prod->second, delta);
            if (!fresh) {
                it->second += delta;
                if (it->second.is_zero()) num.erase(it);
            }
        }
    }
    return quot;
}

}  // namespace

std::optional<SuperElem> exact_divide(const SuperElem& f, const SuperElem& d) {
    if (d.is_zero()) throw Error("exact_divide by zero");
    if (d.den1() != 0 || d.den2() != 0 || d.parity() != std::optional<int>(0))
        throw Error("exact_divide expects a purely even polynomial divisor");
    for (auto& [mono, c] : d.terms())
        if (!mono.odd.empty()) throw Error("exact_divide expects a purely even polynomial divisor");
    if (f.is_zero()) return f;

    // Group the numerator by its odd support. d is even and central, so f is
    // divisible by d iff every group's even cofactor polynomial is.
    std::map<std::vector<VarCode>, TermMap> groups;
    for (auto& [mono, c] : f.terms()) {
        SuperMonomial ev;
        ev.even = mono.even;
        groups[mono.odd].emplace(std::move(ev), c);
    }
    auto lead = std::prev(d.terms().end());
    TermMap out;
    for (auto& [odd, poly] : groups) {
        auto q = divide_even_poly(poly, lead->first, lead->second, d.terms());
        if (!q) return std::nullopt;
        for (auto& [mono, c] : *q) {
            SuperMonomial full = mono;
            full.odd = odd;
            out.emplace(std::move(full), c);
        }
    }
    SuperElem result(f.ring());
    result.terms_ = std::move(out);
    result.den1_ = f.den1();
    result.den2_ = f.den2();
    return result;
}

void SuperElem::normalize() {
    if (terms_.empty()) {
        den1_ = den2_ = 0;
        return;
    }
    if (den1_ > 0) {
        SuperElem d1 = det_block(ring_, Block::I11);
        while (den1_ > 0) {
            SuperElem probe(ring_);
            probe.terms_ = terms_;
            auto q = exact_divide(probe, d1);
            if (!q) break;
            terms_ = std::move(q->terms_);
            --den1_;
        }
    }
    if (den2_ > 0) {
        SuperElem d2 = det_block(ring_, Block::I22);
        while (den2_ > 0) {
            SuperElem probe(ring_);
            probe.terms_ = terms_;
            auto q = exact_divide(probe, d2);
            if (!q) break;
            terms_ = std::move(q->terms_);
            --den2_;
        }
    }
}

// ---------------------------------------------------------------------------
// units

SuperElem invert_even_unit(const SuperElem& f) {
    if (f.is_zero()) throw NotAUnitError("zero is not a unit");
    const RingSpec ring = f.ring();
    // split off the body (terms free of odd variables)
    std::map<SuperMonomial, Scalar> body, soul;
    for (auto& [mono, c] : f.terms())
        (mono.odd.empty() ? body : soul).emplace(mono, c);
    if (body.empty()) throw NotAUnitError("element has nilpotent body");

    // body must factor as c * D1^s * D2^t
    SuperElem b = SuperElem::make(ring, std::move(body), 0, 0);
    int s = 0, t = 0;
    SuperElem d1 = det_block(ring, Block::I11), d2 = det_block(ring, Block::I22);
    for (;;) {
        auto q = exact_divide(b, d1);
        if (!q) break;
        b = *q;
        ++s;
    }
    for (;;) {
        auto q = exact_divide(b, d2);
        if (!q) break;
        b = *q;
        ++t;
    }
    if (b.term_count() != 1 || !b.terms().begin()->first.is_one())
        throw NotAUnitError("body is not a monomial in D1 and D2: " + b.str());
    Scalar c = b.terms().begin()->second;

    // f = c * D1^(s-a) * D2^(t-b) * (1 + nu) with nu = soul / (c D1^s D2^t);
    // the overall denominator of f cancels between soul and body
    SuperElem nu = SuperElem::make(ring, std::move(soul), 0, 0) * c.inverse();
    nu = nu.times_det_power(Block::I11, -s).times_det_power(Block::I22, -t);

    SuperElem series = SuperElem::constant(ring, 1);
    SuperElem power = SuperElem::constant(ring, 1);
    int max_steps = 2 * ring.m * ring.n;
    for (int i = 1; i <= max_steps; ++i) {
        power = power * (-nu);
        if (power.is_zero()) break;
        series += power;
    }
    SuperElem inv = series * c.inverse();
    inv = inv.times_det_power(Block::I11, f.den1() - s).times_det_power(Block::I22, f.den2() - t);
    return inv;
}

// ---------------------------------------------------------------------------
// determinants of the diagonal blocks

SuperElem det_block(RingSpec ring, Block diag) {
    if (diag != Block::I11 && diag != Block::I22)
        throw Error("det_block expects a diagonal block");
    int offset = diag == Block::I11 ? 0 : ring.m;
    int size = diag == Block::I11 ? ring.m : ring.n;

    // permutation expansion
    std::vector<int> perm(size);
    for (int i = 0; i < size; ++i) perm[i] = i;
    std::map<SuperMonomial, Scalar> terms;
    do {
        int sign = 1;
        for (int i = 0; i < size; ++i)
            for (int j = i + 1; j < size; ++j)
                if (perm[i] > perm[j]) sign = -sign;
        SuperMonomial mono;
        for (int i = 0; i < size; ++i)
            mono.even.emplace_back(var_code(offset + i + 1, offset + perm[i] + 1), 1);
        std::sort(mono.even.begin(), mono.even.end());
        Scalar c = Scalar::of(sign, ring.characteristic);
        auto [it, fresh] = terms.emplace(std::move(mono), c);
        if (!fresh) it->second += c;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return SuperElem::make(ring, std::move(terms), 0, 0);
}

// ---------------------------------------------------------------------------
// rendering

std::string SuperElem::str() const {
    if (terms_.empty()) return "0";
    std::string num;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [mono, c] = *it;
        std::string cs = c.str();
        bool neg = !cs.empty() && cs[0] == '-';
        std::string mag = neg ? cs.substr(1) : cs;
        if (first) {
            num += neg ? "-" : "";
            first = false;
        } else {
            num += neg ? " - " : " + ";
        }
        if (mono.is_one())
            num += mag;
        else if (mag == "1")
            num += mono.str();
        else
            num += mag + "*" + mono.str();
    }
    if (den1_ == 0 && den2_ == 0) return num;
    std::string out = (terms_.size() > 1) ? "(" + num + ")" : num;
    if (den1_ > 0) out += "*D1^-" + std::to_string(den1_);
    if (den2_ > 0) out += "*D2^-" + std::to_string(den2_);
    return out;
}

}  // namespace glmn
