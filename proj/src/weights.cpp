#include "glmn/weights.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace glmn {

// ---------------------------------------------------------------------------
// Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i + 1 < parts_.size(); ++i)
        if (parts_[i] < parts_[i + 1]) throw Error("partition parts must weakly decrease");
    if (!parts_.empty() && parts_.back() < 0) throw Error("partition parts must be nonnegative");
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
    if (parts_.empty()) return Partition();
    std::vector<int> conj(parts_[0], 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++conj[j];
    return Partition(std::move(conj));
}

std::vector<int> Partition::padded(int m) const {
    std::vector<int> out = parts_;
    if (static_cast<int>(out.size()) > m) throw Error("partition has more than m parts");
    out.resize(m, 0);
    return out;
}

std::string Partition::str(int pad) const {
    std::vector<int> v = pad > 0 ? padded(pad) : parts_;
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

std::string Partition::diagram() const {
    std::string s;
    for (int p : parts_) {
        for (int j = 0; j < p; ++j) s += "[]";
        s += "\n";
    }
    return s;
}

// ---------------------------------------------------------------------------
// orders

bool dominance_le(const std::vector<int>& mu, const std::vector<int>& lambda) {
    if (mu.size() != lambda.size()) throw DimensionError("dominance_le needs equal lengths");
    long run = 0;
    for (std::size_t i = 0; i < mu.size(); ++i) {
        run += lambda[i] - mu[i];
        if (run < 0) return false;
    }
    return run == 0;
}

bool partition_dominance_le(const Partition& mu, const Partition& lambda) {
    int m = std::max(mu.rows(), lambda.rows());
    return dominance_le(mu.padded(m), lambda.padded(m));
}

bool partition_le(const Partition& p, const Partition& q) {
    if (p.size() != q.size()) throw DimensionError("partition_le compares equal sizes");
    // p <= q iff conj(q) <=_lex conj(p), comparing padded sequences
    std::vector<int> cp = p.conjugate().parts(), cq = q.conjugate().parts();
    std::size_t len = std::max(cp.size(), cq.size());
    cp.resize(len, 0);
    cq.resize(len, 0);
    return !std::lexicographical_compare(cp.begin(), cp.end(), cq.begin(), cq.end());
}

Partition min_partition(int m, int size) {
    std::vector<int> parts(m, size / m);
    for (int i = 0; i < size % m; ++i) ++parts[i];
    return Partition(std::move(parts));
}

std::optional<Partition> next_partition(const Partition& p, int m) {
    if (p.rows() > m) throw Error("partition has more than m parts");
    std::vector<int> v = p.padded(m);
    int t = -1;
    for (int i = m - 1; i >= 0; --i)
        if (v[i] > 0) {
            t = i;
            break;
        }
    if (t <= 0) return std::nullopt;  // a single row (or empty) ends the listing
    --v[t];
    for (int s = t - 1; s >= 0; --s) {
        if (s == 0 || v[s] + 1 <= v[s - 1]) {
            ++v[s];
            return Partition(std::move(v));
        }
    }
    return std::nullopt;  // unreachable: s == 0 always accepts
}

std::vector<Partition> list_partitions(int m, int size) {
    std::vector<Partition> out;
    std::optional<Partition> cur = min_partition(m, size);
    while (cur) {
        out.push_back(*cur);
        cur = next_partition(*cur, m);
    }
    return out;
}

namespace {
void enumerate_rec(int remaining, int cap, int slots, std::vector<int>& cur,
                   std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    if (slots == 0) return;
    for (int p = std::min(remaining, cap); p >= 1; --p) {
        cur.push_back(p);
        enumerate_rec(remaining - p, p, slots - 1, cur, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<Partition> enumerate_partitions(int max_parts, int size) {
    std::vector<Partition> out;
    std::vector<int> cur;
    if (size == 0) {
        out.emplace_back(cur);
        return out;
    }
    if (max_parts <= 0) return out;
    enumerate_rec(size, size, max_parts, cur, out);
    std::sort(out.begin(), out.end(),
              [](const Partition& a, const Partition& b) { return a != b && partition_le(a, b); });
    return out;
}

// ---------------------------------------------------------------------------
// GLWeight

GLWeight::GLWeight(std::vector<int> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw Error("GLWeight needs at least one entry");
    for (std::size_t i = 0; i + 1 < entries_.size(); ++i)
        if (entries_[i] < entries_[i + 1]) throw Error("GLWeight entries must weakly decrease");
}

int GLWeight::length() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

std::string GLWeight::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(entries_[i]);
    }
    return s + ")";
}

std::pair<Partition, int> weight_tilde(const GLWeight& w) {
    int shift = w.entries().back();
    std::vector<int> parts;
    for (int e : w.entries()) parts.push_back(e - shift);
    return {Partition(std::move(parts)), shift};
}

GLWeight weight_from_tilde(const Partition& p, int shift, int m) {
    std::vector<int> v = p.padded(m);
    for (int& e : v) e += shift;
    return GLWeight(std::move(v));
}

bool weight_dominance_le(const GLWeight& mu, const GLWeight& lambda) {
    return dominance_le(mu.entries(), lambda.entries());
}

// ---------------------------------------------------------------------------
// the explicit GL(m) order

GlmWeightStream::GlmWeightStream(int m, int r) : m_(m), r_(r) {
    tilde_size_ = ((r % m) + m) % m;  // smallest size >= 0 congruent to r mod m
    load_block();
}

void GlmWeightStream::load_block() {
    // every partition of the block with m-th part zero, in the listing order
    block_ = enumerate_partitions(m_ - 1, tilde_size_);
    at_ = 0;
}

std::optional<GLWeight> GlmWeightStream::next() {
    while (!done_) {
        if (at_ < block_.size()) {
            int shift = (r_ - tilde_size_) / m_;
            return weight_from_tilde(block_[at_++], shift, m_);
        }
        if (m_ == 1) {
            // only size 0 contributes a weight; larger blocks are empty
            done_ = true;
            break;
        }
        tilde_size_ += m_;
        load_block();
    }
    return std::nullopt;
}

std::vector<GLWeight> dk_order_glm(int m, int r, int count) {
    GlmWeightStream stream(m, r);
    std::vector<GLWeight> out;
    while (static_cast<int>(out.size()) < count) {
        auto w = stream.next();
        if (!w) break;
        out.push_back(*w);
    }
    return out;
}

// ---------------------------------------------------------------------------
// SuperWeight

std::vector<int> SuperWeight::concat() const {
    std::vector<int> v = plus.entries();
    v.insert(v.end(), minus.entries().begin(), minus.entries().end());
    return v;
}

std::string SuperWeight::body() const {
    std::string s;
    for (std::size_t i = 0; i < plus.entries().size(); ++i) {
        if (i) s += ",";
        s += std::to_string(plus.entries()[i]);
    }
    s += "|";
    for (std::size_t i = 0; i < minus.entries().size(); ++i) {
        if (i) s += ",";
        s += std::to_string(minus.entries()[i]);
    }
    return s;
}

bool super_dominance(const SuperWeight& mu, const SuperWeight& lambda) {
    return dominance_le(mu.concat(), lambda.concat());
}

bool super_dominance_strict(const SuperWeight& mu, const SuperWeight& lambda) {
    return mu != lambda && super_dominance(mu, lambda);
}

bool strong_dominance(const SuperWeight& mu, const SuperWeight& lambda) {
    if (mu.rplus() != lambda.rplus() || mu.rminus() != lambda.rminus())
        throw DimensionError("strong_dominance needs matching bidegrees");
    return dominance_le(mu.plus.entries(), lambda.plus.entries()) &&
           dominance_le(mu.minus.entries(), lambda.minus.entries());
}

SuperWeight alpha_shift(const SuperWeight& lambda, int l) {
    std::vector<int> p = lambda.plus.entries(), q = lambda.minus.entries();
    p.back() -= l;
    q.front() += l;
    return SuperWeight{GLWeight(std::move(p)), GLWeight(std::move(q))};
}

bool is_dominant(const SuperWeight& w) {
    auto dec = [](const std::vector<int>& v) {
        for (std::size_t i = 0; i + 1 < v.size(); ++i)
            if (v[i] < v[i + 1]) return false;
        return true;
    };
    return dec(w.plus.entries()) && dec(w.minus.entries());
}

// ---------------------------------------------------------------------------
// interleaved order on bidegree (r+|r-)

SuperWeightStream::SuperWeightStream(int m, int n, int rplus, int rminus)
    : ps_(m, rplus), ms_(n, rminus) {}

bool SuperWeightStream::fetch_plus(int idx) {
    while (static_cast<int>(plus_.size()) <= idx && !plus_done_) {
        auto w = ps_.next();
        if (!w)
            plus_done_ = true;
        else
            plus_.push_back(*w);
    }
    return idx < static_cast<int>(plus_.size());
}

bool SuperWeightStream::fetch_minus(int idx) {
    while (static_cast<int>(minus_.size()) <= idx && !minus_done_) {
        auto w = ms_.next();
        if (!w)
            minus_done_ = true;
        else
            minus_.push_back(*w);
    }
    return idx < static_cast<int>(minus_.size());
}

// Block i (0-based) emits, in order:
//   phase 0: (plus_i, minus_b) for b < i
//   phase 1: (plus_a, minus_i) for a < i
//   phase 2: (plus_i, minus_i)
// Block 0 is the single pair (plus_0, minus_0). Pairs whose index does not
// exist (a finite half) are skipped.
std::optional<SuperWeight> SuperWeightStream::next() {
    for (;;) {
        bool have_p = fetch_plus(block_);
        bool have_m = fetch_minus(block_);
        if (!have_p && !have_m) return std::nullopt;
        if (phase_ == 0) {
            if (have_p && cursor_ < block_) {
                int b = cursor_++;
                if (b < static_cast<int>(minus_.size()))
                    return SuperWeight{plus_[block_], minus_[b]};
                continue;
            }
            phase_ = 1;
            cursor_ = 0;
        }
        if (phase_ == 1) {
            if (have_m && cursor_ < block_) {
                int a = cursor_++;
                if (a < static_cast<int>(plus_.size()))
                    return SuperWeight{plus_[a], minus_[block_]};
                continue;
            }
            phase_ = 2;
        }
        // phase 2
        int i = block_;
        ++block_;
        phase_ = 0;
        cursor_ = 0;
        if (have_p && have_m) return SuperWeight{plus_[i], minus_[i]};
    }
}

std::vector<SuperWeight> dk_order_super(int m, int n, int rplus, int rminus, int count) {
    SuperWeightStream stream(m, n, rplus, rminus);
    std::vector<SuperWeight> out;
    while (static_cast<int>(out.size()) < count) {
        auto w = stream.next();
        if (!w) break;
        out.push_back(*w);
    }
    return out;
}

std::vector<SuperWeight> dk_order_ev(int m, int n,
                                     const std::vector<std::pair<int, int>>& bidegrees,
                                     int count) {
    std::vector<SuperWeightStream> streams;
    streams.reserve(bidegrees.size());
    for (auto& [rp, rm] : bidegrees) streams.emplace_back(m, n, rp, rm);
    std::vector<bool> live(streams.size(), true);
    std::vector<SuperWeight> out;
    bool any = true;
    while (static_cast<int>(out.size()) < count && any) {
        any = false;
        for (std::size_t s = 0; s < streams.size(); ++s) {
            if (!live[s]) continue;
            auto w = streams[s].next();
            if (!w) {
                live[s] = false;
                continue;
            }
            any = true;
            out.push_back(*w);
            if (static_cast<int>(out.size()) == count) break;
        }
    }
    return out;
}

std::vector<SuperWeight> dk_prefix_upto(const SuperWeight& lambda) {
    if (!is_dominant(lambda)) throw Error("weight is not dominant: " + lambda.str());
    SuperWeightStream stream(lambda.plus.m(), lambda.minus.m(), lambda.rplus(),
                             lambda.rminus());
    std::vector<SuperWeight> out;
    constexpr int kCap = 2'000'000;
    for (int step = 0; step < kCap; ++step) {
        auto w = stream.next();
        if (!w) break;
        out.push_back(*w);
        if (*w == lambda) return out;
    }
    throw Error("weight " + lambda.str() + " did not appear in its bidegree order");
}

std::optional<SuperWeight> dk_predecessor_in_order(const SuperWeight& lambda) {
    auto prefix = dk_prefix_upto(lambda);
    if (prefix.size() < 2) return std::nullopt;
    return prefix[prefix.size() - 2];
}

// ---------------------------------------------------------------------------
// predecessors and ideal chains

std::vector<SuperWeight> predecessors(const SuperWeight& lambda, int height_bound) {
    if (height_bound < 1) throw Error("predecessors needs height_bound >= 1");
    const int d = lambda.plus.m() + lambda.minus.m();
    const int nroots = d - 1;  // simple roots e_i - e_{i+1}
    std::vector<int> coeff(nroots, 0);
    std::vector<SuperWeight> below;

    auto emit = [&]() {
        std::vector<int> v = lambda.concat();
        // subtracting sum_i c_i (e_i - e_{i+1}) lowers entry i by c_i and
        // raises entry i+1 by c_i
        for (int i = 0; i < nroots; ++i) {
            v[i] -= coeff[i];
            v[i + 1] += coeff[i];
        }
        std::vector<int> p(v.begin(), v.begin() + lambda.plus.m());
        std::vector<int> q(v.begin() + lambda.plus.m(), v.end());
        for (std::size_t i = 0; i + 1 < p.size(); ++i)
            if (p[i] < p[i + 1]) return;
        for (std::size_t i = 0; i + 1 < q.size(); ++i)
            if (q[i] < q[i + 1]) return;
        below.push_back(SuperWeight{GLWeight(std::move(p)), GLWeight(std::move(q))});
    };

    // enumerate nonzero coefficient vectors in [0, height_bound]^nroots
    for (;;) {
        int pos = 0;
        while (pos < nroots && coeff[pos] == height_bound) coeff[pos++] = 0;
        if (pos == nroots) break;
        ++coeff[pos];
        emit();
    }

    std::vector<SuperWeight> covers;
    for (const auto& mu : below) {
        bool is_cover = true;
        for (const auto& nu : below)
            if (nu != mu && super_dominance(mu, nu)) {
                is_cover = false;
                break;
            }
        if (is_cover) covers.push_back(mu);
    }
    std::sort(covers.begin(), covers.end());
    covers.erase(std::unique(covers.begin(), covers.end()), covers.end());
    return covers;
}

std::vector<std::vector<SuperWeight>> ideal_chain(const std::vector<SuperWeight>& generators,
                                                  int depth, int height_bound) {
    if (depth < 1) throw Error("ideal_chain needs depth >= 1");
    for (const auto& a : generators)
        for (const auto& b : generators)
            if (a != b && super_dominance(a, b))
                throw Error("ideal generators must be pairwise incomparable");

    std::vector<std::vector<SuperWeight>> levels;
    std::vector<SuperWeight> cur = generators;
    for (int k = 0; k < depth && !cur.empty(); ++k) {
        levels.push_back(cur);
        std::set<SuperWeight> pool;
        for (const auto& g : cur)
            for (const auto& p : predecessors(g, height_bound)) pool.insert(p);
        std::vector<SuperWeight> next;
        for (const auto& mu : pool) {
            bool maximal = true;
            for (const auto& nu : pool)
                if (nu != mu && super_dominance_strict(mu, nu)) {
                    maximal = false;
                    break;
                }
            if (maximal) next.push_back(mu);
        }
        cur = std::move(next);
    }
    return levels;
}

}  // namespace glmn
