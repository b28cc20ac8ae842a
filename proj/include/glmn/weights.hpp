#pragma once

#include <optional>
#include <string>
#include <vector>

#include "glmn/ring.hpp"

namespace glmn {

/// Partition: weakly decreasing nonnegative integers, stored without
/// trailing zeros.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    int part(int k) const { return k < rows() ? parts_[k] : 0; }  // 0-based
    int size() const;                                             // sum of parts
    bool empty() const { return parts_.empty(); }

    Partition conjugate() const;
    std::vector<int> padded(int m) const;

    std::string str(int pad = 0) const;
    std::string diagram() const;  // ASCII Young diagram, one row of boxes per part

    bool operator==(const Partition&) const = default;
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }  // container order

private:
    std::vector<int> parts_;
};

/// Prefix-sum dominance test on equal-length integer tuples:
/// mu is dominated by lambda iff every prefix sum of lambda - mu is >= 0 and
/// the total is 0.
bool dominance_le(const std::vector<int>& mu, const std::vector<int>& lambda);

bool partition_dominance_le(const Partition& mu, const Partition& lambda);

/// The total order on partitions of the same size: p <= q iff the conjugate
/// of q is lexicographically <= the conjugate of p.
bool partition_le(const Partition& p, const Partition& q);

/// First partition of the listing: near-rectangular, size split as evenly as
/// possible over m parts.
Partition min_partition(int m, int size);

/// Successor under the box-moving rule: move the rightmost box of the last
/// nonzero row up to the nearest row that stays a partition. Nothing after
/// (size). The rule walks a strictly increasing chain in the listing order;
/// for m >= 3 it can skip partitions (the first miss is (3,1,1) at size 5),
/// so it is a selection device, not a complete enumeration.
std::optional<Partition> next_partition(const Partition& p, int m);

/// The box-moving listing: iterate next_partition from the minimum.
std::vector<Partition> list_partitions(int m, int size);

/// Complete enumeration of the partitions of `size` into at most
/// `max_parts` parts, sorted by partition_le.
std::vector<Partition> enumerate_partitions(int max_parts, int size);

/// Dominant GL(m) weight: weakly decreasing integer m-tuple.
class GLWeight {
public:
    GLWeight() = default;
    explicit GLWeight(std::vector<int> entries);

    const std::vector<int>& entries() const { return entries_; }
    int m() const { return static_cast<int>(entries_.size()); }
    int length() const;  // sum of entries
    std::string str() const;

    bool operator==(const GLWeight&) const = default;
    bool operator<(const GLWeight& o) const { return entries_ < o.entries_; }

private:
    std::vector<int> entries_;
};

/// lambda = (partition part) + shift * (1,...,1); the partition has last
/// part 0 unless lambda is constant.
std::pair<Partition, int> weight_tilde(const GLWeight& w);
GLWeight weight_from_tilde(const Partition& p, int shift, int m);

bool weight_dominance_le(const GLWeight& mu, const GLWeight& lambda);

/// Stream over the dominant GL(m) weights of fixed length r in the explicit
/// order: blocks of increasing partition size congruent to r mod m, each
/// block holding every partition with m-th part zero sorted by partition_le,
/// shifted back to length r.
class GlmWeightStream {
public:
    GlmWeightStream(int m, int r);
    std::optional<GLWeight> next();

private:
    int m_, r_;
    int tilde_size_;
    std::vector<Partition> block_;
    std::size_t at_ = 0;
    bool done_ = false;
    void load_block();
};

std::vector<GLWeight> dk_order_glm(int m, int r, int count);

/// Dominant GL(m|n) weight (lambda^+ | lambda^-).
struct SuperWeight {
    GLWeight plus, minus;

    int rplus() const { return plus.length(); }
    int rminus() const { return minus.length(); }
    std::vector<int> concat() const;
    std::string str() const { return "(" + body() + ")"; }
    std::string body() const;

    bool operator==(const SuperWeight&) const = default;
    bool operator<(const SuperWeight& o) const {
        return plus < o.plus || (plus == o.plus && minus < o.minus);
    }
};

/// Dominance via the prefix-sum test on the concatenated (m+n)-tuple.
bool super_dominance(const SuperWeight& mu, const SuperWeight& lambda);
bool super_dominance_strict(const SuperWeight& mu, const SuperWeight& lambda);

/// Componentwise dominance on the two halves; requires matching bidegrees.
bool strong_dominance(const SuperWeight& mu, const SuperWeight& lambda);

/// lambda - l * alpha for alpha = e_m - e_{m+1}.
SuperWeight alpha_shift(const SuperWeight& lambda, int l);
bool is_dominant(const SuperWeight& w);

/// Stream over dominant GL(m|n) weights of bidegree (r+|r-) in the
/// interleaved order: square blocks (a,b) <= (i,i) completed one index at a
/// time. Exhausted halves (m = 1 or n = 1) are skipped.
class SuperWeightStream {
public:
    SuperWeightStream(int m, int n, int rplus, int rminus);
    std::optional<SuperWeight> next();

private:
    bool fetch_plus(int idx);
    bool fetch_minus(int idx);

    GlmWeightStream ps_, ms_;
    std::vector<GLWeight> plus_, minus_;
    bool plus_done_ = false, minus_done_ = false;
    int block_ = 0;  // current square index i (0-based)
    int phase_ = 0, cursor_ = 0;
};

std::vector<SuperWeight> dk_order_super(int m, int n, int rplus, int rminus, int count);

/// The order that interleaves whole bidegree families: list the first weight
/// of every given bidegree, then the second of each, and so on. The set of
/// bidegrees and their order are the caller's choice.
std::vector<SuperWeight> dk_order_ev(int m, int n,
                                     const std::vector<std::pair<int, int>>& bidegrees,
                                     int count);

/// The order-prefix of the interleaved order up to and including lambda.
std::vector<SuperWeight> dk_prefix_upto(const SuperWeight& lambda);

/// The element listed immediately before lambda in its bidegree order, if
/// lambda is not the first.
std::optional<SuperWeight> dk_predecessor_in_order(const SuperWeight& lambda);

/// All covers of lambda in the dominance order of dominant weights, searched
/// within simple-root coefficient box [0, height_bound]^(m+n-1). lambda -
/// alpha is among them whenever dominant.
std::vector<SuperWeight> predecessors(const SuperWeight& lambda, int height_bound = 4);

/// Descending chain of generator sets: level 0 is the input (pairwise
/// incomparable), level k+1 consists of the dominance-maximal covers of the
/// level-k generators. Returns the difference sets Gamma_k \ Gamma_{k+1}.
std::vector<std::vector<SuperWeight>> ideal_chain(const std::vector<SuperWeight>& generators,
                                                  int depth, int height_bound = 4);

}  // namespace glmn
