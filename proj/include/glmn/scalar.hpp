#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "glmn/ring.hpp"

namespace glmn {

/// Exact field element: a rational number in characteristic 0, or a residue
/// in [0, p) for a prime p. The characteristic travels with the value and
/// arithmetic refuses to mix characteristics.
class Scalar {
public:
    Scalar() : p_(0), q_(0) {}

    static Scalar zero(unsigned p) { return Scalar(p); }
    static Scalar one(unsigned p) { return of(1, p); }

    static Scalar of(long value, unsigned p) {
        Scalar s(p);
        if (p == 0) {
            s.q_ = value;
        } else {
            long r = value % static_cast<long>(p);
            if (r < 0) r += p;
            s.r_ = static_cast<std::uint64_t>(r);
        }
        return s;
    }

    static Scalar rational(long num, long den) {
        Scalar s(0);
        s.q_ = mpq_class(num, den);
        s.q_.canonicalize();
        return s;
    }

    static Scalar from_mpq(mpq_class q) {
        Scalar s(0);
        s.q_ = std::move(q);
        return s;
    }

    /// Residue class of an arbitrary rational mod p (denominator inverted).
    static Scalar reduce_mod(const mpq_class& q, unsigned p);

    unsigned characteristic() const { return p_; }
    bool is_zero() const { return p_ ? r_ == 0 : q_ == 0; }
    bool is_one() const { return p_ ? r_ == 1 : q_ == 1; }

    const mpq_class& rat() const { return q_; }
    std::uint64_t residue() const { return r_; }

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const { return *this + (-o); }
    Scalar operator*(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    /// Multiplicative inverse; throws on zero.
    Scalar inverse() const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string str() const;

private:
    explicit Scalar(unsigned p) : p_(p), q_(0) {}

    void check_same(const Scalar& o) const {
        if (p_ != o.p_)
            throw CharacteristicError("scalar characteristics differ: " + std::to_string(p_) +
                                      " vs " + std::to_string(o.p_));
    }

    unsigned p_;
    mpq_class q_;             // used when p_ == 0
    std::uint64_t r_ = 0;     // used when p_ > 0
};

}  // namespace glmn
