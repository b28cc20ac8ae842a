#include "glmn/scalar.hpp"

namespace glmn {

namespace {

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t acc = 1 % p;
    base %= p;
    while (exp) {
        if (exp & 1) acc = acc * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return acc;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
    // p is prime and a != 0 mod p
    return mod_pow(a, p - 2, p);
}

std::uint64_t mpz_mod_u(const mpz_class& z, unsigned p) {
    mpz_class r = z % p;
    if (r < 0) r += p;
    return r.get_ui();
}

}  // namespace

Scalar Scalar::reduce_mod(const mpq_class& q, unsigned p) {
    Scalar s(p);
    std::uint64_t num = mpz_mod_u(q.get_num(), p);
    std::uint64_t den = mpz_mod_u(q.get_den(), p);
    if (den == 0) throw CharacteristicError("denominator vanishes mod " + std::to_string(p));
    s.r_ = num * mod_inverse(den, p) % p;
    return s;
}

Scalar Scalar::operator-() const {
    Scalar s(p_);
    if (p_ == 0)
        s.q_ = -q_;
    else
        s.r_ = r_ ? p_ - r_ : 0;
    return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same(o);
    Scalar s(p_);
    if (p_ == 0) {
        s.q_ = q_ + o.q_;
    } else {
        s.r_ = r_ + o.r_;
        if (s.r_ >= p_) s.r_ -= p_;
    }
    return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same(o);
    Scalar s(p_);
    if (p_ == 0)
        s.q_ = q_ * o.q_;
    else
        s.r_ = r_ * o.r_ % p_;  // p < 2^31, no overflow
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error("division by zero scalar");
    Scalar s(p_);
    if (p_ == 0)
        s.q_ = 1 / q_;
    else
        s.r_ = mod_inverse(r_, p_);
    return s;
}

bool Scalar::operator==(const Scalar& o) const {
    if (p_ != o.p_) return false;
    return p_ == 0 ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::str() const {
    if (p_ == 0) return q_.get_str();
    return std::to_string(r_);
}

}  // namespace glmn
