#include <doctest.h>

#include <random>

#include "glmn/derivation.hpp"
#include "glmn/parser.hpp"

using namespace glmn;

namespace {
SuperElem x(RingSpec ring, int i, int j) { return SuperElem::variable(ring, i, j); }

SuperElem random_homogeneous(std::mt19937_64& rng, RingSpec ring, int parity) {
    const int d = ring.dim();
    for (int attempt = 0; attempt < 50; ++attempt) {
        SuperElem f = SuperElem::zero(ring);
        for (int t = 0; t < 3; ++t) {
            SuperElem mono = SuperElem::constant(ring, static_cast<long>(rng() % 5) - 2);
            for (int k = 0; k < 2; ++k)
                mono *= x(ring, 1 + static_cast<int>(rng() % d),
                          1 + static_cast<int>(rng() % d));
            if (mono.parity() == parity) f += mono;
        }
        if (!f.is_zero() && f.parity() == parity) return f;
    }
    return SuperElem::zero(ring);
}
}  // namespace

TEST_CASE("generator images") {
    RingSpec ring(1, 1);
    CHECK(derive_gen(ring, {Side::Right, 1, 2}, 1, 1) == x(ring, 1, 2));
    CHECK(derive_gen(ring, {Side::Left, 2, 1}, 1, 2) == x(ring, 2, 2));
    RingSpec ring2(2, 2);
    CHECK(derive_gen(ring2, {Side::Right, 2, 2}, 1, 1).is_zero());
    CHECK(derive_gen(ring2, {Side::Right, 1, 3}, 2, 1) == x(ring2, 2, 3));
}

TEST_CASE("diagonal positions act as weight operators") {
    RingSpec ring(2, 1);
    CHECK(derive(Derivation{Side::Right, 1, 1}, x(ring, 1, 1)) == x(ring, 1, 1));
    CHECK(derive(Derivation{Side::Right, 1, 1}, x(ring, 1, 2)).is_zero());
    CHECK(derive(Derivation{Side::Left, 2, 2}, x(ring, 2, 1)) == x(ring, 2, 1));
}

TEST_CASE("spot checks of the (1|1) derivation identities") {
    GenericMatrix gm(RingSpec(1, 1));
    RingSpec ring = gm.ring();
    CHECK(derive(Derivation{Side::Right, 1, 2}, gm.y(1, 1)) == gm.y(1, 1) * gm.y(1, 2));
    CHECK(derive(Derivation{Side::Right, 2, 1}, gm.y(1, 2)) == SuperElem::constant(ring, 1));
    CHECK(derive(Derivation{Side::Left, 1, 2}, gm.y(2, 1)) == SuperElem::constant(ring, 1));
    CHECK(derive(Derivation{Side::Left, 2, 1}, gm.y(1, 2)) ==
          invert_even_unit(x(ring, 1, 1)) * gm.y(2, 2));
    CHECK(derive(Derivation{Side::Right, 1, 2}, gm.y(2, 2)) == gm.y(2, 2) * gm.y(1, 2));
}

TEST_CASE("right and left tables verify for every m + n <= 4") {
    for (auto [m, n] : std::vector<std::pair<int, int>>{
             {1, 1}, {2, 1}, {1, 2}, {2, 2}, {3, 1}, {1, 3}}) {
        GenericMatrix gm(RingSpec(m, n));
        TableReport right = verify_right_table(gm);
        INFO(right.text());
        CHECK(right.all_pass());
        TableReport left = verify_left_table(gm);
        INFO(left.text());
        CHECK(left.all_pass());
    }
}

TEST_CASE("an I11 x I21 cell is zero on both sides") {
    GenericMatrix gm(RingSpec(2, 1));
    CHECK(derive(Derivation{Side::Right, 3, 1}, gm.y(1, 2)).is_zero());
}

TEST_CASE("I21 x I12 derivative law at (2|2)") {
    GenericMatrix gm(RingSpec(2, 2));
    SuperElem got = derive(Derivation{Side::Right, 1, 3}, gm.y(3, 1));
    SuperElem want = (gm.cofactor(1, 1) * gm.y(3, 3)).times_det_power(Block::I11, -1);
    CHECK(got == want);
}

TEST_CASE("divided powers vanish") {
    for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {2, 2}}) {
        GenericMatrix gm(RingSpec(m, n));
        TableReport rep = verify_divided_powers(gm);
        INFO(rep.text());
        CHECK(rep.all_pass());
    }
}

TEST_CASE("determinant derivative identities") {
    for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {2, 2}}) {
        GenericMatrix gm(RingSpec(m, n));
        TableReport rep = verify_det_derivative(gm);
        INFO(rep.text());
        CHECK(rep.all_pass());
    }
    GenericMatrix gm11(RingSpec(1, 1));
    CHECK(derive(Derivation{Side::Right, 1, 2}, gm11.det(Block::I11)) == x(gm11.ring(), 1, 2));
    GenericMatrix gm21(RingSpec(2, 1));
    CHECK(derive(Derivation{Side::Right, 1, 3}, gm21.det(Block::I11)) ==
          gm21.det(Block::I11) * gm21.y(1, 3));
    CHECK(derive(Derivation{Side::Right, 1, 2}, gm21.det(Block::I11)).is_zero());
}

TEST_CASE("super-Leibniz rule on random homogeneous pairs") {
    std::mt19937_64 rng(5);
    RingSpec ring(2, 2);
    const int d = ring.dim();
    for (int trial = 0; trial < 60; ++trial) {
        int pf = static_cast<int>(rng() % 2), pg = static_cast<int>(rng() % 2);
        SuperElem f = random_homogeneous(rng, ring, pf);
        SuperElem g = random_homogeneous(rng, ring, pg);
        Derivation der{rng() % 2 ? Side::Right : Side::Left,
                       1 + static_cast<int>(rng() % d), 1 + static_cast<int>(rng() % d)};
        int dp = der.odd(ring) ? 1 : 0;
        SuperElem lhs = derive(der, f * g);
        SuperElem rhs = SuperElem::zero(ring);
        if (der.side == Side::Right) {
            rhs = f * derive(der, g);
            SuperElem tail = derive(der, f) * g;
            rhs = (pg * dp) ? rhs - tail : rhs + tail;
        } else {
            rhs = derive(der, f) * g;
            SuperElem tail = f * derive(der, g);
            rhs = (pf * dp) ? rhs - tail : rhs + tail;
        }
        CHECK(lhs == rhs);
    }
}

TEST_CASE("odd derivations square to zero on random elements") {
    std::mt19937_64 rng(9);
    RingSpec ring(2, 1);
    for (int trial = 0; trial < 30; ++trial) {
        SuperElem f = random_homogeneous(rng, ring, static_cast<int>(rng() % 2));
        f = f.times_det_power(Block::I11, -static_cast<int>(rng() % 2));
        for (Derivation der : {Derivation{Side::Right, 1, 3}, Derivation{Side::Right, 3, 2},
                               Derivation{Side::Left, 3, 1}, Derivation{Side::Left, 2, 3}}) {
            CHECK(derive(der, derive(der, f)).is_zero());
        }
    }
}

TEST_CASE("left and right derivations commute") {
    std::mt19937_64 rng(13);
    RingSpec ring(2, 1);
    const int d = ring.dim();
    for (int k1 = 1; k1 <= d; ++k1)
        for (int l1 = 1; l1 <= d; ++l1)
            for (int k2 = 1; k2 <= d; ++k2)
                for (int l2 = 1; l2 <= d; ++l2)
                    for (int u = 1; u <= d; ++u)
                        for (int v = 1; v <= d; ++v) {
                            Derivation L{Side::Left, k1, l1}, R{Side::Right, k2, l2};
                            CHECK(derive(R, derive(L, x(ring, u, v))) ==
                                  derive(L, derive(R, x(ring, u, v))));
                        }
    for (int trial = 0; trial < 25; ++trial) {
        SuperElem f = random_homogeneous(rng, ring, static_cast<int>(rng() % 2))
                          .times_det_power(Block::I11, -static_cast<int>(rng() % 2));
        Derivation L{Side::Left, 1 + static_cast<int>(rng() % d),
                     1 + static_cast<int>(rng() % d)};
        Derivation R{Side::Right, 1 + static_cast<int>(rng() % d),
                     1 + static_cast<int>(rng() % d)};
        CHECK(derive(R, derive(L, f)) == derive(L, derive(R, f)));
    }
}
