#include <doctest.h>

#include <random>

#include "glmn/glsuper.hpp"
#include "glmn/parser.hpp"

using namespace glmn;

namespace {
SuperElem x(RingSpec ring, int i, int j) { return SuperElem::variable(ring, i, j); }
}

TEST_CASE("block determinants") {
    CHECK(det_block(RingSpec(1, 1), Block::I11) == parse_expr("x[1,1]", RingSpec(1, 1)));
    CHECK(det_block(RingSpec(2, 1), Block::I11) ==
          parse_expr("x[1,1]*x[2,2]-x[1,2]*x[2,1]", RingSpec(2, 1)));
    CHECK(det_block(RingSpec(1, 2), Block::I22) ==
          parse_expr("x[2,2]*x[3,3]-x[2,3]*x[3,2]", RingSpec(1, 2)));
}

TEST_CASE("cofactors") {
    GenericMatrix gm1(RingSpec(1, 1));
    CHECK(gm1.cofactor(1, 1) == SuperElem::constant(gm1.ring(), 1));

    GenericMatrix gm2(RingSpec(2, 1));
    CHECK(gm2.cofactor(1, 2) == -x(gm2.ring(), 2, 1));

    GenericMatrix gm3(RingSpec(3, 1));
    SuperElem expansion = SuperElem::zero(gm3.ring());
    for (int v = 1; v <= 3; ++v) expansion += x(gm3.ring(), 1, v) * gm3.cofactor(1, v);
    CHECK(expansion == gm3.det(Block::I11));

    CHECK_THROWS_AS((void)gm2.cofactor(3, 1), IndexError);
}

TEST_CASE("cofactor orthogonality up to m = 4") {
    for (int m = 1; m <= 4; ++m) {
        GenericMatrix gm(RingSpec(m, 1));
        for (int u = 1; u <= m; ++u)
            for (int w = 1; w <= m; ++w) {
                SuperElem sum = SuperElem::zero(gm.ring());
                for (int v = 1; v <= m; ++v) sum += x(gm.ring(), u, v) * gm.cofactor(w, v);
                CHECK(sum == (u == w ? gm.det(Block::I11) : SuperElem::zero(gm.ring())));
            }
    }
}

TEST_CASE("complementary minors") {
    GenericMatrix gm2(RingSpec(2, 1));
    CHECK(gm2.complementary_minor(1, 2, 1, 2) == SuperElem::constant(gm2.ring(), 1));
    GenericMatrix gm3(RingSpec(3, 1));
    CHECK(gm3.complementary_minor(1, 2, 1, 2) == x(gm3.ring(), 3, 3));
    CHECK(gm3.complementary_minor(1, 3, 1, 2) == x(gm3.ring(), 2, 3));
    CHECK_THROWS_AS((void)gm3.complementary_minor(1, 1, 1, 2), IndexError);
}

TEST_CASE("jacobi and laplace identities, exhaustive m <= 4") {
    for (int m = 2; m <= 4; ++m) {
        GenericMatrix gm(RingSpec(m, 1));
        for (int u = 1; u <= m; ++u)
            for (int k = 1; k <= m; ++k) {
                if (u == k) continue;
                for (int v = 1; v <= m; ++v)
                    for (int j = 1; j <= m; ++j) {
                        if (v == j) continue;
                        CHECK(gm.jacobi_check(u, j, k, v));
                    }
            }
        for (int u = 1; u <= m; ++u)
            for (int j = 1; j <= m; ++j)
                for (int k = 1; k <= m; ++k) {
                    if (k == u || k == j) continue;
                    CHECK(gm.laplace_check(u, j, k));
                }
    }
}

TEST_CASE("factorization map generators at (1|1)") {
    GenericMatrix gm(RingSpec(1, 1));
    RingSpec ring = gm.ring();
    CHECK(gm.y(1, 1) == x(ring, 1, 1));
    CHECK(gm.y(1, 2) == x(ring, 1, 2).times_det_power(Block::I11, -1));
    // the row map, not a copy of y12
    CHECK(gm.y(2, 1) == x(ring, 2, 1).times_det_power(Block::I11, -1));
    CHECK(gm.y(2, 2) ==
          x(ring, 2, 2) - (x(ring, 2, 1) * x(ring, 1, 2)).times_det_power(Block::I11, -1));
}

TEST_CASE("y11 is identity on the even corner for any size") {
    for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 2}, {3, 1}}) {
        GenericMatrix gm(RingSpec(m, n));
        CHECK(gm.y(1, 1) == x(gm.ring(), 1, 1));
    }
}

TEST_CASE("X11 Y12 = X12 and Y21 X11 = X21") {
    for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {3, 2}}) {
        GenericMatrix gm(RingSpec(m, n));
        RingSpec ring = gm.ring();
        for (int i = 1; i <= m; ++i)
            for (int l = m + 1; l <= m + n; ++l) {
                SuperElem sum = SuperElem::zero(ring);
                for (int u = 1; u <= m; ++u) sum += x(ring, i, u) * gm.y(u, l);
                CHECK(sum == x(ring, i, l));
            }
        for (int i = m + 1; i <= m + n; ++i)
            for (int l = 1; l <= m; ++l) {
                SuperElem sum = SuperElem::zero(ring);
                for (int u = 1; u <= m; ++u) sum += gm.y(i, u) * x(ring, u, l);
                CHECK(sum == x(ring, i, l));
            }
    }
}

TEST_CASE("phistar is an algebra map") {
    GenericMatrix gm(RingSpec(1, 1));
    RingSpec ring = gm.ring();
    CHECK(gm.phistar(x(ring, 1, 1)) == x(ring, 1, 1));
    CHECK(gm.phistar(x(ring, 2, 2) * x(ring, 2, 2)) == gm.y(2, 2) * gm.y(2, 2));
    // phistar(D2^-1) * phistar(x22) = 1 at (1|1)
    SuperElem d2inv = SuperElem::constant(ring, 1).times_det_power(Block::I22, -1);
    CHECK(gm.phistar(d2inv) * gm.phistar(x(ring, 2, 2)) == SuperElem::constant(ring, 1));
    CHECK_THROWS_AS((void)gm.phistar(x(ring, 1, 2)), Error);
}

TEST_CASE("phistar is multiplicative on random even-subring elements") {
    std::mt19937_64 rng(11);
    for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {2, 2}}) {
        GenericMatrix gm(RingSpec(m, n));
        RingSpec ring = gm.ring();
        auto random_even = [&]() {
            SuperElem f = SuperElem::zero(ring);
            for (int t = 0; t < 3; ++t) {
                SuperElem mono = SuperElem::constant(ring, static_cast<long>(rng() % 5) - 2);
                for (int k = 0; k < 2; ++k) {
                    // pick a variable in a diagonal block
                    if (rng() % 2) {
                        int i = 1 + static_cast<int>(rng() % m);
                        int j = 1 + static_cast<int>(rng() % m);
                        mono *= x(ring, i, j);
                    } else {
                        int i = m + 1 + static_cast<int>(rng() % n);
                        int j = m + 1 + static_cast<int>(rng() % n);
                        mono *= x(ring, i, j);
                    }
                }
                f += mono;
            }
            return f.times_det_power(Block::I11, -static_cast<int>(rng() % 2));
        };
        for (int trial = 0; trial < 10; ++trial) {
            SuperElem f = random_even(), g = random_even();
            CHECK(gm.phistar(f * g) == gm.phistar(f) * gm.phistar(g));
            CHECK(gm.phistar(f + g) == gm.phistar(f) + gm.phistar(g));
            CHECK(gm.phistar(f).parity() == std::optional<int>(0));
        }
    }
}

TEST_CASE("det2 image inverts exactly") {
    for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {2, 2}, {1, 2}}) {
        GenericMatrix gm(RingSpec(m, n));
        CHECK(gm.det2_image() * gm.det2_image_inverse() ==
              SuperElem::constant(gm.ring(), 1));
    }
}
