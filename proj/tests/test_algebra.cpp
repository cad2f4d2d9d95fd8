#include <catch2/catch.hpp>

#include "nalab/algebra.hpp"
#include "nalab/render.hpp"

#include "fixtures_env.hpp"

using namespace nalab;

namespace {

Vec e(std::size_t n, std::size_t i) { return Vec::unit(n, i - 1); } // 1-based helper

} // namespace

TEST_CASE("multiplication follows the structure-constant tables") {
    const Algebra na6 = testenv::algebra("NA6.json");
    CHECK(mul(na6, e(6, 2), e(6, 1)) == -e(6, 4));
    CHECK(mul(na6, e(6, 1), e(6, 2)) == e(6, 3));
    CHECK(mul(na6, e(6, 3), e(6, 2)) == Rat(2) * e(6, 6));

    const Algebra nal4 = testenv::algebra("NAL4.json");
    CHECK(mul(nal4, e(4, 1), e(4, 2)) == e(4, 3) + e(4, 4));
    CHECK(mul(nal4, e(4, 2), e(4, 1)) == e(4, 4) - e(4, 3));

    const Algebra zero(3);
    CHECK(mul(zero, e(3, 1), e(3, 2)).is_zero());
}

TEST_CASE("multiplication is bilinear on random inputs") {
    const Algebra na6 = testenv::algebra("NA6.json");
    testenv::SmallRng rng(11);
    for (int trial = 0; trial < 25; ++trial) {
        const Vec x = rng.vec(6), xp = rng.vec(6), y = rng.vec(6);
        const Rat alpha = rng.coord();
        const Vec lhs = mul(na6, alpha * x + xp, y);
        const Vec rhs = alpha * mul(na6, x, y) + mul(na6, xp, y);
        CHECK(lhs == rhs);
        const Vec lhs2 = mul(na6, y, alpha * x + xp);
        const Vec rhs2 = alpha * mul(na6, y, x) + mul(na6, y, xp);
        CHECK(lhs2 == rhs2);
    }
}

TEST_CASE("left and right multiplication operators match the tables") {
    const Algebra na6 = testenv::algebra("NA6.json");
    const Mat r2 = right_op(na6, e(6, 2));
    CHECK(r2 * e(6, 1) == e(6, 3));            // e1·e2
    CHECK(r2 * e(6, 2) == e(6, 5));            // e2·e2
    CHECK(r2 * e(6, 3) == Rat(2) * e(6, 6));   // e3·e2
    CHECK(r2 * e(6, 4) == e(6, 6));            // e4·e2
    const Mat l2 = left_op(na6, e(6, 2));
    CHECK(l2 * e(6, 1) == -e(6, 4));           // e2·e1
    CHECK(l2 * e(6, 3) == e(6, 6));            // e2·e3
    CHECK(l2 * e(6, 4) == Rat(-2) * e(6, 6));  // e2·e4

    const Algebra nal4 = testenv::algebra("NAL4.json");
    const Mat l1 = left_op(nal4, e(4, 1));
    CHECK(l1 * e(4, 1) == e(4, 4));
    CHECK(l1 * e(4, 2) == e(4, 3) + e(4, 4));
    CHECK((l1 * e(4, 3)).is_zero());
    CHECK((l1 * e(4, 4)).is_zero());

    const Algebra zero(4);
    CHECK(left_op(zero, e(4, 2)).is_zero());
}

TEST_CASE("operator matrices agree with mul on all basis pairs") {
    for (const char* name : {"NA6.json", "NAL6.json", "NAL4.json", "LR3.json"}) {
        const Algebra a = testenv::algebra(name);
        for (std::size_t i = 0; i < a.dim; ++i)
            for (std::size_t j = 0; j < a.dim; ++j) {
                const Vec x = Vec::unit(a.dim, i), y = Vec::unit(a.dim, j);
                CHECK(left_op(a, x) * y == mul(a, x, y));
                CHECK(right_op(a, x) * y == mul(a, y, x));
            }
    }
}

TEST_CASE("ad operator from the table") {
    const Algebra nal6 = testenv::algebra("NAL6.json");
    // table oracle: ad_{e2}(e1) = e2·e1 − e1·e2 = e4 − e3
    CHECK(ad_op(nal6, e(6, 2)) * e(6, 1) == e(6, 4) - e(6, 3));
    // table oracle: ad_{e2}(e4) = e2·e4 − e4·e2 = 2e6 − e6 = e6
    CHECK(ad_op(nal6, e(6, 2)) * e(6, 4) == e(6, 6));

    Algebra comm(3); // commutative: ad vanishes
    comm.cc(0, 1, 2) = Rat(1);
    comm.cc(1, 0, 2) = Rat(1);
    CHECK(ad_op(comm, e(3, 1)).is_zero());
}

TEST_CASE("associator values from the tables") {
    const Algebra nal6 = testenv::algebra("NAL6.json");
    // (e1e2)e2 − e1(e2e2) = e3·e2 − e1·e5 = 2e6 − e6 = e6
    CHECK(associator(nal6, e(6, 1), e(6, 2), e(6, 2)) == e(6, 6));

    const Algebra nal4 = testenv::algebra("NAL4.json");
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            for (std::size_t k = 0; k < 4; ++k)
                CHECK(associator(nal4, Vec::unit(4, i), Vec::unit(4, j), Vec::unit(4, k)).is_zero());

    const Algebra zero(2);
    CHECK(associator(zero, e(2, 1), e(2, 2), e(2, 1)).is_zero());
}

TEST_CASE("plus/minus decomposition and opposite") {
    const Algebra na6 = testenv::algebra("NA6.json");
    const Algebra m = minus_algebra(na6), p = plus_algebra(na6);
    // [e1,e2] = ½(e3 + e4) from the table
    CHECK(mul(m, e(6, 1), e(6, 2)) == half() * (e(6, 3) + e(6, 4)));
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) {
            const Vec x = Vec::unit(6, i), y = Vec::unit(6, j);
            CHECK(mul(na6, x, y) == mul(m, x, y) + mul(p, x, y));
        }
    Algebra comm(3);
    comm.cc(0, 1, 2) = Rat(1);
    comm.cc(1, 0, 2) = Rat(1);
    CHECK(minus_algebra(comm).c.is_zero());
    CHECK(opposite(opposite(na6)).c == na6.c);
}

TEST_CASE("annihilator and lie center") {
    const Algebra nal6 = testenv::algebra("NAL6.json");
    CHECK(annihilator(nal6).contains(e(6, 6)));
    CHECK_FALSE(annihilator(nal6).contains(e(6, 1)));

    const Algebra na6 = testenv::algebra("NA6.json");
    CHECK(lie_center(minus_algebra(na6)).contains(e(6, 6)));
    CHECK_THROWS_AS(lie_center(na6), not_anticommutative);

    const Algebra zero(3);
    CHECK(annihilator(zero).dim() == 3);
    CHECK(lie_center(zero).dim() == 3);
}

TEST_CASE("subspace products and the derived square") {
    const Algebra nal6 = testenv::algebra("NAL6.json");
    const Subspace sq6 = square(nal6);
    CHECK(sq6 == Subspace::span(6, {e(6, 3), e(6, 4), e(6, 5), e(6, 6)}));

    const Algebra nal4 = testenv::algebra("NAL4.json");
    CHECK(square(nal4) == Subspace::span(4, {e(4, 3), e(4, 4)}));

    const Algebra zero(3);
    CHECK(square(zero).dim() == 0);

    // A² contains every basis product
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) CHECK(sq6.contains(mul_basis(nal6, i, j)));
}

TEST_CASE("solvability and nilpotency") {
    const Algebra zero(3);
    CHECK(is_solvable(zero));
    CHECK(is_nilpotent_of_class(zero, 1));

    const Algebra na6 = testenv::algebra("NA6.json");
    CHECK(is_solvable(minus_algebra(na6)));

    const Algebra nal6 = testenv::algebra("NAL6.json");
    CHECK(is_nilpotent_of_class(minus_algebra(nal6), 3));
    CHECK_FALSE(is_nilpotent_of_class(minus_algebra(nal6), 2));

    const Algebra lr3 = testenv::algebra("LR3.json");
    CHECK_FALSE(is_solvable(lr3)); // e2·e2 = e2 keeps the derived series alive
}

TEST_CASE("the four-dimensional fixture equals the Heisenberg construction") {
    // bracket [g1,g2] = g3 on a 3-dim space plus the symmetric cocycle φ with
    // φ(g1,g1) = φ(g1,g2) = φ(g2,g2) = 1 into a 1-dim center spanned by e4
    Algebra built(4, "heisenberg-ext");
    built.cc(0, 1, 2) = Rat(1);
    built.cc(1, 0, 2) = Rat(-1);
    built.cc(0, 0, 3) = Rat(1);
    built.cc(0, 1, 3) = Rat(1);
    built.cc(1, 0, 3) = Rat(1);
    built.cc(1, 1, 3) = Rat(1);
    CHECK(built.c == testenv::algebra("NAL4.json").c);
}
