#include "doctest.h"

#include "bimagic/field.hpp"

using namespace bimagic;

TEST_CASE("field axioms hold exhaustively for every supported q") {
    for (int q : {2, 3, 4, 5}) {
        CAPTURE(q);
        const Field f(q);
        CHECK(f.q() == q);
        for (int a = 0; a < q; ++a) {
            CHECK(f.add(a, 0) == a);
            CHECK(f.mul(a, 1) == a);
            CHECK(f.mul(a, 0) == 0);
            CHECK(f.add(a, f.neg(a)) == 0);
            CHECK(f.sub(a, a) == 0);
            if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
            for (int b = 0; b < q; ++b) {
                CHECK(f.add(a, b) == f.add(b, a));
                CHECK(f.mul(a, b) == f.mul(b, a));
                CHECK(f.sub(a, b) == f.add(a, f.neg(b)));
                for (int c = 0; c < q; ++c) {
                    CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
                    CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                    CHECK(f.mul(a, f.add(b, c)) ==
                          f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }
}

TEST_CASE("every nonzero element is invertible (no zero divisors)") {
    for (int q : {2, 3, 4, 5}) {
        const Field f(q);
        for (int a = 1; a < q; ++a) {
            for (int b = 1; b < q; ++b) {
                CAPTURE(q); CAPTURE(a); CAPTURE(b);
                CHECK(f.mul(a, b) != 0);
            }
        }
    }
}

TEST_CASE("GF(4) is the field of four elements, not Z/4") {
    const Field f(4);
    // x + x = 0 for every x (characteristic 2).
    for (int a = 0; a < 4; ++a) CHECK(f.add(a, a) == 0);
    // With elements encoded as b1*x + b0: x * x = x + 1.
    CHECK(f.mul(2, 2) == 3);
    CHECK(f.mul(2, 3) == 1);
    CHECK(f.mul(3, 3) == 2);
    // The multiplicative group is cyclic of order 3.
    CHECK(f.mul(2, f.mul(2, 2)) == 1);
}

TEST_CASE("prime fields are modular arithmetic") {
    for (int q : {2, 3, 5}) {
        const Field f(q);
        for (int a = 0; a < q; ++a) {
            for (int b = 0; b < q; ++b) {
                CAPTURE(q); CAPTURE(a); CAPTURE(b);
                CHECK(f.add(a, b) == (a + b) % q);
                CHECK(f.mul(a, b) == (a * b) % q);
            }
        }
    }
}

TEST_CASE("vector helpers") {
    const Field f(5);
    const FieldVec u{1, 2};
    const FieldVec v{3, 4};
    CHECK(vec_add(f, u, v) == FieldVec{4, 1});
    CHECK(vec_sub(f, u, v) == FieldVec{3, 3});
    CHECK(vec_scale(f, 2, u) == FieldVec{2, 4});
    CHECK(vec_dot(f, u, v) == (1 * 3 + 2 * 4) % 5);
    CHECK(vec_is_zero(FieldVec{0, 0}));
    CHECK_FALSE(vec_is_zero(u));
}

TEST_CASE("pairwise independence is the not-a-scalar-multiple relation") {
    for (int q : {2, 3, 4, 5}) {
        const Field f(q);
        // Exhaust all pairs of length-2 vectors and compare against rank.
        for (int u0 = 0; u0 < q; ++u0)
            for (int u1 = 0; u1 < q; ++u1)
                for (int v0 = 0; v0 < q; ++v0)
                    for (int v1 = 0; v1 < q; ++v1) {
                        const FieldVec u{u0, u1}, v{v0, v1};
                        const bool expect = matrix_rank(f, {u, v}) == 2;
                        CAPTURE(q); CAPTURE(u0); CAPTURE(u1); CAPTURE(v0); CAPTURE(v1);
                        CHECK(pairwise_independent(f, u, v) == expect);
                    }
    }
}

TEST_CASE("matrix rank over each field") {
    for (int q : {2, 3, 4, 5}) {
        const Field f(q);
        CAPTURE(q);
        CHECK(matrix_rank(f, {{1, 0}, {0, 1}}) == 2);
        CHECK(matrix_rank(f, {{1, 1}, {1, 1}}) == 1);
        CHECK(matrix_rank(f, {{0, 0}, {0, 0}}) == 0);
        // Identity of size 4 (the generator's full matrix for m = 2).
        std::vector<FieldVec> id4;
        for (int i = 0; i < 4; ++i) {
            FieldVec row(4, 0);
            row[i] = 1;
            id4.push_back(row);
        }
        CHECK(matrix_rank(f, id4) == 4);
    }
    // A rank-3 4x4 over GF(3): last row is the sum of the first two.
    const Field f3(3);
    CHECK(matrix_rank(f3, {{1, 0, 0, 0},
                           {0, 1, 0, 0},
                           {0, 0, 1, 0},
                           {1, 1, 0, 0}}) == 3);
}
