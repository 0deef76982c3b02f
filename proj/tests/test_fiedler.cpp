#include <doctest.h>

#include "bsf/fiedler.hpp"
#include "bsf/randomgen.hpp"

using namespace bsf;

namespace {

Matrix<Rat> Z(int n) { return Matrix<Rat>::zero(n, n); }
Matrix<Rat> I(int n) { return Matrix<Rat>::identity(n); }

}  // namespace

TEST_CASE("elementary matrix templates") {
    Rng rng(61);
    int k = 4, n = 2;
    Matrix<Rat> b = random_int_matrix(rng, n, n);

    SUBCASE("M_0 and M_{-k} are block diagonal") {
        Matrix<Rat> m0 = elementary(0, b, k, n);
        CHECK(m0.submatrix((k - 1) * n, (k - 1) * n, n, n) == b);
        CHECK(m0.submatrix(0, 0, (k - 1) * n, (k - 1) * n) == I((k - 1) * n));
        Matrix<Rat> mk = elementary(-k, b, k, n);
        CHECK(mk.submatrix(0, 0, n, n) == b);
        CHECK(mk.submatrix(n, n, (k - 1) * n, (k - 1) * n) == I((k - 1) * n));
    }
    SUBCASE("window placement of M_i") {
        Matrix<Rat> m2 = elementary(2, b, k, n);
        int r = (k - 2 - 1) * n;
        CHECK(m2.submatrix(r, r, n, n) == b);
        CHECK(m2.submatrix(r, r + n, n, n) == I(n));
        CHECK(m2.submatrix(r + n, r, n, n) == I(n));
        CHECK(m2.submatrix(r + n, r + n, n, n) == Z(n));
    }
    SUBCASE("M_i(B) M_{-i}(-B) = I for window indices") {
        for (int i = 1; i <= k - 1; ++i)
            CHECK(elementary(i, b, k, n) * elementary(-i, -b, k, n) == I(k * n));
    }
    SUBCASE("inverse pairs needing nonsingular B") {
        Matrix<Rat> g = random_nonsingular_matrix(rng, n);
        CHECK(elementary(0, g, k, n) * elementary_minus_zero(g, k, n) == I(k * n));
        CHECK(elementary(-k, g, k, n) * elementary(k, g, k, n) == I(k * n));
        CHECK_THROWS_AS(elementary(k, Z(n), k, n), std::domain_error);
        CHECK_THROWS_AS(elementary_minus_zero(Z(n), k, n), std::domain_error);
    }
    SUBCASE("index range") {
        CHECK_THROWS_AS(elementary(k + 1, b, k, n), std::invalid_argument);
        CHECK_THROWS_AS(elementary(-k - 1, b, k, n), std::invalid_argument);
    }
}

TEST_CASE("commutation relation for elementary matrices") {
    Rng rng(67);
    for (int k = 2; k <= 6; ++k) {
        int n = 1 + int(rng() % 3);
        Matrix<Rat> b1 = random_rat_matrix(rng, n, n);
        Matrix<Rat> b2 = random_rat_matrix(rng, n, n);
        for (int i = -k; i <= k - 1; ++i)
            for (int j = -k; j <= k - 1; ++j) {
                if (std::abs(std::abs(i) - std::abs(j)) == 1 || std::abs(i) == std::abs(j))
                    continue;
                CHECK(elementary(i, b1, k, n) * elementary(j, b2, k, n) ==
                      elementary(j, b2, k, n) * elementary(i, b1, k, n));
            }
    }
}

TEST_CASE("tuple products") {
    Rng rng(71);
    int k = 5, n = 2;
    SUBCASE("empty tuple gives the identity") {
        CHECK(tuple_product<Rat>({}, MatrixAssignment<Rat>{}, k, n) == I(k * n));
    }
    SUBCASE("product is invariant under commuting swaps with permuted assignment") {
        Matrix<Rat> b1 = random_rat_matrix(rng, n, n), b2 = random_rat_matrix(rng, n, n);
        // |0| and |2| differ by 2: commuting pair
        MatrixAssignment<Rat> z12({std::vector<Matrix<Rat>>{b1, b2}});
        MatrixAssignment<Rat> z21({std::vector<Matrix<Rat>>{b2, b1}});
        CHECK(tuple_product<Rat>({0, 2}, z12, k, n) == tuple_product<Rat>({2, 0}, z21, k, n));
    }
    SUBCASE("index range enforced") {
        MatrixAssignment<Rat> z({std::vector<Matrix<Rat>>{I(n)}});
        CHECK_THROWS_AS(tuple_product<Rat>({k}, z, k, n), std::invalid_argument);
    }
}

TEST_CASE("nonsingular matrix assignments") {
    int n = 2;
    MatrixAssignment<Rat> z({std::vector<Matrix<Rat>>{Z(n), I(n)}});
    CHECK(z.is_nonsingular_for({1, 0}, 5) == true);  // the zero sits on a window index
    CHECK(z.is_nonsingular_for({0, 1}, 5) == false);
    MatrixAssignment<Rat> good({std::vector<Matrix<Rat>>{I(n), Z(n)}});
    CHECK(good.is_nonsingular_for({0, 1}, 5) == true);
    CHECK(good.is_nonsingular_for({-5, 1}, 5) == true);
}

TEST_CASE("block-symmetric GFP, odd degree") {
    Rng rng(73);
    int n = 2;
    auto p = random_poly(rng, n, 3);
    BlockPencil<Rat> t = gfp_pencil(p);

    // [[lambda A3 + A2, -I, 0], [-I, 0, lambda I], [0, lambda I, lambda A1 + A0]]
    CHECK(t.block_lambda(0, 0) == p.coeff(3));
    CHECK(t.block_const(0, 0) == p.coeff(2));
    CHECK(t.block_const(0, 1) == -I(n));
    CHECK(t.block_lambda(0, 1) == Z(n));
    CHECK(t.block_const(1, 1) == Z(n));
    CHECK(t.block_lambda(1, 2) == I(n));
    CHECK(t.block_lambda(2, 2) == p.coeff(1));
    CHECK(t.block_const(2, 2) == p.coeff(0));
    CHECK(t.block_const(0, 2) == Z(n));
    CHECK(is_block_symmetric(t));

    SUBCASE("matches the elementary product route") {
        CHECK(t == gfp_pencil_from_products(p));
        for (int k = 5; k <= 9; k += 2) {
            auto q = random_poly(rng, 1 + int(rng() % 3), k);
            BlockPencil<Rat> g = gfp_pencil(q);
            CHECK(is_block_symmetric(g));
            CHECK(g == gfp_pencil_from_products(q));
        }
    }
    SUBCASE("k=5 display spot-check: third diagonal block") {
        auto q = random_poly(rng, n, 5);
        BlockPencil<Rat> g = gfp_pencil(q);
        CHECK(g.block_lambda(2, 2) == q.coeff(3));
        CHECK(g.block_const(2, 2) == q.coeff(2));
    }
}

TEST_CASE("block-symmetric GFP, even degree") {
    Rng rng(79);
    int n = 2;
    auto p = random_poly(rng, n, 4, false, true);
    BlockPencil<Rat> t = gfp_pencil(p);
    CHECK(t.block_const(0, 0) == -p.coeff(4).inverse());
    CHECK(t.block_lambda(0, 1) == I(n));
    CHECK(t.block_lambda(1, 1) == p.coeff(3));
    CHECK(t.block_const(1, 1) == p.coeff(2));
    CHECK(is_block_symmetric(t));
    CHECK(t == gfp_pencil_from_products(p));
    CHECK(t.block_lambda(3, 3) == p.coeff(1));
    CHECK(t.block_const(3, 3) == p.coeff(0));

    SUBCASE("singular leading coefficient is rejected") {
        auto bad = random_poly(rng, n, 4);
        bad.coeff(4) = Z(n);
        bad.coeff(4)(0, 0) = Rat(1);  // rank 1, singular for n = 2
        CHECK_THROWS_AS(gfp_pencil(bad), std::domain_error);
    }
}

TEST_CASE("simple FPR explicit templates") {
    Rng rng(83);
    int n = 2;

    SUBCASE("k = 3") {
        auto p = random_poly(rng, n, 3);
        BlockPencil<Rat> f = simple_fpr(p);
        CHECK(f.block_lambda(0, 0) == p.coeff(3));
        CHECK(f.block_const(0, 0) == p.coeff(2));
        CHECK(f.block_const(0, 1) == p.coeff(1));
        CHECK(f.block_lambda(1, 1) == -p.coeff(1));
        CHECK(f.block_const(1, 1) == p.coeff(0));
        CHECK(f.block_const(0, 2) == -I(n));
        CHECK(f.block_lambda(1, 2) == I(n));
        CHECK(f.block_const(2, 2) == Z(n));
        CHECK(is_block_symmetric(f));
    }
    SUBCASE("k = 4") {
        auto p = random_poly(rng, n, 4);
        BlockPencil<Rat> f = simple_fpr(p);
        CHECK(f.block_lambda(0, 0) == p.coeff(4));
        CHECK(f.block_const(0, 1) == p.coeff(2));
        CHECK(f.block_lambda(1, 1) == -p.coeff(2));
        CHECK(f.block_const(1, 1) == p.coeff(1));
        CHECK(f.block_const(1, 3) == p.coeff(0));
        CHECK(f.block_lambda(3, 3) == -p.coeff(0));
        CHECK(f.block_const(3, 3) == Z(n));
        CHECK(is_block_symmetric(f));
    }
    SUBCASE("k = 7 equals the empty-tuple GFPR") {
        auto p = random_poly(rng, n, 7);
        GfprSpec<Rat> spec(7, 6, {}, {}, MatrixAssignment<Rat>{}, MatrixAssignment<Rat>{});
        CHECK(simple_fpr(p) == build_gfpr(p, spec));
    }
}

TEST_CASE("GFPR construction and validation") {
    Rng rng(89);
    int n = 2;

    SUBCASE("spec validation") {
        CHECK_THROWS_AS(GfprSpec<Rat>(5, 5, {}, {}, {}, {}), std::invalid_argument);
        CHECK_THROWS_AS(GfprSpec<Rat>(5, 2, {3}, {}, MatrixAssignment<Rat>(std::vector<Matrix<Rat>>{I(n)}), {}),
                        std::invalid_argument);
        // t_w = (0,0) breaks the SIP for h = 2
        CHECK_THROWS_AS(
            GfprSpec<Rat>(5, 2, {0, 0}, {}, MatrixAssignment<Rat>(std::vector<Matrix<Rat>>{I(n), I(n)}), {}),
            std::invalid_argument);
        // assignment length mismatch
        CHECK_THROWS_AS(GfprSpec<Rat>(5, 2, {0}, {}, {}, {}), std::invalid_argument);
    }

    SUBCASE("shifted t_v convention") {
        GfprSpec<Rat> a(7, 3, {}, {-7, -6}, {},
                        MatrixAssignment<Rat>(std::vector<Matrix<Rat>>{I(n), I(n)}));
        GfprSpec<Rat> b(7, 3, {}, {0, 1}, {}, MatrixAssignment<Rat>(std::vector<Matrix<Rat>>{I(n), I(n)}),
                        GfprSpec<Rat>::TvConvention::Shifted);
        CHECK(a.t_v == b.t_v);
    }

    SUBCASE("always block-symmetric, symmetric for symmetric data") {
        for (int trial = 0; trial < 30; ++trial) {
            int k = 2 + int(rng() % 6);
            int h = int(rng() % k);
            auto spe = random_gfpr_spec(rng, k, h, n);
            auto p = random_poly(rng, n, k);
            BlockPencil<Rat> l = build_gfpr(p, spe);
            CHECK(is_block_symmetric(l));
        }
        for (int trial = 0; trial < 10; ++trial) {
            int k = 2 + int(rng() % 6);
            int h = int(rng() % k);
            auto spe = random_gfpr_spec(rng, k, h, n);
            for (auto& m : spe.z_w.mats) m = m + m.transpose();
            for (auto& m : spe.z_v.mats) m = m + m.transpose();
            auto p = random_symmetric_poly(rng, n, k);
            BlockPencil<Rat> l = build_gfpr(p, spe);
            CHECK(l.lambda_part() == l.lambda_part().transpose());
            CHECK(l.const_part() == l.const_part().transpose());
        }
    }
}
