#include <doctest.h>

#include "bsf/congruence.hpp"
#include "bsf/randomgen.hpp"

using namespace bsf;

namespace {

GfprSpec<Rat> empty_spec(int k, int h) {
    return GfprSpec<Rat>(k, h, {}, {}, MatrixAssignment<Rat>{}, MatrixAssignment<Rat>{});
}

}  // namespace

TEST_CASE("splitting a GFPR into its two halves") {
    Rng rng(301);
    int n = 2;

    SUBCASE("boundary h = k-1: the g half is the 1x1 center") {
        auto p = random_poly(rng, n, 5);
        auto split = split_gfpr(p, empty_spec(5, 4));
        CHECK(split.g.block_rows() == 1);
        CHECK(split.g.block_lambda(0, 0) == p.coeff(5));
        CHECK(split.g.block_const(0, 0) == p.coeff(4));
        CHECK(split.f == build_gfpr(p, empty_spec(5, 4)));
    }
    SUBCASE("boundary h = 0: the f half is the 1x1 center") {
        auto p = random_poly(rng, n, 5);
        auto split = split_gfpr(p, empty_spec(5, 0));
        CHECK(split.f.block_rows() == 1);
        CHECK(split.f.block_lambda(0, 0) == p.coeff(1));
        CHECK(split.f.block_const(0, 0) == p.coeff(0));
    }
    SUBCASE("k = 5, h = 3: halves rebuild from their own recipes") {
        auto p = random_poly(rng, n, 5);
        auto split = split_gfpr(p, empty_spec(5, 3));
        CHECK(split.f.block_rows() == 4);
        CHECK(split.g.block_rows() == 2);
        CHECK(split.q.grade() == 4);
        CHECK(split.z.grade() == 2);
        for (int i = 0; i <= 4; ++i) CHECK(split.q.coeff(i) == p.coeff(i));
        for (int i = 0; i <= 2; ++i) CHECK(split.z.coeff(i) == p.coeff(3 + i));
        // the split itself asserts f/g equal their own product constructions
    }
    SUBCASE("random specs split cleanly") {
        for (int trial = 0; trial < 20; ++trial) {
            int k = 2 + int(rng() % 6);
            int h = int(rng() % k);
            auto p = random_poly(rng, 1 + int(rng() % 2), k);
            auto spec = random_gfpr_spec(rng, k, h, p.n());
            CHECK_NOTHROW(split_gfpr(p, spec));
        }
    }
}

TEST_CASE("base engine permutations match the worked reductions") {
    CHECK(engine_permutation(7, {}, 1).c == std::vector<int>{1, 2, 4, 6, 3, 5, 7});
    CHECK(engine_permutation(5, {}, 1).c == std::vector<int>{1, 2, 4, 3, 5});
    CHECK(engine_permutation(6, {}, 1).c == std::vector<int>{1, 2, 4, 6, 3, 5});
    CHECK(engine_permutation(3, {}, 1).c == std::vector<int>{1, 2, 3});
}

TEST_CASE("simple FPR reductions reproduce the worked examples") {
    Rng rng(307);

    SUBCASE("k = 7: the first-family member with banded C") {
        for (int n : {1, 2}) {
            auto p = random_poly(rng, n, 7);
            auto cert = main_permutation(p, empty_spec(7, 6));
            CHECK(cert.verified);
            CHECK(cert.form.tag == FamilyTag::O1);
            CHECK(cert.c.c == std::vector<int>{1, 2, 4, 6, 3, 5, 7});
            CHECK(cert.form.b == Matrix<Rat>::identity(3 * n));
            Matrix<Rat> expect_c(4 * n, 3 * n);
            expect_c.paste(n, 0, -p.coeff(5));
            expect_c.paste(2 * n, n, -p.coeff(3));
            expect_c.paste(3 * n, 2 * n, -p.coeff(1));
            CHECK(cert.form.c == expect_c);
        }
    }
    SUBCASE("k = 5: permutation (1,2,4,3,5) with banded C") {
        int n = 2;
        auto p = random_poly(rng, n, 5);
        auto cert = main_permutation(p, empty_spec(5, 4));
        CHECK(cert.form.tag == FamilyTag::O1);
        CHECK(cert.c.c == std::vector<int>{1, 2, 4, 3, 5});
        Matrix<Rat> expect_c(3 * n, 2 * n);
        expect_c.paste(n, 0, -p.coeff(3));
        expect_c.paste(2 * n, n, -p.coeff(1));
        CHECK(cert.form.c == expect_c);
    }
    SUBCASE("k = 6: lands in the third family with permutation (1,2,4,6,3,5)") {
        int n = 2;
        auto p = random_poly(rng, n, 6);
        auto cert = main_permutation(p, empty_spec(6, 5));
        CHECK(cert.form.tag == FamilyTag::E1);
        CHECK(cert.c.c == std::vector<int>{1, 2, 4, 6, 3, 5});
        CHECK(cert.form.d == Matrix<Rat>::identity(2 * n));
        Matrix<Rat> expect_b(3 * n, 2 * n);
        expect_b.paste(n, 0, -p.coeff(4));
        expect_b.paste(2 * n, n, -p.coeff(2));
        CHECK(cert.form.b == expect_b);
    }
}

TEST_CASE("GFP reduction onto the first-family generator") {
    Rng rng(311);
    SUBCASE("k = 3 uses c = (1,3,2)") {
        auto p = random_poly(rng, 2, 3);
        auto cert = gfp_congruence(p);
        CHECK(cert.c.c == std::vector<int>{1, 3, 2});
        CHECK(cert.form.tag == FamilyTag::O1);
    }
    SUBCASE("k in {5, 7, 9}, n in {1, 2, 3}") {
        for (int k : {5, 7, 9})
            for (int n : {1, 2, 3}) {
                auto p = random_poly(rng, n, k);
                CHECK(gfp_congruence(p).verified);
            }
    }
    SUBCASE("even degree rejected") {
        auto p = random_poly(rng, 2, 4, false, true);
        CHECK_THROWS_AS(gfp_congruence(p), std::invalid_argument);
    }
}

TEST_CASE("main reduction follows the parity table on random specs") {
    Rng rng(313);
    int done = 0;
    while (done < 40) {
        int k = 2 + int(rng() % 6);
        int h = int(rng() % k);
        int n = 1 + int(rng() % 2);
        auto p = random_poly(rng, n, k, h % 2 != 0, (k - h) % 2 == 0);
        auto spec = random_gfpr_spec(rng, k, h, n);
        auto cert = main_permutation(p, spec);
        CHECK(cert.verified);
        CHECK(cert.form.tag == parity_tag(k, h));
        // certificate checks out against the family rebuild by construction;
        // re-verify the exact equality once more from scratch
        CHECK(congruence(build_gfpr(p, spec), cert.c) == build_family(p, cert.form));
        ++done;
    }
}

TEST_CASE("nonsingular data transfers to the extracted wing parameters") {
    Rng rng(317);
    int done = 0;
    while (done < 24) {
        int k = 2 + int(rng() % 5);
        int h = int(rng() % k);
        int n = 1 + int(rng() % 2);
        auto p = random_poly(rng, n, k, h % 2 != 0, (k - h) % 2 == 0);
        auto spec = random_gfpr_spec(rng, k, h, n);
        if (!spec.has_nonsingular_assignments()) continue;
        auto cert = main_permutation(p, spec);
        switch (cert.form.tag) {
            case FamilyTag::O1:
                CHECK(cert.form.b.is_nonsingular());
                CHECK(block_transpose(cert.form.b, n).is_nonsingular());
                break;
            case FamilyTag::O2:
                CHECK((cert.form.e.rows() == 0 || cert.form.e.is_nonsingular()));
                break;
            case FamilyTag::E1:
            case FamilyTag::E2:
                CHECK((cert.form.d.rows() == 0 || cert.form.d.is_nonsingular()));
                break;
        }
        ++done;
    }
}

TEST_CASE("wing position prediction matches the certified reduction") {
    Rng rng(331);
    int done = 0;
    while (done < 15) {
        int k = 3 + int(rng() % 5);
        int n = 1 + int(rng() % 2);
        auto p = random_poly(rng, n, k);
        auto spec = random_gfpr_spec(rng, k, k - 1, n);
        auto cert = main_permutation(p, spec);
        ++done;

        int s = family_wing_size(k);
        int wing_start = (k % 2 != 0) ? s + 1 : s + 2;  // first wing slot, 0-based
        auto slot_of = [&](int value) {
            for (int i = 0; i < k; ++i)
                if (cert.c.c[size_t(i)] == value) return i;
            return -1;
        };
        const Matrix<Rat>& wing =
            (cert.form.tag == FamilyTag::O1) ? cert.form.b : cert.form.d;
        for (int j : sip_append_positions(spec.t_w, k)) {
            int slot = slot_of(k - j);
            CHECK(slot >= wing_start);
            // the predicted rows keep their plain -I/+lambda I form: the wing
            // coefficient has a bare identity block in that row
            int wi = slot - wing_start;
            Matrix<Rat> row = wing.submatrix(wi * n, 0, n, wing.cols());
            int identity_blocks = 0;
            bool rest_zero = true;
            for (int b = 0; b < wing.cols() / n; ++b) {
                Matrix<Rat> blk = row.submatrix(0, b * n, n, n);
                if (blk == Matrix<Rat>::identity(n))
                    ++identity_blocks;
                else if (!blk.is_zero())
                    rest_zero = false;
            }
            CHECK(identity_blocks == 1);
            CHECK(rest_zero);
        }
    }
}

TEST_CASE("brute force oracle") {
    Rng rng(337);

    SUBCASE("agrees with the constructive engine for k <= 5") {
        int done = 0;
        while (done < 10) {
            int k = 2 + int(rng() % 4);
            int h = int(rng() % k);
            int n = 1 + int(rng() % 2);
            auto p = random_poly(rng, n, k, h % 2 != 0, (k - h) % 2 == 0);
            auto spec = random_gfpr_spec(rng, k, h, n, 3);
            BlockPencil<Rat> l = build_gfpr(p, spec);
            auto main_cert = main_permutation(p, spec);
            auto oracle_cert = brute_force_oracle(l, p);
            REQUIRE(oracle_cert.has_value());
            CHECK(congruence(l, oracle_cert->c) == build_family(p, oracle_cert->form));
            ++done;
        }
    }
    SUBCASE("finds the GFP reduction for k = 5") {
        auto p = random_poly(rng, 1, 5);
        auto cert = brute_force_oracle(gfp_pencil(p), p);
        REQUIRE(cert.has_value());
        CHECK(cert->form.tag == FamilyTag::O1);
    }
    SUBCASE("generic block-symmetric pencils match nothing") {
        int n = 1, k = 4;
        auto p = random_poly(rng, n, k);
        BlockPencil<Rat> junk(n, random_int_matrix(rng, k * n, k * n),
                              random_int_matrix(rng, k * n, k * n));
        junk = junk + block_transpose(junk);
        CHECK(!brute_force_oracle(junk, p).has_value());
    }
    SUBCASE("cap at k = 8") {
        auto p = random_poly(rng, 1, 9);
        CHECK_THROWS_AS(brute_force_oracle(skeleton(p, FamilyTag::O1), p),
                        std::invalid_argument);
    }
}
