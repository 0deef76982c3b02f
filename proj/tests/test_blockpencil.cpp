#include <doctest.h>

#include "bsf/blockpencil.hpp"
#include "bsf/fiedler.hpp"
#include "bsf/minbases.hpp"
#include "bsf/randomgen.hpp"

using namespace bsf;

namespace {

BlockPencil<Rat> random_pencil(Rng& rng, int n, int br, int bc) {
    return BlockPencil<Rat>(n, random_int_matrix(rng, br * n, bc * n),
                            random_int_matrix(rng, br * n, bc * n));
}

}  // namespace

TEST_CASE("block transpose is an involution and fixes 1x1 grids") {
    Rng rng(17);
    BlockPencil<Rat> m = random_pencil(rng, 2, 3, 4);
    CHECK(block_transpose(block_transpose(m)) == m);
    BlockPencil<Rat> one = random_pencil(rng, 3, 1, 1);
    CHECK(block_transpose(one) == one);
}

TEST_CASE("block transpose of K_s equals its plain transpose") {
    // blocks of K_s are scalar multiples of I_n
    BlockPencil<Rat> k = make_K<Rat>(3, 2);
    BlockPencil<Rat> bt = block_transpose(k);
    CHECK(bt.lambda_part() == k.lambda_part().transpose());
    CHECK(bt.const_part() == k.const_part().transpose());
}

TEST_CASE("block symmetry detection") {
    Rng rng(19);
    BlockPencil<Rat> m = random_pencil(rng, 2, 3, 3);
    BlockPencil<Rat> sym = m + block_transpose(m);
    CHECK(is_block_symmetric(sym));
    sym.set_block(0, 1, sym.block_lambda(0, 1) + Matrix<Rat>::identity(2),
                  sym.block_const(0, 1));
    CHECK(!is_block_symmetric(sym));
    CHECK(!is_block_symmetric(random_pencil(rng, 2, 2, 3)));
}

TEST_CASE("permutation matrices") {
    int n = 2;
    auto id = BlockPermutation::identity(4, n);
    CHECK(permutation_matrix<Rat>(id) == Matrix<Rat>::identity(8));

    auto rev = BlockPermutation::reversal(3, n);
    Matrix<Rat> r = permutation_matrix<Rat>(rev);
    // (k:1) has identity blocks on the block antidiagonal
    for (int i = 0; i < 3; ++i)
        CHECK(r.submatrix((2 - i) * n, i * n, n, n) == Matrix<Rat>::identity(n));

    CHECK_THROWS_AS(BlockPermutation({1, 1, 3}, n), std::invalid_argument);

    SUBCASE("orthogonality: Pi^B Pi = I") {
        Rng rng(23);
        BlockPermutation p({2, 4, 1, 3}, n);
        Matrix<Rat> pm = permutation_matrix<Rat>(p);
        CHECK(block_transpose(pm, n) * pm == Matrix<Rat>::identity(8));
    }

    SUBCASE("composition matches matrix product") {
        BlockPermutation p({2, 4, 1, 3}, n), q({3, 1, 4, 2}, n);
        CHECK(permutation_matrix<Rat>(p.compose(q)) ==
              permutation_matrix<Rat>(p) * permutation_matrix<Rat>(q));
    }
}

TEST_CASE("congruence by block permutation") {
    Rng rng(29);
    int n = 2, k = 4;
    BlockPencil<Rat> l = random_pencil(rng, n, k, k);
    BlockPermutation c({3, 1, 4, 2}, n);

    SUBCASE("identity acts trivially") {
        CHECK(congruence(l, BlockPermutation::identity(k, n)) == l);
    }
    SUBCASE("block-moving implementation equals the matrix product") {
        Matrix<Rat> pm = permutation_matrix<Rat>(c);
        BlockPencil<Rat> via_product(n, block_transpose(pm, n) * l.lambda_part() * pm,
                                     block_transpose(pm, n) * l.const_part() * pm);
        CHECK(congruence(l, c) == via_product);
    }
    SUBCASE("congruence preserves block symmetry both ways") {
        BlockPencil<Rat> sym = l + block_transpose(l);
        CHECK(is_block_symmetric(congruence(sym, c)));
        CHECK(!is_block_symmetric(congruence(l, c)));
    }
    SUBCASE("blocks are moved, never altered") {
        BlockPencil<Rat> g = congruence(l, c);
        std::multiset<std::string> before, after;
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) {
                auto key = [&](const BlockPencil<Rat>& p) {
                    std::string s;
                    for (int a = 0; a < n; ++a)
                        for (int b = 0; b < n; ++b)
                            s += p.block_lambda(i, j)(a, b).get_str() + "," +
                                 p.block_const(i, j)(a, b).get_str() + ";";
                    return s;
                };
                before.insert(key(l));
                after.insert(key(g));
            }
        CHECK(before == after);
    }
}

TEST_CASE("sip conjugation identity for elementary matrices") {
    Rng rng(31);
    for (int k = 2; k <= 6; ++k)
        for (int n = 1; n <= 3; ++n) {
            Matrix<Rat> b = random_rat_matrix(rng, n, n);
            for (int i = 1; i <= k; ++i)
                CHECK(sip_conjugate_elementary_identity_check(i, b, k, n));
        }
}

TEST_CASE("hand-checked conjugation cases") {
    // i = 1, k = 2, B = I
    CHECK(sip_conjugate_elementary_identity_check(1, Matrix<Rat>::identity(1), 2, 1));
    // i = k, k = 3, n = 1, B = 2: R M_{-3}(B) R lands the B block bottom right
    Matrix<Rat> b(1, 1);
    b(0, 0) = Rat(2);
    CHECK(sip_conjugate_elementary_identity_check(3, b, 3, 1));
    Matrix<Rat> r = permutation_matrix<Rat>(BlockPermutation::reversal(3, 1));
    Matrix<Rat> conj = r * elementary(-3, b, 3, 1) * r;
    CHECK(conj(2, 2) == Rat(2));
    CHECK(conj(0, 0) == Rat(1));
}
