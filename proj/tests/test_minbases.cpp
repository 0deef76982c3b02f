#include <doctest.h>

#include "bsf/families.hpp"
#include "bsf/minbases.hpp"
#include "bsf/randomgen.hpp"

using namespace bsf;

namespace {

MatrixPolynomial<Rat> pencil_as_poly(const BlockPencil<Rat>& p) { return p.as_polynomial(); }

}  // namespace

TEST_CASE("K and Lambda are dual") {
    for (int s : {0, 1, 2, 4})
        for (int n : {1, 3}) {
            auto prod = pencil_as_poly(make_K<Rat>(s, n)) * make_Lambda<Rat>(s, n).transpose();
            for (int d = 0; d <= prod.grade(); ++d) CHECK(prod.coeff(d).is_zero());
        }
    // smallest case written out: L_1 = [-1, lambda]
    BlockPencil<Rat> k1 = make_K<Rat>(1, 1);
    CHECK(k1.const_part()(0, 0) == Rat(-1));
    CHECK(k1.lambda_part()(0, 0) == Rat(0));
    CHECK(k1.lambda_part()(0, 1) == Rat(1));
    // Lambda_2 = [lambda^2, lambda, 1]
    auto l2 = make_Lambda<Rat>(2, 1);
    Matrix<Rat> expect(1, 3);
    expect(0, 0) = Rat(9);
    expect(0, 1) = Rat(3);
    expect(0, 2) = Rat(1);
    CHECK(l2.evaluate(Rat(3)) == expect);
}

TEST_CASE("minimal basis characterization") {
    SUBCASE("the 2x3 worked example") {
        // [[1, l^2, 1-l], [0, 1, l]]
        MatrixPolynomial<Rat> g(2, 3, 2);
        g.coeff(0)(0, 0) = Rat(1);
        g.coeff(0)(0, 2) = Rat(1);
        g.coeff(1)(0, 2) = Rat(-1);
        g.coeff(2)(0, 1) = Rat(1);
        g.coeff(0)(1, 1) = Rat(1);
        g.coeff(1)(1, 2) = Rat(1);
        auto rep = is_minimal_basis(g);
        CHECK(rep.is_minimal);
        CHECK(rep.row_degrees == std::vector<int>{2, 1});
    }
    SUBCASE("K_s is a minimal basis for every s, n") {
        for (int s : {1, 2, 3})
            for (int n : {1, 2}) CHECK(is_minimal_basis(pencil_as_poly(make_K<Rat>(s, n))).is_minimal);
    }
    SUBCASE("rank drop at zero is detected") {
        // diag(l, l): full rank for l != 0 only
        MatrixPolynomial<Rat> g(2, 2, 1);
        g.coeff(1)(0, 0) = Rat(1);
        g.coeff(1)(1, 1) = Rat(1);
        auto rep = is_minimal_basis(g);
        CHECK(!rep.is_minimal);
        CHECK(rep.highest_degree_full_rank);
        CHECK(!rep.full_rank_at_samples);
    }
}

TEST_CASE("scaled bases") {
    Rng rng(211);
    auto k2 = pencil_as_poly(make_K<Rat>(2, 2));
    SUBCASE("identity is trivially fine") {
        CHECK(scaled_basis_check(Matrix<Rat>::identity(4), k2) == CheckOutcome::Holds);
    }
    SUBCASE("random nonsingular keeps minimality and duality") {
        Matrix<Rat> b = random_nonsingular_matrix(rng, 4);
        auto dual = make_Lambda<Rat>(2, 2);
        CHECK(scaled_basis_check(b, k2, &dual) == CheckOutcome::Holds);
    }
    SUBCASE("singular scaling gives no claim") {
        CHECK(scaled_basis_check(Matrix<Rat>(4, 4), k2) == CheckOutcome::NotApplicable);
    }
}

TEST_CASE("polynomial recovery from the block minimal bases partition") {
    Rng rng(223);

    SUBCASE("O1, k = 3, written out") {
        int n = 1;
        auto p = random_poly(rng, n, 3);
        BlockPencil<Rat> o1 = skeleton(p, FamilyTag::O1);
        auto q = recover_Q(o1, 2, 2, make_Lambda<Rat>(1, n), make_Lambda<Rat>(1, n));
        CHECK(q == p.with_grade(3));
    }
    SUBCASE("O1, k in {5, 7}, random rational polynomials") {
        for (int k : {5, 7}) {
            int n = 1 + int(rng() % 3);
            auto p = random_poly(rng, n, k);
            int s = (k - 1) / 2;
            auto q = recover_Q(skeleton(p, FamilyTag::O1), s + 1, s + 1,
                               make_Lambda<Rat>(s, n), make_Lambda<Rat>(s, n));
            CHECK(q == p.with_grade(k));
        }
    }
    SUBCASE("E1 via its natural partition, k = 6") {
        int n = 2;
        auto p = random_poly(rng, n, 6, /*a0 nonsingular*/ true);
        int s = 2;
        auto q = recover_Q(skeleton(p, FamilyTag::E1), s + 1, s + 2,
                           make_Lambda<Rat>(s + 1, n), make_Lambda<Rat>(s, n));
        CHECK(q == p.with_grade(6));
    }
    SUBCASE("partition mismatch rejected") {
        int n = 1;
        auto p = random_poly(rng, n, 3);
        BlockPencil<Rat> o1 = skeleton(p, FamilyTag::O1);
        // wrong body: bottom-right corner no longer zero
        CHECK_THROWS_AS(recover_Q(o1, 1, 1, make_Lambda<Rat>(2, n), make_Lambda<Rat>(0, n)),
                        std::invalid_argument);
    }
}
