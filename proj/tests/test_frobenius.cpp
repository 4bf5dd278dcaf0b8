#include <doctest.h>

#include "support.hpp"

using namespace fdalg;

namespace {

RationalField qf;

Matrix<RationalField> smash2_gram_expected() {
    // lambda = coefficient of x on basis (1, x, s, xs)
    Matrix<RationalField> g(qf, 4, 4);
    g.at(0, 1) = 1;
    g.at(1, 0) = 1;
    g.at(2, 3) = -1;
    g.at(3, 2) = 1;
    return g;
}

} // namespace

TEST_CASE("gram matrices") {
    SUBCASE("group algebra pairs g with its inverse") {
        auto s3 = build_group_s3(qf);
        auto g = gram_matrix(s3.alg, *s3.frobenius_form);
        // permutation matrix: exactly one 1 per row, at the inverse
        for (int i = 0; i < 6; ++i) {
            int ones = 0;
            for (int j = 0; j < 6; ++j) {
                if (g.at(i, j) == 1) ++ones;
                else CHECK(g.at(i, j) == 0);
            }
            CHECK(ones == 1);
        }
    }
    SUBCASE("smash product, functional = coefficient of x") {
        auto b = build_smash(2, qf);
        CHECK(gram_matrix(b.alg, *b.frobenius_form) == smash2_gram_expected());
    }
    SUBCASE("zero functional gives the zero matrix") {
        auto b = build_smash(2, qf);
        CHECK(gram_matrix(b.alg, b.alg.zero()).is_zero());
    }
}

TEST_CASE("frobenius form search") {
    SUBCASE("group algebra of C2: found immediately") {
        auto c2 = build_group_c2(qf);
        FrobeniusSearchOutcome out;
        auto lambda = find_frobenius_form(c2.alg, 0, 8, &out);
        REQUIRE(lambda.has_value());
        CHECK(out.found);
        CHECK(rank(gram_matrix(c2.alg, *lambda)) == 2);
    }
    SUBCASE("smash product: found and verified") {
        auto b = build_smash(2, qf);
        auto lambda = find_frobenius_form(b.alg, 1, 16);
        REQUIRE(lambda.has_value());
        CHECK(rank(gram_matrix(b.alg, *lambda)) == 4);
    }
    SUBCASE("upper triangular 2x2 matrices are not Frobenius") {
        auto ut = testsupport::upper_triangular(qf);
        // every Gram matrix of this algebra is singular; scan a grid first
        for (int a = -2; a <= 2; ++a)
            for (int b = -2; b <= 2; ++b)
                for (int c = -2; c <= 2; ++c) {
                    Vec<RationalField> lam = {mpq_class(a), mpq_class(b), mpq_class(c)};
                    CHECK(rank(gram_matrix(ut, lam)) < 3);
                }
        for (std::uint64_t seed = 0; seed < 4; ++seed) {
            FrobeniusSearchOutcome out;
            CHECK_FALSE(find_frobenius_form(ut, seed, 32, &out).has_value());
            CHECK(out.trials_used == 32);
        }
    }
    CHECK_THROWS_AS((void)find_frobenius_form(testsupport::upper_triangular(qf), 0, 0),
                    input_error);
}

TEST_CASE("dual bases") {
    SUBCASE("group algebra duals are inverses") {
        auto c2 = build_group_c2(qf);
        auto frob = dual_bases(c2.alg, *c2.frobenius_form);
        CHECK(vec_eq(qf, frob.dual_right[0], c2.alg.basis_element(0)));
        CHECK(vec_eq(qf, frob.dual_right[1], c2.alg.basis_element(1))); // s^-1 = s
    }
    SUBCASE("smash duals have entries in {0, +-1}") {
        auto b = build_smash(2, qf);
        auto frob = dual_bases(b.alg, *b.frobenius_form);
        std::vector<Vec<RationalField>> expected = {
            {0, mpq_class(1), 0, 0},   // h_1 = x
            {mpq_class(1), 0, 0, 0},   // h_x = 1
            {0, 0, 0, mpq_class(-1)},  // h_s = -xs
            {0, 0, mpq_class(1), 0}};  // h_xs = s
        for (int j = 0; j < 4; ++j) CHECK(vec_eq(qf, frob.dual_right[j], expected[j]));
    }
    SUBCASE("degenerate functional is rejected") {
        auto b = build_smash(2, qf);
        CHECK_THROWS_AS((void)dual_bases(b.alg, b.alg.zero()), input_error);
    }
}

TEST_CASE("nakayama automorphism") {
    SUBCASE("symmetric form gives the identity") {
        auto s3 = build_group_s3(qf);
        auto frob = dual_bases(s3.alg, *s3.frobenius_form);
        auto nak = nakayama_automorphism(s3.alg, frob);
        CHECK(nak.automorphism == Matrix<RationalField>::identity(qf, 6));
        CHECK(nak.order == 1);
    }
    SUBCASE("smash product flips the group part") {
        auto b = build_smash(2, qf);
        auto frob = dual_bases(b.alg, *b.frobenius_form);
        auto nak = nakayama_automorphism(b.alg, frob);
        Matrix<RationalField> expected = Matrix<RationalField>::identity(qf, 4);
        expected.at(2, 2) = -1;
        expected.at(3, 3) = -1;
        CHECK(nak.automorphism == expected);
        CHECK(nak.order == 2);
    }
    SUBCASE("rescaling the form leaves the automorphism and maps unchanged") {
        auto b = build_smash(2, qf);
        auto frob1 = dual_bases(b.alg, *b.frobenius_form);
        Vec<RationalField> scaled = vec_scale(qf, mpq_class(-7, 3), *b.frobenius_form);
        auto frob2 = dual_bases(b.alg, scaled);
        CHECK(nakayama_automorphism(b.alg, frob1).automorphism ==
              nakayama_automorphism(b.alg, frob2).automorphism);
        CHECK(higman_map(b.alg, frob1).map == higman_map(b.alg, frob2).map);
        CHECK(casimir_map(b.alg, frob1).map == casimir_map(b.alg, frob2).map);
    }
}

TEST_CASE("twisted centres") {
    auto b = build_smash(2, qf);
    auto frob = dual_bases(b.alg, *b.frobenius_form);
    auto nak = nakayama_automorphism(b.alg, frob);
    SUBCASE("identity twist recovers the centre") {
        auto z = twisted_centre(b.alg, Matrix<RationalField>::identity(qf, 4));
        CHECK(z == centre(b.alg));
    }
    SUBCASE("smash twisted centre is two dimensional and contains x") {
        auto tw = twisted_centre(b.alg, nak.automorphism);
        CHECK(tw.dim() == 2);
        CHECK(tw.contains(b.alg.basis_element(b.alg.label_index("x"))));
    }
    SUBCASE("class algebra for a group algebra with the identity twist") {
        auto s3 = build_group_s3(qf);
        auto tw = twisted_centre(s3.alg, Matrix<RationalField>::identity(qf, 6));
        CHECK(tw == centre(s3.alg));
        CHECK(tw.dim() == 3);
    }
    SUBCASE("non-automorphism input is rejected") {
        Matrix<RationalField> bad(qf, 4, 4); // singular
        CHECK_THROWS_AS((void)twisted_centre(b.alg, bad), input_error);
    }
}

TEST_CASE("higman and casimir maps") {
    SUBCASE("C2 group algebra: tau is the full class sum") {
        auto c2 = build_group_c2(qf);
        auto frob = dual_bases(c2.alg, *c2.frobenius_form);
        auto tau = higman_map(c2.alg, frob);
        CHECK(tau.image.dim() == 2);
        CHECK(tau.image == centre(c2.alg));
        auto q = casimir_map(c2.alg, frob);
        CHECK(q.image.dim() == 2);
        CHECK(centre(c2.alg).contains(q.image));
        // symmetric form: tau and q agree
        CHECK(tau.map == q.map);
    }
    SUBCASE("smash product: one-dimensional tau image, zero casimir") {
        auto b = build_smash(2, qf);
        auto frob = dual_bases(b.alg, *b.frobenius_form);
        auto tau = higman_map(b.alg, frob);
        CHECK(tau.image.dim() == 1);
        CHECK(tau.image.contains(b.alg.basis_element(b.alg.label_index("x"))));
        CHECK_FALSE(centre(b.alg).contains(tau.image));
        auto q = casimir_map(b.alg, frob);
        CHECK(q.map.is_zero());
        CHECK(q.image.dim() == 0);
        // linearity at zero
        CHECK(vec_is_zero(qf, tau.map.apply(b.alg.zero())));
    }
}

TEST_CASE("dual basis independence under a change of basis") {
    SplitMix64 rng(41);
    for (auto bundle : {build_smash(2, qf), build_rrca_c2(mpq_class(0), qf)}) {
        const auto& a = bundle.alg;
        auto frob = dual_bases(a, *bundle.frobenius_form);
        auto tau = higman_map(a, frob);
        auto q = casimir_map(a, frob);
        for (int t = 0; t < 4; ++t) {
            auto p = testsupport::random_invertible(qf, rng, a.dim());
            auto pinv = *inverse(p);
            auto conj = testsupport::change_basis(a, p);
            REQUIRE(validate_algebra(conj).ok);
            auto lam2 = testsupport::change_basis_functional(qf, *bundle.frobenius_form, p);
            auto frob2 = dual_bases(conj, lam2);
            CHECK(higman_map(conj, frob2).map == pinv.mul(tau.map).mul(p));
            CHECK(casimir_map(conj, frob2).map == pinv.mul(q.map).mul(p));
        }
    }
}

TEST_CASE("nakayama fixes the centre pointwise") {
    for (auto bundle : {build_smash(2, qf), build_smash(3, qf), build_group_s3(qf)}) {
        auto frob = dual_bases(bundle.alg, *bundle.frobenius_form);
        auto nak = nakayama_automorphism(bundle.alg, frob);
        auto z = centre(bundle.alg);
        for (int i = 0; i < z.dim(); ++i) {
            Vec<RationalField> zi = z.basis_vector(i);
            CHECK(vec_eq(qf, nak.automorphism.apply(zi), zi));
        }
    }
}
