#include <doctest.h>

#include <stdexcept>

#include "affinelab/semibrace.hpp"
#include "test_support.hpp"

using namespace aflab;

TEST_CASE("trivial and almost trivial skew braces") {
    FiniteGroup S3 = make_symmetric(3);
    SemiBrace triv = trivial_skew_brace(S3);
    CHECK(triv.flags.skew);
    CHECK_FALSE(triv.flags.brace);  // S3 is non-abelian
    CHECK(triv.flags.biskew);
    CHECK(triv.flags.lambda_homomorphic);

    SemiBrace at = almost_trivial_skew_brace(S3);
    CHECK(at.flags.skew);
    CHECK_FALSE(at.flags.brace);
    CHECK(at.flags.biskew);

    SemiBrace ab = trivial_skew_brace(make_cyclic(5));
    CHECK(ab.flags.brace);
}

TEST_CASE("right projection sum on C2") {
    // a + b = b, derived from the inverse-translation structure
    SemiBrace S = semibrace_from_affine(inverse_translation_affine(make_cyclic(2)));
    CHECK(S.flags.semibrace);
    CHECK(S.flags.left_cancellative);
    CHECK_FALSE(S.flags.skew);  // a + 0 = 0 != a for a != 0
    CHECK(S.plus(1, 0) == 0);
    CHECK(S.plus(0, 1) == 1);
}

TEST_CASE("verify rejects broken sums") {
    FiniteGroup C4 = make_cyclic(4);
    // a sum that is not associative
    std::vector<int> bad(16, 0);
    bad[0 * 4 + 1] = 2;
    SemiBraceReport rep = verify_semibrace(C4, bad);
    CHECK_FALSE(rep.valid());
    CHECK_THROWS_AS(semibrace_from_tables(C4, bad), std::domain_error);
}

TEST_CASE("sum of the sign-flip structure") {
    SemiBrace S = semibrace_from_affine(sign_flip_affine(6));
    const FiniteGroup& C6 = S.mul;
    CHECK(S.flags.skew);
    CHECK_FALSE(S.flags.brace);
    for (int k = 0; k < 6; ++k)
        for (int l = 0; l < 6; ++l)
            CHECK(S.plus(k, l) == ((k % 2 == 0 ? k + l : k - l) % 6 + 6) % 6);
    CHECK(S.plus(1, 2) == 5);  // g + g^2 = g^-1
    CHECK(C6.op(0, 0) == 0);
}

TEST_CASE("structure of the almost trivial skew brace is conjugation") {
    FiniteGroup S3 = make_symmetric(3);
    AffineStructure A = affine_from_semibrace(almost_trivial_skew_brace(S3));
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) CHECK(A.sig(a, b) == S3.op(S3.op(S3.inv(a), b), a));
    // and the trivial skew brace gives the trivial structure
    FiniteGroup C4 = make_cyclic(4);
    CHECK(affine_from_semibrace(trivial_skew_brace(C4)).sigma == trivial_affine(C4).sigma);
}

TEST_CASE("derived structure round-trips") {
    for (const auto& A : aflab::testing::affine_corpus()) {
        SemiBrace S = semibrace_from_affine(A);
        CHECK(affine_from_semibrace(S).sigma == A.sigma);
        if (A.flags.cancellative) CHECK(S.flags.left_cancellative);
        if (A.flags.groupal) CHECK(S.flags.skew);
        if (A.flags.abelian) CHECK(S.flags.brace);
    }
    for (const auto& S : aflab::testing::semibrace_corpus()) {
        SemiBrace back = semibrace_from_affine(affine_from_semibrace(S));
        CHECK(back.add == S.add);
    }
}

TEST_CASE("lambda and rho maps") {
    SUBCASE("trivial skew brace: lambda is the identity, rho is conjugation") {
        FiniteGroup S3 = make_symmetric(3);
        SemiBrace S = trivial_skew_brace(S3);
        LambdaRho lr = lambda_rho(S);
        for (int a = 0; a < 6; ++a)
            for (int b = 0; b < 6; ++b) {
                CHECK(lr.lambda[static_cast<size_t>(a) * 6 + b] == b);
                CHECK(lr.rho[static_cast<size_t>(b) * 6 + a] == S3.op(S3.op(S3.inv(b), a), b));
            }
    }
    SUBCASE("sign-flip brace satisfies all five properties") {
        SemiBrace S = semibrace_from_affine(sign_flip_affine(6));
        LambdaRhoReport rep = lambda_rho_report(S);
        CHECK(rep.lambda_additive_endo);
        CHECK(rep.lambda_hom_into_maps);
        CHECK(rep.lambda_bijective);
        CHECK(rep.rho_anti_hom);
        CHECK(rep.rho_bijective);
        CHECK(rep.matches_flags);
    }
    SUBCASE("constant endomorphism: lambda is constant, hence not bijective") {
        FiniteGroup C6 = make_cyclic(6);
        std::vector<int> img(6);
        for (int k = 0; k < 6; ++k) img[static_cast<size_t>(k)] = (4 * k) % 6;
        SemiBrace S = semibrace_from_affine(constant_endomorphism_affine(C6, SelfMap(6, img)));
        LambdaRhoReport rep = lambda_rho_report(S);
        CHECK_FALSE(rep.lambda_bijective);
        CHECK(rep.matches_flags);
    }
    SUBCASE("flag-conditioned expectations hold on the corpus") {
        for (const auto& S : aflab::testing::semibrace_corpus())
            CHECK(lambda_rho_report(S).matches_flags);
    }
}

TEST_CASE("bi-skew braces") {
    SUBCASE("trivial, almost trivial and sign-flip are bi-skew") {
        CHECK(is_biskew(trivial_skew_brace(make_quaternion())).biskew);
        CHECK(is_biskew(almost_trivial_skew_brace(make_symmetric(3))).biskew);
        CHECK(is_biskew(semibrace_from_affine(sign_flip_affine(6))).biskew);
    }
    SUBCASE("parity twist on C8 is not, with the expected witness") {
        AffineStructure A = parity_twist_affine(8);
        SemiBrace S = semibrace_from_affine(A);
        BiskewReport rep = is_biskew(S);
        CHECK_FALSE(rep.biskew);
        REQUIRE(rep.witness.has_value());
        CHECK(rep.witness->a == 1);
        CHECK(rep.witness->b == 1);
        CHECK(rep.witness->c == 1);
        // sigma_g(g∘g) = g^2 while sigma_g(g)∘sigma_g(g) = g^6
        const FiniteGroup& G = A.group;
        CHECK(A.sig(1, G.op(1, 1)) == 2);
        CHECK(G.op(A.sig(1, 1), A.sig(1, 1)) == 6);
    }
    SUBCASE("non-skew input is rejected") {
        SemiBrace S = semibrace_from_affine(inverse_translation_affine(make_cyclic(4)));
        CHECK_THROWS_AS(is_biskew(S), std::invalid_argument);
    }
    SUBCASE("bi-skew braces satisfy sigma_{a^-} = sigma_{-a}") {
        for (const auto& S : aflab::testing::semibrace_corpus()) {
            if (!S.flags.skew || !S.flags.biskew) continue;
            AffineStructure A = affine_from_semibrace(S);
            for (int a = 0; a < S.n(); ++a)
                for (int x = 0; x < S.n(); ++x)
                    CHECK(A.sig(S.mul.inv(a), x) == A.sig(S.neg(a), x));
        }
    }
}

TEST_CASE("bi-skew dual structure") {
    SUBCASE("trivial skew brace dualizes to the trivial structure") {
        FiniteGroup C4 = make_cyclic(4);
        AffineStructure psi = biskew_dual_affine(trivial_skew_brace(C4));
        CHECK(psi.sigma == trivial_affine(C4).sigma);
    }
    SUBCASE("sign-flip on C6: the swapped structure lives on a dihedral group") {
        SemiBrace S = semibrace_from_affine(sign_flip_affine(6));
        AffineStructure psi = biskew_dual_affine(S);
        CHECK(psi.flags.groupal);
        CHECK(find_isomorphism(psi.group, make_dihedral(3)).has_value());
    }
    SUBCASE("dual equals lambda tablewise for every bi-skew entry") {
        for (const auto& S : aflab::testing::semibrace_corpus()) {
            if (!S.flags.skew || !S.flags.biskew) continue;
            AffineStructure psi = biskew_dual_affine(S);
            CHECK(psi.sigma == lambda_rho(S).lambda);
        }
    }
    SUBCASE("rejects non-bi-skew input") {
        CHECK_THROWS_AS(biskew_dual_affine(semibrace_from_affine(parity_twist_affine(8))),
                        std::invalid_argument);
    }
}

TEST_CASE("lambda-homomorphic braces") {
    CHECK(is_lambda_homomorphic(trivial_skew_brace(make_symmetric(3))).holds);

    // the conjugation structure on C2 x S3 separates at (1,2,1)
    SemiBrace S = semibrace_from_affine(e7_conjugation_structure());
    LambdaHomReport rep = is_lambda_homomorphic(S);
    CHECK_FALSE(rep.holds);
    REQUIRE(rep.witness.has_value());
    CHECK(rep.witness->a == 1);
    CHECK(rep.witness->b == 2);
    CHECK(rep.witness->c == 1);
}

TEST_CASE("opposite skew brace") {
    FiniteGroup S3 = make_symmetric(3);
    SemiBrace triv = trivial_skew_brace(S3);
    SemiBrace opp = opposite(triv);
    CHECK(opp.add == almost_trivial_skew_brace(S3).add);
    CHECK(opposite(opp).add == triv.add);

    // on C8 the parity twist is the opposite of the sign flip
    SemiBrace sf = semibrace_from_affine(sign_flip_affine(8));
    SemiBrace pt = semibrace_from_affine(parity_twist_affine(8));
    CHECK(opposite(sf).add == pt.add);

    CHECK_THROWS_AS(opposite(semibrace_from_affine(inverse_translation_affine(make_cyclic(4)))),
                    std::invalid_argument);
}

TEST_CASE("semi-brace isomorphism") {
    FiniteGroup C6 = make_cyclic(6);
    SemiBrace triv = trivial_skew_brace(C6);
    SemiBrace sf = semibrace_from_affine(sign_flip_affine(6));

    CHECK(find_semibrace_isomorphism(triv, triv).has_value());
    CHECK_FALSE(find_semibrace_isomorphism(triv, sf).has_value());

    // two transports of one structure give isomorphic semi-braces
    GroupHom neg = make_hom(C6, C6, {0, 5, 4, 3, 2, 1});
    SemiBrace moved = semibrace_from_affine(transport(sign_flip_affine(6), neg));
    CHECK(find_semibrace_isomorphism(sf, moved).has_value());
}

TEST_CASE("additive reports") {
    CHECK(additive_report(semibrace_from_affine(sign_flip_affine(6))).iso_type == "D3");
    CHECK(additive_report(trivial_skew_brace(make_cyclic(4))).iso_type == "C4");
    CHECK(additive_report(trivial_skew_brace(make_quaternion())).iso_type == "Q8");
    CHECK(additive_report(trivial_skew_brace(direct_product(make_cyclic(2), make_cyclic(2))))
              .iso_type == "C2xC2");
    AdditiveReport nonskew =
        additive_report(semibrace_from_affine(inverse_translation_affine(make_cyclic(4))));
    CHECK_FALSE(nonskew.is_group);
    CHECK(nonskew.iso_type == "unidentified");
}
