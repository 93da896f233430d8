#include <doctest.h>

#include <stdexcept>

#include "affinelab/affine.hpp"
#include "affinelab/semibrace.hpp"
#include "test_support.hpp"

using namespace aflab;

TEST_CASE("anti-homomorphism check") {
    FiniteGroup C6 = make_cyclic(6);
    CHECK_FALSE(check_anti_hom(C6, trivial_affine(C6).sigma).has_value());
    CHECK_FALSE(check_anti_hom(C6, sign_flip_affine(6).sigma).has_value());

    // a 3-cycle in the row of g with identity rows elsewhere breaks the law
    FiniteGroup C4 = make_cyclic(4);
    std::vector<int> sigma = trivial_affine(C4).sigma;
    sigma[4 + 0] = 1;
    sigma[4 + 1] = 2;
    sigma[4 + 2] = 0;
    auto w = check_anti_hom(C4, sigma);
    REQUIRE(w.has_value());

    CHECK_THROWS_AS(check_anti_hom(C4, std::vector<int>{0, 1, 2}), std::invalid_argument);
}

TEST_CASE("defining identity") {
    CHECK_FALSE(check_affine_identity(make_cyclic(4), inverse_translation_affine(make_cyclic(4)).sigma)
                    .has_value());
    CHECK_FALSE(check_affine_identity(make_cyclic(8), parity_twist_affine(8).sigma).has_value());
    FiniteGroup S3 = make_symmetric(3);
    SelfMap zero(6, std::vector<int>(6, S3.identity()));
    CHECK_FALSE(
        check_affine_identity(S3, constant_endomorphism_affine(S3, zero).sigma).has_value());
}

TEST_CASE("classification") {
    AffineStructure inv2 = inverse_translation_affine(make_cyclic(2));
    CHECK(inv2.flags.cancellative);
    CHECK_FALSE(inv2.flags.groupal);

    AffineStructure sf6 = sign_flip_affine(6);
    CHECK(sf6.flags.groupal);
    CHECK_FALSE(sf6.flags.abelian);

    AffineStructure sf4 = sign_flip_affine(4);
    CHECK(sf4.flags.groupal);
    CHECK(sf4.flags.abelian);
}

TEST_CASE("flag implications over the corpus") {
    for (const auto& A : aflab::testing::affine_corpus()) {
        CHECK(A.flags.valid());
        if (A.flags.abelian) CHECK(A.flags.groupal);
        if (A.flags.groupal) CHECK(A.flags.cancellative);
        CHECK(check_sigma0_fixes_zero(A.group, A.sigma));
    }
}

TEST_CASE("sigma_0(0) = 0 can fail only off the verified path") {
    // swap on C2 as the identity row: not an affine structure, and 0 moves
    FiniteGroup C2 = make_cyclic(2);
    std::vector<int> sigma{1, 0, 0, 1};
    CHECK_FALSE(check_sigma0_fixes_zero(C2, sigma));
    CHECK_FALSE(verify_affine(C2, sigma).valid());
}

TEST_CASE("sigma rows are additive endomorphisms of the derived sum") {
    for (const auto& A : aflab::testing::affine_corpus()) {
        SemiBrace S = semibrace_from_affine(A);
        int n = A.n();
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    CHECK(A.sig(a, S.plus(b, c)) == S.plus(A.sig(a, b), A.sig(a, c)));
    }
}

TEST_CASE("transport") {
    AffineStructure sf6 = sign_flip_affine(6);
    const FiniteGroup& C6 = sf6.group;

    SUBCASE("identity map keeps the table") {
        CHECK(transport(sf6, identity_hom(C6)).sigma == sf6.sigma);
    }
    SUBCASE("negation gives a valid groupal structure, equivalent to the original") {
        GroupHom f = make_hom(C6, C6, {0, 5, 4, 3, 2, 1});
        AffineStructure moved = transport(sf6, f);
        CHECK(moved.flags.groupal);
        CHECK(is_homomorphic_via(sf6, moved, f).holds);
    }
    SUBCASE("transport along f then f^-1 is the identity") {
        for (const auto& A : aflab::testing::affine_corpus()) {
            auto auts = A.n() <= 12 ? automorphisms(A.group) : std::vector<Permutation>{};
            for (const auto& p : auts) {
                GroupHom f{A.group, A.group, p.img};
                GroupHom finv{A.group, A.group, inverse_of(p).img};
                CHECK(transport(transport(A, f), finv).sigma == A.sigma);
            }
        }
    }
    SUBCASE("non-bijective maps are rejected") {
        FiniteGroup C3 = make_cyclic(3);
        GroupHom proj = make_hom(C6, C3, {0, 1, 2, 0, 1, 2});
        CHECK_THROWS_AS(transport(sf6, proj), std::invalid_argument);
    }
}

TEST_CASE("homomorphic-via check") {
    FiniteGroup C6 = make_cyclic(6);
    AffineStructure triv = trivial_affine(C6);
    AffineStructure sf = sign_flip_affine(6);

    CHECK(is_homomorphic_via(triv, triv, identity_hom(C6)).holds);

    // the constant-identity homomorphism relates any two groupal structures
    GroupHom zero = make_hom(C6, C6, std::vector<int>(6, 0));
    CHECK(is_homomorphic_via(sf, triv, zero).holds);
    CHECK(is_homomorphic_via(triv, sf, zero).holds);

    HomomorphicCheck bad = is_homomorphic_via(sf, triv, identity_hom(C6));
    CHECK_FALSE(bad.holds);
    REQUIRE(bad.witness.has_value());
    CHECK(bad.witness->a == 1);
    CHECK(bad.witness->b == 1);
}

TEST_CASE("equivalence classes") {
    FiniteGroup C6 = make_cyclic(6);
    AffineStructure triv = trivial_affine(C6);
    AffineStructure sf = sign_flip_affine(6);
    GroupHom neg = make_hom(C6, C6, {0, 5, 4, 3, 2, 1});
    AffineStructure moved = transport(sf, neg);

    auto one = equivalence_classes({triv});
    CHECK(one.size() == 1);

    auto two = equivalence_classes({sf, moved});
    CHECK(two.size() == 1);
    CHECK(two[0].members.size() == 2);

    auto split = equivalence_classes({triv, sf});
    CHECK(split.size() == 2);

    // canonical representative is orbit-invariant
    auto auts = automorphisms(C6);
    CHECK(canonical_sigma(sf, auts) == canonical_sigma(moved, auts));
}

TEST_CASE("composition of structures") {
    FiniteGroup C6 = make_cyclic(6);
    AffineStructure triv = trivial_affine(C6);

    SUBCASE("trivial with trivial") {
        ComposeResult r = compose_affine(triv, triv);
        REQUIRE(r.ok);
        CHECK(r.composed->sigma == triv.sigma);
    }
    SUBCASE("parity twist squared on C8") {
        AffineStructure om = parity_twist_affine(8);
        ComposeResult r = compose_affine(om, om);
        REQUIRE(r.ok);
        CHECK(r.composed->flags.groupal);
        CHECK(r.composed->flags.abelian);
    }
    SUBCASE("sign flip with parity twist on C8 fails (c1) at (1,1)") {
        ComposeResult r = compose_affine(sign_flip_affine(8), parity_twist_affine(8));
        CHECK_FALSE(r.ok);
        REQUIRE(r.c1_witness.has_value());
        CHECK(r.c1_witness->a == 1);
        CHECK(r.c1_witness->b == 1);
        REQUIRE(r.c2_witness.has_value());
        REQUIRE(r.c2prime_witness.has_value());
    }
    SUBCASE("groups must match") {
        CHECK_THROWS_AS(compose_affine(triv, trivial_affine(make_cyclic(4))),
                        std::invalid_argument);
    }
}

TEST_CASE("the one structure on the trivial group") {
    AffineStructure A = trivial_affine(make_cyclic(1));
    CHECK(A.flags.cancellative);
    CHECK(A.flags.groupal);
    CHECK(A.flags.abelian);
}
