#include <doctest.h>

#include <stdexcept>

#include "affinelab/ybe.hpp"
#include "test_support.hpp"

using namespace aflab;

TEST_CASE("solution of the trivial skew brace") {
    FiniteGroup C2 = make_cyclic(2);
    SetSolution r = solution_from(trivial_skew_brace(C2));
    // r(a,b) = (b, b^-∘a∘b) = (b, a) on an abelian group
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            CHECK(r.left(a, b) == b);
            CHECK(r.right(a, b) == a);
        }
    SolutionProperties p = solution_properties(r);
    CHECK(p.ybe);
    CHECK(p.involutive);
    CHECK(p.bijective);
}

TEST_CASE("right-degenerate cubic solution") {
    // a + b = b gives lambda_a(b) = a∘b and constant rho
    SemiBrace S = semibrace_from_affine(inverse_translation_affine(make_cyclic(2)));
    SetSolution r = solution_from(S);
    const FiniteGroup& G = S.mul;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            CHECK(r.left(a, b) == G.op(a, b));
            CHECK(r.right(a, b) == 0);
        }
    SolutionProperties p = solution_properties(r);
    CHECK(p.ybe);
    CHECK(p.left_nondeg);
    CHECK_FALSE(p.right_nondeg);
    CHECK(p.cubic);
    CHECK_FALSE(p.involutive);
}

TEST_CASE("involutive exactly for braces") {
    ComposeResult sq = compose_affine(parity_twist_affine(8), parity_twist_affine(8));
    REQUIRE(sq.ok);
    SemiBrace brace = semibrace_from_affine(*sq.composed);
    CHECK(brace.flags.brace);
    CHECK(check_involutive(solution_from(brace)));

    SemiBrace skew = semibrace_from_affine(sign_flip_affine(6));
    CHECK_FALSE(skew.flags.brace);
    CHECK_FALSE(check_involutive(solution_from(skew)));
}

TEST_CASE("properties across the corpus") {
    for (const auto& S : aflab::testing::semibrace_corpus()) {
        SolutionProperties p = solution_properties(solution_from(S));
        CHECK(p.ybe);
        if (S.flags.left_cancellative) CHECK(p.left_nondeg);
        if (S.flags.skew) {
            CHECK(p.bijective);
            CHECK(p.right_nondeg);
        }
        CHECK(p.involutive == S.flags.brace);
    }
}

TEST_CASE("a corrupted table fails the braid identity") {
    SetSolution r = solution_from(semibrace_from_affine(parity_twist_affine(8)));
    REQUIRE_FALSE(check_ybe(r).has_value());
    std::swap(r.out_left[3], r.out_left[11]);
    CHECK(check_ybe(r).has_value());
}
