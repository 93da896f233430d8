#include <doctest.h>

#include <stdexcept>

#include "affinelab/json_io.hpp"

using namespace aflab;
using nlohmann::json;

TEST_CASE("group files round-trip") {
    FiniteGroup D4 = make_dihedral(4);
    FiniteGroup back = group_from_json(group_to_json(D4));
    CHECK(back.same_table(D4));
    CHECK(back.identity() == D4.identity());
    CHECK(back.name() == "D4");
}

TEST_CASE("group loading validates") {
    json j = {{"name", "broken"}, {"order", 2}, {"table", {{0, 0}, {1, 1}}}};
    CHECK_THROWS_AS(group_from_json(j), std::domain_error);  // no identity
    json shape = {{"name", "broken"}, {"order", 3}, {"table", {{0, 1}, {1, 0}}}};
    CHECK_THROWS_AS(group_from_json(shape), std::invalid_argument);
    json schema = group_to_json(make_cyclic(2));
    schema["schema"] = "affinelab/affine/v1";
    CHECK_THROWS_AS(group_from_json(schema), std::invalid_argument);
}

TEST_CASE("affine files round-trip with identical flags") {
    AffineStructure A = sign_flip_affine(6);
    AffineStructure back = affine_from_json(affine_to_json(A));
    CHECK(back.sigma == A.sigma);
    CHECK(back.flags == A.flags);
}

TEST_CASE("affine files accept constructor specs for the group") {
    json j = {{"group", "cyclic:2"}, {"sigma", {{0, 1}, {1, 0}}}};
    AffineStructure A = affine_from_json(j);
    CHECK(A.flags.cancellative);
    CHECK_FALSE(A.flags.groupal);
}

TEST_CASE("semibrace files round-trip") {
    SemiBrace S = semibrace_from_affine(sign_flip_affine(6));
    SemiBrace back = semibrace_from_json(semibrace_to_json(S));
    CHECK(back.add == S.add);
    CHECK(back.flags == S.flags);

    json bad = semibrace_to_json(S);
    bad["add"][0][0] = 3;  // breaks 0+0 = 0, hence the axioms
    CHECK_THROWS_AS(semibrace_from_json(bad), std::domain_error);
}

TEST_CASE("matched and zappa files round-trip") {
    MatchedSystem M = [] {
        FiniteGroup S = make_cyclic(6), T = make_cyclic(2);
        std::vector<int> alpha(12), beta(12);
        for (int t = 0; t < 2; ++t)
            for (int k = 0; k < 6; ++k)
                alpha[static_cast<size_t>(t) * 6 + k] = t == 0 ? k : (6 - k) % 6;
        for (int k = 0; k < 6; ++k)
            for (int t = 0; t < 2; ++t) beta[static_cast<size_t>(k) * 2 + t] = t;
        return MatchedSystem{S, T, alpha, beta};
    }();
    MatchedSystem M2 = matched_from_json(matched_to_json(M));
    CHECK(M2.alpha == M.alpha);
    CHECK(M2.beta == M.beta);
    CHECK(verify_mps(M2).ok());

    ZappaSystem Z = affine_to_zappa(sign_flip_affine(6));
    ZappaSystem Z2 = zappa_from_json(zappa_to_json(Z));
    CHECK(Z2.eta == Z.eta);
    CHECK(Z2.delta == Z.delta);
}

TEST_CASE("solution emission") {
    SetSolution r = solution_from(trivial_skew_brace(make_cyclic(2)));
    json j = solution_to_json(r);
    CHECK(j.at("size") == 2);
    CHECK(j.at("r").size() == 4);
    CHECK(j.at("r")[1][0] == 1);  // r(0,1) = (1, 0)
    CHECK(j.at("r")[1][1] == 0);
}

TEST_CASE("reports are byte-deterministic") {
    std::string a = affine_to_json(sign_flip_affine(8)).dump(2);
    std::string b = affine_to_json(sign_flip_affine(8)).dump(2);
    CHECK(a == b);
}

TEST_CASE("group spec parsing") {
    CHECK(parse_group_spec("cyclic:6").order() == 6);
    CHECK(parse_group_spec("dihedral:4").order() == 8);
    CHECK(parse_group_spec("symmetric:3").order() == 6);
    CHECK(parse_group_spec("quaternion").order() == 8);
    CHECK(parse_group_spec("trivial").order() == 1);
    FiniteGroup P = parse_group_spec("cyclic:2*symmetric:3");
    CHECK(P.order() == 12);
    CHECK(P.same_table(direct_product(make_cyclic(2), make_symmetric(3))));
    CHECK_THROWS_AS(parse_group_spec("frobnicate:3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_group_spec("cyclic:x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_group_spec(""), std::invalid_argument);
}
