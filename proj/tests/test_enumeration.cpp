#include <doctest.h>

#include <stdexcept>

#include <filesystem>
#include <numeric>
#include <random>
#include <set>

#include "affinelab/enumeration.hpp"
#include "affinelab/semibrace.hpp"

using namespace aflab;

namespace {

std::set<std::vector<int>> tables_of(const std::vector<AffineStructure>& v) {
    std::set<std::vector<int>> out;
    for (const auto& a : v) out.insert(a.sigma);
    return out;
}

}  // namespace

TEST_CASE("naive search on the smallest groups") {
    CHECK(enumerate_naive(make_cyclic(1), StructureKind::All).size() == 1);

    // frozen counts for C2/C3/C4 per kind
    struct Row {
        int m, all, canc, groupal, abelian;
    };
    for (Row r : {Row{2, 3, 2, 1, 1}, Row{3, 3, 2, 1, 1}, Row{4, 6, 3, 2, 2}}) {
        FiniteGroup G = make_cyclic(r.m);
        CHECK(enumerate_naive(G, StructureKind::All).size() == static_cast<size_t>(r.all));
        CHECK(enumerate_naive(G, StructureKind::Cancellative).size() == static_cast<size_t>(r.canc));
        CHECK(enumerate_naive(G, StructureKind::Groupal).size() == static_cast<size_t>(r.groupal));
        CHECK(enumerate_naive(G, StructureKind::Abelian).size() == static_cast<size_t>(r.abelian));
    }
    CHECK_THROWS_AS(enumerate_naive(make_cyclic(5), StructureKind::All), std::invalid_argument);

    // the three tables on C2 are the constant-identity, trivial and
    // inverse-translation structures
    auto two = tables_of(enumerate_naive(make_cyclic(2), StructureKind::All));
    CHECK(two.count({0, 0, 0, 0}) == 1);
    CHECK(two.count({0, 1, 0, 1}) == 1);
    CHECK(two.count({0, 1, 1, 0}) == 1);
}

TEST_CASE("generator search agrees with the oracle") {
    for (int m : {2, 3, 4}) {
        FiniteGroup G = make_cyclic(m);
        for (StructureKind k : {StructureKind::All, StructureKind::Cancellative,
                                StructureKind::Groupal, StructureKind::Abelian})
            CHECK(tables_of(enumerate_affine(G, k)) == tables_of(enumerate_naive(G, k)));
    }
}

TEST_CASE("groupal structures on C6") {
    FiniteGroup C6 = make_cyclic(6);
    auto found = tables_of(enumerate_affine(C6, StructureKind::Groupal));
    CHECK(found.size() == 3);
    CHECK(found.count(trivial_affine(C6).sigma) == 1);
    CHECK(found.count(sign_flip_affine(6).sigma) == 1);
    CHECK(found.count(parity_twist_affine(6).sigma) == 1);
    // conjugation structures collapse to the trivial one on an abelian group
    FiniteGroup G = make_cyclic(6);
    std::vector<int> img(6);
    for (int k = 0; k < 6; ++k) img[static_cast<size_t>(k)] = (3 * k) % 6;
    CHECK(found.count(conjugation_affine(G, SelfMap(6, img)).sigma) == 1);
}

TEST_CASE("frozen counts on the larger cyclic groups") {
    // recorded regression values, cross-validated by the relabeling and
    // oracle properties below
    FiniteGroup C6 = make_cyclic(6);
    CHECK(enumerate_affine(C6, StructureKind::All).size() == 19);
    CHECK(enumerate_affine(C6, StructureKind::Cancellative).size() == 6);
    CHECK(enumerate_affine(C6, StructureKind::Abelian).size() == 1);
    CHECK(enumerate_affine(make_cyclic(5), StructureKind::All).size() == 3);
    FiniteGroup C8 = make_cyclic(8);
    CHECK(enumerate_affine(C8, StructureKind::Cancellative).size() == 7);
    CHECK(enumerate_affine(C8, StructureKind::Groupal).size() == 6);
    CHECK(enumerate_affine(C8, StructureKind::Abelian).size() == 2);
    // the square of the parity twist is one of the two abelian structures
    auto ab8 = tables_of(enumerate_affine(C8, StructureKind::Abelian));
    ComposeResult sq = compose_affine(parity_twist_affine(8), parity_twist_affine(8));
    REQUIRE(sq.ok);
    CHECK(ab8.count(sq.composed->sigma) == 1);
    CHECK(ab8.count(trivial_affine(C8).sigma) == 1);
}

TEST_CASE("abelian structures on C4 include the sign flip") {
    auto found = tables_of(enumerate_affine(make_cyclic(4), StructureKind::Abelian));
    CHECK(found.count(sign_flip_affine(4).sigma) == 1);
}

TEST_CASE("all enumerated structures round-trip through the semi-brace") {
    for (int m : {2, 3, 4, 6}) {
        FiniteGroup G = make_cyclic(m);
        for (const auto& A : enumerate_affine(G, StructureKind::All))
            CHECK(affine_from_semibrace(semibrace_from_affine(A)).sigma == A.sigma);
    }
}

TEST_CASE("seed shuffles exploration order only") {
    FiniteGroup C4 = make_cyclic(4);
    EnumerateOptions a, b;
    b.seed = 12345;
    b.jobs = 2;
    auto lhs = enumerate_affine(C4, StructureKind::All, a);
    auto rhs = enumerate_affine(C4, StructureKind::All, b);
    REQUIRE(lhs.size() == rhs.size());
    for (size_t i = 0; i < lhs.size(); ++i) CHECK(lhs[i].sigma == rhs[i].sigma);
}

TEST_CASE("bound guards") {
    CHECK_THROWS_AS(enumerate_affine(make_cyclic(9), StructureKind::All), std::invalid_argument);
    EnumerateOptions tight;
    tight.max_candidates = 10;
    CHECK_THROWS_AS(enumerate_affine(make_cyclic(4), StructureKind::All, tight),
                    std::invalid_argument);
}

TEST_CASE("census of C2 and C6") {
    CensusResult r1 = census(make_cyclic(1), StructureKind::All);
    CHECK(r1.structure_count == 1);
    CHECK(r1.classes.size() == 1);

    CensusResult r2 = census(make_cyclic(2), StructureKind::All);
    CHECK(r2.structure_count == 3);
    CHECK(r2.classes.size() == 3);

    CensusResult r6 = census(make_cyclic(6), StructureKind::Groupal);
    CHECK(r6.structure_count == 3);
    CHECK(r6.classes.size() == 3);
    std::set<std::string> additive;
    for (const auto& c : r6.classes) {
        additive.insert(c.additive_iso);
        CHECK(c.ybe);
        CHECK(c.left_nondeg);
    }
    // the trivial structure and the two dihedral-sum structures
    CHECK(additive == std::set<std::string>{"C6", "D3"});
}

TEST_CASE("structure counts are invariant under random relabelings") {
    // hand-rolled generator: seeded permutations of the carrier
    std::mt19937 rng(0xaf1abu);
    for (int m : {3, 4}) {
        FiniteGroup G = make_cyclic(m);
        std::vector<size_t> base;
        for (StructureKind k : {StructureKind::All, StructureKind::Cancellative,
                                StructureKind::Groupal, StructureKind::Abelian})
            base.push_back(enumerate_affine(G, k).size());
        std::vector<int> p(static_cast<size_t>(m));
        std::iota(p.begin(), p.end(), 0);
        for (int trial = 0; trial < 4; ++trial) {
            std::shuffle(p.begin(), p.end(), rng);
            FiniteGroup R = relabel(G, Permutation(m, p));
            size_t i = 0;
            for (StructureKind k : {StructureKind::All, StructureKind::Cancellative,
                                    StructureKind::Groupal, StructureKind::Abelian})
                CHECK(enumerate_affine(R, k).size() == base[i++]);
        }
    }
}

TEST_CASE("census counts are invariant under relabeling") {
    Permutation p(6, {2, 4, 0, 5, 1, 3});
    FiniteGroup C6 = make_cyclic(6);
    FiniteGroup R = relabel(C6, p);
    CHECK(census(R, StructureKind::Groupal).classes.size() ==
          census(C6, StructureKind::Groupal).classes.size());

    Permutation q(4, {3, 1, 0, 2});
    FiniteGroup C4 = make_cyclic(4);
    FiniteGroup R4 = relabel(C4, q);
    for (StructureKind k : {StructureKind::All, StructureKind::Cancellative,
                            StructureKind::Groupal, StructureKind::Abelian})
        CHECK(census(R4, k).classes.size() == census(C4, k).classes.size());
}

TEST_CASE("census cache round-trips") {
    std::filesystem::path dir =
        std::filesystem::temp_directory_path() / "affinelab-census-test";
    std::filesystem::remove_all(dir);
    CensusResult fresh = census(make_cyclic(4), StructureKind::All, {}, dir.string());
    CHECK_FALSE(fresh.from_cache);
    CensusResult again = census(make_cyclic(4), StructureKind::All, {}, dir.string());
    CHECK(again.from_cache);
    CHECK(again.structure_count == fresh.structure_count);
    REQUIRE(again.classes.size() == fresh.classes.size());
    for (size_t i = 0; i < fresh.classes.size(); ++i)
        CHECK(again.classes[i].canonical_sigma == fresh.classes[i].canonical_sigma);
    // a different group does not hit the C4 entry
    CHECK_FALSE(census(make_cyclic(3), StructureKind::All, {}, dir.string()).from_cache);
    std::filesystem::remove_all(dir);
}
