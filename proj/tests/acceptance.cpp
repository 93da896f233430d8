// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Every tolerance is exact table equality; the runtime budgets are
// part of the criteria and asserted.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "affinelab/catalog.hpp"
#include "affinelab/enumeration.hpp"
#include "affinelab/products.hpp"
#include "affinelab/semibrace.hpp"
#include "affinelab/ybe.hpp"

using namespace aflab;

namespace {

int g_failures = 0;

struct Criterion {
    std::string label;
    std::vector<std::string> problems;
    double budget_seconds = 0.0;  // 0 = no stated budget

    void require(bool ok, const std::string& what) {
        if (!ok) problems.push_back(what);
    }
};

void run_criterion(int number, const std::string& label, double budget_seconds,
                   const std::function<void(Criterion&)>& body) {
    Criterion c{label, {}, budget_seconds};
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.problems.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (budget_seconds > 0 && secs > budget_seconds)
        c.problems.push_back("runtime " + std::to_string(secs) + "s exceeds " +
                             std::to_string(budget_seconds) + "s");
    bool ok = c.problems.empty();
    if (!ok) ++g_failures;
    std::printf("[%s] criterion %d: %s (%.2fs)\n", ok ? "PASS" : "FAIL", number, label.c_str(),
                secs);
    for (const auto& p : c.problems) std::printf("       %s\n", p.c_str());
    std::fflush(stdout);
}

std::vector<FiniteGroup> groups_up_to_order_6() {
    std::vector<FiniteGroup> gs;
    for (int m = 1; m <= 6; ++m) gs.push_back(make_cyclic(m));
    gs.push_back(direct_product(make_cyclic(2), make_cyclic(2)));
    gs.push_back(make_symmetric(3));
    return gs;
}

// every semi-brace the catalog gives rise to, keyed for diagnostics
std::vector<std::pair<std::string, SemiBrace>> catalog_semibraces() {
    std::vector<std::pair<std::string, SemiBrace>> out;
    for (int m : {2, 4, 6})
        out.emplace_back("inverse-translation C" + std::to_string(m),
                         semibrace_from_affine(inverse_translation_affine(make_cyclic(m))));
    {
        FiniteGroup C6 = make_cyclic(6);
        std::vector<int> img(6);
        for (int k = 0; k < 6; ++k) img[static_cast<size_t>(k)] = (4 * k) % 6;
        out.emplace_back("constant endomorphism C6",
                         semibrace_from_affine(constant_endomorphism_affine(C6, SelfMap(6, img))));
    }
    {
        FiniteGroup S3 = make_symmetric(3);
        SelfMap zero(6, std::vector<int>(6, S3.identity()));
        out.emplace_back("zero endomorphism S3",
                         semibrace_from_affine(constant_endomorphism_affine(S3, zero)));
        out.emplace_back("conjugation S3", semibrace_from_affine(
                                               conjugation_affine(S3, SelfMap::identity(6))));
    }
    for (int m : {2, 4, 6, 8}) {
        out.emplace_back("sign flip C" + std::to_string(m),
                         semibrace_from_affine(sign_flip_affine(m)));
        out.emplace_back("parity twist C" + std::to_string(m),
                         semibrace_from_affine(parity_twist_affine(m)));
    }
    {
        ComposeResult sq = compose_affine(parity_twist_affine(8), parity_twist_affine(8));
        out.emplace_back("parity twist squared C8", semibrace_from_affine(*sq.composed));
    }
    out.emplace_back("conjugation C2xS3", semibrace_from_affine(e7_conjugation_structure()));
    {
        MatchedSystem M = e8_matched_system();
        out.emplace_back("product brace C6><C2",
                         semibrace_from_affine(product_affine(M, sign_flip_affine(6),
                                                              trivial_affine(M.T))));
        out.emplace_back("matched product C6(+)C2",
                         matched_product_semibrace(e9_matched_braces()).product);
    }
    {
        FiniteGroup S3 = make_symmetric(3);
        for (bool use_id : {true, false}) {
            SelfMap f = use_id ? SelfMap::identity(6)
                               : SelfMap(6, std::vector<int>(6, S3.identity()));
            MatchedBraceSystem MB = e10_matched_braces(f);
            AffineStructure A = constant_endomorphism_affine(S3, f);
            out.emplace_back(std::string("S3 system product, f=") + (use_id ? "id" : "zero"),
                             semibrace_from_affine(product_affine(MB.sys, A, A)));
            out.emplace_back(std::string("S3 system matched, f=") + (use_id ? "id" : "zero"),
                             matched_product_semibrace(MB).product);
        }
    }
    return out;
}

}  // namespace

int main() {
    run_criterion(1, "catalog reproduction (catalog run --all --assert)", 10.0, [](Criterion& c) {
        for (const auto& e : catalog_entries()) {
            EntryOutcome out = run_catalog_entry(e.id);
            for (const auto& d : out.diffs) c.require(false, e.id + ": " + d);
        }
        // the headline values, asserted directly as well
        SemiBrace sf6 = semibrace_from_affine(sign_flip_affine(6));
        c.require(sf6.flags.skew, "sign flip on C6 is not a skew brace");
        c.require(additive_report(sf6).iso_type == "D3",
                  "sign flip on C6: additive group is not dihedral of order 6");
        ComposeResult sq = compose_affine(parity_twist_affine(8), parity_twist_affine(8));
        c.require(sq.ok, "parity twist does not compose with itself");
        if (sq.ok) {
            SemiBrace e6 = semibrace_from_affine(*sq.composed);
            c.require(e6.flags.brace, "squared structure is not a brace");
            c.require(additive_report(e6).iso_type == "C8", "squared structure: additive != C8");
        }
        SemiBrace e7 = semibrace_from_affine(e7_conjugation_structure());
        c.require(e7.flags.biskew, "conjugation on C2xS3 is not bi-skew");
        c.require(!e7.flags.lambda_homomorphic, "conjugation on C2xS3 is lambda-homomorphic");
        {
            FiniteGroup S3 = make_symmetric(3);
            int tr = -1, cyc = -1;
            for (int i = 0; i < 6; ++i) {
                if (S3.elem_name(i) == "(1 2)") tr = i;
                if (S3.elem_name(i) == "(1 2 3)") cyc = i;
            }
            int ia = 1 * 6 + tr, ib = 0 * 6 + cyc;
            LambdaRho lr = lambda_rho(e7);
            auto lam = [&](int x, int y) { return lr.lambda[static_cast<size_t>(x) * 12 + y]; };
            c.require(lam(e7.plus(ia, ib), ia) != lam(ia, lam(ib, ia)),
                      "the stated witness does not separate lambda_{a+b} from lambda_a lambda_b");
        }
        MatchedSystem M = e8_matched_system();
        SemiBrace e8 =
            semibrace_from_affine(product_affine(M, sign_flip_affine(6), trivial_affine(M.T)));
        c.require(find_isomorphism(e8.mul, make_dihedral(6)).has_value(),
                  "product structure: multiplicative group is not the order-12 dihedral group");
        c.require(!additive_report(e8).abelian, "product structure: additive group is abelian");
        SemiBrace e9 = matched_product_semibrace(e9_matched_braces()).product;
        c.require(additive_report(e9).iso_type == "C6xC2", "matched product: additive != C6xC2");
        c.require(!find_semibrace_isomorphism(e8, e9).has_value(),
                  "the two order-12 constructions are isomorphic");
    });

    run_criterion(2, "counterexample witnesses on C8 (exact)", 0.0, [](Criterion& c) {
        AffineStructure sf = sign_flip_affine(8);
        const FiniteGroup& G = sf.group;
        c.require(G.op(1, sf.sig(1, 2)) == 7, "sign flip: g∘sigma_g(g^2) != g^-1");
        c.require(G.op(2, sf.sig(2, 1)) == 3, "sign flip: g^2∘sigma_{g^2}(g) != g^3");
        AffineStructure pt = parity_twist_affine(8);
        c.require(G.op(1, pt.sig(1, 2)) == 3, "parity twist: g∘sigma_g(g^2) != g^3");
        c.require(G.op(2, pt.sig(2, 1)) == 7, "parity twist: g^2∘sigma_{g^2}(g) != g^-1");
    });

    run_criterion(3, "round trips between structures and semi-braces (exact)", 0.0,
                  [](Criterion& c) {
        for (int m : {2, 3, 4, 6}) {
            FiniteGroup G = make_cyclic(m);
            for (const auto& A : enumerate_affine(G, StructureKind::All)) {
                SemiBrace S = semibrace_from_affine(A);
                c.require(affine_from_semibrace(S).sigma == A.sigma,
                          "structure->semibrace->structure changed a table on C" +
                              std::to_string(m));
                c.require(semibrace_from_affine(affine_from_semibrace(S)).add == S.add,
                          "semibrace->structure->semibrace changed a sum on C" +
                              std::to_string(m));
            }
        }
        for (const auto& [label, S] : catalog_semibraces()) {
            AffineStructure A = affine_from_semibrace(S);
            c.require(semibrace_from_affine(A).add == S.add,
                      label + ": semibrace->structure->semibrace changed the sum");
            c.require(affine_from_semibrace(semibrace_from_affine(A)).sigma == A.sigma,
                      label + ": structure->semibrace->structure changed sigma");
        }
    });

    run_criterion(4, "Yang-Baxter suite over all derived solutions", 5.0, [](Criterion& c) {
        std::vector<std::pair<std::string, SemiBrace>> pool = catalog_semibraces();
        for (int m : {2, 3, 4, 6}) {
            FiniteGroup G = make_cyclic(m);
            for (const auto& A : enumerate_affine(G, StructureKind::All))
                pool.emplace_back("enumerated on C" + std::to_string(m),
                                  semibrace_from_affine(A));
        }
        int cancellative_seen = 0;
        for (const auto& [label, S] : pool) {
            SolutionProperties p = solution_properties(solution_from(S));
            if (S.flags.left_cancellative && S.n() <= 8) {
                ++cancellative_seen;
                c.require(p.ybe, label + ": braid identity fails");
                c.require(p.left_nondeg, label + ": not left non-degenerate");
            }
            if (S.flags.skew) {
                c.require(p.bijective, label + ": skew but r is not bijective");
                c.require(p.left_nondeg && p.right_nondeg, label + ": skew but degenerate");
            }
            c.require(p.involutive == S.flags.brace,
                      label + ": involutive does not match the brace flag");
        }
        c.require(cancellative_seen > 10, "suspiciously few cancellative semi-braces checked");
    });

    run_criterion(5, "oracle equivalence and relabeling invariance", 60.0, [](Criterion& c) {
        for (int m : {2, 3, 4}) {
            FiniteGroup G = make_cyclic(m);
            for (StructureKind k : {StructureKind::All, StructureKind::Cancellative,
                                    StructureKind::Groupal, StructureKind::Abelian}) {
                std::set<std::vector<int>> fast, naive;
                for (const auto& A : enumerate_affine(G, k)) fast.insert(A.sigma);
                for (const auto& A : enumerate_naive(G, k)) naive.insert(A.sigma);
                c.require(fast == naive, "enumerate != oracle on C" + std::to_string(m) +
                                              " kind " + kind_to_string(k));
            }
        }
        // census counts survive renaming the carrier
        struct Relab {
            int m;
            std::vector<int> p;
        };
        for (const Relab& r : {Relab{2, {1, 0}}, Relab{3, {2, 0, 1}}, Relab{4, {3, 1, 0, 2}}}) {
            FiniteGroup G = make_cyclic(r.m);
            FiniteGroup R = relabel(G, Permutation(r.m, r.p));
            for (StructureKind k : {StructureKind::All, StructureKind::Cancellative,
                                    StructureKind::Groupal, StructureKind::Abelian}) {
                c.require(census(G, k).classes.size() == census(R, k).classes.size(),
                          "census counts differ after relabeling C" + std::to_string(r.m));
            }
        }
        c.require(census(relabel(make_cyclic(6), Permutation(6, {2, 4, 0, 5, 1, 3})),
                         StructureKind::Groupal)
                          .classes.size() ==
                      census(make_cyclic(6), StructureKind::Groupal).classes.size(),
                  "census counts differ after relabeling C6");
    });

    run_criterion(6, "boundary claims for the two families", 0.0, [](Criterion& c) {
        for (int m : {2, 4}) {
            SemiBrace S = semibrace_from_affine(parity_twist_affine(m));
            c.require(is_biskew(S).biskew,
                      "parity twist on C" + std::to_string(m) + " should be bi-skew");
            c.require(sign_flip_affine(m).flags.abelian,
                      "sign flip on C" + std::to_string(m) + " should be abelian");
        }
        for (int m : {6, 8}) {
            SemiBrace S = semibrace_from_affine(parity_twist_affine(m));
            c.require(!is_biskew(S).biskew,
                      "parity twist on C" + std::to_string(m) + " should not be bi-skew");
            c.require(!sign_flip_affine(m).flags.abelian,
                      "sign flip on C" + std::to_string(m) + " should not be abelian");
        }
    });

    run_criterion(7, "conditions hold iff the product verifies (cancellative)", 0.0,
                  [](Criterion& c) {
        struct System {
            std::string label;
            MatchedSystem M;
            AffineStructure AS, AT;
            bool expect;
        };
        std::vector<System> systems;
        {
            MatchedSystem M = e8_matched_system();
            systems.push_back({"negation system with sign flip", M, sign_flip_affine(6),
                               trivial_affine(M.T), true});
            systems.push_back({"negation system with trivial structures", M,
                               trivial_affine(M.S), trivial_affine(M.T), true});
            // the mutated system: swapping in the parity twist must break the
            // conditions and the product verification together
            systems.push_back({"negation system with parity twist", M, parity_twist_affine(6),
                               trivial_affine(M.T), false});
        }
        {
            MatchedBraceSystem MB = e10_matched_braces(SelfMap::identity(6));
            AffineStructure A =
                constant_endomorphism_affine(make_symmetric(3), SelfMap::identity(6));
            systems.push_back({"S3 conjugation system", MB.sys, A, A, true});
        }
        for (const auto& s : systems) {
            c.require(s.AS.flags.cancellative && s.AT.flags.cancellative,
                      s.label + ": factors are not cancellative");
            ProductConditionReport rep = check_product_conditions(s.M, s.AS, s.AT);
            c.require(rep.product_verifies.has_value(),
                      s.label + ": verification outcome missing");
            if (rep.product_verifies) {
                c.require(rep.conditions_hold() == *rep.product_verifies,
                          s.label + ": conditions and verification disagree");
                c.require(rep.conditions_hold() == s.expect, s.label + ": unexpected outcome");
            }
        }
    });

    run_criterion(8, "action round trip on every small cancellative structure", 0.0,
                  [](Criterion& c) {
        int checked = 0;
        for (const auto& G : groups_up_to_order_6()) {
            for (const auto& A : enumerate_affine(G, StructureKind::Cancellative)) {
                ZappaSystem Z = affine_to_zappa(A);
                ZappaToAffineResult back = zappa_to_affine(Z);
                c.require(back.structure.has_value(),
                          G.name() + ": factorization identity failed on a derived system");
                if (back.structure)
                    c.require(back.structure->sigma == A.sigma,
                              G.name() + ": action round trip changed the table");
                ++checked;
            }
        }
        c.require(checked > 20, "suspiciously few cancellative structures enumerated");
    });

    if (g_failures == 0)
        std::printf("all acceptance criteria passed\n");
    else
        std::printf("%d criterion(s) failed\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
