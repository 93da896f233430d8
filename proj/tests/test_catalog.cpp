#include <doctest.h>

#include <stdexcept>

#include "affinelab/catalog.hpp"

using namespace aflab;

TEST_CASE("catalog lists ten entries") {
    const auto& es = catalog_entries();
    CHECK(es.size() == 10);
    CHECK(es.front().id == "E1");
    CHECK(es.back().id == "E10");
    CHECK_THROWS_AS(catalog_entry("E99"), std::invalid_argument);
    CHECK_THROWS_AS(run_catalog_entry("nope"), std::invalid_argument);
}

TEST_CASE("every entry reproduces its expected record") {
    for (const auto& e : catalog_entries()) {
        EntryOutcome out = run_catalog_entry(e.id);
        INFO(e.id);
        for (const auto& d : out.diffs) INFO(d);
        CHECK(out.ok);
    }
}

TEST_CASE("expected keys are all produced") {
    for (const auto& e : catalog_entries()) {
        EntryOutcome out = run_catalog_entry(e.id);
        for (const auto& [k, v] : out.expected) CHECK(out.actual.count(k) == 1);
    }
}

TEST_CASE("the parity projection behaves as stated") {
    FiniteGroup G = direct_product(make_cyclic(2), make_symmetric(3));
    SelfMap f = e7_parity_projection(G);
    CHECK(is_idempotent_endomorphism(G, f));
    // (x, id) maps to (1, id); (x, (1 2)) is fixed
    CHECK(f(6) == 0);
    CHECK(f(8) == 8);
}
