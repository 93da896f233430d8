#pragma once

#include <map>
#include <string>
#include <vector>

#include "affinelab/affine.hpp"
#include "affinelab/products.hpp"
#include "affinelab/semibrace.hpp"

namespace aflab {

/// A named, parameterized construction together with its expected property
/// record. Running an entry rebuilds everything from scratch, re-verifies it
/// and diffs the computed properties against the expected ones.
struct CatalogEntry {
    std::string id;     // E1..E10
    std::string title;  // what the construction is
    std::map<std::string, std::string> params;
    std::map<std::string, std::string> expected;  // property -> expected value
    std::map<std::string, std::string> notes;     // property -> claim it records
};

struct EntryOutcome {
    std::string id;
    bool ok = false;
    std::map<std::string, std::string> expected;
    std::map<std::string, std::string> actual;
    std::vector<std::string> diffs;  // "key: expected=US actual=THEM"
};

const std::vector<CatalogEntry>& catalog_entries();
const CatalogEntry& catalog_entry(const std::string& id);  // throws invalid_argument
EntryOutcome run_catalog_entry(const std::string& id);

// Shared builders for the concrete instances; also used by tests.
AffineStructure e7_conjugation_structure();            // on C2 x S3, parity projection
SelfMap e7_parity_projection(const FiniteGroup& G12);  // (x^i, pi) -> (x^parity(pi), pi)
MatchedSystem e8_matched_system();                     // C6, C2, power negation, trivial beta
MatchedBraceSystem e9_matched_braces();                // trivial skew braces on the factors
MatchedBraceSystem e10_matched_braces(const SelfMap& f);  // S = T = S3, conjugation by f(.)

}  // namespace aflab
