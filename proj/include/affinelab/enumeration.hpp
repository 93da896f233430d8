#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "affinelab/affine.hpp"
#include "affinelab/group.hpp"

namespace aflab {

enum class StructureKind { All, Cancellative, Groupal, Abelian };

StructureKind kind_from_string(const std::string& s);  // throws invalid_argument
std::string kind_to_string(StructureKind k);
bool flags_match_kind(const AffineFlags& f, StructureKind k);

struct EnumerateOptions {
    int max_order = 8;
    long long max_candidates = 1LL << 26;
    int jobs = 1;
    uint64_t seed = 0;  // shuffles exploration order only; output is sorted
};

/// Brute-force oracle: explores the full space of n x n sigma tables row by
/// row, cutting only branches whose already-assigned rows break the
/// anti-homomorphism law; every surviving table is re-verified from scratch.
/// Restricted to |G| <= 4.
std::vector<AffineStructure> enumerate_naive(const FiniteGroup& G, StructureKind kind);

/// Generator-based search: rows are assigned on a generating set, extended to
/// the whole group by the anti-homomorphism law and then fully re-verified
/// (no symbolic relation handling). Agrees with enumerate_naive wherever both
/// apply. Output sorted by sigma table.
std::vector<AffineStructure> enumerate_affine(const FiniteGroup& G, StructureKind kind,
                                              const EnumerateOptions& opt = {});

struct CensusClass {
    std::vector<int> canonical_sigma;
    int orbit_members = 0;  // how many enumerated structures fall in the class
    AffineFlags flags;
    std::string additive_iso;
    bool ybe = false;
    bool left_nondeg = false;
    bool right_nondeg = false;
    bool bijective = false;
    bool involutive = false;
    bool cubic = false;
};

struct CensusResult {
    std::string group_name;
    uint64_t group_hash = 0;
    std::string kind;
    int structure_count = 0;
    std::vector<CensusClass> classes;
    bool from_cache = false;
};

/// FNV-1a over the Cayley table; the census cache key.
uint64_t group_table_hash(const FiniteGroup& G);

/// Equivalence-class census of enumerate_affine(G, kind). When cache_dir is
/// nonempty, results are stored under a (table hash, kind, code version) key
/// and reused on later runs.
CensusResult census(const FiniteGroup& G, StructureKind kind, const EnumerateOptions& opt = {},
                    const std::string& cache_dir = "");

inline constexpr const char* kCodeVersion = "0.1.0";

}  // namespace aflab
