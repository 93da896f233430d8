#pragma once

#include <optional>
#include <string>
#include <vector>

#include "affinelab/group.hpp"

namespace aflab {

struct Triple {
    int a = 0, b = 0, c = 0;
    bool operator==(const Triple&) const = default;
};

struct IndexPair {
    int a = 0, b = 0;
    bool operator==(const IndexPair&) const = default;
};

struct AffineFlags {
    bool anti_hom = false;
    bool affine = false;       // the defining identity on all triples
    bool cancellative = false;
    bool groupal = false;
    bool abelian = false;

    bool valid() const { return anti_hom && affine; }
    bool operator==(const AffineFlags&) const = default;
};

/// σ on a group, stored as the full table sigma[a*n + b] = σ_a(b).
/// Instances produced by verify_affine / affine_from_table are always valid.
struct AffineStructure {
    FiniteGroup group;
    std::vector<int> sigma;
    AffineFlags flags;

    int n() const { return group.order(); }
    int sig(int a, int b) const { return sigma[static_cast<size_t>(a) * group.order() + b]; }
    SelfMap sigma_row(int a) const;
    bool same_sigma(const AffineStructure& other) const { return sigma == other.sigma; }
};

struct AffineReport {
    std::optional<Triple> anti_hom_witness;   // first (a,b,x) breaking σ_{a∘b} = σ_b∘σ_a
    std::optional<Triple> affine_witness;     // first (a,b,c) breaking the defining identity
    AffineFlags flags;

    bool valid() const { return flags.valid(); }
};

/// σ_{a∘b}(x) = σ_b(σ_a(x)) on all triples; witness is the first failure.
std::optional<Triple> check_anti_hom(const FiniteGroup& G, const std::vector<int>& sigma);

/// σ_a(b ∘ σ_b(c)) = σ_a(b) ∘ σ_{σ_a(b)}(σ_a(c)) on all triples.
std::optional<Triple> check_affine_identity(const FiniteGroup& G, const std::vector<int>& sigma);

/// Fills cancellative / groupal / abelian for a table that passed both checks.
AffineFlags classify_affine(const FiniteGroup& G, const std::vector<int>& sigma);

/// Full verification + classification. Throws std::invalid_argument on shape mismatch.
AffineReport verify_affine(const FiniteGroup& G, const std::vector<int>& sigma);

/// Returns σ_identity(identity) == identity. Holds for every valid structure.
bool check_sigma0_fixes_zero(const FiniteGroup& G, const std::vector<int>& sigma);

/// Convenience wrapper: verified structure or std::domain_error with the witness.
AffineStructure affine_from_table(const FiniteGroup& G, std::vector<int> sigma);

// Named σ families used throughout the test corpus and the catalog.
AffineStructure trivial_affine(const FiniteGroup& G);
AffineStructure inverse_translation_affine(const FiniteGroup& G);           // σ_a(b) = a^-∘b
AffineStructure constant_endomorphism_affine(const FiniteGroup& G, const SelfMap& f);  // σ_a = f
AffineStructure conjugation_affine(const FiniteGroup& G, const SelfMap& f); // σ_a(b) = f(a)^-∘b∘f(a)
AffineStructure sign_flip_affine(int m);     // on C_m (m even): σ_{g^k}(g^l) = g^{(-1)^k l}
AffineStructure parity_twist_affine(int m);  // on C_m (m even): σ_{g^k}(g^l) = g^{k(-1+(-1)^l)+l}

/// φ_u = f ∘ σ_{f⁻¹(u)} ∘ f⁻¹ along a group isomorphism f. The result is
/// re-verified in full; cancellative and groupal carry over.
AffineStructure transport(const AffineStructure& A, const GroupHom& f);

/// φ_{f(a)}(f(x)) = f(σ_a(x)) for all a, x.
struct HomomorphicCheck {
    bool holds = false;
    std::optional<IndexPair> witness;  // first (a, x) with a mismatch
};
HomomorphicCheck is_homomorphic_via(const AffineStructure& A, const AffineStructure& B,
                                    const GroupHom& f);

/// Partition by the Aut(G)-action φ = transport(σ, f); class representatives
/// are the lexicographically minimal sigma tables over each orbit.
struct EquivClass {
    std::vector<int> canonical_sigma;
    std::vector<size_t> members;  // indices into the input list
};
std::vector<EquivClass> equivalence_classes(const std::vector<AffineStructure>& structures,
                                            int aut_bound = 16);

/// Lex-min sigma table over the Aut(G)-orbit of A.
std::vector<int> canonical_sigma(const AffineStructure& A, const std::vector<Permutation>& auts);

/// Composition of two structures on one group: σ_a = φ_a ∘ ω_a, admissible
/// when (c1) φ_aω_b = ω_bφ_a and (c2) φ_{b∘ω_a(b)⁻} = ω_{φ_aω_a(b)∘ω_a(b)⁻}
/// hold on all pairs. With both inputs cancellative, (c2') is evaluated too
/// and must agree with (c2).
struct ComposeResult {
    bool ok = false;
    std::optional<IndexPair> c1_witness;
    std::optional<IndexPair> c2_witness;
    std::optional<IndexPair> c2prime_witness;  // only set when both inputs cancellative
    std::optional<AffineStructure> composed;   // present iff ok
};
ComposeResult compose_affine(const AffineStructure& phi, const AffineStructure& omega);

std::string witness_text(const FiniteGroup& G, const Triple& w);
std::string witness_text(const FiniteGroup& G, const IndexPair& w);

}  // namespace aflab
