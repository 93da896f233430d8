#pragma once

#include <optional>
#include <string>
#include <vector>

#include "affinelab/affine.hpp"
#include "affinelab/group.hpp"

namespace aflab {

struct SemiBraceFlags {
    bool semibrace = false;          // + associative and a∘(b+c) = a∘b + a∘(a^- + c)
    bool left_cancellative = false;  // a+b = a+c ⇒ b = c
    bool skew = false;               // (B,+) is a group
    bool brace = false;              // skew with commutative +
    bool biskew = false;             // skew on both sides (computed when skew)
    bool lambda_homomorphic = false; // λ_{a+b} = λ_a λ_b (computed when skew)

    bool operator==(const SemiBraceFlags&) const = default;
};

/// One carrier with a multiplicative group table and an additive semigroup
/// table. Instances built through semibrace_from_tables are always valid.
struct SemiBrace {
    FiniteGroup mul;
    std::vector<int> add;  // add[a*n + b] = a + b
    SemiBraceFlags flags;
    std::vector<int> add_inverse;  // additive opposites, filled when skew

    int n() const { return mul.order(); }
    int plus(int a, int b) const { return add[static_cast<size_t>(a) * mul.order() + b]; }
    int neg(int a) const { return add_inverse[static_cast<size_t>(a)]; }
};

struct SemiBraceReport {
    std::optional<Triple> add_assoc_witness;
    std::optional<Triple> compat_witness;       // first (a,b,c) breaking the defining identity
    std::optional<Triple> skew_compat_witness;  // the group-additive form, evaluated when skew
    bool zero_idempotent = false;
    bool zero_left_identity = false;  // evaluated when left cancellative
    SemiBraceFlags flags;

    bool valid() const { return flags.semibrace; }
};

/// Checks every axiom and fills the flags; biskew / λ-homomorphic are
/// evaluated when the structure is skew. See is_biskew for the cross-checked
/// criteria. Throws std::invalid_argument on shape errors and
/// std::logic_error when an internally guaranteed consequence fails.
SemiBraceReport verify_semibrace(const FiniteGroup& mul, const std::vector<int>& add);

/// Verified structure or std::domain_error carrying the witness.
SemiBrace semibrace_from_tables(FiniteGroup mul, std::vector<int> add);

SemiBrace trivial_skew_brace(const FiniteGroup& G);         // a+b = a∘b
SemiBrace almost_trivial_skew_brace(const FiniteGroup& G);  // a+b = b∘a

/// a + b := a∘σ_a(b). Cancellative σ gives a left-cancellative semi-brace,
/// groupal σ a skew brace; both are re-verified rather than assumed.
SemiBrace semibrace_from_affine(const AffineStructure& A);

/// σ_a = λ_{a^-}; the result passes full affine verification and its flags
/// match the semi-brace's (left-cancellative ↔ cancellative, skew ↔ groupal).
AffineStructure affine_from_semibrace(const SemiBrace& S);

struct LambdaRho {
    std::vector<int> lambda;  // lambda[a*n + b] = λ_a(b) = a∘(a^- + b)
    std::vector<int> rho;     // rho[b*n + a]    = ρ_b(a) = (a^- + b)^- ∘ b
};

struct LambdaRhoReport {
    LambdaRho maps;
    bool lambda_additive_endo = false;   // λ_a(b+c) = λ_a(b) + λ_a(c)
    bool lambda_hom_into_maps = false;   // λ_{a∘b} = λ_a λ_b
    bool lambda_bijective = false;
    bool rho_anti_hom = false;           // ρ_{a∘b} = ρ_b ρ_a
    bool rho_bijective = false;
    bool matches_flags = false;          // the flag-conditioned expectations
};

LambdaRho lambda_rho(const SemiBrace& S);
LambdaRhoReport lambda_rho_report(const SemiBrace& S);

/// Skew braces that stay skew braces with + and ∘ exchanged. Four equivalent
/// criteria are all evaluated and must agree:
///   * σ_a ∈ Aut(B,∘) for every a,
///   * a + b∘c = (a+b)∘a^-∘(a+c) on all triples,
///   * a + b∘c = (a+b)∘(a + (-a)∘c) on all triples,
///   * σ_{a∘σ_a(b)} = σ_{b∘a} on all pairs.
struct BiskewReport {
    bool biskew = false;
    std::optional<Triple> witness;  // first (a,x,y) where σ_a breaks multiplicativity
};
BiskewReport is_biskew(const SemiBrace& S);

/// The structure with + and ∘ exchanged, valid for bi-skew braces; returns
/// its affine structure ψ on (B,+) and checks ψ_a = λ_a = σ_{a^-} tablewise.
AffineStructure biskew_dual_affine(const SemiBrace& S);

struct LambdaHomReport {
    bool holds = false;
    std::optional<Triple> witness;  // first (a,b,x) with λ_{a+b}(x) != λ_a(λ_b(x))
};
LambdaHomReport is_lambda_homomorphic(const SemiBrace& S);

/// Same multiplication, reversed addition; re-verified as a skew brace.
SemiBrace opposite(const SemiBrace& S);

/// Bijections preserving both tables; multiplicative isomorphisms are
/// enumerated first and filtered on the additive table.
std::optional<std::vector<int>> find_semibrace_isomorphism(const SemiBrace& S, const SemiBrace& T);

/// Additive-structure summary. For orders <= 16 the isomorphism type is
/// matched against cyclic groups, descending products of cyclics, dihedral
/// groups and Q8; anything else reports "unidentified".
struct AdditiveReport {
    bool is_group = false;
    bool abelian = false;
    std::string iso_type = "unidentified";
};
AdditiveReport additive_report(const SemiBrace& S);

}  // namespace aflab
