#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace aflab {

/// A map from {0..n-1} into itself, stored as its image array.
struct SelfMap {
    int n = 0;
    std::vector<int> img;

    SelfMap() = default;
    SelfMap(int size, std::vector<int> images);

    int operator()(int x) const { return img[static_cast<size_t>(x)]; }
    bool is_bijective() const;
    bool is_identity() const;

    bool operator==(const SelfMap&) const = default;
    bool operator<(const SelfMap& o) const { return img < o.img; }

    static SelfMap identity(int n);
};

/// Bijective self-maps reuse the SelfMap layout; construction sites validate.
using Permutation = SelfMap;

// (f ∘ g)(x) = f(g(x)) — the composition convention used everywhere.
SelfMap compose(const SelfMap& f, const SelfMap& g);
Permutation inverse_of(const Permutation& p);
Permutation require_permutation(SelfMap f);

/// First failing axiom of a candidate Cayley table, with a witness.
struct GroupDefect {
    enum class Kind { BadShape, OutOfRange, NotAssociative, NoIdentity, NoInverse };
    Kind kind;
    int a = -1, b = -1, c = -1;
    std::string describe() const;
};

std::optional<GroupDefect> check_group_table(int order, const std::vector<int>& table);

/// A finite group on the carrier {0..n-1}, given by its full Cayley table.
/// Immutable after construction; tables are validated up front.
class FiniteGroup {
public:
    /// Validates closure, associativity, identity and inverses.
    /// Throws std::domain_error (axiom failure) or std::invalid_argument (shape).
    static FiniteGroup from_table(std::string name, int order, std::vector<int> table);

    int order() const { return n_; }
    int op(int a, int b) const { return table_[static_cast<size_t>(a) * n_ + b]; }
    int inv(int a) const { return inverse_[static_cast<size_t>(a)]; }
    int identity() const { return identity_; }

    const std::vector<int>& table() const { return table_; }
    const std::string& name() const { return name_; }
    const std::string& elem_name(int a) const { return elem_names_[static_cast<size_t>(a)]; }

    bool is_abelian() const;
    int elem_order(int a) const;
    /// Sorted multiset of element orders; cheap isomorphism invariant.
    std::vector<int> order_profile() const;
    /// True when both groups share the same carrier size and Cayley table.
    bool same_table(const FiniteGroup& other) const;

    /// Greedy generating set: scans elements in index order, keeps those not in
    /// the span so far. Deterministic for a fixed table.
    std::vector<int> generating_set() const;

private:
    friend FiniteGroup make_cyclic(int);
    friend FiniteGroup make_dihedral(int);
    friend FiniteGroup make_symmetric(int);
    friend FiniteGroup make_quaternion();
    friend FiniteGroup direct_product(const FiniteGroup&, const FiniteGroup&);
    friend FiniteGroup relabel(const FiniteGroup&, const Permutation&);

    FiniteGroup() = default;

    int n_ = 0;
    std::vector<int> table_;
    int identity_ = 0;
    std::vector<int> inverse_;
    std::string name_;
    std::vector<std::string> elem_names_;
};

/// C_m with element k encoding g^k; table[(i,j)] = (i+j) mod m.
FiniteGroup make_cyclic(int m);

/// Dihedral group of order 2l: pairs (rotation r, flip s) encoded as s*l + r.
FiniteGroup make_dihedral(int l);

/// S_n over lexicographically ordered one-line permutations; n <= 5.
FiniteGroup make_symmetric(int n);

/// Quaternion group of order 8: 1,-1,i,-i,j,-j,k,-k.
FiniteGroup make_quaternion();

/// Componentwise product; pair (a,b) encoded row-major as a*|H| + b.
FiniteGroup direct_product(const FiniteGroup& G, const FiniteGroup& H);

/// Same group with carrier renamed by p: table'[p(a)][p(b)] = p(table[a][b]).
FiniteGroup relabel(const FiniteGroup& G, const Permutation& p);

/// A group homomorphism recorded by its image array, source and target.
struct GroupHom {
    FiniteGroup source;
    FiniteGroup target;
    std::vector<int> img;

    int operator()(int a) const { return img[static_cast<size_t>(a)]; }
    bool is_bijective() const;
};

/// Validates f(a∘b) = f(a)∘f(b); throws std::domain_error on failure.
GroupHom make_hom(FiniteGroup source, FiniteGroup target, std::vector<int> images);
GroupHom identity_hom(const FiniteGroup& G);
bool is_homomorphism(const FiniteGroup& G, const FiniteGroup& H, const std::vector<int>& img);

/// x ↦ a^- ∘ x ∘ a
Permutation conjugation_map(const FiniteGroup& G, int a);

/// f∘f = f and f multiplicative.
bool is_idempotent_endomorphism(const FiniteGroup& G, const SelfMap& f);

/// All automorphisms, sorted by image array. Backtracking over generator
/// images with element-order pruning; |G| must not exceed `bound`.
std::vector<Permutation> automorphisms(const FiniteGroup& G, int bound = 16);

/// One isomorphism G -> H if any exists.
std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& G, const FiniteGroup& H);

/// Visits every isomorphism G -> H until the callback returns false.
/// Returns true when the search was cut short by the callback.
bool for_each_isomorphism(const FiniteGroup& G, const FiniteGroup& H,
                          const std::function<bool(const std::vector<int>&)>& visit);

}  // namespace aflab
