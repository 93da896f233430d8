#pragma once

#include <optional>
#include <vector>

#include "affinelab/semibrace.hpp"

namespace aflab {

/// r(a,b) = (λ_a(b), ρ_b(a)) materialized on pairs; pair (a,b) is encoded
/// row-major as a*n + b.
struct SetSolution {
    int n = 0;
    std::vector<int> out_left;   // out_left[a*n + b]  = λ_a(b)
    std::vector<int> out_right;  // out_right[a*n + b] = ρ_b(a)

    int left(int a, int b) const { return out_left[static_cast<size_t>(a) * n + b]; }
    int right(int a, int b) const { return out_right[static_cast<size_t>(a) * n + b]; }
    /// r as a map on pair codes.
    int pair_image(int code) const;
};

SetSolution solution_from(const SemiBrace& S);

/// (r×id)(id×r)(r×id) = (id×r)(r×id)(id×r) on all n³ triples.
std::optional<Triple> check_ybe(const SetSolution& r);

bool check_left_nondeg(const SetSolution& r);   // every λ_a bijective
bool check_right_nondeg(const SetSolution& r);  // every ρ_b bijective
bool check_bijective(const SetSolution& r);     // r is a permutation of pairs
bool check_involutive(const SetSolution& r);    // r² = id
bool check_cubic(const SetSolution& r);         // r³ = r

struct SolutionProperties {
    bool ybe = false;
    std::optional<Triple> ybe_witness;
    bool left_nondeg = false;
    bool right_nondeg = false;
    bool bijective = false;
    bool involutive = false;
    bool cubic = false;
};
SolutionProperties solution_properties(const SetSolution& r);

}  // namespace aflab
