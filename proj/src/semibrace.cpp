#include "affinelab/semibrace.hpp"

#include <algorithm>
#include <stdexcept>

namespace aflab {

namespace {

void require_shape(const FiniteGroup& mul, const std::vector<int>& add) {
    int n = mul.order();
    if (add.size() != static_cast<size_t>(n) * n)
        throw std::invalid_argument("addition table must be order x order");
    for (int v : add)
        if (v < 0 || v >= n) throw std::invalid_argument("addition entry out of range");
}

std::optional<Triple> first_assoc_failure(int n, const std::vector<int>& t) {
    auto at = [&](int a, int b) { return t[static_cast<size_t>(a) * n + b]; };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (at(at(a, b), c) != at(a, at(b, c))) return Triple{a, b, c};
    return std::nullopt;
}

struct BiskewEval {
    bool sigma_aut;
    bool star_prime;
    bool star_second;
    bool sigma_add_hom;
    std::optional<Triple> aut_witness;
};

// All four bi-skew criteria, on a verified skew brace.
BiskewEval eval_biskew(const FiniteGroup& G, const std::vector<int>& add,
                       const std::vector<int>& neg) {
    int n = G.order();
    auto plus = [&](int a, int b) { return add[static_cast<size_t>(a) * n + b]; };
    // σ_a = λ_{a^-}:  σ_a(b) = a^- ∘ (a + b)
    std::vector<int> sig(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            sig[static_cast<size_t>(a) * n + b] = G.op(G.inv(a), plus(a, b));
    auto s = [&](int a, int b) { return sig[static_cast<size_t>(a) * n + b]; };

    BiskewEval ev{true, true, true, true, std::nullopt};
    for (int a = 0; a < n && ev.sigma_aut; ++a) {
        std::vector<char> seen(static_cast<size_t>(n), 0);
        for (int x = 0; x < n; ++x) {
            if (seen[static_cast<size_t>(s(a, x))]) {
                ev.sigma_aut = false;
                ev.aut_witness = Triple{a, x, -1};
                break;
            }
            seen[static_cast<size_t>(s(a, x))] = 1;
        }
        for (int x = 0; x < n && ev.sigma_aut; ++x)
            for (int y = 0; y < n; ++y)
                if (s(a, G.op(x, y)) != G.op(s(a, x), s(a, y))) {
                    ev.sigma_aut = false;
                    ev.aut_witness = Triple{a, x, y};
                    break;
                }
    }
    for (int a = 0; a < n && ev.star_prime; ++a)
        for (int b = 0; b < n && ev.star_prime; ++b)
            for (int c = 0; c < n; ++c)
                if (plus(a, G.op(b, c)) != G.op(G.op(plus(a, b), G.inv(a)), plus(a, c))) {
                    ev.star_prime = false;
                    break;
                }
    for (int a = 0; a < n && ev.star_second; ++a)
        for (int b = 0; b < n && ev.star_second; ++b)
            for (int c = 0; c < n; ++c)
                if (plus(a, G.op(b, c)) !=
                    G.op(plus(a, b), plus(a, G.op(neg[static_cast<size_t>(a)], c)))) {
                    ev.star_second = false;
                    break;
                }
    for (int a = 0; a < n && ev.sigma_add_hom; ++a)
        for (int b = 0; b < n && ev.sigma_add_hom; ++b) {
            int left = G.op(a, s(a, b));  // a + b
            int right = G.op(b, a);
            for (int x = 0; x < n; ++x)
                if (s(left, x) != s(right, x)) {
                    ev.sigma_add_hom = false;
                    break;
                }
        }
    return ev;
}

}  // namespace

SemiBraceReport verify_semibrace(const FiniteGroup& mul, const std::vector<int>& add) {
    require_shape(mul, add);
    int n = mul.order();
    int e = mul.identity();
    auto plus = [&](int a, int b) { return add[static_cast<size_t>(a) * n + b]; };

    SemiBraceReport r;
    r.add_assoc_witness = first_assoc_failure(n, add);
    for (int a = 0; a < n && !r.compat_witness; ++a)
        for (int b = 0; b < n && !r.compat_witness; ++b)
            for (int c = 0; c < n; ++c) {
                int lhs = mul.op(a, plus(b, c));
                int rhs = plus(mul.op(a, b), mul.op(a, plus(mul.inv(a), c)));
                if (lhs != rhs) {
                    r.compat_witness = Triple{a, b, c};
                    break;
                }
            }
    r.flags.semibrace = !r.add_assoc_witness && !r.compat_witness;
    r.zero_idempotent = plus(e, e) == e;
    if (r.flags.semibrace && !r.zero_idempotent)
        throw std::logic_error("verify_semibrace: valid structure with 0+0 != 0");
    if (!r.flags.semibrace) return r;

    r.flags.left_cancellative = true;
    std::vector<char> seen;
    for (int a = 0; a < n && r.flags.left_cancellative; ++a) {
        seen.assign(static_cast<size_t>(n), 0);
        for (int b = 0; b < n; ++b) {
            if (seen[static_cast<size_t>(plus(a, b))]) {
                r.flags.left_cancellative = false;
                break;
            }
            seen[static_cast<size_t>(plus(a, b))] = 1;
        }
    }
    if (r.flags.left_cancellative) {
        r.zero_left_identity = true;
        for (int b = 0; b < n && r.zero_left_identity; ++b) r.zero_left_identity = plus(e, b) == b;
        if (!r.zero_left_identity)
            throw std::logic_error("verify_semibrace: left-cancellative but 0 is not a left identity");
    }

    r.flags.skew = !check_group_table(n, add).has_value();
    if (r.flags.skew) {
        // in a skew brace the additive identity is the multiplicative one
        bool e_is_add_identity = true;
        for (int b = 0; b < n && e_is_add_identity; ++b)
            e_is_add_identity = plus(e, b) == b && plus(b, e) == b;
        if (!e_is_add_identity)
            throw std::logic_error("verify_semibrace: additive group identity differs from 0");
        std::vector<int> neg(static_cast<size_t>(n));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (plus(a, b) == e && plus(b, a) == e) neg[static_cast<size_t>(a)] = b;
        for (int a = 0; a < n && !r.skew_compat_witness; ++a)
            for (int b = 0; b < n && !r.skew_compat_witness; ++b)
                for (int c = 0; c < n; ++c) {
                    int lhs = mul.op(a, plus(b, c));
                    int rhs = plus(plus(mul.op(a, b), neg[static_cast<size_t>(a)]), mul.op(a, c));
                    if (lhs != rhs) {
                        r.skew_compat_witness = Triple{a, b, c};
                        break;
                    }
                }
        // with a group addition the two compatibility forms are equivalent
        if (r.skew_compat_witness)
            throw std::logic_error("verify_semibrace: group-additive compatibility form fails on a skew brace");
        r.flags.brace = true;
        for (int a = 0; a < n && r.flags.brace; ++a)
            for (int b = a + 1; b < n; ++b)
                if (plus(a, b) != plus(b, a)) {
                    r.flags.brace = false;
                    break;
                }
        BiskewEval ev = eval_biskew(mul, add, neg);
        if (ev.sigma_aut != ev.star_prime || ev.sigma_aut != ev.star_second ||
            ev.sigma_aut != ev.sigma_add_hom)
            throw std::logic_error("verify_semibrace: bi-skew criteria disagree");
        r.flags.biskew = ev.sigma_aut;

        // λ_{a+b} = λ_a λ_b, with λ_a(x) = a∘(a^- + x)
        auto lam = [&](int a, int x) { return mul.op(a, plus(mul.inv(a), x)); };
        r.flags.lambda_homomorphic = true;
        for (int a = 0; a < n && r.flags.lambda_homomorphic; ++a)
            for (int b = 0; b < n && r.flags.lambda_homomorphic; ++b) {
                int ab = plus(a, b);
                for (int x = 0; x < n; ++x)
                    if (lam(ab, x) != lam(a, lam(b, x))) {
                        r.flags.lambda_homomorphic = false;
                        break;
                    }
            }
    }
    return r;
}

SemiBrace semibrace_from_tables(FiniteGroup mul, std::vector<int> add) {
    SemiBraceReport r = verify_semibrace(mul, add);
    if (!r.valid()) {
        std::string what;
        if (r.add_assoc_witness)
            what = "addition not associative at " + witness_text(mul, *r.add_assoc_witness);
        else
            what = "compatibility identity fails at " + witness_text(mul, *r.compat_witness);
        throw std::domain_error("not a semi-brace: " + what);
    }
    SemiBrace s{std::move(mul), std::move(add), r.flags, {}};
    if (r.flags.skew) {
        int n = s.n(), e = s.mul.identity();
        s.add_inverse.assign(static_cast<size_t>(n), -1);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (s.plus(a, b) == e && s.plus(b, a) == e)
                    s.add_inverse[static_cast<size_t>(a)] = b;
    }
    return s;
}

SemiBrace trivial_skew_brace(const FiniteGroup& G) {
    return semibrace_from_tables(G, G.table());
}

SemiBrace almost_trivial_skew_brace(const FiniteGroup& G) {
    int n = G.order();
    std::vector<int> add(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) add[static_cast<size_t>(a) * n + b] = G.op(b, a);
    return semibrace_from_tables(G, std::move(add));
}

SemiBrace semibrace_from_affine(const AffineStructure& A) {
    int n = A.n();
    const FiniteGroup& G = A.group;
    std::vector<int> add(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) add[static_cast<size_t>(a) * n + b] = G.op(a, A.sig(a, b));
    SemiBrace s = semibrace_from_tables(G, std::move(add));
    if (A.flags.cancellative && !s.flags.left_cancellative)
        throw std::logic_error("semibrace_from_affine: cancellative input gave a non-cancellative sum");
    if (A.flags.groupal) {
        if (!s.flags.skew)
            throw std::logic_error("semibrace_from_affine: groupal input did not give a skew brace");
        for (int a = 0; a < n; ++a)
            if (s.neg(a) != A.sig(G.inv(a), G.inv(a)))
                throw std::logic_error("semibrace_from_affine: additive opposite is not sigma_{a^-}(a^-)");
    }
    return s;
}

AffineStructure affine_from_semibrace(const SemiBrace& S) {
    int n = S.n();
    const FiniteGroup& G = S.mul;
    std::vector<int> sigma(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a) {
        int ai = G.inv(a);
        for (int b = 0; b < n; ++b)
            sigma[static_cast<size_t>(a) * n + b] = G.op(ai, S.plus(a, b));  // λ_{a^-}(b)
    }
    AffineStructure A = affine_from_table(G, std::move(sigma));
    if (A.flags.cancellative != S.flags.left_cancellative || A.flags.groupal != S.flags.skew)
        throw std::logic_error("affine_from_semibrace: flags do not correspond");
    return A;
}

LambdaRho lambda_rho(const SemiBrace& S) {
    int n = S.n();
    const FiniteGroup& G = S.mul;
    LambdaRho lr;
    lr.lambda.resize(static_cast<size_t>(n) * n);
    lr.rho.resize(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int t = S.plus(G.inv(a), b);
            lr.lambda[static_cast<size_t>(a) * n + b] = G.op(a, t);
            lr.rho[static_cast<size_t>(b) * n + a] = G.op(G.inv(t), b);
        }
    return lr;
}

LambdaRhoReport lambda_rho_report(const SemiBrace& S) {
    int n = S.n();
    const FiniteGroup& G = S.mul;
    LambdaRhoReport rep;
    rep.maps = lambda_rho(S);
    auto lam = [&](int a, int x) { return rep.maps.lambda[static_cast<size_t>(a) * n + x]; };
    auto rho = [&](int b, int x) { return rep.maps.rho[static_cast<size_t>(b) * n + x]; };

    rep.lambda_additive_endo = true;
    for (int a = 0; a < n && rep.lambda_additive_endo; ++a)
        for (int b = 0; b < n && rep.lambda_additive_endo; ++b)
            for (int c = 0; c < n; ++c)
                if (lam(a, S.plus(b, c)) != S.plus(lam(a, b), lam(a, c))) {
                    rep.lambda_additive_endo = false;
                    break;
                }
    rep.lambda_hom_into_maps = true;
    for (int a = 0; a < n && rep.lambda_hom_into_maps; ++a)
        for (int b = 0; b < n && rep.lambda_hom_into_maps; ++b) {
            int ab = G.op(a, b);
            for (int x = 0; x < n; ++x)
                if (lam(ab, x) != lam(a, lam(b, x))) {
                    rep.lambda_hom_into_maps = false;
                    break;
                }
        }
    rep.rho_anti_hom = true;
    for (int a = 0; a < n && rep.rho_anti_hom; ++a)
        for (int b = 0; b < n && rep.rho_anti_hom; ++b) {
            int ab = G.op(a, b);
            for (int x = 0; x < n; ++x)
                if (rho(ab, x) != rho(b, rho(a, x))) {
                    rep.rho_anti_hom = false;
                    break;
                }
        }
    auto all_bijective = [n](const std::vector<int>& t) {
        std::vector<char> seen;
        for (int a = 0; a < n; ++a) {
            seen.assign(static_cast<size_t>(n), 0);
            for (int x = 0; x < n; ++x) {
                int v = t[static_cast<size_t>(a) * n + x];
                if (seen[static_cast<size_t>(v)]) return false;
                seen[static_cast<size_t>(v)] = 1;
            }
        }
        return true;
    };
    rep.lambda_bijective = all_bijective(rep.maps.lambda);
    rep.rho_bijective = all_bijective(rep.maps.rho);

    rep.matches_flags = rep.lambda_additive_endo && rep.lambda_hom_into_maps &&
                        (!S.flags.left_cancellative || (rep.lambda_bijective && rep.rho_anti_hom)) &&
                        (!S.flags.skew || rep.rho_bijective);
    return rep;
}

BiskewReport is_biskew(const SemiBrace& S) {
    if (!S.flags.skew) throw std::invalid_argument("is_biskew: structure is not a skew brace");
    BiskewEval ev = eval_biskew(S.mul, S.add, S.add_inverse);
    if (ev.sigma_aut != ev.star_prime || ev.sigma_aut != ev.star_second ||
        ev.sigma_aut != ev.sigma_add_hom)
        throw std::logic_error("is_biskew: criteria disagree");
    return BiskewReport{ev.sigma_aut, ev.aut_witness};
}

AffineStructure biskew_dual_affine(const SemiBrace& S) {
    BiskewReport b = is_biskew(S);
    if (!b.biskew) throw std::invalid_argument("biskew_dual_affine: structure is not bi-skew");
    FiniteGroup add_group = FiniteGroup::from_table(S.mul.name() + "+", S.n(), S.add);
    SemiBrace swapped = semibrace_from_tables(add_group, S.mul.table());
    if (!swapped.flags.skew)
        throw std::logic_error("biskew_dual_affine: swapped structure is not a skew brace");
    AffineStructure psi = affine_from_semibrace(swapped);
    if (!psi.flags.groupal)
        throw std::logic_error("biskew_dual_affine: dual structure is not groupal");
    // ψ_a = λ_a = σ_{a^-} on the original structure
    LambdaRho lr = lambda_rho(S);
    if (psi.sigma != lr.lambda)
        throw std::logic_error("biskew_dual_affine: dual sigma differs from lambda");
    return psi;
}

LambdaHomReport is_lambda_homomorphic(const SemiBrace& S) {
    if (!S.flags.skew) throw std::invalid_argument("is_lambda_homomorphic: structure is not a skew brace");
    LambdaRho lr = lambda_rho(S);
    int n = S.n();
    auto lam = [&](int a, int x) { return lr.lambda[static_cast<size_t>(a) * n + x]; };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int ab = S.plus(a, b);
            for (int x = 0; x < n; ++x)
                if (lam(ab, x) != lam(a, lam(b, x))) return LambdaHomReport{false, Triple{a, b, x}};
        }
    return LambdaHomReport{true, std::nullopt};
}

SemiBrace opposite(const SemiBrace& S) {
    if (!S.flags.skew) throw std::invalid_argument("opposite: structure is not a skew brace");
    int n = S.n();
    std::vector<int> add(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) add[static_cast<size_t>(a) * n + b] = S.plus(b, a);
    SemiBrace out = semibrace_from_tables(S.mul, std::move(add));
    if (!out.flags.skew) throw std::logic_error("opposite: result is not a skew brace");
    return out;
}

std::optional<std::vector<int>> find_semibrace_isomorphism(const SemiBrace& S, const SemiBrace& T) {
    if (S.n() != T.n()) return std::nullopt;
    int n = S.n();
    std::optional<std::vector<int>> found;
    for_each_isomorphism(S.mul, T.mul, [&](const std::vector<int>& f) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (f[static_cast<size_t>(S.plus(a, b))] !=
                    T.plus(f[static_cast<size_t>(a)], f[static_cast<size_t>(b)]))
                    return true;  // next isomorphism
        found = f;
        return false;
    });
    return found;
}

namespace {

// Candidate list for the additive isomorphism type, in match priority order.
std::vector<std::pair<std::string, FiniteGroup>> iso_candidates(int n) {
    std::vector<std::pair<std::string, FiniteGroup>> out;
    out.emplace_back("C" + std::to_string(n), make_cyclic(n));
    // descending factorizations into >= 2 cyclic factors
    std::vector<std::vector<int>> stacks;
    std::vector<int> cur;
    std::function<void(int, int)> split = [&](int rem, int maxf) {
        if (rem == 1) {
            if (cur.size() >= 2) stacks.push_back(cur);
            return;
        }
        for (int f = std::min(maxf, rem); f >= 2; --f)
            if (rem % f == 0) {
                cur.push_back(f);
                split(rem / f, f);
                cur.pop_back();
            }
    };
    split(n, n - 1);
    for (const auto& fac : stacks) {
        FiniteGroup g = make_cyclic(fac[0]);
        std::string label = "C" + std::to_string(fac[0]);
        for (size_t i = 1; i < fac.size(); ++i) {
            g = direct_product(g, make_cyclic(fac[i]));
            label += "xC" + std::to_string(fac[i]);
        }
        out.emplace_back(label, std::move(g));
    }
    if (n % 2 == 0 && n >= 6) out.emplace_back("D" + std::to_string(n / 2), make_dihedral(n / 2));
    if (n == 8) out.emplace_back("Q8", make_quaternion());
    return out;
}

}  // namespace

AdditiveReport additive_report(const SemiBrace& S) {
    AdditiveReport rep;
    int n = S.n();
    rep.is_group = S.flags.skew;
    rep.abelian = true;
    for (int a = 0; a < n && rep.abelian; ++a)
        for (int b = a + 1; b < n; ++b)
            if (S.plus(a, b) != S.plus(b, a)) {
                rep.abelian = false;
                break;
            }
    if (!rep.is_group || n > 16) return rep;
    FiniteGroup add_group = FiniteGroup::from_table("(+)", n, S.add);
    for (const auto& [label, cand] : iso_candidates(n))
        if (find_isomorphism(add_group, cand)) {
            rep.iso_type = label;
            break;
        }
    return rep;
}

}  // namespace aflab
