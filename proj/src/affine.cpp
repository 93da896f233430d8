#include "affinelab/affine.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace aflab {

namespace {

void require_shape(const FiniteGroup& G, const std::vector<int>& sigma) {
    int n = G.order();
    if (sigma.size() != static_cast<size_t>(n) * n)
        throw std::invalid_argument("sigma table must be order x order");
    for (int v : sigma)
        if (v < 0 || v >= n) throw std::invalid_argument("sigma entry out of range");
}

}  // namespace

SelfMap AffineStructure::sigma_row(int a) const {
    int nn = group.order();
    return SelfMap(nn, std::vector<int>(sigma.begin() + static_cast<size_t>(a) * nn,
                                        sigma.begin() + static_cast<size_t>(a + 1) * nn));
}

std::optional<Triple> check_anti_hom(const FiniteGroup& G, const std::vector<int>& sigma) {
    require_shape(G, sigma);
    int n = G.order();
    auto s = [&](int a, int x) { return sigma[static_cast<size_t>(a) * n + x]; };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int ab = G.op(a, b);
            for (int x = 0; x < n; ++x)
                if (s(ab, x) != s(b, s(a, x))) return Triple{a, b, x};
        }
    return std::nullopt;
}

std::optional<Triple> check_affine_identity(const FiniteGroup& G, const std::vector<int>& sigma) {
    require_shape(G, sigma);
    int n = G.order();
    auto s = [&](int a, int x) { return sigma[static_cast<size_t>(a) * n + x]; };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                int lhs = s(a, G.op(b, s(b, c)));
                int sab = s(a, b);
                int rhs = G.op(sab, s(sab, s(a, c)));
                if (lhs != rhs) return Triple{a, b, c};
            }
    return std::nullopt;
}

AffineFlags classify_affine(const FiniteGroup& G, const std::vector<int>& sigma) {
    int n = G.order();
    auto s = [&](int a, int x) { return sigma[static_cast<size_t>(a) * n + x]; };
    AffineFlags f;
    f.anti_hom = true;
    f.affine = true;
    f.cancellative = true;
    std::vector<char> seen;
    for (int a = 0; a < n && f.cancellative; ++a) {
        seen.assign(static_cast<size_t>(n), 0);
        for (int x = 0; x < n; ++x) {
            if (seen[static_cast<size_t>(s(a, x))]) {
                f.cancellative = false;
                break;
            }
            seen[static_cast<size_t>(s(a, x))] = 1;
        }
    }
    int e = G.identity();
    f.groupal = f.cancellative;
    for (int a = 0; a < n && f.groupal; ++a) f.groupal = s(a, e) == e;
    f.abelian = f.cancellative;
    for (int a = 0; a < n && f.abelian; ++a)
        for (int b = 0; b < n && f.abelian; ++b)
            f.abelian = G.op(a, s(a, b)) == G.op(b, s(b, a));
    return f;
}

AffineReport verify_affine(const FiniteGroup& G, const std::vector<int>& sigma) {
    AffineReport r;
    r.anti_hom_witness = check_anti_hom(G, sigma);
    r.flags.anti_hom = !r.anti_hom_witness.has_value();
    r.affine_witness = check_affine_identity(G, sigma);
    r.flags.affine = !r.affine_witness.has_value();
    if (r.valid()) {
        AffineFlags c = classify_affine(G, sigma);
        r.flags.cancellative = c.cancellative;
        r.flags.groupal = c.groupal;
        r.flags.abelian = c.abelian;
    }
    return r;
}

bool check_sigma0_fixes_zero(const FiniteGroup& G, const std::vector<int>& sigma) {
    require_shape(G, sigma);
    int e = G.identity();
    return sigma[static_cast<size_t>(e) * G.order() + e] == e;
}

AffineStructure affine_from_table(const FiniteGroup& G, std::vector<int> sigma) {
    AffineReport r = verify_affine(G, sigma);
    if (!r.valid()) {
        const Triple& w = r.anti_hom_witness ? *r.anti_hom_witness : *r.affine_witness;
        std::string which = r.anti_hom_witness ? "anti-homomorphism" : "affine identity";
        throw std::domain_error("not an affine structure (" + which + " fails at " +
                                witness_text(G, w) + ")");
    }
    return AffineStructure{G, std::move(sigma), r.flags};
}

AffineStructure trivial_affine(const FiniteGroup& G) {
    int n = G.order();
    std::vector<int> sigma(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) sigma[static_cast<size_t>(a) * n + b] = b;
    return affine_from_table(G, std::move(sigma));
}

AffineStructure inverse_translation_affine(const FiniteGroup& G) {
    int n = G.order();
    std::vector<int> sigma(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) sigma[static_cast<size_t>(a) * n + b] = G.op(G.inv(a), b);
    return affine_from_table(G, std::move(sigma));
}

AffineStructure constant_endomorphism_affine(const FiniteGroup& G, const SelfMap& f) {
    if (!is_idempotent_endomorphism(G, f))
        throw std::invalid_argument("constant_endomorphism_affine: map must be an idempotent endomorphism");
    int n = G.order();
    std::vector<int> sigma(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) sigma[static_cast<size_t>(a) * n + b] = f(b);
    return affine_from_table(G, std::move(sigma));
}

AffineStructure conjugation_affine(const FiniteGroup& G, const SelfMap& f) {
    if (!is_idempotent_endomorphism(G, f))
        throw std::invalid_argument("conjugation_affine: map must be an idempotent endomorphism");
    int n = G.order();
    std::vector<int> sigma(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            sigma[static_cast<size_t>(a) * n + b] = G.op(G.op(G.inv(f(a)), b), f(a));
    return affine_from_table(G, std::move(sigma));
}

AffineStructure sign_flip_affine(int m) {
    if (m < 2 || m % 2 != 0) throw std::invalid_argument("sign_flip_affine: even order >= 2 required");
    FiniteGroup G = make_cyclic(m);
    std::vector<int> sigma(static_cast<size_t>(m) * m);
    for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l)
            sigma[static_cast<size_t>(k) * m + l] = ((k % 2 == 0 ? l : -l) % m + m) % m;
    return affine_from_table(G, std::move(sigma));
}

AffineStructure parity_twist_affine(int m) {
    if (m < 2 || m % 2 != 0) throw std::invalid_argument("parity_twist_affine: even order >= 2 required");
    FiniteGroup G = make_cyclic(m);
    std::vector<int> sigma(static_cast<size_t>(m) * m);
    for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l) {
            int exp = k * (-1 + (l % 2 == 0 ? 1 : -1)) + l;
            sigma[static_cast<size_t>(k) * m + l] = (exp % m + m) % m;
        }
    return affine_from_table(G, std::move(sigma));
}

AffineStructure transport(const AffineStructure& A, const GroupHom& f) {
    if (!f.source.same_table(A.group))
        throw std::invalid_argument("transport: hom source does not match the structure's group");
    if (!f.is_bijective()) throw std::invalid_argument("transport: hom must be bijective");
    int n = A.n();
    std::vector<int> finv(static_cast<size_t>(n));
    for (int x = 0; x < n; ++x) finv[static_cast<size_t>(f(x))] = x;
    std::vector<int> phi(static_cast<size_t>(n) * n);
    for (int u = 0; u < n; ++u)
        for (int x = 0; x < n; ++x)
            phi[static_cast<size_t>(u) * n + x] =
                f(A.sig(finv[static_cast<size_t>(u)], finv[static_cast<size_t>(x)]));
    AffineStructure out = affine_from_table(f.target, std::move(phi));
    if (A.flags.cancellative && !out.flags.cancellative)
        throw std::logic_error("transport dropped the cancellative flag");
    if (A.flags.groupal && !out.flags.groupal)
        throw std::logic_error("transport dropped the groupal flag");
    return out;
}

HomomorphicCheck is_homomorphic_via(const AffineStructure& A, const AffineStructure& B,
                                    const GroupHom& f) {
    if (!f.source.same_table(A.group) || !f.target.same_table(B.group))
        throw std::invalid_argument("is_homomorphic_via: hom endpoints do not match the structures");
    HomomorphicCheck out;
    for (int a = 0; a < A.n(); ++a)
        for (int x = 0; x < A.n(); ++x)
            if (B.sig(f(a), f(x)) != f(A.sig(a, x))) {
                out.witness = IndexPair{a, x};
                return out;
            }
    out.holds = true;
    return out;
}

std::vector<int> canonical_sigma(const AffineStructure& A, const std::vector<Permutation>& auts) {
    int n = A.n();
    std::vector<int> best;
    std::vector<int> cand(static_cast<size_t>(n) * n);
    for (const Permutation& p : auts) {
        Permutation pinv = inverse_of(p);
        for (int u = 0; u < n; ++u)
            for (int x = 0; x < n; ++x)
                cand[static_cast<size_t>(u) * n + x] = p(A.sig(pinv(u), pinv(x)));
        if (best.empty() || cand < best) best = cand;
    }
    return best;
}

std::vector<EquivClass> equivalence_classes(const std::vector<AffineStructure>& structures,
                                            int aut_bound) {
    if (structures.empty()) return {};
    const FiniteGroup& G = structures.front().group;
    for (const auto& s : structures)
        if (!s.group.same_table(G))
            throw std::invalid_argument("equivalence_classes: structures live on different groups");
    std::vector<Permutation> auts = automorphisms(G, aut_bound);
    std::map<std::vector<int>, EquivClass> by_canon;
    for (size_t i = 0; i < structures.size(); ++i) {
        std::vector<int> canon = canonical_sigma(structures[i], auts);
        auto& cls = by_canon[canon];
        cls.canonical_sigma = canon;
        cls.members.push_back(i);
    }
    std::vector<EquivClass> out;
    out.reserve(by_canon.size());
    for (auto& [_, cls] : by_canon) out.push_back(std::move(cls));
    return out;
}

ComposeResult compose_affine(const AffineStructure& phi, const AffineStructure& omega) {
    if (!phi.group.same_table(omega.group))
        throw std::invalid_argument("compose_affine: structures live on different groups");
    const FiniteGroup& G = phi.group;
    int n = G.order();
    ComposeResult res;

    for (int a = 0; a < n && !res.c1_witness; ++a)
        for (int b = 0; b < n && !res.c1_witness; ++b)
            for (int x = 0; x < n; ++x)
                if (phi.sig(a, omega.sig(b, x)) != omega.sig(b, phi.sig(a, x))) {
                    res.c1_witness = IndexPair{a, b};
                    break;
                }

    auto rows_equal = [&](const AffineStructure& F, int i, const AffineStructure& H, int j) {
        for (int x = 0; x < n; ++x)
            if (F.sig(i, x) != H.sig(j, x)) return false;
        return true;
    };
    for (int a = 0; a < n && !res.c2_witness; ++a)
        for (int b = 0; b < n; ++b) {
            int wab = omega.sig(a, b);
            int left = G.op(b, G.inv(wab));
            int right = G.op(phi.sig(a, wab), G.inv(wab));
            if (!rows_equal(phi, left, omega, right)) {
                res.c2_witness = IndexPair{a, b};
                break;
            }
        }

    bool both_cancellative = phi.flags.cancellative && omega.flags.cancellative;
    if (both_cancellative) {
        for (int a = 0; a < n && !res.c2prime_witness; ++a)
            for (int b = 0; b < n; ++b) {
                int left = G.op(omega.sig(G.inv(a), b), G.inv(b));
                int right = G.op(phi.sig(a, b), G.inv(b));
                if (!rows_equal(phi, left, omega, right)) {
                    res.c2prime_witness = IndexPair{a, b};
                    break;
                }
            }
        // for cancellative inputs the two formulations are one condition
        if (res.c2_witness.has_value() != res.c2prime_witness.has_value())
            throw std::logic_error("compose_affine: (c2) and (c2') disagree on cancellative inputs");
    }

    if (res.c1_witness || res.c2_witness) return res;

    std::vector<int> sigma(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int x = 0; x < n; ++x)
            sigma[static_cast<size_t>(a) * n + x] = phi.sig(a, omega.sig(a, x));
    AffineReport check = verify_affine(G, sigma);
    if (!check.valid())
        throw std::logic_error("compose_affine: conditions held but the composite failed verification");
    if (phi.flags.groupal && omega.flags.groupal && !check.flags.groupal)
        throw std::logic_error("compose_affine: groupal inputs produced a non-groupal composite");
    res.ok = true;
    res.composed = AffineStructure{G, std::move(sigma), check.flags};
    return res;
}

std::string witness_text(const FiniteGroup& G, const Triple& w) {
    return "(" + std::to_string(w.a) + "," + std::to_string(w.b) + "," + std::to_string(w.c) +
           ") = (" + G.elem_name(w.a) + ", " + G.elem_name(w.b) + ", " + G.elem_name(w.c) + ")";
}

std::string witness_text(const FiniteGroup& G, const IndexPair& w) {
    return "(" + std::to_string(w.a) + "," + std::to_string(w.b) + ") = (" + G.elem_name(w.a) +
           ", " + G.elem_name(w.b) + ")";
}

}  // namespace aflab
