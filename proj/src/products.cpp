#include "affinelab/products.hpp"

#include <stdexcept>

namespace aflab {

namespace {

void require_zappa_shape(const ZappaSystem& Z) {
    if (Z.eta.size() != static_cast<size_t>(Z.T.order()) * Z.S.order())
        throw std::invalid_argument("eta table must be |T| x |S|");
    if (Z.delta.size() != static_cast<size_t>(Z.S.order()) * Z.T.order())
        throw std::invalid_argument("delta table must be |S| x |T|");
    for (int v : Z.eta)
        if (v < 0 || v >= Z.S.order()) throw std::invalid_argument("eta entry out of range");
    for (int v : Z.delta)
        if (v < 0 || v >= Z.T.order()) throw std::invalid_argument("delta entry out of range");
}

void require_matched_shape(const MatchedSystem& M) {
    if (M.alpha.size() != static_cast<size_t>(M.T.order()) * M.S.order())
        throw std::invalid_argument("alpha table must be |T| x |S|");
    if (M.beta.size() != static_cast<size_t>(M.S.order()) * M.T.order())
        throw std::invalid_argument("beta table must be |S| x |T|");
    for (int v : M.alpha)
        if (v < 0 || v >= M.S.order()) throw std::invalid_argument("alpha entry out of range");
    for (int v : M.beta)
        if (v < 0 || v >= M.T.order()) throw std::invalid_argument("beta entry out of range");
}

std::vector<int> row_inverses(int rows, int cols, const std::vector<int>& t, const char* what) {
    std::vector<int> inv(static_cast<size_t>(rows) * cols, -1);
    std::vector<char> seen;
    for (int r = 0; r < rows; ++r) {
        seen.assign(static_cast<size_t>(cols), 0);
        for (int c = 0; c < cols; ++c) {
            int v = t[static_cast<size_t>(r) * cols + c];
            if (seen[static_cast<size_t>(v)])
                throw std::invalid_argument(std::string(what) + " row " + std::to_string(r) +
                                            " is not a permutation");
            seen[static_cast<size_t>(v)] = 1;
            inv[static_cast<size_t>(r) * cols + v] = c;
        }
    }
    return inv;
}

}  // namespace

ZappaReport verify_zappa(const ZappaSystem& Z) {
    require_zappa_shape(Z);
    const FiniteGroup &S = Z.S, &T = Z.T;
    int ns = S.order(), nt = T.order();
    ZappaReport rep;

    for (int u = 0; u < nt && !rep.witness; ++u)
        for (int a = 0; a < ns && !rep.witness; ++a)
            for (int b = 0; b < ns; ++b)
                if (Z.up(u, S.op(a, b)) != S.op(Z.up(u, a), Z.up(Z.down(u, a), b))) {
                    rep.witness = ZappaWitness{"^u(a∘b) = ^u a ∘ ^{u^a} b", u, a, b};
                    break;
                }
    for (int u = 0; u < nt && !rep.witness; ++u)
        for (int v = 0; v < nt && !rep.witness; ++v)
            for (int a = 0; a < ns; ++a)
                if (Z.up(T.op(u, v), a) != Z.up(u, Z.up(v, a))) {
                    rep.witness = ZappaWitness{"^{u∘v}a = ^u(^v a)", u, v, a};
                    break;
                }
    for (int u = 0; u < nt && !rep.witness; ++u)
        for (int v = 0; v < nt && !rep.witness; ++v)
            for (int a = 0; a < ns; ++a)
                if (Z.down(T.op(u, v), a) != T.op(Z.down(u, Z.up(v, a)), Z.down(v, a))) {
                    rep.witness = ZappaWitness{"(u∘v)^a = u^{^v a} ∘ v^a", u, v, a};
                    break;
                }
    for (int u = 0; u < nt && !rep.witness; ++u)
        for (int a = 0; a < ns && !rep.witness; ++a)
            for (int b = 0; b < ns; ++b)
                if (Z.down(u, S.op(a, b)) != Z.down(Z.down(u, a), b)) {
                    rep.witness = ZappaWitness{"u^{a∘b} = (u^a)^b", u, a, b};
                    break;
                }

    auto bij = [](int rows, int cols, const std::vector<int>& t) {
        std::vector<char> seen;
        for (int r = 0; r < rows; ++r) {
            seen.assign(static_cast<size_t>(cols), 0);
            for (int c = 0; c < cols; ++c) {
                int v = t[static_cast<size_t>(r) * cols + c];
                if (seen[static_cast<size_t>(v)]) return false;
                seen[static_cast<size_t>(v)] = 1;
            }
        }
        return true;
    };
    rep.eta_bijective = bij(nt, ns, Z.eta);
    rep.delta_bijective = bij(ns, nt, Z.delta);

    if (rep.ok() && rep.eta_bijective && rep.delta_bijective) {
        int n = ns * nt;
        std::vector<int> table(static_cast<size_t>(n) * n);
        for (int a = 0; a < ns; ++a)
            for (int u = 0; u < nt; ++u)
                for (int b = 0; b < ns; ++b)
                    for (int v = 0; v < nt; ++v)
                        table[static_cast<size_t>(a * nt + u) * n + (b * nt + v)] =
                            S.op(a, Z.up(u, b)) * nt + T.op(Z.down(u, b), v);
        rep.product = FiniteGroup::from_table(S.name() + "|x|" + T.name(), n, std::move(table));
    }
    return rep;
}

ZappaSystem affine_to_zappa(const AffineStructure& A) {
    if (!A.flags.cancellative)
        throw std::invalid_argument("affine_to_zappa: structure must be cancellative");
    const FiniteGroup& G = A.group;
    int n = G.order();
    ZappaSystem Z{G, G, std::vector<int>(static_cast<size_t>(n) * n),
                  std::vector<int>(static_cast<size_t>(n) * n)};
    for (int u = 0; u < n; ++u)
        for (int a = 0; a < n; ++a) Z.eta[static_cast<size_t>(u) * n + a] = A.sig(G.inv(u), a);
    for (int a = 0; a < n; ++a)
        for (int u = 0; u < n; ++u)
            Z.delta[static_cast<size_t>(a) * n + u] = G.op(G.op(G.inv(Z.up(u, a)), u), a);
    for (int u = 0; u < n; ++u)
        for (int a = 0; a < n; ++a)
            if (G.op(u, a) != G.op(Z.up(u, a), Z.down(u, a)))
                throw std::logic_error("affine_to_zappa: factorization identity failed");
    ZappaReport rep = verify_zappa(Z);
    if (!rep.ok())
        throw std::logic_error("affine_to_zappa: product identities failed: " + rep.witness->identity);
    return Z;
}

ZappaToAffineResult zappa_to_affine(const ZappaSystem& Z) {
    require_zappa_shape(Z);
    if (!Z.S.same_table(Z.T))
        throw std::invalid_argument("zappa_to_affine: both factors must be the same group");
    const FiniteGroup& G = Z.S;
    int n = G.order();
    ZappaToAffineResult res;
    for (int u = 0; u < n; ++u)
        for (int a = 0; a < n; ++a)
            if (G.op(u, a) != G.op(Z.up(u, a), Z.down(u, a))) {
                res.compat_witness = IndexPair{u, a};
                return res;
            }
    std::vector<int> sigma(static_cast<size_t>(n) * n);
    for (int u = 0; u < n; ++u)
        for (int a = 0; a < n; ++a) sigma[static_cast<size_t>(u) * n + a] = Z.up(G.inv(u), a);
    res.structure = affine_from_table(G, std::move(sigma));
    return res;
}

MatchedReport verify_mps(const MatchedSystem& M) {
    require_matched_shape(M);
    const FiniteGroup &S = M.S, &T = M.T;
    int ns = S.order(), nt = T.order();
    MatchedReport rep;

    std::vector<int> ainv, binv;
    try {
        ainv = row_inverses(nt, ns, M.alpha, "alpha");
        binv = row_inverses(ns, nt, M.beta, "beta");
    } catch (const std::invalid_argument& e) {
        rep.witness = MatchedWitness{e.what(), 0, 0, 0};
        return rep;
    }
    auto ai = [&](int u, int a) { return ainv[static_cast<size_t>(u) * ns + a]; };
    auto bi = [&](int a, int u) { return binv[static_cast<size_t>(a) * nt + u]; };

    for (int u = 0; u < nt && !rep.witness; ++u)
        for (int v = 0; v < nt && !rep.witness; ++v) {
            int uv = T.op(u, v);
            for (int a = 0; a < ns; ++a)
                if (M.al(uv, a) != M.al(u, M.al(v, a))) {
                    rep.witness = MatchedWitness{"alpha is not a homomorphism", u, v, a};
                    break;
                }
        }
    for (int a = 0; a < ns && !rep.witness; ++a)
        for (int b = 0; b < ns && !rep.witness; ++b) {
            int ab = S.op(a, b);
            for (int u = 0; u < nt; ++u)
                if (M.be(ab, u) != M.be(a, M.be(b, u))) {
                    rep.witness = MatchedWitness{"beta is not a homomorphism", a, b, u};
                    break;
                }
        }
    for (int a = 0; a < ns && !rep.witness; ++a)
        for (int b = 0; b < ns && !rep.witness; ++b)
            for (int u = 0; u < nt; ++u)
                if (M.al(u, S.op(ai(u, a), b)) != S.op(a, M.al(bi(a, u), b))) {
                    rep.witness = MatchedWitness{"alpha compatibility identity", a, b, u};
                    break;
                }
    for (int a = 0; a < ns && !rep.witness; ++a)
        for (int u = 0; u < nt && !rep.witness; ++u)
            for (int v = 0; v < nt; ++v)
                if (M.be(a, T.op(bi(a, u), v)) != T.op(u, M.be(ai(u, a), v))) {
                    rep.witness = MatchedWitness{"beta compatibility identity", a, u, v};
                    break;
                }
    return rep;
}

ZappaSystem zappa_of_matched(const MatchedSystem& M) {
    int ns = M.S.order(), nt = M.T.order();
    std::vector<int> binv = row_inverses(ns, nt, M.beta, "beta");
    ZappaSystem Z{M.S, M.T, std::vector<int>(static_cast<size_t>(nt) * ns),
                  std::vector<int>(static_cast<size_t>(ns) * nt)};
    for (int u = 0; u < nt; ++u)
        for (int a = 0; a < ns; ++a) Z.eta[static_cast<size_t>(u) * ns + a] = M.al(u, a);
    for (int a = 0; a < ns; ++a)
        for (int u = 0; u < nt; ++u)
            Z.delta[static_cast<size_t>(a) * nt + u] =
                binv[static_cast<size_t>(M.al(u, a)) * nt + u];
    return Z;
}

FiniteGroup bowtie_group(const MatchedSystem& M) {
    MatchedReport rep = verify_mps(M);
    if (!rep.ok())
        throw std::domain_error("bowtie_group: not a matched product system (" +
                                rep.witness->identity + ")");
    const FiniteGroup &S = M.S, &T = M.T;
    int ns = S.order(), nt = T.order(), n = ns * nt;
    std::vector<int> ainv = row_inverses(nt, ns, M.alpha, "alpha");
    std::vector<int> binv = row_inverses(ns, nt, M.beta, "beta");
    auto ai = [&](int u, int a) { return ainv[static_cast<size_t>(u) * ns + a]; };
    auto bi = [&](int a, int u) { return binv[static_cast<size_t>(a) * nt + u]; };

    std::vector<int> table(static_cast<size_t>(n) * n);
    for (int a = 0; a < ns; ++a)
        for (int u = 0; u < nt; ++u)
            for (int b = 0; b < ns; ++b)
                for (int v = 0; v < nt; ++v)
                    table[static_cast<size_t>(a * nt + u) * n + (b * nt + v)] =
                        S.op(a, M.al(bi(a, u), b)) * nt + T.op(u, M.be(ai(u, a), v));
    FiniteGroup G = FiniteGroup::from_table(S.name() + "><" + T.name(), n, std::move(table));
    if (G.identity() != S.identity() * nt + T.identity())
        throw std::logic_error("bowtie_group: identity is not (0,0)");
    for (int a = 0; a < ns; ++a)
        for (int u = 0; u < nt; ++u)
            if (G.inv(a * nt + u) != S.inv(ai(u, a)) * nt + T.inv(bi(a, u)))
                throw std::logic_error("bowtie_group: closed-form inverse mismatch");

    // the translated system is a Zappa product and (a,u) ↦ (a, β_a⁻¹(u))
    // carries the bowtie table onto it
    ZappaSystem Z = zappa_of_matched(M);
    ZappaReport zrep = verify_zappa(Z);
    if (!zrep.ok() || !zrep.product)
        throw std::logic_error("bowtie_group: translated Zappa system failed verification");
    const FiniteGroup& ZP = *zrep.product;
    for (int a = 0; a < ns; ++a)
        for (int u = 0; u < nt; ++u)
            for (int b = 0; b < ns; ++b)
                for (int v = 0; v < nt; ++v) {
                    int x = a * nt + u, y = b * nt + v;
                    int fx = a * nt + bi(a, u), fy = b * nt + bi(b, v);
                    int z = G.op(x, y);
                    int fz = (z / nt) * nt + bi(z / nt, z % nt);
                    if (fz != ZP.op(fx, fy))
                        throw std::logic_error("bowtie_group: Zappa translation is not an isomorphism");
                }
    return G;
}

namespace {

struct MatchedTables {
    std::vector<int> ainv, binv;
    int ns, nt;
};

MatchedTables matched_tables(const MatchedSystem& M) {
    MatchedTables t;
    t.ns = M.S.order();
    t.nt = M.T.order();
    t.ainv = row_inverses(t.nt, t.ns, M.alpha, "alpha");
    t.binv = row_inverses(t.ns, t.nt, M.beta, "beta");
    return t;
}

}  // namespace

ProductConditionReport check_product_conditions(const MatchedSystem& M, const AffineStructure& AS,
                                                const AffineStructure& AT) {
    MatchedReport mrep = verify_mps(M);
    if (!mrep.ok())
        throw std::domain_error("check_product_conditions: system failed verification (" +
                                    mrep.witness->identity + ")");
    if (!AS.group.same_table(M.S) || !AT.group.same_table(M.T))
        throw std::invalid_argument("check_product_conditions: structures do not live on the factors");

    const FiniteGroup &S = M.S, &T = M.T;
    MatchedTables mt = matched_tables(M);
    int ns = mt.ns, nt = mt.nt;
    auto ai = [&](int u, int a) { return mt.ainv[static_cast<size_t>(u) * ns + a]; };
    auto bi = [&](int a, int u) { return mt.binv[static_cast<size_t>(a) * nt + u]; };

    ProductConditionReport rep;

    // (I): σ^S_0 commutes with every α_u, σ^T_0 with every β_a
    rep.cond_i = true;
    int eS = S.identity(), eT = T.identity();
    for (int u = 0; u < nt && rep.cond_i; ++u)
        for (int x = 0; x < ns; ++x)
            if (AS.sig(eS, M.al(u, x)) != M.al(u, AS.sig(eS, x))) {
                rep.cond_i = false;
                rep.witness = "condition (I): sigma_0 and alpha_" + std::to_string(u) +
                              " do not commute at " + std::to_string(x);
                break;
            }
    for (int a = 0; a < ns && rep.cond_i; ++a)
        for (int x = 0; x < nt; ++x)
            if (AT.sig(eT, M.be(a, x)) != M.be(a, AT.sig(eT, x))) {
                rep.cond_i = false;
                rep.witness = "condition (I): sigma_0 and beta_" + std::to_string(a) +
                              " do not commute at " + std::to_string(x);
                break;
            }
    if (AS.flags.cancellative && AT.flags.cancellative && !rep.cond_i)
        throw std::logic_error("check_product_conditions: (I) failed on cancellative structures");

    // (II): σ_{α_u(a)} = σ_a and σ_{β_a(u)} = σ_u
    rep.cond_ii = true;
    for (int u = 0; u < nt && rep.cond_ii; ++u)
        for (int a = 0; a < ns && rep.cond_ii; ++a) {
            int im = M.al(u, a);
            for (int x = 0; x < ns; ++x)
                if (AS.sig(im, x) != AS.sig(a, x)) {
                    rep.cond_ii = false;
                    if (!rep.witness)
                        rep.witness = "condition (II): sigma_{alpha_" + std::to_string(u) + "(" +
                                      std::to_string(a) + ")} != sigma_" + std::to_string(a);
                    break;
                }
        }
    for (int a = 0; a < ns && rep.cond_ii; ++a)
        for (int u = 0; u < nt && rep.cond_ii; ++u) {
            int im = M.be(a, u);
            for (int x = 0; x < nt; ++x)
                if (AT.sig(im, x) != AT.sig(u, x)) {
                    rep.cond_ii = false;
                    if (!rep.witness)
                        rep.witness = "condition (II): sigma_{beta_" + std::to_string(a) + "(" +
                                      std::to_string(u) + ")} != sigma_" + std::to_string(u);
                    break;
                }
        }

    // (III), with ρ taken from the derived semi-brace tables
    LambdaRho lrS = lambda_rho(semibrace_from_affine(AS));
    LambdaRho lrT = lambda_rho(semibrace_from_affine(AT));
    auto rhoS = [&](int b, int x) { return lrS.rho[static_cast<size_t>(b) * ns + x]; };
    auto rhoT = [&](int v, int x) { return lrT.rho[static_cast<size_t>(v) * nt + x]; };

    rep.cond_iii = true;
    for (int a = 0; a < ns && rep.cond_iii; ++a)
        for (int b = 0; b < ns && rep.cond_iii; ++b) {
            int idx = rhoS(b, S.inv(a));  // ρ_b(a^-)
            for (int u = 0; u < nt && rep.cond_iii; ++u)
                for (int v = 0; v < nt && rep.cond_iii; ++v) {
                    int vbar = bi(b, v);
                    int Vbar = bi(AS.sig(a, b), AT.sig(u, v));
                    for (int x = 0; x < ns; ++x)
                        if (M.al(vbar, AS.sig(idx, x)) != AS.sig(idx, M.al(Vbar, x))) {
                            rep.cond_iii = false;
                            if (!rep.witness)
                                rep.witness = "condition (III), first family, at (a,b,u,v) = (" +
                                              std::to_string(a) + "," + std::to_string(b) + "," +
                                              std::to_string(u) + "," + std::to_string(v) + ")";
                            break;
                        }
                }
        }
    for (int u = 0; u < nt && rep.cond_iii; ++u)
        for (int v = 0; v < nt && rep.cond_iii; ++v) {
            int idx = rhoT(v, T.inv(u));  // ρ_v(u^-)
            for (int a = 0; a < ns && rep.cond_iii; ++a)
                for (int b = 0; b < ns && rep.cond_iii; ++b) {
                    int bbar = ai(v, b);
                    int Bbar = ai(AT.sig(u, v), AS.sig(a, b));
                    for (int x = 0; x < nt; ++x)
                        if (M.be(bbar, AT.sig(idx, x)) != AT.sig(idx, M.be(Bbar, x))) {
                            rep.cond_iii = false;
                            if (!rep.witness)
                                rep.witness = "condition (III), second family, at (a,b,u,v) = (" +
                                              std::to_string(a) + "," + std::to_string(b) + "," +
                                              std::to_string(u) + "," + std::to_string(v) + ")";
                            break;
                        }
                }
        }

    if (AS.flags.cancellative && AT.flags.cancellative) {
        // necessity in the cancellative case: conditions ⇔ full verification
        FiniteGroup BW = bowtie_group(M);
        int n = ns * nt;
        std::vector<int> sigma(static_cast<size_t>(n) * n);
        for (int a = 0; a < ns; ++a)
            for (int u = 0; u < nt; ++u)
                for (int b = 0; b < ns; ++b)
                    for (int v = 0; v < nt; ++v)
                        sigma[static_cast<size_t>(a * nt + u) * n + (b * nt + v)] =
                            AS.sig(a, b) * nt + AT.sig(u, v);
        AffineReport ver = verify_affine(BW, sigma);
        rep.product_verifies = ver.valid();
        if (rep.conditions_hold() != ver.valid())
            throw std::logic_error(
                "check_product_conditions: conditions and product verification disagree");
    }
    return rep;
}

AffineStructure product_affine(const MatchedSystem& M, const AffineStructure& AS,
                               const AffineStructure& AT) {
    ProductConditionReport rep = check_product_conditions(M, AS, AT);
    if (!rep.conditions_hold())
        throw std::domain_error("product_affine: conditions do not hold — " +
                                rep.witness.value_or("unknown"));
    FiniteGroup BW = bowtie_group(M);
    int ns = M.S.order(), nt = M.T.order(), n = ns * nt;
    std::vector<int> sigma(static_cast<size_t>(n) * n);
    for (int a = 0; a < ns; ++a)
        for (int u = 0; u < nt; ++u)
            for (int b = 0; b < ns; ++b)
                for (int v = 0; v < nt; ++v)
                    sigma[static_cast<size_t>(a * nt + u) * n + (b * nt + v)] =
                        AS.sig(a, b) * nt + AT.sig(u, v);
    AffineStructure out = affine_from_table(BW, std::move(sigma));
    if (AS.flags.cancellative && AT.flags.cancellative && !out.flags.cancellative)
        throw std::logic_error("product_affine: cancellative inputs gave a non-cancellative product");
    if (AS.flags.groupal && AT.flags.groupal && !out.flags.groupal)
        throw std::logic_error("product_affine: groupal inputs gave a non-groupal product");
    return out;
}

MatchedProductResult matched_product_semibrace(const MatchedBraceSystem& MB) {
    const MatchedSystem& M = MB.sys;
    MatchedReport mrep = verify_mps(M);
    if (!mrep.ok())
        throw std::domain_error("matched_product_semibrace: system failed verification (" +
                                    mrep.witness->identity + ")");
    if (!MB.S.mul.same_table(M.S) || !MB.T.mul.same_table(M.T))
        throw std::invalid_argument("matched_product_semibrace: factor braces do not match the system");

    MatchedTables mt = matched_tables(M);
    int ns = mt.ns, nt = mt.nt, n = ns * nt;
    auto ai = [&](int u, int a) { return mt.ainv[static_cast<size_t>(u) * ns + a]; };
    auto bi = [&](int a, int u) { return mt.binv[static_cast<size_t>(a) * nt + u]; };

    for (int u = 0; u < nt; ++u)
        for (int a = 0; a < ns; ++a)
            for (int b = 0; b < ns; ++b)
                if (M.al(u, MB.S.plus(a, b)) != MB.S.plus(M.al(u, a), M.al(u, b)))
                    throw std::domain_error("matched_product_semibrace: alpha_" + std::to_string(u) +
                                            " is not additive on S");
    for (int a = 0; a < ns; ++a)
        for (int u = 0; u < nt; ++u)
            for (int v = 0; v < nt; ++v)
                if (M.be(a, MB.T.plus(u, v)) != MB.T.plus(M.be(a, u), M.be(a, v)))
                    throw std::domain_error("matched_product_semibrace: beta_" + std::to_string(a) +
                                            " is not additive on T");

    // λ-compatibility: λ_a α_{β_a⁻¹(u)} = α_u λ_{α_u⁻¹(a)} and its twin
    LambdaRho lrS = lambda_rho(MB.S);
    LambdaRho lrT = lambda_rho(MB.T);
    auto lamS = [&](int a, int x) { return lrS.lambda[static_cast<size_t>(a) * ns + x]; };
    auto lamT = [&](int u, int x) { return lrT.lambda[static_cast<size_t>(u) * nt + x]; };
    for (int a = 0; a < ns; ++a)
        for (int u = 0; u < nt; ++u) {
            for (int x = 0; x < ns; ++x)
                if (lamS(a, M.al(bi(a, u), x)) != M.al(u, lamS(ai(u, a), x)))
                    throw std::domain_error("matched_product_semibrace: lambda/alpha compatibility fails");
            for (int x = 0; x < nt; ++x)
                if (lamT(u, M.be(ai(u, a), x)) != M.be(a, lamT(bi(a, u), x)))
                    throw std::domain_error("matched_product_semibrace: lambda/beta compatibility fails");
        }

    FiniteGroup BW = bowtie_group(M);
    std::vector<int> add(static_cast<size_t>(n) * n);
    for (int a = 0; a < ns; ++a)
        for (int u = 0; u < nt; ++u)
            for (int b = 0; b < ns; ++b)
                for (int v = 0; v < nt; ++v)
                    add[static_cast<size_t>(a * nt + u) * n + (b * nt + v)] =
                        MB.S.plus(a, b) * nt + MB.T.plus(u, v);
    SemiBrace product = semibrace_from_tables(BW, std::move(add));

    AffineStructure derived = affine_from_semibrace(product);
    AffineStructure sigS = affine_from_semibrace(MB.S);
    AffineStructure sigT = affine_from_semibrace(MB.T);
    std::vector<int> bar(static_cast<size_t>(n) * n);
    for (int a = 0; a < ns; ++a)
        for (int u = 0; u < nt; ++u) {
            int ubar = bi(a, u), abar = ai(u, a);
            for (int b = 0; b < ns; ++b)
                for (int v = 0; v < nt; ++v)
                    bar[static_cast<size_t>(a * nt + u) * n + (b * nt + v)] =
                        ai(ubar, sigS.sig(a, b)) * nt + bi(abar, sigT.sig(u, v));
        }
    if (bar != derived.sigma)
        throw std::logic_error("matched_product_semibrace: closed-form sigma differs from the derived one");
    return MatchedProductResult{std::move(product), std::move(derived)};
}

ConfrontoReport confronto_check(const MatchedBraceSystem& MB) {
    const MatchedSystem& M = MB.sys;
    MatchedReport mrep = verify_mps(M);
    if (!mrep.ok())
        throw std::domain_error("confronto_check: system failed verification (" +
                                    mrep.witness->identity + ")");
    MatchedTables mt = matched_tables(M);
    int ns = mt.ns, nt = mt.nt;
    auto ai = [&](int u, int a) { return mt.ainv[static_cast<size_t>(u) * ns + a]; };
    auto bi = [&](int a, int u) { return mt.binv[static_cast<size_t>(a) * nt + u]; };

    LambdaRho lrS = lambda_rho(MB.S);
    LambdaRho lrT = lambda_rho(MB.T);
    auto lamS = [&](int a, int x) { return lrS.lambda[static_cast<size_t>(a) * ns + x]; };
    auto lamT = [&](int u, int x) { return lrT.lambda[static_cast<size_t>(u) * nt + x]; };

    ConfrontoReport rep;
    rep.lambda_compat = true;
    for (int a = 0; a < ns && rep.lambda_compat; ++a)
        for (int u = 0; u < nt && rep.lambda_compat; ++u) {
            for (int x = 0; x < ns; ++x)
                if (lamS(a, M.al(bi(a, u), x)) != M.al(u, lamS(ai(u, a), x))) {
                    rep.lambda_compat = false;
                    break;
                }
            for (int x = 0; x < nt && rep.lambda_compat; ++x)
                if (lamT(u, M.be(ai(u, a), x)) != M.be(a, lamT(bi(a, u), x))) {
                    rep.lambda_compat = false;
                    break;
                }
        }

    rep.alpha_beta_additive_automorphisms = true;
    for (int u = 0; u < nt && rep.alpha_beta_additive_automorphisms; ++u)
        for (int a = 0; a < ns && rep.alpha_beta_additive_automorphisms; ++a)
            for (int b = 0; b < ns; ++b)
                if (M.al(u, MB.S.plus(a, b)) != MB.S.plus(M.al(u, a), M.al(u, b))) {
                    rep.alpha_beta_additive_automorphisms = false;
                    break;
                }
    for (int a = 0; a < ns && rep.alpha_beta_additive_automorphisms; ++a)
        for (int u = 0; u < nt && rep.alpha_beta_additive_automorphisms; ++u)
            for (int v = 0; v < nt; ++v)
                if (M.be(a, MB.T.plus(u, v)) != MB.T.plus(M.be(a, u), M.be(a, v))) {
                    rep.alpha_beta_additive_automorphisms = false;
                    break;
                }

    if (rep.lambda_compat != rep.alpha_beta_additive_automorphisms)
        throw std::logic_error("confronto_check: the two sides of the equivalence disagree");
    return rep;
}

CompareResult compare_constructions(const MatchedBraceSystem& MB, const AffineStructure& AS,
                                    const AffineStructure& AT) {
    CompareResult res;
    ProductConditionReport cond = check_product_conditions(MB.sys, AS, AT);
    res.product_applicable = cond.conditions_hold();
    if (!res.product_applicable) {
        res.note = "product construction inapplicable: " + cond.witness.value_or("conditions fail");
        return res;
    }
    SemiBrace via_product = semibrace_from_affine(product_affine(MB.sys, AS, AT));

    std::optional<MatchedProductResult> mp;
    try {
        mp.emplace(matched_product_semibrace(MB));
    } catch (const std::domain_error& e) {
        res.note = std::string("matched product inapplicable: ") + e.what();
        return res;
    }
    res.matched_applicable = true;
    res.sums_coincide = via_product.add == mp->product.add;
    res.iso = find_semibrace_isomorphism(via_product, mp->product);
    res.isomorphic = res.iso.has_value();
    return res;
}

}  // namespace aflab
