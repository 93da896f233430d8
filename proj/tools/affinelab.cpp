// Command-line surface for the affinelab library.
//
// Exit codes: 0 = all checks passed, 1 = a verified mathematical property
// failed (a witness is printed), 2 = input or usage error.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "affinelab/catalog.hpp"
#include "affinelab/enumeration.hpp"
#include "affinelab/json_io.hpp"
#include "affinelab/parallel.hpp"
#include "affinelab/products.hpp"
#include "affinelab/semibrace.hpp"
#include "affinelab/ybe.hpp"

namespace {

using nlohmann::json;
using namespace aflab;

struct CliOptions {
    bool json_output = false;
    int jobs = hardware_jobs();
    uint64_t seed = 0;
};

std::string flag_str(bool b) { return b ? "yes" : "no"; }

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty())
        std::cout << j.dump(2) << "\n";
    else
        save_json_file(out_path, j);
}

// sigma argument: an affine file, an object with "sigma", or bare rows
std::vector<int> load_sigma_rows(const std::string& path) {
    json j = load_json_file(path);
    if (j.is_array()) {
        std::vector<int> flat;
        for (const auto& row : j) {
            if (!row.is_array()) throw std::invalid_argument("sigma rows must be arrays");
            for (const auto& v : row) flat.push_back(v.get<int>());
        }
        return flat;
    }
    if (j.is_object() && j.contains("sigma")) {
        std::vector<int> flat;
        for (const auto& row : j.at("sigma"))
            for (const auto& v : row) flat.push_back(v.get<int>());
        return flat;
    }
    throw std::invalid_argument(path + ": expected a sigma table");
}

AffineStructure load_affine_arg(const std::string& sigma_path, const std::string& group_arg) {
    json j = load_json_file(sigma_path);
    if (j.is_object() && j.contains("group") && group_arg.empty()) return affine_from_json(j);
    if (group_arg.empty())
        throw std::invalid_argument("no group given: pass --group or embed one in the sigma file");
    FiniteGroup G = load_group_arg(group_arg);
    std::vector<int> sigma = load_sigma_rows(sigma_path);
    if (sigma.size() != static_cast<size_t>(G.order()) * G.order())
        throw std::invalid_argument("sigma shape does not match the group order");
    return affine_from_table(G, std::move(sigma));
}

json affine_flags_json(const AffineFlags& f) {
    return {{"anti_hom", f.anti_hom},
            {"affine", f.affine},
            {"valid", f.valid()},
            {"cancellative", f.cancellative},
            {"groupal", f.groupal},
            {"abelian", f.abelian}};
}

json semibrace_flags_json(const SemiBraceFlags& f) {
    return {{"semibrace", f.semibrace},
            {"left_cancellative", f.left_cancellative},
            {"skew", f.skew},
            {"brace", f.brace},
            {"biskew", f.biskew},
            {"lambda_homomorphic", f.lambda_homomorphic}};
}

int cmd_group_make(const std::string& spec, const std::string& out, bool as_json) {
    FiniteGroup G = parse_group_spec(spec);
    json j = group_to_json(G);
    if (as_json || !out.empty()) {
        emit(j, out);
    } else {
        std::cout << G.name() << ": order " << G.order() << ", identity " << G.identity()
                  << (G.is_abelian() ? ", abelian" : ", non-abelian") << "\n";
    }
    return 0;
}

int cmd_group_verify(const std::string& in) {
    json j = load_json_file(in);
    if (!j.is_object() || !j.contains("order") || !j.contains("table"))
        throw std::invalid_argument(in + ": not a group file");
    int order = j.at("order").get<int>();
    std::vector<int> flat;
    for (const auto& row : j.at("table"))
        for (const auto& v : row) flat.push_back(v.get<int>());
    if (auto defect = check_group_table(order, flat)) {
        std::cout << "FAIL: " << defect->describe() << "\n";
        return 1;
    }
    std::cout << "ok: valid group of order " << order << "\n";
    return 0;
}

int verify_affine_tables(const std::string& sigma_path, const std::string& group_arg,
                         bool as_json) {
    // unlike load_affine_arg this reports the witness instead of throwing
    json j = load_json_file(sigma_path);
    FiniteGroup G = (j.is_object() && j.contains("group") && group_arg.empty())
                        ? (j.at("group").is_string()
                               ? parse_group_spec(j.at("group").get<std::string>())
                               : group_from_json(j.at("group")))
                        : load_group_arg(group_arg);
    std::vector<int> sigma = load_sigma_rows(sigma_path);
    AffineReport rep = verify_affine(G, sigma);
    if (!rep.valid()) {
        if (rep.anti_hom_witness)
            std::cout << "FAIL anti-homomorphism at " << witness_text(G, *rep.anti_hom_witness)
                      << "\n";
        else
            std::cout << "FAIL affine identity at " << witness_text(G, *rep.affine_witness) << "\n";
        return 1;
    }
    if (as_json)
        std::cout << affine_flags_json(rep.flags).dump(2) << "\n";
    else
        std::cout << "valid affine structure on " << G.name()
                  << ": cancellative=" << flag_str(rep.flags.cancellative)
                  << " groupal=" << flag_str(rep.flags.groupal)
                  << " abelian=" << flag_str(rep.flags.abelian) << "\n";
    return 0;
}

int verify_semibrace_file(const std::string& in, bool as_json) {
    json j = load_json_file(in);
    if (!j.is_object() || !j.contains("order") || !j.contains("mul") || !j.contains("add"))
        throw std::invalid_argument(in + ": not a semibrace file");
    int n = j.at("order").get<int>();
    std::vector<int> mul, add;
    for (const auto& row : j.at("mul"))
        for (const auto& v : row) mul.push_back(v.get<int>());
    for (const auto& row : j.at("add"))
        for (const auto& v : row) add.push_back(v.get<int>());
    if (auto defect = check_group_table(n, mul)) {
        std::cout << "FAIL: multiplicative table: " << defect->describe() << "\n";
        return 1;
    }
    FiniteGroup G = FiniteGroup::from_table(j.value("name", "loaded"), n, std::move(mul));
    SemiBraceReport rep = verify_semibrace(G, add);
    if (!rep.valid()) {
        if (rep.add_assoc_witness)
            std::cout << "FAIL: addition not associative at " << witness_text(G, *rep.add_assoc_witness)
                      << "\n";
        else
            std::cout << "FAIL: compatibility identity at " << witness_text(G, *rep.compat_witness)
                      << "\n";
        return 1;
    }
    if (as_json)
        std::cout << semibrace_flags_json(rep.flags).dump(2) << "\n";
    else
        std::cout << "valid semi-brace: left_cancellative=" << flag_str(rep.flags.left_cancellative)
                  << " skew=" << flag_str(rep.flags.skew) << " brace=" << flag_str(rep.flags.brace)
                  << " biskew=" << flag_str(rep.flags.biskew)
                  << " lambda_homomorphic=" << flag_str(rep.flags.lambda_homomorphic) << "\n";
    return 0;
}

int cmd_report(const std::string& in, bool as_json) {
    SemiBrace S = semibrace_from_json(load_json_file(in));
    LambdaRhoReport lr = lambda_rho_report(S);
    AdditiveReport add = additive_report(S);
    json j = {{"flags", semibrace_flags_json(S.flags)},
              {"lambda", {{"additive_endomorphism", lr.lambda_additive_endo},
                          {"homomorphism_into_maps", lr.lambda_hom_into_maps},
                          {"bijective", lr.lambda_bijective}}},
              {"rho", {{"anti_homomorphism", lr.rho_anti_hom}, {"bijective", lr.rho_bijective}}},
              {"lambda_rho_matches_flags", lr.matches_flags},
              {"additive", {{"is_group", add.is_group}, {"abelian", add.abelian},
                            {"iso_type", add.iso_type}}}};
    if (S.flags.skew) {
        LambdaHomReport lh = is_lambda_homomorphic(S);
        j["lambda_homomorphic"] = lh.holds;
        if (lh.witness)
            j["lambda_homomorphic_witness"] = {lh.witness->a, lh.witness->b, lh.witness->c};
    }
    if (as_json) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "semi-brace on " << S.mul.name() << " (order " << S.n() << ")\n"
                  << "  left_cancellative=" << flag_str(S.flags.left_cancellative)
                  << " skew=" << flag_str(S.flags.skew) << " brace=" << flag_str(S.flags.brace)
                  << " biskew=" << flag_str(S.flags.biskew) << "\n"
                  << "  additive: group=" << flag_str(add.is_group)
                  << " abelian=" << flag_str(add.abelian) << " iso=" << add.iso_type << "\n"
                  << "  lambda/rho expectations met: " << flag_str(lr.matches_flags) << "\n";
    }
    return lr.matches_flags ? 0 : 1;
}

int cmd_solution(const std::string& from, const std::string& checks, const std::string& out,
                 bool as_json) {
    SemiBrace S = semibrace_from_json(load_json_file(from));
    SetSolution r = solution_from(S);
    SolutionProperties p = solution_properties(r);
    bool failed = false;
    auto want = [&](const std::string& name) {
        return checks.empty() || checks.find(name) != std::string::npos;
    };
    json j = solution_to_json(r);
    json checks_json;
    if (want("ybe")) {
        checks_json["ybe"] = p.ybe;
        if (p.ybe_witness)
            checks_json["ybe_witness"] = {p.ybe_witness->a, p.ybe_witness->b, p.ybe_witness->c};
        failed |= !p.ybe;
    }
    if (want("involutive")) checks_json["involutive"] = p.involutive;
    if (want("cubic")) checks_json["cubic"] = p.cubic;
    if (want("nondeg")) {
        checks_json["left_nondeg"] = p.left_nondeg;
        checks_json["right_nondeg"] = p.right_nondeg;
        checks_json["bijective"] = p.bijective;
    }
    j["checks"] = checks_json;
    if (as_json || !out.empty()) {
        emit(j, out);
    } else {
        std::cout << "solution on " << S.n() << " elements: ybe=" << flag_str(p.ybe)
                  << " left_nondeg=" << flag_str(p.left_nondeg)
                  << " right_nondeg=" << flag_str(p.right_nondeg)
                  << " bijective=" << flag_str(p.bijective)
                  << " involutive=" << flag_str(p.involutive) << " cubic=" << flag_str(p.cubic)
                  << "\n";
        if (p.ybe_witness)
            std::cout << "ybe witness: " << witness_text(S.mul, *p.ybe_witness) << "\n";
    }
    return failed ? 1 : 0;
}

int cmd_compose(const std::string& group_arg, const std::string& phi_path,
                const std::string& omega_path, const std::string& out, bool as_json) {
    AffineStructure phi = load_affine_arg(phi_path, group_arg);
    AffineStructure omega = load_affine_arg(omega_path, group_arg);
    ComposeResult res = compose_affine(phi, omega);
    if (!res.ok) {
        const FiniteGroup& G = phi.group;
        if (res.c1_witness)
            std::cout << "FAIL (c1) at " << witness_text(G, *res.c1_witness) << "\n";
        if (res.c2_witness)
            std::cout << "FAIL (c2) at " << witness_text(G, *res.c2_witness) << "\n";
        if (res.c2prime_witness)
            std::cout << "FAIL (c2') at " << witness_text(G, *res.c2prime_witness) << "\n";
        return 1;
    }
    const AffineStructure& S = *res.composed;
    if (as_json || !out.empty())
        emit(affine_to_json(S), out);
    else
        std::cout << "composed structure: cancellative=" << flag_str(S.flags.cancellative)
                  << " groupal=" << flag_str(S.flags.groupal)
                  << " abelian=" << flag_str(S.flags.abelian) << "\n";
    return 0;
}

int cmd_transport(const std::string& in, const std::string& group_arg, const std::string& map_path,
                  const std::string& target_arg, const std::string& out, bool as_json) {
    AffineStructure A = load_affine_arg(in, group_arg);
    FiniteGroup H = load_group_arg(target_arg);
    json mj = load_json_file(map_path);
    std::vector<int> img;
    const json& arr = mj.is_object() && mj.contains("images") ? mj.at("images") : mj;
    if (!arr.is_array()) throw std::invalid_argument("map file must hold an image array");
    for (const auto& v : arr) img.push_back(v.get<int>());
    GroupHom f = make_hom(A.group, H, std::move(img));
    AffineStructure B = transport(A, f);
    if (as_json || !out.empty())
        emit(affine_to_json(B), out);
    else
        std::cout << "transported structure on " << H.name()
                  << ": cancellative=" << flag_str(B.flags.cancellative)
                  << " groupal=" << flag_str(B.flags.groupal) << "\n";
    return 0;
}

int cmd_equiv_classes(const std::string& group_arg, const std::vector<std::string>& sigma_paths,
                      bool as_json) {
    std::vector<AffineStructure> structures;
    for (const auto& p : sigma_paths) structures.push_back(load_affine_arg(p, group_arg));
    std::vector<EquivClass> classes = equivalence_classes(structures);
    if (as_json) {
        json j = json::array();
        for (const auto& c : classes)
            j.push_back({{"canonical_sigma", c.canonical_sigma}, {"members", c.members}});
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << classes.size() << " equivalence class(es) among " << structures.size()
                  << " structure(s)\n";
        for (size_t i = 0; i < classes.size(); ++i) {
            std::cout << "  class " << i << ": members";
            for (size_t m : classes[i].members) std::cout << " " << m;
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_enumerate(const CliOptions& cli, const std::string& group_arg, const std::string& kind_str,
                  bool naive, bool do_census, const std::string& cache_dir, long long max_cands) {
    FiniteGroup G = load_group_arg(group_arg);
    StructureKind kind = kind_from_string(kind_str);
    EnumerateOptions opt;
    opt.jobs = cli.jobs;
    opt.seed = cli.seed;
    if (max_cands > 0) opt.max_candidates = max_cands;
    if (do_census) {
        std::string dir = cache_dir;
        if (dir.empty())
            if (const char* env = std::getenv("AFFINE_LAB_CACHE")) dir = env;
        CensusResult r = census(G, kind, opt, dir);
        json classes = json::array();
        for (const auto& c : r.classes)
            classes.push_back({{"canonical_sigma", c.canonical_sigma},
                               {"orbit_members", c.orbit_members},
                               {"cancellative", c.flags.cancellative},
                               {"groupal", c.flags.groupal},
                               {"abelian", c.flags.abelian},
                               {"additive_iso", c.additive_iso},
                               {"ybe", c.ybe},
                               {"involutive", c.involutive},
                               {"cubic", c.cubic}});
        json j = {{"schema", "affinelab/census/v1"}, {"group", r.group_name},
                  {"kind", r.kind},                  {"structure_count", r.structure_count},
                  {"class_count", r.classes.size()}, {"from_cache", r.from_cache},
                  {"classes", classes}};
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::vector<AffineStructure> found =
        naive ? enumerate_naive(G, kind) : enumerate_affine(G, kind, opt);
    for (const auto& A : found) {
        json j = {{"group", G.name()},
                  {"sigma", json::array()},
                  {"cancellative", A.flags.cancellative},
                  {"groupal", A.flags.groupal},
                  {"abelian", A.flags.abelian}};
        for (int a = 0; a < A.n(); ++a) {
            json row = json::array();
            for (int b = 0; b < A.n(); ++b) row.push_back(A.sig(a, b));
            j["sigma"].push_back(std::move(row));
        }
        std::cout << j.dump() << "\n";  // JSON lines, one structure per line
    }
    return 0;
}

int cmd_product_zappa(const std::string& in) {
    ZappaSystem Z = zappa_from_json(load_json_file(in));
    ZappaReport rep = verify_zappa(Z);
    if (!rep.ok()) {
        std::cout << "FAIL: " << rep.witness->identity << " at (" << rep.witness->x << ","
                  << rep.witness->y << "," << rep.witness->z << ")\n";
        return 1;
    }
    std::cout << "ok: all four product identities hold; eta bijective="
              << flag_str(rep.eta_bijective) << " delta bijective=" << flag_str(rep.delta_bijective);
    if (rep.product) std::cout << "; product is a group of order " << rep.product->order();
    std::cout << "\n";
    return 0;
}

int cmd_product_bowtie(const std::string& in, const std::string& out, bool as_json) {
    MatchedSystem M = matched_from_json(load_json_file(in));
    FiniteGroup G = bowtie_group(M);
    if (as_json || !out.empty())
        emit(group_to_json(G), out);
    else
        std::cout << "product group " << G.name() << " of order " << G.order()
                  << (G.is_abelian() ? " (abelian)" : " (non-abelian)") << "\n";
    return 0;
}

int cmd_product_affine(const std::string& in, const std::string& s_sigma,
                       const std::string& t_sigma, bool do_assert, const std::string& out,
                       bool as_json) {
    MatchedSystem M = matched_from_json(load_json_file(in));
    AffineStructure AS = load_affine_arg(s_sigma, "");
    AffineStructure AT = load_affine_arg(t_sigma, "");
    if (!AS.group.same_table(M.S) || !AT.group.same_table(M.T))
        throw std::invalid_argument("factor structures do not match the system's groups");
    ProductConditionReport rep = check_product_conditions(M, AS, AT);
    std::cout << "conditions: (I)=" << flag_str(rep.cond_i) << " (II)=" << flag_str(rep.cond_ii)
              << " (III)=" << flag_str(rep.cond_iii);
    if (rep.product_verifies)
        std::cout << "; product verifies=" << flag_str(*rep.product_verifies);
    std::cout << "\n";
    if (!rep.conditions_hold()) {
        if (rep.witness) std::cout << "witness: " << *rep.witness << "\n";
        return do_assert ? 1 : 0;
    }
    AffineStructure P = product_affine(M, AS, AT);
    if (as_json || !out.empty())
        emit(affine_to_json(P), out);
    else
        std::cout << "product structure on " << P.group.name()
                  << ": groupal=" << flag_str(P.flags.groupal) << "\n";
    return 0;
}

int cmd_product_matched(const std::string& in, const std::string& s_brace,
                        const std::string& t_brace, bool do_assert, const std::string& out,
                        bool as_json) {
    MatchedSystem M = matched_from_json(load_json_file(in));
    SemiBrace S = semibrace_from_json(load_json_file(s_brace));
    SemiBrace T = semibrace_from_json(load_json_file(t_brace));
    MatchedBraceSystem MB{std::move(M), std::move(S), std::move(T)};
    ConfrontoReport conf = confronto_check(MB);
    std::cout << "lambda compatibility=" << flag_str(conf.lambda_compat)
              << ", additive automorphisms=" << flag_str(conf.alpha_beta_additive_automorphisms)
              << "\n";
    if (!conf.lambda_compat) return do_assert ? 1 : 0;
    MatchedProductResult res = matched_product_semibrace(MB);
    AdditiveReport add = additive_report(res.product);
    if (as_json || !out.empty())
        emit(semibrace_to_json(res.product), out);
    else
        std::cout << "matched product: skew=" << flag_str(res.product.flags.skew)
                  << " additive=" << add.iso_type << "\n";
    return 0;
}

int cmd_compare(const std::string& in, const std::string& s_sigma, const std::string& t_sigma,
                const std::string& s_brace, const std::string& t_brace, bool do_assert) {
    MatchedSystem M = matched_from_json(load_json_file(in));
    AffineStructure AS = load_affine_arg(s_sigma, "");
    AffineStructure AT = load_affine_arg(t_sigma, "");
    SemiBrace S = semibrace_from_json(load_json_file(s_brace));
    SemiBrace T = semibrace_from_json(load_json_file(t_brace));
    MatchedBraceSystem MB{std::move(M), std::move(S), std::move(T)};
    CompareResult res = compare_constructions(MB, AS, AT);
    if (!res.product_applicable || !res.matched_applicable) {
        std::cout << "inapplicable: " << res.note << "\n";
        return do_assert ? 1 : 0;
    }
    std::cout << "sums coincide=" << flag_str(res.sums_coincide)
              << ", isomorphic=" << flag_str(res.isomorphic) << "\n";
    return 0;
}

int cmd_catalog(bool list, const std::string& id, bool all, bool do_assert,
                const std::string& report_path) {
    if (list) {
        for (const auto& e : catalog_entries()) std::cout << e.id << "  " << e.title << "\n";
        return 0;
    }
    std::vector<std::string> ids;
    if (all)
        for (const auto& e : catalog_entries()) ids.push_back(e.id);
    else if (!id.empty())
        ids.push_back(id);
    else
        throw std::invalid_argument("catalog run: pass --id or --all");

    json report = json::array();
    bool any_fail = false;
    for (const auto& eid : ids) {
        EntryOutcome out = run_catalog_entry(eid);
        any_fail |= !out.ok;
        std::cout << (out.ok ? "[PASS] " : "[FAIL] ") << out.id << "  "
                  << catalog_entry(eid).title << "\n";
        for (const auto& d : out.diffs) std::cout << "       " << d << "\n";
        const CatalogEntry& entry = catalog_entry(eid);
        json checks = json::array();
        for (const auto& [k, want] : out.expected) {
            json c = {{"property", k},
                      {"expected", want},
                      {"actual", out.actual.count(k) ? out.actual.at(k) : "<missing>"}};
            if (entry.notes.count(k)) c["note"] = entry.notes.at(k);
            checks.push_back(std::move(c));
        }
        report.push_back({{"id", out.id},
                          {"title", entry.title},
                          {"ok", out.ok},
                          {"params", entry.params},
                          {"checks", std::move(checks)}});
    }
    if (!report_path.empty())
        save_json_file(report_path, json{{"schema", "affinelab/catalog-report/v1"},
                                         {"version", kCodeVersion},
                                         {"entries", report}});
    return (do_assert && any_fail) ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"affinelab — affine-type structures on finite groups, semi-braces and"
                 " set-theoretic Yang-Baxter solutions"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    CliOptions cli;
    app.add_flag("--json", cli.json_output, "machine-readable output");
    app.add_option("--jobs", cli.jobs, "worker parallelism (default: available cores)");
    app.add_option("--seed", cli.seed, "exploration order seed; never affects results");

    // group
    auto* group = app.add_subcommand("group", "construct or validate groups");
    auto* gmake = group->add_subcommand("make", "build a group from a constructor spec");
    std::string g_spec, g_out;
    gmake->add_option("--spec", g_spec, "cyclic:N, dihedral:L, symmetric:N, quaternion, trivial, A*B")
        ->required();
    gmake->add_option("--out", g_out, "write group JSON here");
    auto* gverify = group->add_subcommand("verify", "validate a group table file");
    std::string g_in;
    gverify->add_option("--in", g_in)->required();

    // verify
    auto* verify = app.add_subcommand("verify", "verify a structure against its axioms");
    auto* vaff = verify->add_subcommand("affine", "anti-homomorphism + defining identity");
    std::string va_group, va_sigma;
    vaff->add_option("--group", va_group, "group spec or file");
    vaff->add_option("--sigma", va_sigma, "sigma table file")->required();
    auto* vsb = verify->add_subcommand("semibrace", "semigroup sum + compatibility identity");
    std::string vsb_in;
    vsb->add_option("--in", vsb_in)->required();
    auto* vgr = verify->add_subcommand("group", "group axioms with witnesses");
    std::string vgr_in;
    vgr->add_option("--in", vgr_in)->required();

    // classify
    auto* classify = app.add_subcommand("classify", "verify and print classification flags");
    auto* caff = classify->add_subcommand("affine", "cancellative / groupal / abelian flags");
    std::string ca_group, ca_sigma;
    caff->add_option("--group", ca_group);
    caff->add_option("--sigma", ca_sigma)->required();

    // derive
    auto* derive = app.add_subcommand("derive", "convert between structures");
    auto* dsb = derive->add_subcommand("semibrace", "semi-brace from an affine structure");
    std::string dsb_group, dsb_sigma, dsb_out;
    bool dsb_from_affine = false;
    dsb->add_flag("--from-affine", dsb_from_affine);
    dsb->add_option("--group", dsb_group);
    dsb->add_option("--sigma", dsb_sigma)->required();
    dsb->add_option("--out", dsb_out);
    auto* daf = derive->add_subcommand("affine", "affine structure from a semi-brace");
    std::string daf_in, daf_out;
    bool daf_from_sb = false;
    daf->add_flag("--from-semibrace", daf_from_sb);
    daf->add_option("--in", daf_in)->required();
    daf->add_option("--out", daf_out);

    // report
    auto* report = app.add_subcommand("report", "full semi-brace property report");
    std::string rep_in;
    report->add_option("--in", rep_in)->required();

    // solution
    auto* solution = app.add_subcommand("solution", "derive and check the induced solution");
    std::string sol_from, sol_checks, sol_out;
    solution->add_option("--from", sol_from, "semibrace JSON file")->required();
    solution->add_option("--check", sol_checks, "comma list: ybe,involutive,cubic,nondeg");
    solution->add_option("--out", sol_out, "write the r table here");

    // compose
    auto* compose_cmd = app.add_subcommand("compose", "compose two affine structures");
    std::string co_group, co_phi, co_omega, co_out;
    compose_cmd->add_option("--group", co_group);
    compose_cmd->add_option("--phi", co_phi)->required();
    compose_cmd->add_option("--omega", co_omega)->required();
    compose_cmd->add_option("--out", co_out);

    // transport
    auto* transport_cmd = app.add_subcommand("transport", "move a structure along an isomorphism");
    std::string tr_in, tr_group, tr_map, tr_target, tr_out;
    transport_cmd->add_option("--sigma", tr_in)->required();
    transport_cmd->add_option("--group", tr_group);
    transport_cmd->add_option("--map", tr_map, "image array of the isomorphism")->required();
    transport_cmd->add_option("--target", tr_target, "target group spec or file")->required();
    transport_cmd->add_option("--out", tr_out);

    // equiv-classes
    auto* equiv = app.add_subcommand("equiv-classes", "orbit partition under automorphisms");
    std::string eq_group;
    std::vector<std::string> eq_sigmas;
    equiv->add_option("--group", eq_group);
    equiv->add_option("--sigma", eq_sigmas, "sigma table files")->required()->expected(-1);

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "search all structures on a group");
    std::string en_group, en_kind = "all", en_cache;
    bool en_naive = false, en_census = false;
    long long en_max = 0;
    enumerate->add_option("--group", en_group)->required();
    enumerate->add_option("--kind", en_kind, "all|cancellative|groupal|abelian");
    enumerate->add_flag("--naive", en_naive, "row-by-row oracle (order <= 4)");
    enumerate->add_flag("--census", en_census, "equivalence-class census");
    enumerate->add_option("--cache-dir", en_cache, "census cache (default: $AFFINE_LAB_CACHE)");
    enumerate->add_option("--max-candidates", en_max);

    // product
    auto* product = app.add_subcommand("product", "two-group product constructions");
    bool pr_assert = false;
    product->add_flag("--assert", pr_assert, "exit nonzero on any failed condition");
    auto* pz = product->add_subcommand("zappa", "verify the four product identities");
    std::string pz_in;
    pz->add_option("--in", pz_in)->required();
    auto* pb = product->add_subcommand("bowtie", "build the product group of a matched system");
    std::string pb_in, pb_out;
    pb->add_option("--in", pb_in)->required();
    pb->add_option("--out", pb_out);
    auto* pa = product->add_subcommand("affine", "product affine structure on the bowtie group");
    std::string pa_in, pa_s, pa_t, pa_out;
    pa->add_option("--in", pa_in)->required();
    pa->add_option("--s-sigma", pa_s)->required();
    pa->add_option("--t-sigma", pa_t)->required();
    pa->add_option("--out", pa_out);
    auto* pm = product->add_subcommand("matched", "matched product of two semi-braces");
    std::string pm_in, pm_s, pm_t, pm_out;
    pm->add_option("--in", pm_in)->required();
    pm->add_option("--s-brace", pm_s)->required();
    pm->add_option("--t-brace", pm_t)->required();
    pm->add_option("--out", pm_out);
    auto* pc = product->add_subcommand("compare", "both constructions side by side");
    std::string pc_in, pc_ss, pc_ts, pc_sb, pc_tb;
    pc->add_option("--in", pc_in)->required();
    pc->add_option("--s-sigma", pc_ss)->required();
    pc->add_option("--t-sigma", pc_ts)->required();
    pc->add_option("--s-brace", pc_sb)->required();
    pc->add_option("--t-brace", pc_tb)->required();

    // compare
    auto* compare = app.add_subcommand("compare", "product construction vs matched product");
    std::string cm_in, cm_ss, cm_ts, cm_sb, cm_tb;
    bool cm_assert = false;
    compare->add_option("--in", cm_in)->required();
    compare->add_option("--s-sigma", cm_ss)->required();
    compare->add_option("--t-sigma", cm_ts)->required();
    compare->add_option("--s-brace", cm_sb)->required();
    compare->add_option("--t-brace", cm_tb)->required();
    compare->add_flag("--assert", cm_assert);

    // catalog
    auto* catalog = app.add_subcommand("catalog", "the library of worked constructions");
    auto* clist = catalog->add_subcommand("list", "list entries");
    auto* crun = catalog->add_subcommand("run", "build, verify and diff entries");
    std::string cat_id, cat_report;
    bool cat_all = false, cat_assert = false;
    crun->add_option("--id", cat_id);
    crun->add_flag("--all", cat_all);
    crun->add_flag("--assert", cat_assert);
    crun->add_option("--report", cat_report, "write a JSON report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gmake->parsed()) return cmd_group_make(g_spec, g_out, cli.json_output);
        if (gverify->parsed()) return cmd_group_verify(g_in);
        if (vaff->parsed()) return verify_affine_tables(va_sigma, va_group, cli.json_output);
        if (vsb->parsed()) return verify_semibrace_file(vsb_in, cli.json_output);
        if (vgr->parsed()) return cmd_group_verify(vgr_in);
        if (caff->parsed()) return verify_affine_tables(ca_sigma, ca_group, cli.json_output);
        if (dsb->parsed()) {
            SemiBrace S = semibrace_from_affine(load_affine_arg(dsb_sigma, dsb_group));
            if (!dsb_out.empty() || cli.json_output)
                emit(semibrace_to_json(S), dsb_out);
            else
                std::cout << "derived semi-brace: left_cancellative="
                          << flag_str(S.flags.left_cancellative)
                          << " skew=" << flag_str(S.flags.skew)
                          << " brace=" << flag_str(S.flags.brace) << "\n";
            return 0;
        }
        if (daf->parsed()) {
            AffineStructure A = affine_from_semibrace(semibrace_from_json(load_json_file(daf_in)));
            if (!daf_out.empty() || cli.json_output)
                emit(affine_to_json(A), daf_out);
            else
                std::cout << "derived structure: cancellative=" << flag_str(A.flags.cancellative)
                          << " groupal=" << flag_str(A.flags.groupal) << "\n";
            return 0;
        }
        if (report->parsed()) return cmd_report(rep_in, cli.json_output);
        if (solution->parsed()) return cmd_solution(sol_from, sol_checks, sol_out, cli.json_output);
        if (compose_cmd->parsed())
            return cmd_compose(co_group, co_phi, co_omega, co_out, cli.json_output);
        if (transport_cmd->parsed())
            return cmd_transport(tr_in, tr_group, tr_map, tr_target, tr_out, cli.json_output);
        if (equiv->parsed()) return cmd_equiv_classes(eq_group, eq_sigmas, cli.json_output);
        if (enumerate->parsed())
            return cmd_enumerate(cli, en_group, en_kind, en_naive, en_census, en_cache, en_max);
        if (pz->parsed()) return cmd_product_zappa(pz_in);
        if (pb->parsed()) return cmd_product_bowtie(pb_in, pb_out, cli.json_output);
        if (pa->parsed())
            return cmd_product_affine(pa_in, pa_s, pa_t, pr_assert, pa_out, cli.json_output);
        if (pm->parsed())
            return cmd_product_matched(pm_in, pm_s, pm_t, pr_assert, pm_out, cli.json_output);
        if (pc->parsed()) return cmd_compare(pc_in, pc_ss, pc_ts, pc_sb, pc_tb, pr_assert);
        if (compare->parsed()) return cmd_compare(cm_in, cm_ss, cm_ts, cm_sb, cm_tb, cm_assert);
        if (clist->parsed()) return cmd_catalog(true, "", false, false, "");
        if (crun->parsed()) return cmd_catalog(false, cat_id, cat_all, cat_assert, cat_report);
        std::cerr << "no subcommand given\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return 1;
    }
}
