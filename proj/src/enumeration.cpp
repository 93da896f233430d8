#include "affinelab/enumeration.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <queue>
#include <random>
#include <stdexcept>

#include <json.hpp>

#include "affinelab/parallel.hpp"
#include "affinelab/semibrace.hpp"
#include "affinelab/ybe.hpp"

namespace aflab {

StructureKind kind_from_string(const std::string& s) {
    if (s == "all") return StructureKind::All;
    if (s == "cancellative") return StructureKind::Cancellative;
    if (s == "groupal") return StructureKind::Groupal;
    if (s == "abelian") return StructureKind::Abelian;
    throw std::invalid_argument("unknown kind: " + s + " (expected all|cancellative|groupal|abelian)");
}

std::string kind_to_string(StructureKind k) {
    switch (k) {
        case StructureKind::All: return "all";
        case StructureKind::Cancellative: return "cancellative";
        case StructureKind::Groupal: return "groupal";
        case StructureKind::Abelian: return "abelian";
    }
    return "?";
}

bool flags_match_kind(const AffineFlags& f, StructureKind k) {
    switch (k) {
        case StructureKind::All: return true;
        case StructureKind::Cancellative: return f.cancellative;
        case StructureKind::Groupal: return f.groupal;
        case StructureKind::Abelian: return f.abelian;
    }
    return false;
}

namespace {

std::vector<std::vector<int>> all_self_maps(int n) {
    long long total = 1;
    for (int i = 0; i < n; ++i) total *= n;
    std::vector<std::vector<int>> maps;
    maps.reserve(static_cast<size_t>(total));
    std::vector<int> cur(static_cast<size_t>(n), 0);
    for (long long idx = 0; idx < total; ++idx) {
        maps.push_back(cur);
        for (int pos = n - 1; pos >= 0; --pos) {
            if (++cur[static_cast<size_t>(pos)] < n) break;
            cur[static_cast<size_t>(pos)] = 0;
        }
    }
    return maps;
}

}  // namespace

std::vector<AffineStructure> enumerate_naive(const FiniteGroup& G, StructureKind kind) {
    int n = G.order();
    if (n > 4) throw std::invalid_argument("enumerate_naive: order capped at 4");
    std::vector<std::vector<int>> maps = all_self_maps(n);

    std::vector<const std::vector<int>*> rows(static_cast<size_t>(n), nullptr);
    std::vector<std::vector<int>> found;

    // prune as soon as every row in a constraint is assigned
    auto prefix_ok = [&](int k) {
        for (int a = 0; a <= k; ++a)
            for (int b = 0; b <= k; ++b) {
                int ab = G.op(a, b);
                if (ab > k) continue;
                if (a != k && b != k && ab != k) continue;  // checked earlier
                const auto &ra = *rows[static_cast<size_t>(a)], &rb = *rows[static_cast<size_t>(b)],
                           &rab = *rows[static_cast<size_t>(ab)];
                for (int x = 0; x < n; ++x)
                    if (rab[static_cast<size_t>(x)] !=
                        rb[static_cast<size_t>(ra[static_cast<size_t>(x)])])
                        return false;
            }
        return true;
    };

    std::function<void(int)> rec = [&](int k) {
        if (k == n) {
            std::vector<int> sigma;
            sigma.reserve(static_cast<size_t>(n) * n);
            for (int a = 0; a < n; ++a)
                sigma.insert(sigma.end(), rows[static_cast<size_t>(a)]->begin(),
                             rows[static_cast<size_t>(a)]->end());
            AffineReport rep = verify_affine(G, sigma);
            if (rep.valid() && flags_match_kind(rep.flags, kind)) found.push_back(std::move(sigma));
            return;
        }
        for (const auto& m : maps) {
            rows[static_cast<size_t>(k)] = &m;
            if (prefix_ok(k)) rec(k + 1);
        }
        rows[static_cast<size_t>(k)] = nullptr;
    };
    rec(0);

    std::sort(found.begin(), found.end());
    std::vector<AffineStructure> out;
    out.reserve(found.size());
    for (auto& sigma : found) out.push_back(affine_from_table(G, std::move(sigma)));
    return out;
}

namespace {

// Extends generator rows to a full sigma table along the anti-homomorphism
// law; bails out when a reachable element receives two different rows.
bool extend_rows(const FiniteGroup& G, const std::vector<int>& gens,
                 const std::vector<const std::vector<int>*>& gen_rows, std::vector<int>& sigma) {
    int n = G.order();
    std::vector<char> assigned(static_cast<size_t>(n), 0);
    std::queue<int> todo;
    for (size_t i = 0; i < gens.size(); ++i) {
        int g = gens[i];
        const std::vector<int>& row = *gen_rows[i];
        if (assigned[static_cast<size_t>(g)]) {
            for (int x = 0; x < n; ++x)
                if (sigma[static_cast<size_t>(g) * n + x] != row[static_cast<size_t>(x)]) return false;
            continue;
        }
        std::copy(row.begin(), row.end(), sigma.begin() + static_cast<size_t>(g) * n);
        assigned[static_cast<size_t>(g)] = 1;
        todo.push(g);
    }
    int remaining = n;
    for (int x = 0; x < n; ++x)
        if (assigned[static_cast<size_t>(x)]) --remaining;
    while (!todo.empty()) {
        int x = todo.front();
        todo.pop();
        for (size_t i = 0; i < gens.size(); ++i) {
            int y = G.op(x, gens[i]);
            const std::vector<int>& grow = *gen_rows[i];
            // σ_{x∘g} = σ_g ∘ σ_x
            if (!assigned[static_cast<size_t>(y)]) {
                for (int t = 0; t < n; ++t)
                    sigma[static_cast<size_t>(y) * n + t] =
                        grow[static_cast<size_t>(sigma[static_cast<size_t>(x) * n + t])];
                assigned[static_cast<size_t>(y)] = 1;
                --remaining;
                todo.push(y);
            } else {
                for (int t = 0; t < n; ++t)
                    if (sigma[static_cast<size_t>(y) * n + t] !=
                        grow[static_cast<size_t>(sigma[static_cast<size_t>(x) * n + t])])
                        return false;
            }
        }
    }
    return remaining == 0;
}

// Candidate rows for one generator. Permutation kinds are small enough to
// materialize; the unrestricted kind decodes a row from its index instead
// (n^n rows would not fit in memory for n = 8).
struct CandidateRows {
    long long count = 0;
    int n = 0;
    std::vector<std::vector<int>> perms;  // empty for the unrestricted kind

    void fill(long long index, std::vector<int>& row) const {
        if (!perms.empty()) {
            row = perms[static_cast<size_t>(index)];
            return;
        }
        row.resize(static_cast<size_t>(n));
        for (int pos = n - 1; pos >= 0; --pos) {
            row[static_cast<size_t>(pos)] = static_cast<int>(index % n);
            index /= n;
        }
    }
};

CandidateRows candidate_rows(const FiniteGroup& G, StructureKind kind) {
    int n = G.order();
    CandidateRows c;
    c.n = n;
    if (kind == StructureKind::All) {
        c.count = 1;
        for (int i = 0; i < n; ++i) c.count *= n;
        return c;
    }
    std::vector<int> p(static_cast<size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    bool fix_identity = kind != StructureKind::Cancellative;
    int e = G.identity();
    do {
        if (fix_identity && p[static_cast<size_t>(e)] != e) continue;
        c.perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    c.count = static_cast<long long>(c.perms.size());
    return c;
}

}  // namespace

std::vector<AffineStructure> enumerate_affine(const FiniteGroup& G, StructureKind kind,
                                              const EnumerateOptions& opt) {
    int n = G.order();
    if (n > opt.max_order) throw std::invalid_argument("enumerate_affine: order exceeds the bound");
    if (n == 1) return {trivial_affine(G)};

    std::vector<int> gens = G.generating_set();
    CandidateRows cands = candidate_rows(G, kind);
    long long total = 1;
    for (size_t i = 0; i < gens.size(); ++i) {
        total *= cands.count;
        if (total > opt.max_candidates)
            throw std::invalid_argument("enumerate_affine: candidate space exceeds the bound");
    }

    // exploration order of the first generator row is seed-shuffled; the
    // sorted merge keeps the result independent of it
    std::vector<long long> first_order;
    if (opt.seed != 0) {
        first_order.resize(static_cast<size_t>(cands.count));
        std::iota(first_order.begin(), first_order.end(), 0LL);
        std::mt19937_64 rng(opt.seed);
        std::shuffle(first_order.begin(), first_order.end(), rng);
    }

    size_t rest = gens.size() - 1;
    long long rest_total = 1;
    for (size_t i = 0; i < rest; ++i) rest_total *= cands.count;

    // the candidate stream is partitioned over the first generator row; each
    // worker owns a contiguous block and results are merged by sorting
    int nchunks = static_cast<int>(std::min<long long>(std::max(opt.jobs, 1), cands.count));
    std::vector<std::vector<std::vector<int>>> chunk_found(static_cast<size_t>(nchunks));
    long long per_chunk = (cands.count + nchunks - 1) / nchunks;
    parallel_chunks(nchunks, nchunks, [&](int clo, int chi) {
        for (int chunk = clo; chunk < chi; ++chunk) {
            long long lo = chunk * per_chunk;
            long long hi = std::min(cands.count, lo + per_chunk);
            std::vector<std::vector<int>>& found = chunk_found[static_cast<size_t>(chunk)];
            std::vector<std::vector<int>> rows(gens.size());
            std::vector<const std::vector<int>*> gen_rows(gens.size());
            for (size_t i = 0; i < gens.size(); ++i) gen_rows[i] = &rows[i];
            std::vector<int> sigma(static_cast<size_t>(n) * n);
            for (long long fi = lo; fi < hi; ++fi) {
                cands.fill(first_order.empty() ? fi : first_order[static_cast<size_t>(fi)],
                           rows[0]);
                for (long long code = 0; code < rest_total; ++code) {
                    long long c = code;
                    for (size_t i = 1; i < gens.size(); ++i) {
                        cands.fill(c % cands.count, rows[i]);
                        c /= cands.count;
                    }
                    if (!extend_rows(G, gens, gen_rows, sigma)) continue;
                    if (check_anti_hom(G, sigma)) continue;
                    if (check_affine_identity(G, sigma)) continue;
                    AffineFlags flags = classify_affine(G, sigma);
                    if (flags_match_kind(flags, kind)) found.push_back(sigma);
                }
            }
        }
    });
    std::vector<std::vector<int>> tables;
    for (auto& chunk : chunk_found)
        for (auto& t : chunk) tables.push_back(std::move(t));
    std::sort(tables.begin(), tables.end());
    std::vector<AffineStructure> out;
    out.reserve(tables.size());
    for (auto& sigma : tables) out.push_back(affine_from_table(G, std::move(sigma)));
    return out;
}

uint64_t group_table_hash(const FiniteGroup& G) {
    uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](uint64_t v) {
        h ^= v;
        h *= 1099511628211ULL;
    };
    mix(static_cast<uint64_t>(G.order()));
    for (int v : G.table()) mix(static_cast<uint64_t>(v));
    return h;
}

namespace {

std::string cache_file_name(const std::string& dir, uint64_t hash, StructureKind kind) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
    return dir + "/census-" + buf + "-" + kind_to_string(kind) + "-" + kCodeVersion + ".json";
}

nlohmann::json census_to_json(const CensusResult& r) {
    nlohmann::json classes = nlohmann::json::array();
    for (const auto& c : r.classes) {
        classes.push_back({{"canonical_sigma", c.canonical_sigma},
                           {"orbit_members", c.orbit_members},
                           {"cancellative", c.flags.cancellative},
                           {"groupal", c.flags.groupal},
                           {"abelian", c.flags.abelian},
                           {"additive_iso", c.additive_iso},
                           {"ybe", c.ybe},
                           {"left_nondeg", c.left_nondeg},
                           {"right_nondeg", c.right_nondeg},
                           {"bijective", c.bijective},
                           {"involutive", c.involutive},
                           {"cubic", c.cubic}});
    }
    return {{"schema", "affinelab/census/v1"},
            {"version", kCodeVersion},
            {"group", r.group_name},
            {"group_hash", r.group_hash},
            {"kind", r.kind},
            {"structure_count", r.structure_count},
            {"classes", classes}};
}

std::optional<CensusResult> census_from_json(const nlohmann::json& j, uint64_t expect_hash,
                                             const std::string& expect_kind) {
    if (!j.is_object() || j.value("schema", "") != "affinelab/census/v1") return std::nullopt;
    if (j.value("version", "") != kCodeVersion) return std::nullopt;
    if (j.value("group_hash", 0ULL) != expect_hash || j.value("kind", "") != expect_kind)
        return std::nullopt;
    CensusResult r;
    r.group_name = j.value("group", "");
    r.group_hash = expect_hash;
    r.kind = expect_kind;
    r.structure_count = j.value("structure_count", 0);
    for (const auto& c : j.at("classes")) {
        CensusClass cc;
        cc.canonical_sigma = c.at("canonical_sigma").get<std::vector<int>>();
        cc.orbit_members = c.value("orbit_members", 0);
        cc.flags.anti_hom = cc.flags.affine = true;
        cc.flags.cancellative = c.value("cancellative", false);
        cc.flags.groupal = c.value("groupal", false);
        cc.flags.abelian = c.value("abelian", false);
        cc.additive_iso = c.value("additive_iso", "");
        cc.ybe = c.value("ybe", false);
        cc.left_nondeg = c.value("left_nondeg", false);
        cc.right_nondeg = c.value("right_nondeg", false);
        cc.bijective = c.value("bijective", false);
        cc.involutive = c.value("involutive", false);
        cc.cubic = c.value("cubic", false);
        r.classes.push_back(std::move(cc));
    }
    r.from_cache = true;
    return r;
}

}  // namespace

CensusResult census(const FiniteGroup& G, StructureKind kind, const EnumerateOptions& opt,
                    const std::string& cache_dir) {
    uint64_t hash = group_table_hash(G);
    if (!cache_dir.empty()) {
        std::ifstream in(cache_file_name(cache_dir, hash, kind));
        if (in) {
            nlohmann::json j;
            try {
                in >> j;
                if (auto hit = census_from_json(j, hash, kind_to_string(kind))) return *hit;
            } catch (const nlohmann::json::exception&) {
                // stale or corrupt cache entry; fall through and recompute
            }
        }
    }

    std::vector<AffineStructure> all = enumerate_affine(G, kind, opt);
    std::vector<EquivClass> classes = equivalence_classes(all);

    CensusResult r;
    r.group_name = G.name();
    r.group_hash = hash;
    r.kind = kind_to_string(kind);
    r.structure_count = static_cast<int>(all.size());
    for (const auto& cls : classes) {
        CensusClass cc;
        cc.canonical_sigma = cls.canonical_sigma;
        cc.orbit_members = static_cast<int>(cls.members.size());
        AffineStructure rep = affine_from_table(G, cls.canonical_sigma);
        cc.flags = rep.flags;
        SemiBrace sb = semibrace_from_affine(rep);
        cc.additive_iso = additive_report(sb).iso_type;
        SolutionProperties props = solution_properties(solution_from(sb));
        cc.ybe = props.ybe;
        cc.left_nondeg = props.left_nondeg;
        cc.right_nondeg = props.right_nondeg;
        cc.bijective = props.bijective;
        cc.involutive = props.involutive;
        cc.cubic = props.cubic;
        r.classes.push_back(std::move(cc));
    }

    if (!cache_dir.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(cache_dir, ec);
        if (!ec) {
            std::ofstream out(cache_file_name(cache_dir, hash, kind));
            if (out) out << census_to_json(r).dump(2) << "\n";
        }
    }
    return r;
}

}  // namespace aflab
