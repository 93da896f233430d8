#include "affinelab/group.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

namespace aflab {

SelfMap::SelfMap(int size, std::vector<int> images) : n(size), img(std::move(images)) {
    if (n < 0 || img.size() != static_cast<size_t>(n))
        throw std::invalid_argument("SelfMap: image array size does not match domain size");
    for (int v : img)
        if (v < 0 || v >= n) throw std::invalid_argument("SelfMap: image out of range");
}

bool SelfMap::is_bijective() const {
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int v : img) {
        if (seen[static_cast<size_t>(v)]) return false;
        seen[static_cast<size_t>(v)] = 1;
    }
    return true;
}

bool SelfMap::is_identity() const {
    for (int x = 0; x < n; ++x)
        if (img[static_cast<size_t>(x)] != x) return false;
    return true;
}

SelfMap SelfMap::identity(int n) {
    std::vector<int> img(static_cast<size_t>(n));
    std::iota(img.begin(), img.end(), 0);
    return SelfMap(n, std::move(img));
}

SelfMap compose(const SelfMap& f, const SelfMap& g) {
    if (f.n != g.n) throw std::invalid_argument("compose: domain size mismatch");
    std::vector<int> img(static_cast<size_t>(f.n));
    for (int x = 0; x < f.n; ++x) img[static_cast<size_t>(x)] = f(g(x));
    return SelfMap(f.n, std::move(img));
}

Permutation inverse_of(const Permutation& p) {
    std::vector<int> img(static_cast<size_t>(p.n));
    for (int x = 0; x < p.n; ++x) img[static_cast<size_t>(p(x))] = x;
    return Permutation(p.n, std::move(img));
}

Permutation require_permutation(SelfMap f) {
    if (!f.is_bijective()) throw std::invalid_argument("expected a bijective self-map");
    return f;
}

std::string GroupDefect::describe() const {
    switch (kind) {
        case Kind::BadShape:
            return "table is not order x order";
        case Kind::OutOfRange:
            return "entry out of range at (" + std::to_string(a) + "," + std::to_string(b) + ")";
        case Kind::NotAssociative:
            return "not associative at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                   std::to_string(c) + ")";
        case Kind::NoIdentity:
            return "no two-sided identity";
        case Kind::NoInverse:
            return "no inverse for element " + std::to_string(a);
    }
    return "unknown defect";
}

std::optional<GroupDefect> check_group_table(int order, const std::vector<int>& table) {
    using K = GroupDefect::Kind;
    if (order <= 0 || table.size() != static_cast<size_t>(order) * order)
        return GroupDefect{K::BadShape};
    auto at = [&](int a, int b) { return table[static_cast<size_t>(a) * order + b]; };
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b)
            if (at(a, b) < 0 || at(a, b) >= order) return GroupDefect{K::OutOfRange, a, b};
    int e = -1;
    for (int i = 0; i < order && e < 0; ++i) {
        bool ok = true;
        for (int j = 0; j < order && ok; ++j) ok = at(i, j) == j && at(j, i) == j;
        if (ok) e = i;
    }
    if (e < 0) return GroupDefect{K::NoIdentity};
    for (int a = 0; a < order; ++a) {
        bool found = false;
        for (int b = 0; b < order && !found; ++b) found = at(a, b) == e && at(b, a) == e;
        if (!found) return GroupDefect{K::NoInverse, a};
    }
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b)
            for (int c = 0; c < order; ++c)
                if (at(at(a, b), c) != at(a, at(b, c))) return GroupDefect{K::NotAssociative, a, b, c};
    return std::nullopt;
}

namespace {

std::vector<std::string> index_names(int n) {
    std::vector<std::string> names(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) names[static_cast<size_t>(i)] = std::to_string(i);
    return names;
}

}  // namespace

FiniteGroup FiniteGroup::from_table(std::string name, int order, std::vector<int> table) {
    if (order <= 0) throw std::invalid_argument("group order must be positive");
    if (table.size() != static_cast<size_t>(order) * order)
        throw std::invalid_argument("group table must be order x order");
    if (auto defect = check_group_table(order, table))
        throw std::domain_error("invalid group table: " + defect->describe());
    FiniteGroup g;
    g.n_ = order;
    g.table_ = std::move(table);
    g.name_ = std::move(name);
    g.identity_ = -1;
    for (int i = 0; i < order && g.identity_ < 0; ++i) {
        bool ok = true;
        for (int j = 0; j < order && ok; ++j) ok = g.op(i, j) == j && g.op(j, i) == j;
        if (ok) g.identity_ = i;
    }
    g.inverse_.assign(static_cast<size_t>(order), -1);
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b)
            if (g.op(a, b) == g.identity_ && g.op(b, a) == g.identity_)
                g.inverse_[static_cast<size_t>(a)] = b;
    g.elem_names_ = index_names(order);
    return g;
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b)
            if (op(a, b) != op(b, a)) return false;
    return true;
}

int FiniteGroup::elem_order(int a) const {
    int o = 1, x = a;
    while (x != identity_) {
        x = op(x, a);
        ++o;
    }
    return o;
}

std::vector<int> FiniteGroup::order_profile() const {
    std::vector<int> p(static_cast<size_t>(n_));
    for (int a = 0; a < n_; ++a) p[static_cast<size_t>(a)] = elem_order(a);
    std::sort(p.begin(), p.end());
    return p;
}

bool FiniteGroup::same_table(const FiniteGroup& other) const {
    return n_ == other.n_ && table_ == other.table_;
}

std::vector<int> FiniteGroup::generating_set() const {
    std::vector<int> gens;
    std::vector<char> span(static_cast<size_t>(n_), 0);
    span[static_cast<size_t>(identity_)] = 1;
    int span_size = 1;
    for (int a = 0; a < n_ && span_size < n_; ++a) {
        if (span[static_cast<size_t>(a)]) continue;
        gens.push_back(a);
        // close the span under multiplication
        std::vector<int> members;
        for (int x = 0; x < n_; ++x)
            if (span[static_cast<size_t>(x)]) members.push_back(x);
        members.push_back(a);
        span[static_cast<size_t>(a)] = 1;
        ++span_size;
        std::queue<int> todo;
        for (int m : members) todo.push(m);
        while (!todo.empty()) {
            int x = todo.front();
            todo.pop();
            for (size_t i = 0; i < members.size(); ++i) {
                int y = members[i];
                for (int z : {op(x, y), op(y, x)}) {
                    if (!span[static_cast<size_t>(z)]) {
                        span[static_cast<size_t>(z)] = 1;
                        ++span_size;
                        members.push_back(z);
                        todo.push(z);
                    }
                }
            }
        }
    }
    return gens;
}

FiniteGroup make_cyclic(int m) {
    if (m < 1) throw std::invalid_argument("make_cyclic: order must be >= 1");
    FiniteGroup g;
    g.n_ = m;
    g.table_.resize(static_cast<size_t>(m) * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) g.table_[static_cast<size_t>(i) * m + j] = (i + j) % m;
    g.identity_ = 0;
    g.inverse_.resize(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) g.inverse_[static_cast<size_t>(i)] = (m - i) % m;
    g.name_ = "C" + std::to_string(m);
    g.elem_names_.resize(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) g.elem_names_[static_cast<size_t>(i)] = "g^" + std::to_string(i);
    return g;
}

FiniteGroup make_dihedral(int l) {
    if (l < 1) throw std::invalid_argument("make_dihedral: parameter must be >= 1");
    int n = 2 * l;
    auto enc = [l](int r, int s) { return s * l + r; };
    FiniteGroup g;
    g.n_ = n;
    g.table_.resize(static_cast<size_t>(n) * n);
    for (int r1 = 0; r1 < l; ++r1)
        for (int s1 = 0; s1 < 2; ++s1)
            for (int r2 = 0; r2 < l; ++r2)
                for (int s2 = 0; s2 < 2; ++s2) {
                    int r = ((s1 == 0 ? r1 + r2 : r1 - r2) % l + l) % l;
                    int s = (s1 + s2) % 2;
                    g.table_[static_cast<size_t>(enc(r1, s1)) * n + enc(r2, s2)] = enc(r, s);
                }
    g.identity_ = 0;
    g.inverse_.resize(static_cast<size_t>(n));
    for (int r = 0; r < l; ++r) {
        g.inverse_[static_cast<size_t>(enc(r, 0))] = enc((l - r) % l, 0);
        g.inverse_[static_cast<size_t>(enc(r, 1))] = enc(r, 1);
    }
    g.name_ = "D" + std::to_string(l);
    g.elem_names_.resize(static_cast<size_t>(n));
    for (int r = 0; r < l; ++r) {
        g.elem_names_[static_cast<size_t>(enc(r, 0))] = "r^" + std::to_string(r);
        g.elem_names_[static_cast<size_t>(enc(r, 1))] = "s r^" + std::to_string(r);
    }
    return g;
}

namespace {

std::string cycle_notation(const std::vector<int>& p) {
    int k = static_cast<int>(p.size());
    std::vector<char> done(static_cast<size_t>(k), 0);
    std::string out;
    for (int i = 0; i < k; ++i) {
        if (done[static_cast<size_t>(i)] || p[static_cast<size_t>(i)] == i) continue;
        out += "(";
        int j = i;
        bool first = true;
        while (!done[static_cast<size_t>(j)]) {
            done[static_cast<size_t>(j)] = 1;
            if (!first) out += " ";
            out += std::to_string(j + 1);
            first = false;
            j = p[static_cast<size_t>(j)];
        }
        out += ")";
    }
    return out.empty() ? "id" : out;
}

}  // namespace

FiniteGroup make_symmetric(int n) {
    if (n < 1) throw std::invalid_argument("make_symmetric: degree must be >= 1");
    if (n > 5) throw std::invalid_argument("make_symmetric: degree capped at 5");
    std::vector<std::vector<int>> perms;
    std::vector<int> p(static_cast<size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    int sz = static_cast<int>(perms.size());
    std::vector<std::vector<int>> sorted = perms;  // already lexicographic via next_permutation
    auto index_of = [&](const std::vector<int>& q) {
        return static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), q) - sorted.begin());
    };
    FiniteGroup g;
    g.n_ = sz;
    g.table_.resize(static_cast<size_t>(sz) * sz);
    for (int i = 0; i < sz; ++i)
        for (int j = 0; j < sz; ++j) {
            std::vector<int> comp(static_cast<size_t>(n));
            for (int x = 0; x < n; ++x)
                comp[static_cast<size_t>(x)] =
                    perms[static_cast<size_t>(i)][static_cast<size_t>(perms[static_cast<size_t>(j)][static_cast<size_t>(x)])];
            g.table_[static_cast<size_t>(i) * sz + j] = index_of(comp);
        }
    g.identity_ = 0;
    g.inverse_.resize(static_cast<size_t>(sz));
    for (int i = 0; i < sz; ++i) {
        std::vector<int> q(static_cast<size_t>(n));
        for (int x = 0; x < n; ++x) q[static_cast<size_t>(perms[static_cast<size_t>(i)][static_cast<size_t>(x)])] = x;
        g.inverse_[static_cast<size_t>(i)] = index_of(q);
    }
    g.name_ = "S" + std::to_string(n);
    g.elem_names_.resize(static_cast<size_t>(sz));
    for (int i = 0; i < sz; ++i) g.elem_names_[static_cast<size_t>(i)] = cycle_notation(perms[static_cast<size_t>(i)]);
    return g;
}

FiniteGroup make_quaternion() {
    // encoding: unit index (0:1, 1:i, 2:j, 3:k) << 1 | sign bit
    // i*i = j*j = k*k = -1; i*j = k, j*k = i, k*i = j and anticommute
    static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    std::vector<int> table(64);
    for (int x = 0; x < 8; ++x)
        for (int y = 0; y < 8; ++y) {
            int bx = x >> 1, by = y >> 1;
            table[static_cast<size_t>(x) * 8 + y] =
                (unit[bx][by] << 1) | ((x & 1) ^ (y & 1) ^ sign[bx][by]);
        }
    FiniteGroup g = FiniteGroup::from_table("Q8", 8, std::move(table));
    g.elem_names_ = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
    return g;
}

FiniteGroup direct_product(const FiniteGroup& G, const FiniteGroup& H) {
    int n = G.order() * H.order();
    int hn = H.order();
    FiniteGroup g;
    g.n_ = n;
    g.table_.resize(static_cast<size_t>(n) * n);
    for (int a1 = 0; a1 < G.order(); ++a1)
        for (int b1 = 0; b1 < hn; ++b1)
            for (int a2 = 0; a2 < G.order(); ++a2)
                for (int b2 = 0; b2 < hn; ++b2)
                    g.table_[static_cast<size_t>(a1 * hn + b1) * n + (a2 * hn + b2)] =
                        G.op(a1, a2) * hn + H.op(b1, b2);
    g.identity_ = G.identity() * hn + H.identity();
    g.inverse_.resize(static_cast<size_t>(n));
    g.elem_names_.resize(static_cast<size_t>(n));
    for (int a = 0; a < G.order(); ++a)
        for (int b = 0; b < hn; ++b) {
            g.inverse_[static_cast<size_t>(a * hn + b)] = G.inv(a) * hn + H.inv(b);
            g.elem_names_[static_cast<size_t>(a * hn + b)] =
                "(" + G.elem_name(a) + ", " + H.elem_name(b) + ")";
        }
    g.name_ = G.name() + "x" + H.name();
    return g;
}

FiniteGroup relabel(const FiniteGroup& G, const Permutation& p) {
    if (p.n != G.order()) throw std::invalid_argument("relabel: permutation size mismatch");
    if (!p.is_bijective()) throw std::invalid_argument("relabel: map is not a permutation");
    int n = G.order();
    FiniteGroup g;
    g.n_ = n;
    g.table_.resize(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            g.table_[static_cast<size_t>(p(a)) * n + p(b)] = p(G.op(a, b));
    g.identity_ = p(G.identity());
    g.inverse_.resize(static_cast<size_t>(n));
    for (int a = 0; a < n; ++a) g.inverse_[static_cast<size_t>(p(a))] = p(G.inv(a));
    g.name_ = G.name() + "~";
    g.elem_names_ = index_names(n);
    return g;
}

bool GroupHom::is_bijective() const {
    if (source.order() != target.order()) return false;
    std::vector<char> seen(static_cast<size_t>(target.order()), 0);
    for (int v : img) {
        if (seen[static_cast<size_t>(v)]) return false;
        seen[static_cast<size_t>(v)] = 1;
    }
    return true;
}

bool is_homomorphism(const FiniteGroup& G, const FiniteGroup& H, const std::vector<int>& img) {
    if (img.size() != static_cast<size_t>(G.order())) return false;
    for (int v : img)
        if (v < 0 || v >= H.order()) return false;
    for (int a = 0; a < G.order(); ++a)
        for (int b = 0; b < G.order(); ++b)
            if (img[static_cast<size_t>(G.op(a, b))] !=
                H.op(img[static_cast<size_t>(a)], img[static_cast<size_t>(b)]))
                return false;
    return true;
}

GroupHom make_hom(FiniteGroup source, FiniteGroup target, std::vector<int> images) {
    if (!is_homomorphism(source, target, images))
        throw std::domain_error("make_hom: map is not a homomorphism");
    return GroupHom{std::move(source), std::move(target), std::move(images)};
}

GroupHom identity_hom(const FiniteGroup& G) {
    std::vector<int> img(static_cast<size_t>(G.order()));
    std::iota(img.begin(), img.end(), 0);
    return GroupHom{G, G, std::move(img)};
}

Permutation conjugation_map(const FiniteGroup& G, int a) {
    std::vector<int> img(static_cast<size_t>(G.order()));
    for (int x = 0; x < G.order(); ++x) img[static_cast<size_t>(x)] = G.op(G.op(G.inv(a), x), a);
    return Permutation(G.order(), std::move(img));
}

bool is_idempotent_endomorphism(const FiniteGroup& G, const SelfMap& f) {
    if (f.n != G.order()) throw std::invalid_argument("domain size mismatch");
    for (int x = 0; x < G.order(); ++x)
        if (f(f(x)) != f(x)) return false;
    return is_homomorphism(G, G, f.img);
}

namespace {

// Backtracking over generator images; candidates are filtered by element
// order, the partial map is closed under multiplication as it grows.
bool search_isos(const FiniteGroup& G, const FiniteGroup& H,
                 const std::function<bool(const std::vector<int>&)>& visit) {
    int n = G.order();
    if (H.order() != n) return false;
    if (G.order_profile() != H.order_profile()) return false;
    std::vector<int> gens = G.generating_set();
    std::vector<std::vector<int>> cands;
    for (int g : gens) {
        std::vector<int> c;
        for (int h = 0; h < n; ++h)
            if (H.elem_order(h) == G.elem_order(g)) c.push_back(h);
        cands.push_back(std::move(c));
    }
    std::vector<int> img;

    auto try_assignment = [&](const std::vector<int>& gen_img) -> bool {
        // close {identity, gens} under right multiplication by generators
        img.assign(static_cast<size_t>(n), -1);
        img[static_cast<size_t>(G.identity())] = H.identity();
        std::queue<int> todo;
        todo.push(G.identity());
        while (!todo.empty()) {
            int x = todo.front();
            todo.pop();
            for (size_t gi = 0; gi < gens.size(); ++gi) {
                int z = G.op(x, gens[gi]);
                int fz = H.op(img[static_cast<size_t>(x)], gen_img[gi]);
                int& slot = img[static_cast<size_t>(z)];
                if (slot == -1) {
                    slot = fz;
                    todo.push(z);
                } else if (slot != fz) {
                    return false;
                }
            }
        }
        std::vector<char> seen(static_cast<size_t>(n), 0);
        for (int v : img) {
            if (v < 0 || seen[static_cast<size_t>(v)]) return false;
            seen[static_cast<size_t>(v)] = 1;
        }
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (img[static_cast<size_t>(G.op(a, b))] !=
                    H.op(img[static_cast<size_t>(a)], img[static_cast<size_t>(b)]))
                    return false;
        return true;
    };

    std::vector<int> gen_img(gens.size());
    std::function<bool(size_t)> rec = [&](size_t k) -> bool {
        if (k == gens.size()) {
            if (try_assignment(gen_img))
                return !visit(img);  // true = stop
            return false;
        }
        for (int cand : cands[k]) {
            gen_img[k] = cand;
            if (rec(k + 1)) return true;
        }
        return false;
    };
    if (gens.empty()) {
        // trivial group
        std::vector<int> id{};
        img.assign(static_cast<size_t>(n), H.identity());
        return !visit(img) ? true : false;
    }
    return rec(0);
}

}  // namespace

bool for_each_isomorphism(const FiniteGroup& G, const FiniteGroup& H,
                          const std::function<bool(const std::vector<int>&)>& visit) {
    return search_isos(G, H, visit);
}

std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& G, const FiniteGroup& H) {
    std::optional<std::vector<int>> found;
    for_each_isomorphism(G, H, [&](const std::vector<int>& f) {
        found = f;
        return false;  // stop
    });
    return found;
}

std::vector<Permutation> automorphisms(const FiniteGroup& G, int bound) {
    if (G.order() > bound) throw std::invalid_argument("automorphisms: group order exceeds bound");
    std::vector<Permutation> out;
    for_each_isomorphism(G, G, [&](const std::vector<int>& f) {
        out.emplace_back(G.order(), f);
        return true;  // keep going
    });
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace aflab
