#include "affinelab/ybe.hpp"

namespace aflab {

int SetSolution::pair_image(int code) const {
    int a = code / n, b = code % n;
    return left(a, b) * n + right(a, b);
}

SetSolution solution_from(const SemiBrace& S) {
    LambdaRho lr = lambda_rho(S);
    int n = S.n();
    SetSolution r;
    r.n = n;
    r.out_left.resize(static_cast<size_t>(n) * n);
    r.out_right.resize(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            r.out_left[static_cast<size_t>(a) * n + b] = lr.lambda[static_cast<size_t>(a) * n + b];
            r.out_right[static_cast<size_t>(a) * n + b] = lr.rho[static_cast<size_t>(b) * n + a];
        }
    return r;
}

std::optional<Triple> check_ybe(const SetSolution& r) {
    int n = r.n;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                // left: r12 r23 r12
                int a1 = r.left(x, y), a2 = r.right(x, y), a3 = z;
                int b2 = r.left(a2, a3), b3 = r.right(a2, a3);
                int c1 = r.left(a1, b2), c2 = r.right(a1, b2);
                int L1 = c1, L2 = c2, L3 = b3;
                // right: r23 r12 r23
                int d2 = r.left(y, z), d3 = r.right(y, z);
                int e1 = r.left(x, d2), e2 = r.right(x, d2);
                int f2 = r.left(e2, d3), f3 = r.right(e2, d3);
                int R1 = e1, R2 = f2, R3 = f3;
                if (L1 != R1 || L2 != R2 || L3 != R3) return Triple{x, y, z};
            }
    return std::nullopt;
}

namespace {

bool rows_bijective(int n, const std::vector<int>& t, bool by_row) {
    std::vector<char> seen;
    for (int i = 0; i < n; ++i) {
        seen.assign(static_cast<size_t>(n), 0);
        for (int j = 0; j < n; ++j) {
            int v = by_row ? t[static_cast<size_t>(i) * n + j] : t[static_cast<size_t>(j) * n + i];
            if (seen[static_cast<size_t>(v)]) return false;
            seen[static_cast<size_t>(v)] = 1;
        }
    }
    return true;
}

}  // namespace

bool check_left_nondeg(const SetSolution& r) { return rows_bijective(r.n, r.out_left, true); }

bool check_right_nondeg(const SetSolution& r) {
    // ρ_b runs down a column of out_right (index a varies, b fixed)
    return rows_bijective(r.n, r.out_right, false);
}

bool check_bijective(const SetSolution& r) {
    int nn = r.n * r.n;
    std::vector<char> seen(static_cast<size_t>(nn), 0);
    for (int c = 0; c < nn; ++c) {
        int v = r.pair_image(c);
        if (seen[static_cast<size_t>(v)]) return false;
        seen[static_cast<size_t>(v)] = 1;
    }
    return true;
}

bool check_involutive(const SetSolution& r) {
    int nn = r.n * r.n;
    for (int c = 0; c < nn; ++c)
        if (r.pair_image(r.pair_image(c)) != c) return false;
    return true;
}

bool check_cubic(const SetSolution& r) {
    int nn = r.n * r.n;
    for (int c = 0; c < nn; ++c) {
        int once = r.pair_image(c);
        if (r.pair_image(r.pair_image(once)) != once) return false;
    }
    return true;
}

SolutionProperties solution_properties(const SetSolution& r) {
    SolutionProperties p;
    p.ybe_witness = check_ybe(r);
    p.ybe = !p.ybe_witness.has_value();
    p.left_nondeg = check_left_nondeg(r);
    p.right_nondeg = check_right_nondeg(r);
    p.bijective = check_bijective(r);
    p.involutive = check_involutive(r);
    p.cubic = check_cubic(r);
    return p;
}

}  // namespace aflab
