#include "braidkit/braid.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "braidkit/errors.h"

namespace bk {

static size_t ipow(size_t b, int e) {
    size_t r = 1;
    for (int i = 0; i < e; i++) {
        r *= b;
    }
    return r;
}

BraidArity arity_of(const Matrix &c, int d) {
    if (!c.is_square() || d < 2) {
        throw DimensionError("braid operator must be square");
    }
    size_t dim = c.rows();
    int n = 0;
    size_t p = 1;
    while (p < dim) {
        p *= (size_t)d;
        n++;
    }
    if (p != dim || n < 1) {
        throw DimensionError("operator dimension is not a power of d");
    }
    return {n, d};
}

Matrix lift(const Matrix &c, BraidArity arity, int p, int slots) {
    if (!c.is_square() || c.rows() != ipow((size_t)arity.d, arity.n)) {
        throw DimensionError("operator is not d^n x d^n");
    }
    if (slots < arity.n || p < 1 || p > slots - arity.n + 1) {
        throw DimensionError("lift position out of range");
    }
    auto left = Matrix::identity(ipow((size_t)arity.d, p - 1));
    auto right = Matrix::identity(ipow((size_t)arity.d, slots - arity.n - p + 1));
    return kron(kron(left, c), right);
}

double BraidReport::max_residual() const {
    double r = 0;
    for (double v : residuals) {
        r = std::max(r, v);
    }
    return r;
}

static std::vector<Matrix> lifted(const Matrix &c, BraidArity arity) {
    std::vector<Matrix> a;
    for (int p = 1; p <= arity.n; p++) {
        a.push_back(lift(c, arity, p, 2 * arity.n - 1));
    }
    return a;
}

static Matrix chain(const std::vector<Matrix> &a, int start) {
    int n = (int)a.size();
    Matrix m = a[(size_t)start];
    for (int k = 1; k < n; k++) {
        m = m * a[(size_t)((start + k) % n)];
    }
    return m * a[(size_t)start];
}

BraidReport nary_braid_report(const Matrix &c, BraidArity arity, double tol) {
    auto a = lifted(c, arity);
    BraidReport rep;
    rep.tol = tol;
    for (int s = 0; s < arity.n; s++) {
        rep.chain_values.push_back(chain(a, s));
    }
    double scale = 0;
    for (const auto &m : rep.chain_values) {
        scale = std::max(scale, max_abs(m));
    }
    scale = std::max(scale, 1e-300);
    for (size_t k = 1; k < rep.chain_values.size(); k++) {
        rep.residuals.push_back(max_abs_diff(rep.chain_values[k], rep.chain_values[0]) / scale);
    }
    rep.passed = rep.max_residual() <= tol;
    return rep;
}

PartialTernary partial_ternary_reports(const Matrix &c, double tol) {
    if (!c.is_square() || c.rows() != 8) {
        throw DimensionError("partial ternary equations need an 8x8 operator");
    }
    auto rep = nary_braid_report(c, {3, 2}, tol);
    const auto &ch = rep.chain_values;
    double scale = std::max({max_abs(ch[0]), max_abs(ch[1]), max_abs(ch[2]), 1e-300});
    PartialTernary out;
    out.r12 = max_abs_diff(ch[0], ch[1]) / scale;
    out.r13 = max_abs_diff(ch[0], ch[2]) / scale;
    out.r23 = max_abs_diff(ch[1], ch[2]) / scale;
    out.b12 = out.r12 <= tol;
    out.b13 = out.r13 <= tol;
    out.b23 = out.r23 <= tol;
    return out;
}

Matrix q_conjugate(const Matrix &c, const Matrix &q, cplx t, BraidArity arity) {
    if (q.rows() != (size_t)arity.d || !q.is_square()) {
        throw DimensionError("q must be d x d");
    }
    if (std::abs(det(q)) <= 1e-14 * std::max(1.0, max_abs(q) * max_abs(q))) {
        throw SingularMatrix("q is singular");
    }
    auto qn = kron_power(q, arity.n);
    auto qi = kron_power(inverse(q), arity.n);
    return t * (qn * c * qi);
}

static double rel_diff(const Matrix &a, const Matrix &b) {
    double scale = std::max({max_abs(a), max_abs(b), 1e-300});
    return max_abs_diff(a, b) / scale;
}

// All n-subsets of {1..gens} with pairwise distance >= n.
static void far_tuples(int gens, int n, int start, std::vector<int> &cur, std::vector<std::vector<int>> &out) {
    if ((int)cur.size() == n) {
        out.push_back(cur);
        return;
    }
    for (int i = start; i <= gens; i++) {
        if (!cur.empty() && i - cur.back() < n) {
            continue;
        }
        cur.push_back(i);
        far_tuples(gens, n, i + 1, cur, out);
        cur.pop_back();
    }
}

BraidGroupReport braid_group_check(const Matrix &c, BraidArity arity, int m, double tol, int max_tuples) {
    int n = arity.n;
    if (m < n + 1) {
        throw DimensionError("braid group check needs m >= n+1");
    }
    int slots = m + n - 2;
    double logdim = slots * std::log2((double)arity.d);
    if (logdim > 13.0 + 1e-9) {
        throw CapExceeded("d^(m+n-2) exceeds 2^13");
    }
    std::vector<Matrix> b;
    b.push_back(Matrix());  // 1-based
    for (int i = 1; i <= m - 1; i++) {
        b.push_back(lift(c, arity, i, slots));
    }

    BraidGroupReport rep;
    for (int i = 1; i <= m - n; i++) {
        std::vector<Matrix> gens(b.begin() + i, b.begin() + i + n);
        auto first = chain(gens, 0);
        for (int s = 1; s < n; s++) {
            rep.max_residual = std::max(rep.max_residual, rel_diff(chain(gens, s), first));
            rep.braid_relations++;
        }
    }

    std::vector<std::vector<int>> tuples;
    std::vector<int> cur;
    far_tuples(m - 1, n, 1, cur, tuples);
    if ((int)tuples.size() > max_tuples) {
        std::vector<std::vector<int>> kept;
        double stride = (double)tuples.size() / max_tuples;
        for (int k = 0; k < max_tuples; k++) {
            kept.push_back(tuples[(size_t)(k * stride)]);
        }
        tuples = std::move(kept);
    }
    rep.far_tuples = (int)tuples.size();
    for (auto t : tuples) {
        std::sort(t.begin(), t.end());
        Matrix ref;
        bool have = false;
        do {
            Matrix prod = b[(size_t)t[0]];
            for (size_t k = 1; k < t.size(); k++) {
                prod = prod * b[(size_t)t[k]];
            }
            if (!have) {
                ref = prod;
                have = true;
            } else {
                rep.max_residual = std::max(rep.max_residual, rel_diff(prod, ref));
                rep.far_checks++;
            }
        } while (std::next_permutation(t.begin(), t.end()));
    }
    rep.passed = rep.max_residual <= tol;
    return rep;
}

}  // namespace bk
