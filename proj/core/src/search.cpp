#include "braidkit/search.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <thread>

#include "braidkit/braid.h"
#include "braidkit/errors.h"

namespace bk {

const char *eq_kind_name(EqKind e) {
    switch (e) {
        case EqKind::full:
            return "full";
        case EqKind::partial12:
            return "partial-12";
        case EqKind::partial13:
            return "partial-13";
        case EqKind::partial23:
            return "partial-23";
    }
    return "?";
}

EqKind eq_kind_from_name(const std::string &name) {
    for (EqKind e : {EqKind::full, EqKind::partial12, EqKind::partial13, EqKind::partial23}) {
        if (name == eq_kind_name(e)) {
            return e;
        }
    }
    throw UnknownId("unknown equation: " + name);
}

static double rel(const Matrix &a, const Matrix &b) {
    double s = std::max({max_abs(a), max_abs(b), 1e-300});
    return max_abs_diff(a, b) / s;
}

bool satisfies(const Matrix &c, int n, EqKind eq, double tol) {
    if (eq != EqKind::full && n != 3) {
        throw DimensionError("partial equations are defined for the ternary case only");
    }
    BraidArity ar{n, 2};
    if (n != 3) {
        return nary_braid_report(c, ar, tol).passed;
    }
    // ternary: build chains lazily, most candidates fail the 12 equality
    std::vector<Matrix> a;
    for (int p = 1; p <= 3; p++) {
        a.push_back(lift(c, ar, p, 5));
    }
    auto chain = [&](int s) { return a[(size_t)s] * a[(size_t)((s + 1) % 3)] * a[(size_t)((s + 2) % 3)] * a[(size_t)s]; };
    switch (eq) {
        case EqKind::partial12:
            return rel(chain(0), chain(1)) <= tol;
        case EqKind::partial13:
            return rel(chain(0), chain(2)) <= tol;
        case EqKind::partial23:
            return rel(chain(1), chain(2)) <= tol;
        case EqKind::full: {
            Matrix c0 = chain(0);
            if (rel(c0, chain(1)) > tol) {
                return false;
            }
            return rel(c0, chain(2)) <= tol;
        }
    }
    return false;
}

size_t PermSearchResult::nontrivial() const {
    return (size_t)std::count_if(solutions.begin(), solutions.end(), [](const auto &s) { return !s.trivial; });
}

PermSearchResult permutation_search(int dim, int arity, EqKind eq, int threads, double tol) {
    if (arity < 1 || dim != (1 << arity)) {
        throw DimensionError("permutation search needs dim = 2^arity");
    }
    if (dim > 8) {
        throw CapExceeded("permutation search is limited to dim <= 8");
    }
    if (eq != EqKind::full && arity != 3) {
        throw DimensionError("partial equations are defined for the ternary case only");
    }
    std::vector<std::vector<int>> perms;
    std::vector<int> p((size_t)dim);
    std::iota(p.begin(), p.end(), 0);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    std::vector<char> ok(perms.size(), 0);
    auto work = [&](size_t begin, size_t step) {
        for (size_t i = begin; i < perms.size(); i += step) {
            ok[i] = satisfies(Matrix::permutation(perms[i]), arity, eq, tol);
        }
    };
    if (threads <= 1) {
        work(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; t++) {
            pool.emplace_back(work, (size_t)t, (size_t)threads);
        }
        for (auto &t : pool) {
            t.join();
        }
    }

    PermSearchResult res;
    res.candidates = perms.size();
    for (size_t i = 0; i < perms.size(); i++) {
        if (!ok[i]) {
            continue;
        }
        bool id = true;
        for (int k = 0; k < dim; k++) {
            id &= perms[i][(size_t)k] == k;
        }
        res.solutions.push_back({perms[i], Matrix::permutation(perms[i]), id});
    }
    return res;
}

PatternSearchResult pattern_search(const std::vector<std::pair<int, int>> &support, size_t dim,
                                   const std::vector<cplx> &values, int arity, EqKind eq, size_t cap, double tol) {
    PatternSearchResult res;
    if (support.empty() || values.empty()) {
        return res;
    }
    double count = std::pow((double)values.size(), (double)support.size());
    if (count > (double)cap) {
        throw CapExceeded("pattern search would visit " + std::to_string((long double)count) + " candidates");
    }
    for (auto [i, j] : support) {
        if (i < 0 || j < 0 || (size_t)i >= dim || (size_t)j >= dim) {
            throw DimensionError("support entry outside the matrix");
        }
    }
    res.candidates = (size_t)std::llround(count);
    std::vector<size_t> digit(support.size(), 0);
    for (size_t c = 0; c < res.candidates; c++) {
        Matrix m(dim, dim);
        for (size_t k = 0; k < support.size(); k++) {
            m((size_t)support[k].first, (size_t)support[k].second) = values[digit[k]];
        }
        if (max_abs(m) > 0 && satisfies(m, arity, eq, tol)) {
            res.solutions.push_back(m);
        }
        // odometer, last support entry fastest
        for (size_t k = support.size(); k-- > 0;) {
            if (++digit[k] < values.size()) {
                break;
            }
            digit[k] = 0;
        }
    }
    return res;
}

}  // namespace bk
