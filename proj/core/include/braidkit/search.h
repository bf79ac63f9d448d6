#pragma once

#include <string>
#include <utility>
#include <vector>

#include "braidkit/matrix.h"

namespace bk {

enum class EqKind { full, partial12, partial13, partial23 };

const char *eq_kind_name(EqKind e);
// "full", "partial-12", "partial-13", "partial-23". Throws UnknownId.
EqKind eq_kind_from_name(const std::string &name);

// Does c satisfy the requested equation at arity n (over C^2)?
// Partial equations need n = 3 (DimensionError otherwise).
bool satisfies(const Matrix &c, int n, EqKind eq, double tol = 1e-9);

struct PermSolution {
    std::vector<int> perm;  // m e_i = e_{perm[i]}
    Matrix m;
    bool trivial;  // the identity
};

struct PermSearchResult {
    size_t candidates = 0;
    std::vector<PermSolution> solutions;  // lexicographic by perm

    size_t nontrivial() const;
};

// All dim! permutation matrices, dim = 2^arity. threads <= 1 runs inline; the result
// does not depend on the thread count.
PermSearchResult permutation_search(int dim, int arity, EqKind eq = EqKind::full, int threads = 1,
                                    double tol = 1e-9);

struct PatternSearchResult {
    size_t candidates = 0;
    std::vector<Matrix> solutions;
    // Only the grid was searched.
    static constexpr const char *label = "grid evidence, not classification";
};

// Every assignment of `values` to the support entries of a dim x dim matrix.
// Throws CapExceeded when values^|support| > cap.
PatternSearchResult pattern_search(const std::vector<std::pair<int, int>> &support, size_t dim,
                                   const std::vector<cplx> &values, int arity, EqKind eq = EqKind::full,
                                   size_t cap = 10'000'000, double tol = 1e-9);

}  // namespace bk
