#pragma once

#include <vector>

#include "braidkit/matrix.h"

namespace bk {

struct BraidArity {
    int n = 2;  // arity of the braid operator
    int d = 2;  // local space dimension
};

// Infer n from a d^n x d^n operator; throws DimensionError otherwise.
BraidArity arity_of(const Matrix &c, int d = 2);

// I_d^{(p-1)} (x) c (x) I_d^{(slots-n-p+1)}, p is 1-based.
Matrix lift(const Matrix &c, BraidArity arity, int p, int slots);

struct BraidReport {
    // chain k (0-based) is A_{k+1} ... A_n A_1 ... A_{k+1}, n+1 factors.
    std::vector<Matrix> chain_values;
    // residual[k-1] = max|chain_k - chain_0| / max chain entry
    std::vector<double> residuals;
    double tol = 1e-9;
    bool passed = false;

    double max_residual() const;
};

BraidReport nary_braid_report(const Matrix &c, BraidArity arity, double tol = 1e-9);

// The three pairwise equalities of the ternary system.
struct PartialTernary {
    double r12 = 0, r13 = 0, r23 = 0;
    bool b12 = false, b13 = false, b23 = false;
};

PartialTernary partial_ternary_reports(const Matrix &c, double tol = 1e-9);

// t (q x ... x q) c (q^-1 x ... x q^-1), n factors.
Matrix q_conjugate(const Matrix &c, const Matrix &q, cplx t, BraidArity arity);

struct BraidGroupReport {
    bool passed = false;
    int braid_relations = 0;  // number of chain equalities checked
    int far_tuples = 0;       // index tuples with pairwise gap >= n
    int far_checks = 0;       // permuted products compared
    double max_residual = 0;
};

// Generators B_i(m), i = 1..m-1, on m+n-2 slots. Refuses d^(m+n-2) > 2^13.
// Far-commutativity tuples are capped at max_tuples, sampled by a fixed stride.
BraidGroupReport braid_group_check(const Matrix &c, BraidArity arity, int m, double tol = 1e-9,
                                   int max_tuples = 200);

}  // namespace bk
