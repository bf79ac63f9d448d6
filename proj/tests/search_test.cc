#include <algorithm>

#include "braidkit/braid.h"
#include "braidkit/catalog.h"
#include "braidkit/errors.h"
#include "braidkit/polyadic.h"
#include "braidkit/search.h"
#include "gtest/gtest.h"

using namespace bk;

namespace {

bool contains(const std::vector<Matrix> &v, const Matrix &m) {
    return std::any_of(v.begin(), v.end(), [&](const Matrix &x) { return approx_equal(x, m, 1e-12); });
}

std::vector<Matrix> nontrivial(const PermSearchResult &r) {
    std::vector<Matrix> out;
    for (const auto &s : r.solutions) {
        if (!s.trivial) {
            out.push_back(s.m);
        }
    }
    return out;
}

}  // namespace

TEST(search, eq_kind_names) {
    for (EqKind e : {EqKind::full, EqKind::partial12, EqKind::partial13, EqKind::partial23}) {
        ASSERT_EQ(eq_kind_from_name(eq_kind_name(e)), e);
    }
    ASSERT_THROW(eq_kind_from_name("partial-14"), UnknownId);
}

TEST(search, binary_permutations) {
    auto r = permutation_search(4, 2);
    ASSERT_EQ(r.candidates, 24u);
    ASSERT_EQ(r.nontrivial(), 4u);
    auto sols = nontrivial(r);
    for (const char *v : {"first", "second"}) {
        ASSERT_TRUE(contains(sols, build("yb.perm.bisymm", {}, v))) << v;
        ASSERT_TRUE(contains(sols, build("yb.perm.circ", {}, v))) << v;
    }
    // identity is a trivial solution, reported separately
    ASSERT_EQ(r.solutions.size(), 5u);
    ASSERT_TRUE(r.solutions[0].trivial);
    ASSERT_EQ(r.solutions[0].m, Matrix::identity(4));
}

TEST(search, binary_permutation_invariants) {
    auto r = permutation_search(4, 2);
    std::vector<double> traces;
    for (const auto &m : nontrivial(r)) {
        ASSERT_NEAR(std::abs(det(m) + 1.0), 0, 1e-12);
        traces.push_back(trace(m).real());
        ASSERT_EQ(power(m, 4), Matrix::identity(4));
        if (trace(m).real() > 1) {
            ASSERT_EQ(m * m, Matrix::identity(4));
        }
    }
    std::sort(traces.begin(), traces.end());
    ASSERT_EQ(traces, (std::vector<double>{0, 0, 2, 2}));
}

TEST(search, ternary_permutations) {
    auto r = permutation_search(8, 3, EqKind::full, 4);
    ASSERT_EQ(r.candidates, 40320u);
    auto sols = nontrivial(r);
    ASSERT_EQ(sols.size(), 4u);
    for (const char *id : {"tb.perm.bisymm1", "tb.perm.bisymm2", "tb.perm.symm1", "tb.perm.symm2"}) {
        ASSERT_TRUE(contains(sols, build(id, {}))) << id;
    }
    for (const auto &m : sols) {
        ASSERT_EQ(m * m, Matrix::identity(8));
        ASSERT_NEAR(std::abs(det(m) - 1.0), 0, 1e-12);
        ASSERT_NEAR(std::abs(trace(m) - 4.0), 0, 1e-12);
    }
}

TEST(search, thread_count_does_not_change_result) {
    auto a = permutation_search(4, 2, EqKind::full, 1);
    auto b = permutation_search(4, 2, EqKind::full, 3);
    ASSERT_EQ(a.solutions.size(), b.solutions.size());
    for (size_t i = 0; i < a.solutions.size(); i++) {
        ASSERT_EQ(a.solutions[i].perm, b.solutions[i].perm);
    }
}

TEST(search, partial_needs_ternary) {
    ASSERT_THROW(permutation_search(4, 2, EqKind::partial13), DimensionError);
    ASSERT_THROW(permutation_search(6, 2), DimensionError);
    ASSERT_THROW(satisfies(Matrix::identity(4), 2, EqKind::partial12), DimensionError);
}

TEST(search, partial13_permutations_contain_full_ones) {
    auto full = nontrivial(permutation_search(8, 3, EqKind::full, 4));
    auto p13 = nontrivial(permutation_search(8, 3, EqKind::partial13, 4));
    ASSERT_GE(p13.size(), full.size());
    for (const auto &m : full) {
        ASSERT_TRUE(contains(p13, m));
    }
}

TEST(search, star_pattern_grid_contains_c24) {
    auto r = pattern_search(shape_support(Shape::Mstar), 4, {-1, 1}, 2);
    ASSERT_EQ(r.candidates, 256u);
    ASSERT_TRUE(contains(r.solutions, build("yb.star8.c24", {{"x", 1}, {"y", 1}}, "upper")));
    for (const auto &m : r.solutions) {
        ASSERT_TRUE(nary_braid_report(m, {2, 2}).passed);
    }
    ASSERT_STREQ(PatternSearchResult::label, "grid evidence, not classification");
}

TEST(search, circle_pattern_grid_contains_negated_c2c) {
    auto r = pattern_search(shape_support(Shape::Mcirc), 4, {-1, 0, 1}, 2);
    Matrix c2c = build("yb.circ8.c2c", {{"x", 1}, {"y", 1}});
    ASSERT_TRUE(contains(r.solutions, cplx(-1) * c2c));
    ASSERT_TRUE(contains(r.solutions, c2c));
}

TEST(search, empty_support_and_cap) {
    ASSERT_TRUE(pattern_search({}, 4, {-1, 1}, 2).solutions.empty());
    ASSERT_THROW(pattern_search(shape_support(Shape::Mstarp), 8, {-1, 0, 1}, 3, EqKind::full, 1000), CapExceeded);
}
