#include <random>

#include "braidkit/braid.h"
#include "braidkit/catalog.h"
#include "braidkit/errors.h"
#include "gtest/gtest.h"

using namespace bk;

namespace {

Matrix random_matrix(size_t n, std::mt19937_64 &rng) {
    std::normal_distribution<double> d;
    Matrix m(n, n);
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            m(i, j) = {d(rng), d(rng)};
        }
    }
    return m;
}

// unitary times a diagonal with entries in [0.5, 2], so cond(q) <= 4
Matrix well_conditioned(std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> u(-3.14159, 3.14159), sc(0.5, 2.0);
    double t = u(rng), a = u(rng), b = u(rng);
    cplx x = std::polar(std::cos(t), a), y = std::polar(std::sin(t), b);
    Matrix v{{x, -std::conj(y)}, {y, std::conj(x)}};
    return v * Matrix{{sc(rng), 0}, {0, sc(rng)}};
}

Matrix swap4() {
    return build("yb.perm.bisymm", {}, "first");
}

}  // namespace

TEST(braid, lift_examples) {
    std::mt19937_64 rng(1);
    Matrix c4 = random_matrix(4, rng);
    ASSERT_EQ(lift(c4, {2, 2}, 1, 3), kron(c4, Matrix::identity(2)));
    Matrix c8 = random_matrix(8, rng);
    ASSERT_EQ(lift(c8, {3, 2}, 2, 5), kron(kron(Matrix::identity(2), c8), Matrix::identity(2)));
    ASSERT_EQ(lift(Matrix::identity(4), {2, 2}, 2, 3), Matrix::identity(8));
}

TEST(braid, lift_errors) {
    ASSERT_THROW(lift(Matrix::identity(3), {2, 2}, 1, 3), DimensionError);
    ASSERT_THROW(lift(Matrix::identity(4), {2, 2}, 3, 3), DimensionError);
    ASSERT_THROW(lift(Matrix::identity(4), {2, 2}, 0, 3), DimensionError);
    ASSERT_THROW(arity_of(Matrix::identity(6)), DimensionError);
    ASSERT_EQ(arity_of(Matrix::identity(16)).n, 4);
}

TEST(braid, swap_passes) {
    auto r = nary_braid_report(swap4(), {2, 2});
    ASSERT_TRUE(r.passed);
    ASSERT_EQ(r.residuals.size(), 1u);
    ASSERT_EQ(r.residuals[0], 0.0);
}

TEST(braid, minkowski_16_passes_at_n4) {
    Matrix c = build("nb.minkowski", {{"n", 4}});
    ASSERT_EQ(c.rows(), 16u);
    auto r = nary_braid_report(c, {4, 2});
    ASSERT_TRUE(r.passed);
    ASSERT_EQ(r.residuals.size(), 3u);
    for (double x : r.residuals) {
        ASSERT_EQ(x, 0.0);
    }
}

TEST(braid, random_dense_fails) {
    std::mt19937_64 rng(2024);
    auto r = nary_braid_report(random_matrix(4, rng), {2, 2});
    ASSERT_FALSE(r.passed);
    ASSERT_GT(r.max_residual(), 1e-3);
}

TEST(braid, binary_chains_are_the_two_sides) {
    std::mt19937_64 rng(3);
    Matrix c = random_matrix(4, rng);
    auto r = nary_braid_report(c, {2, 2});
    ASSERT_EQ(r.chain_values.size(), 2u);
    Matrix a1 = lift(c, {2, 2}, 1, 3), a2 = lift(c, {2, 2}, 2, 3);
    ASSERT_TRUE(approx_equal(r.chain_values[0], a1 * a2 * a1, 1e-12));
    ASSERT_TRUE(approx_equal(r.chain_values[1], a2 * a1 * a2, 1e-12));
}

TEST(braid, partial_reports) {
    auto p = partial_ternary_reports(build("tb.circ16.p13", {{"x", 1}, {"y", 2}}, "upper"));
    ASSERT_FALSE(p.b12);
    ASSERT_TRUE(p.b13);
    ASSERT_FALSE(p.b23);

    auto q = partial_ternary_reports(build("tb.perm.bisymm1", {}));
    ASSERT_TRUE(q.b12 && q.b13 && q.b23);

    auto id = partial_ternary_reports(Matrix::identity(8));
    ASSERT_TRUE(id.b12 && id.b13 && id.b23);
    ASSERT_THROW(partial_ternary_reports(Matrix::identity(4)), DimensionError);
}

TEST(braid, q_conjugate_identity) {
    Matrix c = swap4();
    ASSERT_TRUE(approx_equal(q_conjugate(c, Matrix::identity(2), 1, {2, 2}), c, 1e-15));
    ASSERT_THROW(q_conjugate(c, Matrix{{1, 2}, {2, 4}}, 1, {2, 2}), SingularMatrix);
}

TEST(braid, q_conjugate_c34_to_star_four_vertex) {
    Params p{{"x", 1.3}, {"y", cplx(0.7, 0.4)}, {"z", cplx(-0.6, 1.1)}};
    auto cj = known_conjugator("cp1-to-c34", p);
    // c34 upper conjugated back by the 2x2 factor lands on the 4-vertex diagonal form
    Matrix q{{std::sqrt(p["y"] / p["z"]), p["y"] / p["z"]}, {1, -(p["y"] / p["z"]) * std::sqrt(p["z"] / p["y"])}};
    Matrix d = q_conjugate(cj.to, inverse(q), 1, {2, 2});
    ASSERT_LE(max_abs_diff(d, cj.from), 1e-12);
    ASSERT_EQ(nonzero_count(d, 1e-12), 4u);
}

TEST(braid, q_conjugation_preserves_solutions) {
    std::mt19937_64 rng(17);
    std::vector<std::string> ids{"yb.star8.c24", "yb.star8.c34", "tb.star8.b11", "tb.star16.cv16"};
    for (const auto &id : ids) {
        const auto &f = family(id);
        Matrix c = build(id, sample_params(f, 0, rng));
        for (int s = 0; s < 5; s++) {
            Matrix q = well_conditioned(rng);
            Matrix cq = q_conjugate(c, q, cplx(0.8, 0.3), {f.arity, 2});
            auto r = nary_braid_report(cq, {f.arity, 2});
            ASSERT_TRUE(r.passed) << id << " residual " << r.max_residual();
        }
    }
}

TEST(braid, scale_invariance) {
    std::mt19937_64 rng(18);
    Matrix c = build("yb.star8.c24", sample_params(family("yb.star8.c24"), 0, rng));
    Matrix r = random_matrix(4, rng);
    for (cplx t : {cplx(2.5), cplx(0, 1), cplx(-0.3, 0.9)}) {
        ASSERT_TRUE(nary_braid_report(t * c, {2, 2}).passed);
        ASSERT_FALSE(nary_braid_report(t * r, {2, 2}).passed);
    }
}

TEST(braid, far_lifts_commute) {
    std::mt19937_64 rng(19);
    for (int n : {2, 3}) {
        Matrix c = random_matrix((size_t)1 << n, rng);
        int slots = 2 * n + 1;
        for (int p = 1; p <= slots - n + 1; p++) {
            for (int q = p + n; q <= slots - n + 1; q++) {
                Matrix a = lift(c, {n, 2}, p, slots), b = lift(c, {n, 2}, q, slots);
                ASSERT_LE(max_abs_diff(a * b, b * a), 1e-10 * max_abs(a * b));
            }
        }
    }
}

TEST(braid, group_check_swap) {
    auto r = braid_group_check(swap4(), {2, 2}, 4);
    ASSERT_TRUE(r.passed);
    ASSERT_EQ(r.braid_relations, 2);
    // sigma1 sigma3 = sigma3 sigma1
    ASSERT_EQ(r.far_tuples, 1);
}

TEST(braid, group_check_ternary_m4_has_no_far_tuples) {
    auto r = braid_group_check(build("tb.perm.bisymm1", {}), {3, 2}, 4);
    ASSERT_TRUE(r.passed);
    ASSERT_EQ(r.braid_relations, 2);
    ASSERT_EQ(r.far_tuples, 0);
}

TEST(braid, group_check_ternary_m8) {
    auto r = braid_group_check(build("tb.perm.bisymm1", {}), {3, 2}, 8);
    ASSERT_TRUE(r.passed);
    ASSERT_GT(r.far_tuples, 0);
    ASSERT_EQ(r.braid_relations, 10);
}

TEST(braid, group_check_refuses_large) {
    ASSERT_THROW(braid_group_check(swap4(), {2, 2}, 20), CapExceeded);
    ASSERT_THROW(braid_group_check(swap4(), {2, 2}, 2), DimensionError);
}

TEST(braid, group_check_rejects_non_solution) {
    std::mt19937_64 rng(20);
    ASSERT_FALSE(braid_group_check(random_matrix(4, rng), {2, 2}, 4).passed);
}
