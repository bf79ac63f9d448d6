#include <numbers>
#include <random>

#include "braidkit/catalog.h"
#include "braidkit/errors.h"
#include "braidkit/gates.h"
#include "braidkit/polyadic.h"
#include "gtest/gtest.h"

using namespace bk;

namespace {

Matrix reverse(size_t n) {
    Matrix J(n, n);
    for (size_t i = 0; i < n; i++) {
        J(i, n - 1 - i) = 1;
    }
    return J;
}

State random_state(size_t dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> d;
    State s(dim);
    for (auto &a : s) {
        a = {d(rng), d(rng)};
    }
    double n = norm(s);
    for (auto &a : s) {
        a /= n;
    }
    return s;
}

Matrix mat(const PartialIdentityPattern &p) {
    return p.matrix();
}

}  // namespace

TEST(polyadic, shape_names_round_trip) {
    for (int k = 0; k <= (int)Shape::Other; k++) {
        Shape s = (Shape)k;
        ASSERT_EQ(shape_from_name(shape_name(s)), s);
    }
    ASSERT_EQ(shape_name(Shape::Nstar1p), "Nstar1'");
    ASSERT_THROW(shape_from_name("Npentagon"), UnknownId);
}

TEST(polyadic, classify_examples) {
    std::mt19937_64 rng(1);
    for (Shape s : {Shape::Nstar1, Shape::Nstar2, Shape::Ncirc1, Shape::Ncirc2, Shape::Mstar, Shape::Mcirc,
                    Shape::Nstar1p, Shape::Nstar2p, Shape::Ncirc1p, Shape::Ncirc2p, Shape::Mstarp, Shape::Mcircp,
                    Shape::Mquadp}) {
        ASSERT_EQ(classify(sample_shape(s, rng)), s) << shape_name(s);
    }
    ASSERT_EQ(classify(Matrix::zeros(4, 4)), Shape::Zero);
    ASSERT_EQ(classify(Matrix::identity(8)), Shape::Diag);
    ASSERT_THROW(classify(Matrix::identity(3)), DimensionError);
}

TEST(polyadic, reverse_is_antidiagonal_not_nstar2) {
    Matrix J = reverse(4);
    ASSERT_EQ(classify(J), Shape::ADiag);
    ASSERT_NE(classify(J), Shape::Nstar2);
}

TEST(polyadic, dense_is_other) {
    Matrix m(4, 4);
    for (size_t i = 0; i < 4; i++) {
        for (size_t j = 0; j < 4; j++) {
            m(i, j) = 1;
        }
    }
    ASSERT_EQ(classify(m), Shape::Other);
}

TEST(polyadic, named_closure_laws) {
    for (const char *id : {"nc1", "mmm2", "mcq"}) {
        auto r = closure_check(id, 20, 7);
        ASSERT_TRUE(r.passed) << id;
        ASSERT_EQ(r.samples, 20);
    }
    ASSERT_THROW(closure_check("nope", 1, 1), UnknownId);
}

TEST(polyadic, all_closure_laws_pass) {
    ASSERT_GT(closure_laws().size(), 20u);
    for (const auto &law : closure_laws()) {
        auto r = closure_check(law.id, 20, 7);
        ASSERT_TRUE(r.passed) << law.id << " case " << r.failed_case << " got " << shape_name(r.got);
    }
}

TEST(polyadic, closure_seed_stability) {
    for (const auto &law : closure_laws()) {
        for (uint64_t seed : {1u, 99u}) {
            ASSERT_TRUE(closure_check(law.id, 20, seed).passed) << law.id;
        }
    }
}

TEST(polyadic, querelement_examples) {
    std::mt19937_64 rng(2);
    Matrix n1 = sample_shape(Shape::Nstar1, rng);
    Matrix q = querelement(n1, 3);
    ASSERT_TRUE(approx_equal(q, inverse(n1), 1e-10));
    ASSERT_EQ(classify(q), Shape::Nstar1);

    Matrix c1 = sample_shape(Shape::Ncirc1, rng);
    Matrix q5 = querelement(c1, 5);
    Matrix inv = inverse(c1);
    ASSERT_TRUE(approx_equal(q5, inv * inv * inv, 1e-10));

    ASSERT_TRUE(approx_equal(querelement(Matrix::identity(4), 3), Matrix::identity(4), 1e-15));
    ASSERT_THROW(querelement(Matrix::zeros(4, 4), 3), SingularMatrix);
}

TEST(polyadic, querelement_laws_pass_at_every_position) {
    for (const auto &law : querelement_laws()) {
        ASSERT_TRUE(querelement_check(law.id, 20, 7)) << law.id;
    }
}

TEST(polyadic, identity_examples) {
    const auto &is1 = identity_family("is1");
    Matrix e = is1.make({0, 0, 0, 0});
    ASSERT_EQ(e, build("yb.perm.bisymm", {}, "first"));
    ASSERT_TRUE(polyadic_identity_check(e, 3, Shape::Nstar1, 5, 1).passed());

    ASSERT_TRUE(polyadic_identity_check(reverse(4), 3, Shape::ADiag, 5, 1).passed());

    Matrix i3 = i3c(0, 1, 1, 1);
    ASSERT_TRUE(polyadic_identity_check(i3, 3, Shape::Mcirc, 5, 1).passed());
    ASSERT_EQ(i3 * i3, Matrix::identity(4));
}

TEST(polyadic, identity_middle_position_is_reported_not_required) {
    auto r = polyadic_identity_check(reverse(4), 3, Shape::ADiag, 5, 1);
    ASSERT_TRUE(r.passed());
    ASSERT_FALSE(r.middle);
}

TEST(polyadic, identity_phase_constraints_iff_check) {
    std::mt19937_64 rng(3);
    for (const auto &f : identity_families()) {
        for (int s = 0; s < 5; s++) {
            auto a = sample_identity_phases(f, rng);
            ASSERT_TRUE(f.constraints_hold(a)) << f.id;
            ASSERT_TRUE(polyadic_identity_check(f.make(a), f.k, f.cls, 5, s).passed()) << f.id;
            // break each constraint in turn
            for (const auto &c : f.constraints) {
                auto b = a;
                b[(size_t)c.back().first] += 0.1;
                ASSERT_FALSE(f.constraints_hold(b)) << f.id;
                ASSERT_FALSE(polyadic_identity_check(f.make(b), f.k, f.cls, 5, s).passed()) << f.id;
            }
        }
    }
}

TEST(polyadic, unknown_identity_family) {
    ASSERT_THROW(identity_family("nope"), UnknownId);
}

TEST(polyadic, partial_unitarity_m3) {
    std::mt19937_64 rng(4);
    Matrix m = build("aux.m3", sample_params(family("aux.m3"), 0, rng));
    auto pu = partial_unitarity(m);
    ASSERT_TRUE(pu.left && pu.right);
    ASSERT_EQ(pu.left->str(), "diag(1,1,0,1)");
    ASSERT_EQ(pu.right->str(), "diag(0,1,1,1)");
    ASSERT_EQ(pu.left->rank, 3);
    ASSERT_FALSE(pu.left->block);
    ASSERT_FALSE(pu.orthogonal);
}

TEST(polyadic, partial_unitarity_unitary_gate) {
    Matrix u = build_gate("ua1", {0.4, -0.2});
    auto pu = partial_unitarity(u);
    ASSERT_TRUE(pu.left && pu.right);
    ASSERT_EQ(pu.left->rank, 4);
    ASSERT_TRUE(pu.left->block);
    ASSERT_EQ(pu.right->rank, 4);
    ASSERT_FALSE(pu.orthogonal);
}

TEST(polyadic, partial_unitarity_unil_orthogonal) {
    std::mt19937_64 rng(5);
    Matrix m = build("aux.unil", sample_params(family("aux.unil"), 0, rng));
    auto pu = partial_unitarity(m);
    ASSERT_EQ(pu.left->str(), "diag(1,0,0,1)");
    ASSERT_EQ(pu.right->str(), "diag(0,1,1,0)");
    ASSERT_TRUE(pu.orthogonal);
    for (int s = 0; s < 10; s++) {
        State psi = random_state(4, rng), phi = random_state(4, rng);
        ASSERT_LE(std::abs(partial_inner_product(psi, phi, *pu.left, *pu.right)), 1e-12);
    }
}

TEST(polyadic, partial_unitarity_swaps_under_adjoint) {
    std::mt19937_64 rng(6);
    for (const char *id : {"aux.m3", "aux.unil", "aux.m2"}) {
        Matrix m = build(id, sample_params(family(id), 0, rng));
        auto a = partial_unitarity(m), b = partial_unitarity(conj_transpose(m));
        ASSERT_EQ(a.left.has_value(), b.right.has_value()) << id;
        ASSERT_EQ(a.right.has_value(), b.left.has_value()) << id;
        if (a.left) {
            ASSERT_EQ(a.left->str(), b.right->str()) << id;
        }
        if (a.right) {
            ASSERT_EQ(a.right->str(), b.left->str()) << id;
        }
    }
}

TEST(polyadic, m2_pattern) {
    std::mt19937_64 rng(7);
    Matrix m = build("aux.m2", sample_params(family("aux.m2"), 0, rng));
    auto pu = partial_unitarity(m);
    ASSERT_TRUE(pu.left);
    ASSERT_EQ(pu.left->str(), "diag(0,1,0,1)");
    ASSERT_FALSE(pu.right);
}

TEST(polyadic, c2c_never_partial_unitary) {
    const auto &f = family("yb.circ8.c2c");
    std::mt19937_64 rng(8);
    for (int s = 0; s < 100; s++) {
        auto pu = partial_unitarity(build(f.id, sample_params(f, 0, rng)));
        ASSERT_FALSE(pu.left || pu.right);
    }
}

TEST(polyadic, inner_product_identities) {
    std::mt19937_64 rng(9);
    PartialIdentityPattern full{4, {1, 1, 1, 1}, 4, true};
    for (const char *id : {"aux.m3", "aux.unil"}) {
        Matrix u = build(id, sample_params(family(id), 0, rng));
        auto pu = partial_unitarity(u);
        for (int s = 0; s < 10; s++) {
            State psi = random_state(4, rng), phi = random_state(4, rng);
            State upsi = bk::apply(u, psi), uphi = bk::apply(u, phi);
            // <U psi | U phi> = <I1 psi | I1 phi>
            ASSERT_LE(std::abs(inner(upsi, uphi) - partial_inner_product(psi, phi, *pu.left, *pu.left)), 1e-12);
            // <U psi | I2 phi> = <I1 psi | U* phi>
            cplx lhs = inner(upsi, bk::apply(mat(*pu.right), phi));
            cplx rhs = inner(bk::apply(mat(*pu.left), psi), bk::apply(conj_transpose(u), phi));
            ASSERT_LE(std::abs(lhs - rhs), 1e-12);
        }
        ASSERT_LE(std::abs(partial_inner_product({1, 0, 0, 0}, {1, 0, 0, 0}, full, full) - 1.0), 1e-15);
    }
}

TEST(polyadic, printed_boundedness_fails_for_orthogonal_patterns) {
    // <U psi|U phi> is not <I1 psi|I2 phi> when I1 I2 != I1
    std::mt19937_64 rng(10);
    Matrix u = build("aux.unil", sample_params(family("aux.unil"), 0, rng));
    auto pu = partial_unitarity(u);
    State psi = random_state(4, rng), phi = random_state(4, rng);
    ASSERT_GT(std::abs(inner(bk::apply(u, psi), bk::apply(u, phi))), 1e-3);
    ASSERT_LE(std::abs(partial_inner_product(psi, phi, *pu.left, *pu.right)), 1e-12);
}

TEST(polyadic, inner_dimension_mismatch) {
    ASSERT_THROW(inner({1, 0}, {1, 0, 0}), DimensionError);
}

TEST(polyadic, partial_identity_pattern_detection) {
    ASSERT_TRUE(as_partial_identity(Matrix::diagonal({1, 1, 0, 0}))->block);
    ASSERT_FALSE(as_partial_identity(Matrix::diagonal({1, 0, 1, 0}))->block);
    ASSERT_FALSE(as_partial_identity(Matrix::diagonal({1, 0.5, 1, 0})));
    Matrix off = Matrix::identity(4);
    off(0, 1) = 1e-6;
    ASSERT_FALSE(as_partial_identity(off));
}
