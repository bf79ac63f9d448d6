#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "braidkit/matrix.h"

namespace bk {

enum class Shape {
    Zero,
    Diag,
    ADiag,
    Nstar1,
    Nstar2,
    Ncirc1,
    Ncirc2,
    Mstar,
    Mcirc,
    Nstar1p,
    Nstar2p,
    Ncirc1p,
    Ncirc2p,
    Mstarp,
    Mcircp,
    Mquadp,
    Other,
};

// Primed classes print with a trailing apostrophe: "Nstar1'".
std::string shape_name(Shape s);
// Throws UnknownId.
Shape shape_from_name(const std::string &name);

size_t shape_dim(Shape s);
// 0-based (row, col) support of a pattern class. Empty for Zero/Diag/ADiag/Other.
const std::vector<std::pair<int, int>> &shape_support(Shape s);

// Zero -> Diag -> ADiag -> N-classes (support equal) -> M-classes (support contained) -> Other.
// Throws DimensionError unless 4x4 or 8x8.
Shape classify(const Matrix &m, double tol = 1e-9);

// Random member: every support entry nonzero, moduli in [0.5, 2], random phase.
Matrix sample_shape(Shape s, std::mt19937_64 &rng);

struct ClosureCase {
    std::vector<Shape> operands;
    Shape result;
};

struct ClosureLaw {
    std::string id;
    std::vector<ClosureCase> cases;
};

const std::vector<ClosureLaw> &closure_laws();

struct ClosureResult {
    bool passed = true;
    int samples = 0;
    // first offending case, if any
    int failed_case = -1;
    Shape got = Shape::Other;
};

// Throws UnknownId.
ClosureResult closure_check(const std::string &law_id, int samples, uint64_t seed);

// m^(2-k). Throws SingularMatrix, or Error if m^(k-1) qm != m.
Matrix querelement(const Matrix &m, int k, double tol = 1e-9);

struct QuerLaw {
    std::string id;
    std::vector<Shape> classes;
    int k;
};

const std::vector<QuerLaw> &querelement_laws();

// querelement of class samples keeps the class and satisfies the defining relation
// with the querelement at every one of the k positions.
bool querelement_check(const std::string &law_id, int samples, uint64_t seed, double tol = 1e-9);

struct IdentityReport {
    bool power = false;  // e^(k-1) == I
    bool left = false;   // e^(k-1) m == m
    bool right = false;  // m e^(k-1) == m
    // m sandwiched between e's, at each inner position; reported, not required.
    bool middle = false;

    bool passed() const {
        return power && left && right;
    }
};

IdentityReport polyadic_identity_check(const Matrix &e, int k, Shape cls, int samples, uint64_t seed,
                                       double tol = 1e-9);

// A phase-parameterized family of identities. Each constraint is a set of phase
// indices whose weighted sum must be 0 mod 2 pi.
struct IdentityFamily {
    std::string id;
    Shape cls;
    int k;
    int phases;
    std::vector<std::vector<std::pair<int, int>>> constraints;  // (index, weight)
    std::vector<std::pair<int, int>> positions;                   // where e^{i alpha_j} sits

    Matrix make(const std::vector<double> &alpha) const;
    bool constraints_hold(const std::vector<double> &alpha, double tol = 1e-9) const;
};

const std::vector<IdentityFamily> &identity_families();
const IdentityFamily &identity_family(const std::string &id);
// Random phases satisfying every constraint of f.
std::vector<double> sample_identity_phases(const IdentityFamily &f, std::mt19937_64 &rng);

// The three circle-class ternary identities: form 0, 1, 2.
Matrix i3c(int form, cplx a, cplx b, cplx c, cplx d = 0);

struct PartialIdentityPattern {
    size_t dim = 0;
    std::vector<int> mask;
    int rank = 0;
    bool block = false;  // ones form a prefix

    Matrix matrix() const;
    std::string str() const;
};

std::optional<PartialIdentityPattern> as_partial_identity(const Matrix &m, double tol = 1e-10);

struct PartialUnitarity {
    std::optional<PartialIdentityPattern> left;   // from m* m
    std::optional<PartialIdentityPattern> right;  // from m m*
    bool orthogonal = false;
};

PartialUnitarity partial_unitarity(const Matrix &m, double tol = 1e-10);

// < left psi | right phi >. Throws DimensionError.
cplx inner(const std::vector<cplx> &a, const std::vector<cplx> &b);
cplx partial_inner_product(const std::vector<cplx> &psi, const std::vector<cplx> &phi,
                           const PartialIdentityPattern &left, const PartialIdentityPattern &right);

}  // namespace bk
