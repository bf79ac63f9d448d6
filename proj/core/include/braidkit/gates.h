#pragma once

#include <functional>
#include <string>
#include <vector>

#include "braidkit/matrix.h"

namespace bk {

using State = std::vector<cplx>;

struct Bloch {
    double theta = 0;
    double gamma = 0;
};

// (cos theta/2, e^{i gamma} sin theta/2)
State bloch_state(Bloch b);
// Qubit 0 is the most significant index bit.
State product_state(const std::vector<State> &factors);
State product_state(const std::vector<Bloch> &qubits);
State apply(const Matrix &u, const State &s);
double norm(const State &s);

// 2 |a00 a11 - a01 a10|. Throws DimensionError unless 4 amplitudes.
double concurrence2(const State &s);
// Cayley's 2x2x2 hyperdeterminant. Throws DimensionError unless 8 amplitudes.
cplx hyperdet3(const State &s);
double concurrence3(const State &s);

struct GateParams {
    double alpha = 0;
    double beta = 0;
    int sign = 1;   // +1 upper, -1 lower
    int kappa = 1;  // the free overall sign of the 8-vertex ternary gates
    int L = 2;      // qubit count of "ul"
};

struct GateInfo {
    std::string id;
    int qubits;  // 0: given by L
    std::string description;
    bool signed_variant;
    bool uses_kappa;
};

const std::vector<GateInfo> &gate_list();
const GateInfo &gate_info(const std::string &id);
int gate_qubits(const std::string &id, const GateParams &p);

// Unitary as printed, prefactors included. Throws UnknownId, DimensionError (ul with L < 2 or L > 9).
Matrix build_gate(const std::string &id, const GateParams &p);

// Apply the gate to the product state and measure; C2 for two qubits, C3 for three.
// Throws DimensionError when the state count does not match the gate.
double transformed_concurrence(const std::string &id, const GateParams &p, const std::vector<Bloch> &qubits);
// Printed closed form. Throws UnknownId for gates with no closed form (unknown pairing).
double closed_form(const std::string &id, const GateParams &p, const std::vector<Bloch> &qubits);
bool has_closed_form(const std::string &id, const GateParams &p);

// (sqrt5 - 1)^{3/2} / sqrt2
double circle_prefactor();

struct RadialSolution {
    double rx;
    double r;
    // r = r_y = r_z is built in; the other two equations:
    double residual_norm;   // r^2 (rx^2 + r^2) - 1
    double residual_octic;  // r^8 + r^6 - 2 r^4 + 1 - r^2
};

// Non-negative solutions of the circle unitarity system, sorted by decreasing rx.
std::vector<RadialSolution> circle_unitarity_solutions();

struct Relation {
    std::string text;
    std::function<bool(const GateParams &, const std::vector<Bloch> &, double tol)> holds;
    // Move the inputs onto the relation.
    std::function<void(GateParams &, std::vector<Bloch> &)> impose;
    // Move the inputs off it by 0.1 rad. Empty for the universal relation.
    std::function<void(GateParams &, std::vector<Bloch> &)> perturb;
};

// Every relation making the gate non-entangling for some state (empty if none are known).
std::vector<Relation> locus_relations(const std::string &id, const GateParams &p);
// The subset that holds for these inputs.
std::vector<Relation> nonentangling_locus(const std::string &id, const GateParams &p, const std::vector<Bloch> &qubits,
                                          double tol = 1e-9);

struct GridHit {
    int qubit;
    double theta;
    double alpha_minus_beta;
    double value;
};

// Empirical scan: alpha - beta over `points` values in [0, 2 pi), theta_k over {pi/2, pi}
// with the other qubits fixed. Reports hits with concurrence <= tol. Grid evidence only.
std::vector<GridHit> locus_grid_search(const std::string &id, const GateParams &p, const std::vector<Bloch> &qubits,
                                       int points = 64, double tol = 1e-10);

}  // namespace bk
