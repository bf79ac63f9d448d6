#pragma once

#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "braidkit/matrix.h"

namespace bk {

using Params = std::map<std::string, cplx>;

enum class Equation { full, partial13, none };

const char *equation_name(Equation e);

struct Constraint {
    std::string text;
    // Distance from the forbidden locus; <= 1e-12 counts as violated.
    std::function<double(const Params &)> margin;
    // Soft constraints mark a degenerate regime instead of refusing to build
    // (the rank-drop point of the 13-partial families).
    bool hard = true;
};

struct Family {
    std::string id;
    std::string anchor;
    std::string description;
    int arity = 2;  // 0: taken from parameter n
    int dim = 4;    // 0: depends on parameters
    int vertices = 0;
    std::vector<std::string> params;
    std::vector<Constraint> constraints;
    std::vector<std::string> variants;
    Equation equation = Equation::full;
    int rank = -1;  // -1: parameter dependent or not claimed

    std::function<Matrix(const Params &, int variant)> make;
    std::function<cplx(const Params &, int variant)> trace;
    std::function<cplx(const Params &, int variant)> det;
    std::function<std::vector<EigenClaim>(const Params &, int variant)> eigen;
    // Overrides for parameter-dependent rank / equation (13-partial families at y = 1).
    std::function<int(const Params &, int variant)> rank_at;
    std::function<Equation(const Params &, int variant)> equation_at;
    // Custom sampler for non-generic parameters (angles, integers, tied values).
    std::function<Params(std::mt19937_64 &, int variant)> sampler;

    int arity_at(const Params &p) const;
    int claimed_rank(const Params &p, int variant) const;
    Equation declared_equation(const Params &p, int variant) const;
};

const std::vector<Family> &registry();
const Family &family(const std::string &id);
// "" selects the first variant. Throws UnknownId for a label the family does not have.
int variant_index(const Family &f, const std::string &variant);

// Throws UnknownId, ConstraintViolation (missing parameter or hard constraint).
Matrix build(const std::string &id, const Params &params, const std::string &variant = "");

struct MetaReport {
    std::string id;
    bool has_trace = false, has_det = false, has_eigen = false, has_rank = false;
    bool trace_ok = true, det_ok = true, eigen_ok = true, rank_ok = true;
    cplx trace_claim = 0, trace_actual = 0;
    cplx det_claim = 0, det_actual = 0;
    int rank_claim = -1, rank_actual = -1;

    bool all_ok() const {
        return trace_ok && det_ok && eigen_ok && rank_ok;
    }
};

MetaReport verify_meta(const std::string &id, const Params &params, const std::string &variant = "",
                       double tol = 1e-9);

// Seeded admissible sample: moduli in [0.5, 2], random phases, each constraint
// locus avoided by at least 0.1.
Params sample_params(const Family &f, int variant, std::mt19937_64 &rng);

// rho_1..rho_4 = X, Y, Z, I.
Matrix pauli(int i);
Matrix pauli_sigma(int i, int j, int k);

// 16-parameter 8x8 star (diagonal + antidiagonal) and circle forms with shared letters
// x y z s t u v w a b c d f g h p.
Matrix mstar8(const Params &p);
Matrix mcirc8(const Params &p);

struct Conjugation {
    Matrix u;     // u * from * u^-1 == to
    Matrix from;
    Matrix to;
};

const std::vector<std::string> &conjugation_pairs();
// Matrices are evaluated at params (defaults used for missing letters).
Conjugation known_conjugator(const std::string &pair_id, const Params &params = {});

// Block-proportionality test for m == q (x) ... (x) q (n factors) with a single 2x2 q.
// With same_factor=false only a product of arbitrary 2x2 factors is required.
bool is_kron_power(const Matrix &m, int n, bool same_factor = true, double tol = 1e-9);

}  // namespace bk
