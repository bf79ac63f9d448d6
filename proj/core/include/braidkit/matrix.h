#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace bk {

using cplx = std::complex<double>;

// Dense row-major complex matrix. Treated as a value; every operation below
// returns a fresh matrix.
class Matrix {
   public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols);
    Matrix(std::initializer_list<std::initializer_list<cplx>> rows);

    static Matrix identity(size_t n);
    static Matrix zeros(size_t rows, size_t cols);
    // m[perm[i]][i] = 1, i.e. m e_i = e_{perm[i]}.
    static Matrix permutation(const std::vector<int> &perm);
    static Matrix diagonal(const std::vector<cplx> &diag);

    size_t rows() const {
        return rows_;
    }
    size_t cols() const {
        return cols_;
    }
    bool is_square() const {
        return rows_ == cols_;
    }
    cplx &operator()(size_t i, size_t j) {
        return a_[i * cols_ + j];
    }
    const cplx &operator()(size_t i, size_t j) const {
        return a_[i * cols_ + j];
    }
    const std::vector<cplx> &data() const {
        return a_;
    }

    // Exact entrywise equality.
    bool operator==(const Matrix &other) const;

    std::string str(int precision = 6) const;

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<cplx> a_;
};

Matrix operator*(const Matrix &a, const Matrix &b);
Matrix operator+(const Matrix &a, const Matrix &b);
Matrix operator-(const Matrix &a, const Matrix &b);
Matrix operator*(cplx s, const Matrix &a);

Matrix kron(const Matrix &a, const Matrix &b);
Matrix kron_power(const Matrix &a, int n);

// Left-to-right product. An empty list gives I_n (n must then be given).
Matrix chain_product(const std::vector<Matrix> &factors, size_t n = 0);

Matrix conj_transpose(const Matrix &m);
Matrix transpose(const Matrix &m);

cplx trace(const Matrix &m);
cplx det(const Matrix &m);
Matrix inverse(const Matrix &m);
// Negative exponents go through inverse().
Matrix power(const Matrix &m, int k);

double max_abs(const Matrix &m);
double max_abs_diff(const Matrix &a, const Matrix &b);
double frobenius(const Matrix &m);
// max|a-b| <= tol * max(1, max|a|, max|b|)
bool approx_equal(const Matrix &a, const Matrix &b, double tol = 1e-9);
bool is_unitary(const Matrix &m, double tol = 1e-12);
bool is_hermitian(const Matrix &m, double tol = 1e-9);
size_t nonzero_count(const Matrix &m, double tol = 0.0);

// Monic characteristic polynomial, coefficients of lambda^n, lambda^(n-1), ..., lambda^0.
// Faddeev-LeVerrier; only divides by integers.
std::vector<cplx> char_poly(const Matrix &m);

struct EigenClaim {
    cplx value;
    int multiplicity;
};

// Coefficients of prod (lambda - v)^mult in the same layout as char_poly.
std::vector<cplx> poly_from_roots(const std::vector<EigenClaim> &claims);

// Characteristic polynomial factor matching, coefficientwise within tol*max(1, max|coef|).
bool eigencheck(const Matrix &m, const std::vector<EigenClaim> &claims, double tol = 1e-9);

// Full-pivot row reduction, pivots below tol*(largest initial row norm) count as zero.
size_t numeric_rank(const Matrix &m, double tol = 1e-10);

bool penrose_check(const Matrix &m, const Matrix &plus, double tol = 1e-9);

}  // namespace bk
