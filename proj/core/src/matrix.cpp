#include "braidkit/matrix.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "braidkit/errors.h"

namespace bk {

Matrix::Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {
}

Matrix::Matrix(std::initializer_list<std::initializer_list<cplx>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    a_.reserve(rows_ * cols_);
    for (const auto &r : rows) {
        if (r.size() != cols_) {
            throw DimensionError("ragged matrix literal");
        }
        a_.insert(a_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; i++) {
        m(i, i) = 1;
    }
    return m;
}

Matrix Matrix::zeros(size_t rows, size_t cols) {
    return Matrix(rows, cols);
}

Matrix Matrix::permutation(const std::vector<int> &perm) {
    size_t n = perm.size();
    Matrix m(n, n);
    for (size_t i = 0; i < n; i++) {
        if (perm[i] < 0 || (size_t)perm[i] >= n) {
            throw DimensionError("permutation index out of range");
        }
        m((size_t)perm[i], i) = 1;
    }
    return m;
}

Matrix Matrix::diagonal(const std::vector<cplx> &diag) {
    Matrix m(diag.size(), diag.size());
    for (size_t i = 0; i < diag.size(); i++) {
        m(i, i) = diag[i];
    }
    return m;
}

bool Matrix::operator==(const Matrix &other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && a_ == other.a_;
}

static std::string fmt_entry(cplx v, int precision) {
    std::ostringstream ss;
    ss.precision(precision);
    double re = std::abs(v.real()) < 1e-15 ? 0.0 : v.real();
    double im = std::abs(v.imag()) < 1e-15 ? 0.0 : v.imag();
    if (im == 0) {
        ss << re;
    } else if (re == 0) {
        ss << im << "i";
    } else {
        ss << re << (im < 0 ? "-" : "+") << std::abs(im) << "i";
    }
    return ss.str();
}

std::string Matrix::str(int precision) const {
    std::vector<std::string> cells;
    size_t width = 1;
    for (const auto &v : a_) {
        cells.push_back(fmt_entry(v, precision));
        width = std::max(width, cells.back().size());
    }
    std::ostringstream out;
    for (size_t i = 0; i < rows_; i++) {
        for (size_t j = 0; j < cols_; j++) {
            const auto &c = cells[i * cols_ + j];
            out << (j ? " " : "") << std::string(width - c.size(), ' ') << c;
        }
        out << "\n";
    }
    return out.str();
}

Matrix operator*(const Matrix &a, const Matrix &b) {
    if (a.cols() != b.rows()) {
        throw DimensionError("matrix product: inner dimensions differ");
    }
    size_t n = a.rows(), m = a.cols(), p = b.cols();
    Matrix out(n, p);
    // i-k-j order with zero skipping; lifted braid operators are mostly zeros.
    for (size_t i = 0; i < n; i++) {
        cplx *orow = &out(i, 0);
        for (size_t k = 0; k < m; k++) {
            cplx v = a(i, k);
            if (v == cplx(0)) {
                continue;
            }
            const cplx *brow = &b(k, 0);
            for (size_t j = 0; j < p; j++) {
                orow[j] += v * brow[j];
            }
        }
    }
    return out;
}

Matrix operator+(const Matrix &a, const Matrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError("matrix sum: shapes differ");
    }
    Matrix out(a.rows(), a.cols());
    for (size_t i = 0; i < a.rows(); i++) {
        for (size_t j = 0; j < a.cols(); j++) {
            out(i, j) = a(i, j) + b(i, j);
        }
    }
    return out;
}

Matrix operator-(const Matrix &a, const Matrix &b) {
    return a + cplx(-1) * b;
}

Matrix operator*(cplx s, const Matrix &a) {
    Matrix out(a.rows(), a.cols());
    for (size_t i = 0; i < a.rows(); i++) {
        for (size_t j = 0; j < a.cols(); j++) {
            out(i, j) = s * a(i, j);
        }
    }
    return out;
}

Matrix kron(const Matrix &a, const Matrix &b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (size_t i = 0; i < a.rows(); i++) {
        for (size_t j = 0; j < a.cols(); j++) {
            cplx v = a(i, j);
            if (v == cplx(0)) {
                continue;
            }
            for (size_t k = 0; k < b.rows(); k++) {
                for (size_t l = 0; l < b.cols(); l++) {
                    out(i * b.rows() + k, j * b.cols() + l) = v * b(k, l);
                }
            }
        }
    }
    return out;
}

Matrix kron_power(const Matrix &a, int n) {
    if (n < 1) {
        throw DimensionError("kron_power needs n >= 1");
    }
    Matrix out = a;
    for (int i = 1; i < n; i++) {
        out = kron(out, a);
    }
    return out;
}

Matrix chain_product(const std::vector<Matrix> &factors, size_t n) {
    if (factors.empty()) {
        return Matrix::identity(n);
    }
    Matrix out = factors[0];
    for (size_t k = 1; k < factors.size(); k++) {
        out = out * factors[k];
    }
    return out;
}

Matrix conj_transpose(const Matrix &m) {
    Matrix out(m.cols(), m.rows());
    for (size_t i = 0; i < m.rows(); i++) {
        for (size_t j = 0; j < m.cols(); j++) {
            out(j, i) = std::conj(m(i, j));
        }
    }
    return out;
}

Matrix transpose(const Matrix &m) {
    Matrix out(m.cols(), m.rows());
    for (size_t i = 0; i < m.rows(); i++) {
        for (size_t j = 0; j < m.cols(); j++) {
            out(j, i) = m(i, j);
        }
    }
    return out;
}

static void require_square(const Matrix &m, const char *what) {
    if (!m.is_square()) {
        throw DimensionError(std::string(what) + ": matrix is not square");
    }
}

cplx trace(const Matrix &m) {
    require_square(m, "trace");
    cplx t = 0;
    for (size_t i = 0; i < m.rows(); i++) {
        t += m(i, i);
    }
    return t;
}

cplx det(const Matrix &m) {
    require_square(m, "det");
    size_t n = m.rows();
    Matrix a = m;
    cplx d = 1;
    for (size_t c = 0; c < n; c++) {
        size_t piv = c;
        for (size_t r = c + 1; r < n; r++) {
            if (std::abs(a(r, c)) > std::abs(a(piv, c))) {
                piv = r;
            }
        }
        if (a(piv, c) == cplx(0)) {
            return 0;
        }
        if (piv != c) {
            for (size_t j = 0; j < n; j++) {
                std::swap(a(piv, j), a(c, j));
            }
            d = -d;
        }
        d *= a(c, c);
        for (size_t r = c + 1; r < n; r++) {
            cplx f = a(r, c) / a(c, c);
            if (f == cplx(0)) {
                continue;
            }
            for (size_t j = c; j < n; j++) {
                a(r, j) -= f * a(c, j);
            }
        }
    }
    return d;
}

Matrix inverse(const Matrix &m) {
    require_square(m, "inverse");
    size_t n = m.rows();
    Matrix a = m;
    Matrix inv = Matrix::identity(n);
    double scale = std::max(max_abs(m), 1e-300);
    for (size_t c = 0; c < n; c++) {
        size_t piv = c;
        for (size_t r = c + 1; r < n; r++) {
            if (std::abs(a(r, c)) > std::abs(a(piv, c))) {
                piv = r;
            }
        }
        if (std::abs(a(piv, c)) <= 1e-13 * scale) {
            throw SingularMatrix("matrix is singular");
        }
        if (piv != c) {
            for (size_t j = 0; j < n; j++) {
                std::swap(a(piv, j), a(c, j));
                std::swap(inv(piv, j), inv(c, j));
            }
        }
        cplx p = a(c, c);
        for (size_t j = 0; j < n; j++) {
            a(c, j) /= p;
            inv(c, j) /= p;
        }
        for (size_t r = 0; r < n; r++) {
            if (r == c || a(r, c) == cplx(0)) {
                continue;
            }
            cplx f = a(r, c);
            for (size_t j = 0; j < n; j++) {
                a(r, j) -= f * a(c, j);
                inv(r, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

Matrix power(const Matrix &m, int k) {
    require_square(m, "power");
    Matrix base = k < 0 ? inverse(m) : m;
    unsigned e = (unsigned)(k < 0 ? -k : k);
    Matrix out = Matrix::identity(m.rows());
    while (e) {
        if (e & 1) {
            out = out * base;
        }
        e >>= 1;
        if (e) {
            base = base * base;
        }
    }
    return out;
}

double max_abs(const Matrix &m) {
    double r = 0;
    for (const auto &v : m.data()) {
        r = std::max(r, std::abs(v));
    }
    return r;
}

double max_abs_diff(const Matrix &a, const Matrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError("max_abs_diff: shapes differ");
    }
    double r = 0;
    for (size_t k = 0; k < a.data().size(); k++) {
        r = std::max(r, std::abs(a.data()[k] - b.data()[k]));
    }
    return r;
}

double frobenius(const Matrix &m) {
    double s = 0;
    for (const auto &v : m.data()) {
        s += std::norm(v);
    }
    return std::sqrt(s);
}

bool approx_equal(const Matrix &a, const Matrix &b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        return false;
    }
    double scale = std::max({1.0, max_abs(a), max_abs(b)});
    return max_abs_diff(a, b) <= tol * scale;
}

bool is_unitary(const Matrix &m, double tol) {
    if (!m.is_square()) {
        return false;
    }
    auto id = Matrix::identity(m.rows());
    auto d = conj_transpose(m);
    return max_abs_diff(d * m, id) <= tol && max_abs_diff(m * d, id) <= tol;
}

bool is_hermitian(const Matrix &m, double tol) {
    return m.is_square() && approx_equal(m, conj_transpose(m), tol);
}

size_t nonzero_count(const Matrix &m, double tol) {
    size_t n = 0;
    for (const auto &v : m.data()) {
        n += std::abs(v) > tol;
    }
    return n;
}

std::vector<cplx> char_poly(const Matrix &m) {
    require_square(m, "char_poly");
    size_t n = m.rows();
    std::vector<cplx> c(n + 1);
    c[0] = 1;
    Matrix mk(n, n);
    for (size_t k = 1; k <= n; k++) {
        // M_k = A M_{k-1} + c_{k-1} I,  c_k = -tr(A M_k) / k
        mk = m * mk;
        for (size_t i = 0; i < n; i++) {
            mk(i, i) += c[k - 1];
        }
        c[k] = -trace(m * mk) / (double)k;
    }
    return c;
}

std::vector<cplx> poly_from_roots(const std::vector<EigenClaim> &claims) {
    std::vector<cplx> p{1};
    for (const auto &cl : claims) {
        for (int r = 0; r < cl.multiplicity; r++) {
            std::vector<cplx> q(p.size() + 1);
            for (size_t k = 0; k < p.size(); k++) {
                q[k] += p[k];
                q[k + 1] -= cl.value * p[k];
            }
            p = std::move(q);
        }
    }
    return p;
}

bool eigencheck(const Matrix &m, const std::vector<EigenClaim> &claims, double tol) {
    size_t total = 0;
    for (const auto &cl : claims) {
        if (cl.multiplicity <= 0) {
            return false;
        }
        total += (size_t)cl.multiplicity;
    }
    if (!m.is_square() || total != m.rows()) {
        return false;
    }
    auto p = char_poly(m);
    auto q = poly_from_roots(claims);
    double scale = 1;
    for (const auto &v : p) {
        scale = std::max(scale, std::abs(v));
    }
    for (size_t k = 0; k < p.size(); k++) {
        if (std::abs(p[k] - q[k]) > tol * scale) {
            return false;
        }
    }
    return true;
}

size_t numeric_rank(const Matrix &m, double tol) {
    size_t n = m.rows(), p = m.cols();
    Matrix a = m;
    double maxrow = 0;
    for (size_t i = 0; i < n; i++) {
        double s = 0;
        for (size_t j = 0; j < p; j++) {
            s += std::norm(a(i, j));
        }
        maxrow = std::max(maxrow, std::sqrt(s));
    }
    if (maxrow == 0) {
        return 0;
    }
    double thresh = tol * maxrow;
    size_t rank = 0;
    std::vector<size_t> colmap(p);
    for (size_t j = 0; j < p; j++) {
        colmap[j] = j;
    }
    for (size_t step = 0; step < std::min(n, p); step++) {
        size_t pr = step, pc = step;
        double best = -1;
        for (size_t i = step; i < n; i++) {
            for (size_t j = step; j < p; j++) {
                if (std::abs(a(i, j)) > best) {
                    best = std::abs(a(i, j));
                    pr = i;
                    pc = j;
                }
            }
        }
        if (best <= thresh) {
            break;
        }
        for (size_t j = 0; j < p; j++) {
            std::swap(a(pr, j), a(step, j));
        }
        for (size_t i = 0; i < n; i++) {
            std::swap(a(i, pc), a(i, step));
        }
        rank++;
        for (size_t i = step + 1; i < n; i++) {
            cplx f = a(i, step) / a(step, step);
            if (f == cplx(0)) {
                continue;
            }
            for (size_t j = step; j < p; j++) {
                a(i, j) -= f * a(step, j);
            }
        }
    }
    return rank;
}

bool penrose_check(const Matrix &m, const Matrix &plus, double tol) {
    if (m.rows() != plus.cols() || m.cols() != plus.rows()) {
        return false;
    }
    auto mp = m * plus;
    auto pm = plus * m;
    return approx_equal(mp * m, m, tol) && approx_equal(pm * plus, plus, tol) && is_hermitian(mp, tol) &&
           is_hermitian(pm, tol);
}

}  // namespace bk
