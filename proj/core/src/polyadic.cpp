#include "braidkit/polyadic.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

#include "braidkit/errors.h"

namespace bk {

namespace {

using Support = std::vector<std::pair<int, int>>;

struct ShapeInfo {
    Shape s;
    const char *name;
    size_t dim;
    Support support;
};

Support join(const Support &a, const Support &b) {
    Support r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

const std::vector<ShapeInfo> &infos() {
    static const std::vector<ShapeInfo> v = [] {
        Support s1{{0, 0}, {1, 2}, {2, 1}, {3, 3}};
        Support s2{{0, 3}, {1, 1}, {2, 2}, {3, 0}};
        Support c1{{0, 2}, {1, 0}, {2, 3}, {3, 1}};
        Support c2{{0, 1}, {1, 3}, {2, 0}, {3, 2}};
        Support p1{{0, 0}, {1, 6}, {2, 2}, {3, 4}, {4, 3}, {5, 5}, {6, 1}, {7, 7}};
        Support p2{{0, 7}, {1, 1}, {2, 5}, {3, 3}, {4, 4}, {5, 2}, {6, 6}, {7, 0}};
        Support q1{{0, 0}, {1, 4}, {2, 7}, {3, 3}, {4, 1}, {5, 5}, {6, 6}, {7, 2}};
        Support q2{{0, 5}, {1, 1}, {2, 2}, {3, 6}, {4, 4}, {5, 0}, {6, 3}, {7, 7}};
        Support ms, mc, mq;
        for (int i = 0; i < 8; i++) {
            ms.push_back({i, i});
            ms.push_back({i, 7 - i});
            mc.push_back({i, i});
        }
        for (auto e : Support{{0, 5}, {1, 4}, {2, 7}, {3, 6}, {4, 1}, {5, 0}, {6, 3}, {7, 2}}) {
            mc.push_back(e);
        }
        // even block {0,2,5,7} and odd block {1,3,4,6}
        const int A[] = {0, 2, 5, 7}, B[] = {1, 3, 4, 6};
        for (int r = 0; r < 8; r++) {
            bool even = std::find(std::begin(A), std::end(A), r) != std::end(A);
            for (int c : even ? A : B) {
                mq.push_back({r, c});
            }
        }
        return std::vector<ShapeInfo>{
            {Shape::Zero, "Zero", 0, {}},
            {Shape::Diag, "Diag", 0, {}},
            {Shape::ADiag, "ADiag", 0, {}},
            {Shape::Nstar1, "Nstar1", 4, s1},
            {Shape::Nstar2, "Nstar2", 4, s2},
            {Shape::Ncirc1, "Ncirc1", 4, c1},
            {Shape::Ncirc2, "Ncirc2", 4, c2},
            {Shape::Mstar, "Mstar", 4, join(s1, s2)},
            {Shape::Mcirc, "Mcirc", 4, join(c1, c2)},
            {Shape::Nstar1p, "Nstar1'", 8, p1},
            {Shape::Nstar2p, "Nstar2'", 8, p2},
            {Shape::Ncirc1p, "Ncirc1'", 8, q1},
            {Shape::Ncirc2p, "Ncirc2'", 8, q2},
            {Shape::Mstarp, "Mstar'", 8, ms},
            {Shape::Mcircp, "Mcirc'", 8, mc},
            {Shape::Mquadp, "Mquad'", 8, mq},
            {Shape::Other, "Other", 0, {}},
        };
    }();
    return v;
}

const ShapeInfo &info(Shape s) {
    for (const auto &i : infos()) {
        if (i.s == s) {
            return i;
        }
    }
    throw UnknownId("bad shape");
}

bool is_n_class(Shape s) {
    switch (s) {
        case Shape::Nstar1:
        case Shape::Nstar2:
        case Shape::Ncirc1:
        case Shape::Ncirc2:
        case Shape::Nstar1p:
        case Shape::Nstar2p:
        case Shape::Ncirc1p:
        case Shape::Ncirc2p:
            return true;
        default:
            return false;
    }
}

cplx random_entry(std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> mod(0.5, 2.0), ph(0.0, 2 * std::numbers::pi);
    return std::polar(mod(rng), ph(rng));
}

Matrix product_with(const Matrix &e, const Matrix &m, int k, int pos) {
    Matrix r = Matrix::identity(m.rows());
    for (int i = 0; i < k; i++) {
        r = r * (i == pos ? m : e);
    }
    return r;
}

}  // namespace

std::string shape_name(Shape s) {
    return info(s).name;
}

Shape shape_from_name(const std::string &name) {
    for (const auto &i : infos()) {
        if (name == i.name) {
            return i.s;
        }
    }
    throw UnknownId("unknown shape class: " + name);
}

size_t shape_dim(Shape s) {
    return info(s).dim;
}

const std::vector<std::pair<int, int>> &shape_support(Shape s) {
    return info(s).support;
}

Shape classify(const Matrix &m, double tol) {
    if (!m.is_square() || (m.rows() != 4 && m.rows() != 8)) {
        throw DimensionError("classify supports 4x4 and 8x8 only");
    }
    size_t n = m.rows();
    double scale = std::max(max_abs(m), 1e-300);
    std::set<std::pair<int, int>> nz;
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            if (std::abs(m(i, j)) > tol * scale) {
                nz.insert({(int)i, (int)j});
            }
        }
    }
    if (nz.empty()) {
        return Shape::Zero;
    }
    if (std::all_of(nz.begin(), nz.end(), [](auto p) { return p.first == p.second; })) {
        return Shape::Diag;
    }
    if (std::all_of(nz.begin(), nz.end(), [n](auto p) { return p.first + p.second == (int)n - 1; })) {
        return Shape::ADiag;
    }
    for (const auto &i : infos()) {
        if (i.dim == n && is_n_class(i.s) && nz == std::set<std::pair<int, int>>(i.support.begin(), i.support.end())) {
            return i.s;
        }
    }
    for (const auto &i : infos()) {
        if (i.dim != n || is_n_class(i.s) || i.support.empty()) {
            continue;
        }
        std::set<std::pair<int, int>> sup(i.support.begin(), i.support.end());
        if (std::includes(sup.begin(), sup.end(), nz.begin(), nz.end())) {
            return i.s;
        }
    }
    return Shape::Other;
}

Matrix sample_shape(Shape s, std::mt19937_64 &rng) {
    if (s == Shape::Diag || s == Shape::ADiag) {
        Matrix m(4, 4);
        for (size_t i = 0; i < 4; i++) {
            m(i, s == Shape::Diag ? i : 3 - i) = random_entry(rng);
        }
        return m;
    }
    const auto &in = info(s);
    if (in.support.empty()) {
        throw UnknownId("cannot sample shape " + std::string(in.name));
    }
    Matrix m(in.dim, in.dim);
    for (auto [i, j] : in.support) {
        m((size_t)i, (size_t)j) = random_entry(rng);
    }
    return m;
}

const std::vector<ClosureLaw> &closure_laws() {
    static const std::vector<ClosureLaw> laws = [] {
        using S = Shape;
        const S S1 = S::Nstar1, S2 = S::Nstar2, C1 = S::Ncirc1, C2 = S::Ncirc2;
        const S s1 = S::Nstar1p, s2 = S::Nstar2p, c1 = S::Ncirc1p, c2 = S::Ncirc2p;
        auto rep = [](S s, int k) { return std::vector<S>((size_t)k, s); };
        auto cat = [](std::vector<S> a, std::vector<S> b) {
            a.insert(a.end(), b.begin(), b.end());
            return a;
        };
        std::vector<ClosureLaw> v{
            {"ns1", {{rep(S1, 3), S1}}},
            {"ns2", {{rep(S2, 3), S2}}},
            {"nc1", {{rep(C1, 5), C1}}},
            {"nc2", {{rep(C2, 5), C2}}},
            {"sss1", {{{S1, S2, S1}, S2}, {{C1, C2, C1}, C1}}},
            {"sss2", {{{S1, S1, S2}, S2}, {{C1, C1, C2}, C1}}},
            {"sss3", {{{S2, S1, S1}, S2}, {{C2, C1, C1}, C1}}},
            {"sss4", {{{S2, S2, S1}, S1}, {{C2, C2, C1}, C2}}},
            {"sss5", {{{S2, S1, S2}, S1}, {{C2, C1, C2}, C2}}},
            {"sss6", {{{S1, S2, S2}, S1}, {{C1, C2, C2}, C2}}},
            {"scs1", {{{S1, C1, S1}, C2}, {{S1, C2, S1}, C1}}},
            {"scs2", {{{S2, C1, S2}, C2}, {{S2, C2, S2}, C1}}},
            {"scs3", {{{S1, S1, C1}, C1}, {{C1, S1, S1}, C1}}},
            {"scs4", {{{S1, S1, C2}, C2}, {{C2, S1, S1}, C2}}},
            {"scs5", {{{S2, S2, C1}, C1}, {{C1, S2, S2}, C1}}},
            {"scs6", {{{S2, S2, C2}, C2}, {{C2, S2, S2}, C2}}},
            {"csc1", {{{C1, S1, C1}, S1}, {{C1, S2, C1}, S2}}},
            {"csc2", {{{C2, S1, C2}, S1}, {{C2, S2, C2}, S2}}},
            {"csc3", {{{C1, C1, S1}, S2}, {{S1, C1, C1}, S2}}},
            {"csc4", {{{C1, C1, S2}, S1}, {{S2, C1, C1}, S1}}},
            {"csc5", {{{C2, C2, S1}, S2}, {{S1, C2, C2}, S2}}},
            {"csc6", {{{C2, C2, S2}, S1}, {{S2, C2, C2}, S1}}},
            {"ccc1", {{cat(rep(C1, 4), {S1}), S1}, {cat(rep(C1, 4), {S2}), S2}}},
            {"ccc2", {{cat({S1}, rep(C1, 4)), S1}, {cat({S2}, rep(C1, 4)), S2}}},
            {"ccc3", {{cat(rep(C2, 4), {S1}), S1}, {cat(rep(C2, 4), {S2}), S2}}},
            {"ccc4", {{cat({S1}, rep(C2, 4)), S1}, {cat({S2}, rep(C2, 4)), S2}}},
            {"ccc5", {{cat(rep(C1, 4), {C2}), C2}, {cat({C2}, rep(C1, 4)), C2}}},
            {"ccc6", {{cat(rep(C2, 4), {C1}), C1}, {cat({C1}, rep(C2, 4)), C1}}},
            {"mmm", {{{S::Mstar, S::Mstar}, S::Mstar}}},
            {"mmm1", {{{S::Mstar, S::Mcirc}, S::Mcirc}, {{S::Mcirc, S::Mstar}, S::Mcirc}}},
            {"mmm2", {{{S::Mcirc, S::Mcirc}, S::Mstar}}},
            {"mc", {{rep(S::Mcirc, 3), S::Mcirc}}},
            {"nns1", {{rep(s1, 3), s1}}},
            {"nns2", {{rep(s2, 3), s2}}},
            {"nnc1", {{rep(c1, 3), c1}}},
            {"nnc2", {{rep(c2, 3), c2}}},
            {"s8s1", {{{s1, s2, s1}, s2}, {{c1, c2, c1}, c2}}},
            {"s8s2", {{{s1, s1, s2}, s2}, {{c1, c1, c2}, c2}}},
            {"s8s3", {{{s2, s1, s1}, s2}, {{c2, c1, c1}, c2}}},
            {"s8s4", {{{s2, s2, s1}, s1}, {{c2, c2, c1}, c1}}},
            {"s8s5", {{{s2, s1, s2}, s1}, {{c2, c1, c2}, c1}}},
            {"s8s6", {{{s1, s2, s2}, s1}, {{c1, c2, c2}, c1}}},
            {"s8c3", {{{s1, s1, c1}, c1}, {{c1, s1, s1}, c1}}},
            {"s8c4", {{{s1, s1, c2}, c2}, {{c2, s1, s1}, c2}}},
            {"s8c5", {{{s2, s2, c1}, c1}, {{c1, s2, s2}, c1}}},
            {"s8c6", {{{s2, s2, c2}, c2}, {{c2, s2, s2}, c2}}},
            {"c8c1", {{{c1, c1, s1}, s1}, {{s1, c1, c1}, s1}}},
            {"c8c2", {{{c1, c1, s2}, s2}, {{s2, c1, c1}, s2}}},
            {"c8c3", {{{c2, c2, s1}, s1}, {{s1, c2, c2}, s1}}},
            {"c8c4", {{{c2, c2, s2}, s2}, {{s2, c2, c2}, s2}}},
            {"mm8", {{{S::Mstarp, S::Mstarp}, S::Mstarp}, {{S::Mcircp, S::Mcircp}, S::Mcircp}}},
            {"mcq", {{{S::Mstarp, S::Mcircp}, S::Mquadp}, {{S::Mcircp, S::Mstarp}, S::Mquadp}}},
            {"mq", {{{S::Mquadp, S::Mquadp}, S::Mquadp}}},
        };
        return v;
    }();
    return laws;
}

ClosureResult closure_check(const std::string &law_id, int samples, uint64_t seed) {
    const ClosureLaw *law = nullptr;
    for (const auto &l : closure_laws()) {
        if (l.id == law_id) {
            law = &l;
        }
    }
    if (!law) {
        throw UnknownId("unknown law: " + law_id);
    }
    std::mt19937_64 rng(seed);
    ClosureResult res;
    for (int s = 0; s < samples; s++) {
        for (size_t c = 0; c < law->cases.size(); c++) {
            const auto &cs = law->cases[c];
            Matrix m = Matrix::identity(shape_dim(cs.operands[0]));
            for (Shape op : cs.operands) {
                m = m * sample_shape(op, rng);
            }
            Shape got = classify(m);
            if (got != cs.result && res.passed) {
                res.passed = false;
                res.failed_case = (int)c;
                res.got = got;
            }
        }
        res.samples++;
    }
    return res;
}

Matrix querelement(const Matrix &m, int k, double tol) {
    if (k < 3) {
        throw DimensionError("querelement needs k >= 3");
    }
    Matrix q = power(m, 2 - k);
    if (!approx_equal(power(m, k - 1) * q, m, tol)) {
        throw Error("querelement defining relation fails");
    }
    return q;
}

const std::vector<QuerLaw> &querelement_laws() {
    static const std::vector<QuerLaw> v{
        {"nn", {Shape::Nstar1, Shape::Nstar2}, 3},
        {"ncq", {Shape::Ncirc1, Shape::Ncirc2}, 5},
        {"nq1", {Shape::Nstar1p, Shape::Nstar2p}, 3},
        {"nq2", {Shape::Ncirc1p, Shape::Ncirc2p}, 3},
    };
    return v;
}

bool querelement_check(const std::string &law_id, int samples, uint64_t seed, double tol) {
    const QuerLaw *law = nullptr;
    for (const auto &l : querelement_laws()) {
        if (l.id == law_id) {
            law = &l;
        }
    }
    if (!law) {
        throw UnknownId("unknown querelement law: " + law_id);
    }
    std::mt19937_64 rng(seed);
    for (int s = 0; s < samples; s++) {
        for (Shape cls : law->classes) {
            Matrix m = sample_shape(cls, rng);
            Matrix q = querelement(m, law->k, tol);
            if (classify(q) != cls) {
                return false;
            }
            for (int pos = 0; pos < law->k; pos++) {
                if (!approx_equal(product_with(m, q, law->k, pos), m, tol)) {
                    return false;
                }
            }
        }
    }
    return true;
}

IdentityReport polyadic_identity_check(const Matrix &e, int k, Shape cls, int samples, uint64_t seed, double tol) {
    IdentityReport rep;
    if (!e.is_square() || k < 2) {
        return rep;
    }
    rep.power = approx_equal(power(e, k - 1), Matrix::identity(e.rows()), tol);
    rep.left = rep.right = true;
    rep.middle = k > 2;
    std::mt19937_64 rng(seed);
    for (int s = 0; s < samples; s++) {
        Matrix m = sample_shape(cls, rng);
        if (m.rows() != e.rows()) {
            throw DimensionError("identity and class dimensions differ");
        }
        rep.left &= approx_equal(product_with(e, m, k, k - 1), m, tol);
        rep.right &= approx_equal(product_with(e, m, k, 0), m, tol);
        for (int pos = 1; pos < k - 1; pos++) {
            rep.middle &= approx_equal(product_with(e, m, k, pos), m, tol);
        }
    }
    return rep;
}

Matrix IdentityFamily::make(const std::vector<double> &alpha) const {
    if ((int)alpha.size() != phases) {
        throw DimensionError(id + ": wrong number of phases");
    }
    size_t n = shape_dim(cls);
    Matrix m(n, n);
    for (size_t j = 0; j < positions.size(); j++) {
        m((size_t)positions[j].first, (size_t)positions[j].second) = std::polar(1.0, alpha[j]);
    }
    return m;
}

bool IdentityFamily::constraints_hold(const std::vector<double> &alpha, double tol) const {
    for (const auto &c : constraints) {
        double s = 0;
        for (auto [idx, w] : c) {
            s += w * alpha[(size_t)idx];
        }
        if (std::abs(std::polar(1.0, s) - 1.0) > tol) {
            return false;
        }
    }
    return true;
}

const std::vector<IdentityFamily> &identity_families() {
    using C = std::vector<std::vector<std::pair<int, int>>>;
    // positions list phase j at index j
    static const std::vector<IdentityFamily> v{
        {"is1", Shape::Nstar1, 3, 4, C{{{0, 2}}, {{3, 2}}, {{1, 1}, {2, 1}}}, {{0, 0}, {1, 2}, {2, 1}, {3, 3}}},
        {"is2", Shape::Nstar2, 3, 4, C{{{1, 2}}, {{2, 2}}, {{0, 1}, {3, 1}}}, {{0, 3}, {1, 1}, {2, 2}, {3, 0}}},
        {"ic1", Shape::Ncirc1, 5, 4, C{{{0, 1}, {1, 1}, {2, 1}, {3, 1}}}, {{0, 2}, {1, 0}, {2, 3}, {3, 1}}},
        {"ic2", Shape::Ncirc2, 5, 4, C{{{0, 1}, {1, 1}, {2, 1}, {3, 1}}}, {{0, 1}, {1, 3}, {2, 0}, {3, 2}}},
        {"is8a", Shape::Nstar1p, 3, 8, C{{{0, 2}}, {{2, 2}}, {{5, 2}}, {{7, 2}}, {{1, 1}, {6, 1}}, {{3, 1}, {4, 1}}},
         {{0, 0}, {1, 6}, {2, 2}, {3, 4}, {4, 3}, {5, 5}, {6, 1}, {7, 7}}},
        {"is8b", Shape::Nstar2p, 3, 8, C{{{0, 2}}, {{2, 2}}, {{5, 2}}, {{7, 2}}, {{1, 1}, {6, 1}}, {{3, 1}, {4, 1}}},
         {{1, 1}, {0, 7}, {3, 3}, {2, 5}, {5, 2}, {4, 4}, {7, 0}, {6, 6}}},
        {"ic8a", Shape::Ncirc1p, 3, 8, C{{{0, 2}}, {{3, 2}}, {{5, 2}}, {{6, 2}}, {{2, 1}, {7, 1}}, {{1, 1}, {4, 1}}},
         {{0, 0}, {1, 4}, {2, 7}, {3, 3}, {4, 1}, {5, 5}, {6, 6}, {7, 2}}},
        {"ic8b", Shape::Ncirc2p, 3, 8, C{{{0, 2}}, {{3, 2}}, {{5, 2}}, {{6, 2}}, {{2, 1}, {7, 1}}, {{1, 1}, {4, 1}}},
         {{1, 1}, {0, 5}, {3, 6}, {2, 2}, {5, 0}, {4, 4}, {7, 7}, {6, 3}}},
    };
    return v;
}

const IdentityFamily &identity_family(const std::string &id) {
    for (const auto &f : identity_families()) {
        if (f.id == id) {
            return f;
        }
    }
    throw UnknownId("unknown identity family: " + id);
}

std::vector<double> sample_identity_phases(const IdentityFamily &f, std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> u(-std::numbers::pi, std::numbers::pi);
    std::vector<double> a((size_t)f.phases, 0.0);
    std::vector<char> set((size_t)f.phases, 0);
    // the last index of each constraint absorbs it
    for (const auto &c : f.constraints) {
        double s = 0;
        for (size_t t = 0; t + 1 < c.size(); t++) {
            auto [idx, w] = c[t];
            if (!set[(size_t)idx]) {
                a[(size_t)idx] = u(rng);
                set[(size_t)idx] = 1;
            }
            s += w * a[(size_t)idx];
        }
        auto [last, w] = c.back();
        std::uniform_int_distribution<int> turn(0, w - 1);
        a[(size_t)last] = (2 * std::numbers::pi * turn(rng) - s) / w;
        set[(size_t)last] = 1;
    }
    for (size_t i = 0; i < a.size(); i++) {
        if (!set[i]) {
            a[i] = u(rng);
        }
    }
    return a;
}

Matrix i3c(int form, cplx a, cplx b, cplx c, cplx d) {
    switch (form) {
        case 0:
            return Matrix{{0, 1.0 / a, b, 0}, {a, 0, 0, -a * b / c}, {0, 0, 0, 1.0 / c}, {0, 0, c, 0}};
        case 1:
            return Matrix{{0, -a * b / c, 1.0 / c, 0}, {0, 0, 0, 1.0 / b}, {c, 0, 0, a}, {0, b, 0, 0}};
        case 2:
            return Matrix{{0, -a * b / c, (1.0 - a * d) / c, 0},
                          {-c * d / b, 0, 0, (1.0 - a * d) / b},
                          {c, 0, 0, a},
                          {0, b, d, 0}};
    }
    throw UnknownId("i3c form must be 0, 1 or 2");
}

Matrix PartialIdentityPattern::matrix() const {
    std::vector<cplx> d(mask.begin(), mask.end());
    return Matrix::diagonal(d);
}

std::string PartialIdentityPattern::str() const {
    std::ostringstream os;
    os << "diag(";
    for (size_t i = 0; i < mask.size(); i++) {
        os << (i ? "," : "") << mask[i];
    }
    os << ")";
    return os.str();
}

std::optional<PartialIdentityPattern> as_partial_identity(const Matrix &m, double tol) {
    if (!m.is_square()) {
        return std::nullopt;
    }
    PartialIdentityPattern p;
    p.dim = m.rows();
    for (size_t i = 0; i < m.rows(); i++) {
        for (size_t j = 0; j < m.cols(); j++) {
            cplx v = m(i, j);
            if (i != j) {
                if (std::abs(v) > tol) {
                    return std::nullopt;
                }
            } else if (std::abs(v) <= tol) {
                p.mask.push_back(0);
            } else if (std::abs(v - 1.0) <= tol) {
                p.mask.push_back(1);
            } else {
                return std::nullopt;
            }
        }
    }
    p.rank = (int)std::count(p.mask.begin(), p.mask.end(), 1);
    p.block = std::is_sorted(p.mask.begin(), p.mask.end(), std::greater<int>());
    return p;
}

PartialUnitarity partial_unitarity(const Matrix &m, double tol) {
    PartialUnitarity r;
    Matrix ms = conj_transpose(m);
    r.left = as_partial_identity(ms * m, tol);
    r.right = as_partial_identity(m * ms, tol);
    if (r.left && r.right) {
        r.orthogonal = true;
        for (size_t i = 0; i < r.left->mask.size(); i++) {
            r.orthogonal &= r.left->mask[i] * r.right->mask[i] == 0;
        }
    }
    return r;
}

cplx inner(const std::vector<cplx> &a, const std::vector<cplx> &b) {
    if (a.size() != b.size()) {
        throw DimensionError("inner product of vectors of different length");
    }
    cplx s = 0;
    for (size_t i = 0; i < a.size(); i++) {
        s += std::conj(a[i]) * b[i];
    }
    return s;
}

cplx partial_inner_product(const std::vector<cplx> &psi, const std::vector<cplx> &phi,
                           const PartialIdentityPattern &left, const PartialIdentityPattern &right) {
    if (psi.size() != left.dim || phi.size() != right.dim || left.dim != right.dim) {
        throw DimensionError("partial inner product dimension mismatch");
    }
    cplx s = 0;
    for (size_t i = 0; i < psi.size(); i++) {
        s += std::conj((double)left.mask[i] * psi[i]) * ((double)right.mask[i] * phi[i]);
    }
    return s;
}

}  // namespace bk
