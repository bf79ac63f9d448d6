#include "braidkit/gates.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <tuple>

#include "braidkit/errors.h"

namespace bk {

namespace {

constexpr double kPi = std::numbers::pi;
const cplx I1(0, 1);

cplx ex(double a) {
    return std::polar(1.0, a);
}

Matrix sp(size_t n, std::initializer_list<std::tuple<int, int, cplx>> es) {
    Matrix m(n, n);
    for (auto [i, j, v] : es) {
        m((size_t)i, (size_t)j) = v;
    }
    return m;
}

double s2(double t) {
    double s = std::sin(t / 2);
    return s * s;
}

double c2(double t) {
    double c = std::cos(t / 2);
    return c * c;
}

// x == y (mod period)
bool cong(double x, double y, double period, double tol) {
    return std::abs(std::remainder(x - y, period)) <= tol;
}

double wrap(double a) {
    double r = std::fmod(a, 2 * kPi);
    return r < 0 ? r + 2 * kPi : r;
}

void need_qubits(const std::vector<Bloch> &q, int n, const std::string &id) {
    if ((int)q.size() != n) {
        throw DimensionError(id + " acts on " + std::to_string(n) + " qubits, got " + std::to_string(q.size()) +
                             " states");
    }
}

}  // namespace

State bloch_state(Bloch b) {
    return {std::cos(b.theta / 2), ex(b.gamma) * std::sin(b.theta / 2)};
}

State product_state(const std::vector<State> &factors) {
    State v{1.0};
    for (const auto &f : factors) {
        State w;
        w.reserve(v.size() * f.size());
        for (cplx a : v) {
            for (cplx b : f) {
                w.push_back(a * b);
            }
        }
        v = std::move(w);
    }
    return v;
}

State product_state(const std::vector<Bloch> &qubits) {
    std::vector<State> f;
    for (auto b : qubits) {
        f.push_back(bloch_state(b));
    }
    return product_state(f);
}

State apply(const Matrix &u, const State &s) {
    if (u.cols() != s.size()) {
        throw DimensionError("gate and state sizes differ");
    }
    State r(u.rows());
    for (size_t i = 0; i < u.rows(); i++) {
        for (size_t j = 0; j < u.cols(); j++) {
            r[i] += u(i, j) * s[j];
        }
    }
    return r;
}

double norm(const State &s) {
    double t = 0;
    for (cplx a : s) {
        t += std::norm(a);
    }
    return std::sqrt(t);
}

double concurrence2(const State &s) {
    if (s.size() != 4) {
        throw DimensionError("concurrence2 needs a two-qubit state");
    }
    return 2 * std::abs(s[0] * s[3] - s[1] * s[2]);
}

cplx hyperdet3(const State &v) {
    if (v.size() != 8) {
        throw DimensionError("hyperdet3 needs a three-qubit state");
    }
    auto a = [&](int i, int j, int k) { return v[(size_t)(4 * i + 2 * j + k)]; };
    cplx d = a(0, 0, 0) * a(0, 0, 0) * a(1, 1, 1) * a(1, 1, 1) + a(0, 0, 1) * a(0, 0, 1) * a(1, 1, 0) * a(1, 1, 0) +
             a(0, 1, 0) * a(0, 1, 0) * a(1, 0, 1) * a(1, 0, 1) + a(1, 0, 0) * a(1, 0, 0) * a(0, 1, 1) * a(0, 1, 1);
    d -= 2.0 * (a(0, 0, 0) * a(0, 0, 1) * a(1, 1, 0) * a(1, 1, 1) + a(0, 0, 0) * a(0, 1, 0) * a(1, 0, 1) * a(1, 1, 1) +
                a(0, 0, 0) * a(0, 1, 1) * a(1, 0, 0) * a(1, 1, 1) + a(0, 0, 1) * a(0, 1, 0) * a(1, 0, 1) * a(1, 1, 0) +
                a(0, 0, 1) * a(0, 1, 1) * a(1, 0, 0) * a(1, 1, 0) + a(0, 1, 0) * a(0, 1, 1) * a(1, 0, 0) * a(1, 0, 1));
    d += 4.0 * (a(0, 0, 0) * a(0, 1, 1) * a(1, 0, 1) * a(1, 1, 0) + a(0, 0, 1) * a(0, 1, 0) * a(1, 0, 0) * a(1, 1, 1));
    return d;
}

double concurrence3(const State &s) {
    return 4 * std::abs(hyperdet3(s));
}

const std::vector<GateInfo> &gate_list() {
    static const std::vector<GateInfo> v{
        {"ua1", 2, "8-vertex star binary braiding gate", true, false},
        {"ua2", 2, "8-vertex circle binary braiding gate", false, false},
        {"ua3", 2, "4-vertex circle binary braiding gate", false, false},
        {"u8b1", 3, "8-vertex bisymmetric ternary gate, first series", true, true},
        {"u8b2", 3, "8-vertex bisymmetric ternary gate, second series", true, true},
        {"u8s1", 3, "8-vertex symmetric ternary gate, first series", true, true},
        {"u8s2", 3, "8-vertex symmetric ternary gate, second series", true, true},
        {"u16", 3, "16-vertex star ternary gate", true, false},
        {"ul", 0, "Minkowski n-ary gate on L qubits (GHZ generator)", false, false},
    };
    return v;
}

const GateInfo &gate_info(const std::string &id) {
    for (const auto &g : gate_list()) {
        if (g.id == id) {
            return g;
        }
    }
    throw UnknownId("unknown gate: " + id);
}

int gate_qubits(const std::string &id, const GateParams &p) {
    const auto &g = gate_info(id);
    return g.qubits ? g.qubits : p.L;
}

Matrix build_gate(const std::string &id, const GateParams &p) {
    gate_info(id);
    double a = p.alpha, b = p.beta;
    double s = p.sign >= 0 ? 1.0 : -1.0, k = p.kappa >= 0 ? 1.0 : -1.0;
    cplx ph = ex(a + b);
    if (id == "ua1") {
        return (1 / std::sqrt(2.0)) * sp(4, {{0, 0, ph},
                                             {0, 3, ex(2 * b)},
                                             {1, 1, ph},
                                             {1, 2, s * ph},
                                             {2, 1, -s * ph},
                                             {2, 2, ph},
                                             {3, 0, -ex(2 * a)},
                                             {3, 3, ph}});
    }
    if (id == "ua2") {
        double R = std::sqrt((std::sqrt(5.0) - 1) / 2);
        cplx q = ex(2 * a);
        return R * sp(4, {{0, 1, ph},
                          {0, 2, I1 * ph * R},
                          {1, 0, -q * R},
                          {1, 3, ph},
                          {2, 0, I1 * q},
                          {2, 3, I1 * ph * R},
                          {3, 1, -q * R},
                          {3, 2, I1 * q}});
    }
    if (id == "ua3") {
        cplx q = ex(2 * a);
        return sp(4, {{0, 2, ph}, {1, 0, q}, {2, 3, ph}, {3, 1, q}});
    }
    if (id == "u8b1") {
        return sp(8, {{0, 0, ph},
                      {2, 2, ph},
                      {5, 5, ph},
                      {7, 7, ph},
                      {1, 6, k * ex(2 * b)},
                      {3, 4, k * ex(2 * a)},
                      {4, 3, s * k * ex(2 * b)},
                      {6, 1, s * k * ex(2 * a)}});
    }
    if (id == "u8b2") {
        cplx c = k * ex(3 * (a + b));
        return sp(8, {{0, 7, ex(6 * a)},
                      {1, 1, c},
                      {3, 3, c},
                      {4, 4, c},
                      {6, 6, c},
                      {2, 5, ex(2 * (2 * a + b))},
                      {5, 2, s * ex(2 * (a + 2 * b))},
                      {7, 0, s * ex(6 * b)}});
    }
    if (id == "u8s1") {
        return sp(8, {{0, 0, ph},
                      {3, 3, ph},
                      {5, 5, ph},
                      {6, 6, ph},
                      {1, 4, k * ph},
                      {4, 1, s * k * ph},
                      {2, 7, ex(2 * b)},
                      {7, 2, s * ex(2 * a)}});
    }
    if (id == "u8s2") {
        return sp(8, {{0, 5, ex(2 * b)},
                      {1, 1, ph},
                      {2, 2, ph},
                      {4, 4, ph},
                      {7, 7, ph},
                      {3, 6, k * ph},
                      {5, 0, s * ex(2 * a)},
                      {6, 3, s * k * ph}});
    }
    if (id == "u16") {
        Matrix m(8, 8);
        for (size_t i = 0; i < 8; i++) {
            m(i, i) = ex(3 * a);
        }
        m(0, 7) = -1.0;
        m(1, 6) = -s * ex(2 * a);
        m(2, 5) = -ex(2 * a);
        m(3, 4) = -s * ex(4 * a);
        m(4, 3) = s * ex(2 * a);
        m(5, 2) = ex(4 * a);
        m(6, 1) = s * ex(4 * a);
        m(7, 0) = ex(6 * a);
        return (1 / std::sqrt(2.0)) * m;
    }
    // ul
    if (p.L < 2 || p.L > 9) {
        throw DimensionError("ul needs 2 <= L <= 9");
    }
    size_t N = (size_t)1 << p.L;
    Matrix m(N, N);
    double h = 1 / std::sqrt(2.0);
    for (size_t i = 0; i < N; i++) {
        m(i, i) = h;
        m(i, N - 1 - i) = i < N / 2 ? -h : h;
    }
    return m;
}

double transformed_concurrence(const std::string &id, const GateParams &p, const std::vector<Bloch> &qubits) {
    int n = gate_qubits(id, p);
    need_qubits(qubits, n, id);
    if (n != 2 && n != 3) {
        throw DimensionError("concurrence is defined for two or three qubits only");
    }
    State out = bk::apply(build_gate(id, p), product_state(qubits));
    return n == 2 ? concurrence2(out) : concurrence3(out);
}

bool has_closed_form(const std::string &id, const GateParams &p) {
    gate_info(id);
    if (id == "ua3" || id == "ul") {
        return false;
    }
    if ((id == "u8s1" || id == "u8s2") && p.sign < 0) {
        return false;
    }
    return true;
}

double circle_prefactor() {
    return std::pow(std::sqrt(5.0) - 1, 1.5) / std::sqrt(2.0);
}

double closed_form(const std::string &id, const GateParams &p, const std::vector<Bloch> &q) {
    if (!has_closed_form(id, p)) {
        throw UnknownId("no closed form for gate " + id + (p.sign < 0 ? " (lower)" : ""));
    }
    need_qubits(q, gate_qubits(id, p), id);
    double a = p.alpha, b = p.beta, s = p.sign >= 0 ? 1.0 : -1.0, k = p.kappa >= 0 ? 1.0 : -1.0;
    if (id == "ua1") {
        cplx f1 = ex(b + 2 * q[0].gamma) * s2(q[0].theta) + s * ex(a) * c2(q[0].theta);
        cplx f2 = ex(b + 2 * q[1].gamma) * s2(q[1].theta) - s * ex(a) * c2(q[1].theta);
        return std::abs(f1 * f2);
    }
    if (id == "ua2") {
        cplx f1 = ex(b + 2 * q[0].gamma) * s2(q[0].theta) - I1 * ex(a) * c2(q[0].theta);
        cplx f2 = ex(b + 2 * q[1].gamma) * s2(q[1].theta) - I1 * ex(a) * c2(q[1].theta);
        return circle_prefactor() * std::abs(f1 * f2);
    }
    if (id == "u16") {
        cplx E = ex(2 * a);
        cplx G[3];
        for (int i = 0; i < 3; i++) {
            G[i] = ex(2 * q[(size_t)i].gamma);
        }
        cplx f1 = E + s * G[0] + (E - s * G[0]) * std::cos(q[0].theta);
        cplx f2 = E - G[1] + (E + G[1]) * std::cos(q[1].theta);
        cplx f3 = E - s * G[2] + (E + s * G[2]) * std::cos(q[2].theta);
        return std::norm(f1 * f2 * f3) / 64;
    }
    if (id == "u8b1" || id == "u8b2") {
        double x = id == "u8b1" ? a : b, y = id == "u8b1" ? b : a;
        double sn = std::sin(q[0].theta) * std::sin(q[2].theta);
        cplx f = ex(2 * (y + q[1].gamma)) * s2(q[1].theta) - ex(2 * x) * c2(q[1].theta);
        return std::abs(sn * sn * f * f);
    }
    // u8s1 / u8s2, upper sign
    auto X = [&](const Bloch &bq) { return ex(b + 2 * bq.gamma) * s2(bq.theta) - k * ex(a) * c2(bq.theta); };
    double st = std::sin(q[1].theta);
    return st * st * std::norm(X(q[0])) * std::norm(X(q[2]));
}

std::vector<RadialSolution> circle_unitarity_solutions() {
    // u = r^2: u^4 + u^3 - 2u^2 - u + 1 = 0, and rx^2 = 1/u - u must be >= 0.
    auto f = [](double u) { return (((u + 1) * u - 2) * u - 1) * u + 1; };
    std::vector<RadialSolution> out;
    const int steps = 4000;
    const double lo = 1e-6, hi = 1.0 + 1e-6;
    double h = (hi - lo) / steps;
    for (int i = 0; i < steps; i++) {
        double a = lo + i * h, b = a + h;
        double fa = f(a), fb = f(b);
        if (fa == 0) {
            b = a;
        } else if (fa * fb > 0) {
            continue;
        }
        for (int it = 0; it < 200 && b - a > 0; it++) {
            double m = 0.5 * (a + b);
            if (f(a) * f(m) <= 0) {
                b = m;
            } else {
                a = m;
            }
        }
        double u = 0.5 * (a + b);
        double rx2 = 1 / u - u;
        if (rx2 < -1e-12) {
            continue;
        }
        double r = std::sqrt(u), rx = std::sqrt(std::max(0.0, rx2));
        // round-off at the exact roots u = 1 and u = (sqrt5-1)/2
        if (std::abs(rx * rx) < 1e-12) {
            rx = 0;
            r = 1;
        }
        RadialSolution s{rx, r, 0, 0};
        s.residual_norm = r * r * (rx * rx + r * r) - 1;
        s.residual_octic = std::pow(r, 8) + std::pow(r, 6) - 2 * std::pow(r, 4) + 1 - r * r;
        bool dup = false;
        for (const auto &o : out) {
            dup |= std::abs(o.r - s.r) < 1e-9;
        }
        if (!dup) {
            out.push_back(s);
        }
    }
    std::sort(out.begin(), out.end(), [](const auto &x, const auto &y) { return x.rx > y.rx; });
    return out;
}

namespace {

// theta_k = pi/2 and alpha - beta == 2 gamma_k - offset (mod 2 pi)
Relation equator_double(int k, double offset, const std::string &text) {
    Relation r;
    r.text = text;
    r.holds = [=](const GateParams &p, const std::vector<Bloch> &q, double tol) {
        return std::abs(q[(size_t)k].theta - kPi / 2) <= tol &&
               cong(p.alpha - p.beta, 2 * q[(size_t)k].gamma - offset, 2 * kPi, tol);
    };
    r.impose = [=](GateParams &p, std::vector<Bloch> &q) {
        q[(size_t)k].theta = kPi / 2;
        q[(size_t)k].gamma = wrap((p.alpha - p.beta + offset) / 2);
    };
    r.perturb = [](GateParams &p, std::vector<Bloch> &) { p.alpha += 0.5; };
    return r;
}

// theta_k = pi/2 and lhs(alpha, beta) == gamma_k + offset (mod pi)
Relation equator_single(int k, std::function<double(const GateParams &)> lhs, double offset, const std::string &text) {
    Relation r;
    r.text = text;
    r.holds = [=](const GateParams &p, const std::vector<Bloch> &q, double tol) {
        return std::abs(q[(size_t)k].theta - kPi / 2) <= tol && cong(lhs(p), q[(size_t)k].gamma + offset, kPi, tol);
    };
    r.impose = [=](GateParams &p, std::vector<Bloch> &q) {
        q[(size_t)k].theta = kPi / 2;
        q[(size_t)k].gamma = wrap(lhs(p) - offset);
    };
    r.perturb = [](GateParams &p, std::vector<Bloch> &) { p.alpha += 0.5; };
    return r;
}

Relation pole(int k, const std::string &text) {
    Relation r;
    r.text = text;
    r.holds = [=](const GateParams &, const std::vector<Bloch> &q, double tol) {
        double t = q[(size_t)k].theta;
        return std::abs(std::sin(t)) <= tol;
    };
    r.impose = [=](GateParams &, std::vector<Bloch> &q) { q[(size_t)k].theta = kPi; };
    r.perturb = [=](GateParams &, std::vector<Bloch> &q) { q[(size_t)k].theta -= 0.5; };
    return r;
}

}  // namespace

std::vector<Relation> locus_relations(const std::string &id, const GateParams &p) {
    gate_info(id);
    bool upper = p.sign >= 0;
    std::vector<Relation> v;
    auto amb = [](const GateParams &g) { return g.alpha - g.beta; };
    if (id == "ua1") {
        if (upper) {
            v.push_back(equator_double(0, kPi, "theta1 = pi/2, alpha - beta = 2 gamma1 - pi"));
            v.push_back(equator_double(1, 0, "theta2 = pi/2, alpha - beta = 2 gamma2"));
        } else {
            v.push_back(equator_double(0, 0, "theta1 = pi/2, alpha - beta = 2 gamma1"));
            v.push_back(equator_double(1, kPi, "theta2 = pi/2, alpha - beta = 2 gamma2 - pi"));
        }
    } else if (id == "ua2") {
        v.push_back(equator_double(0, kPi / 2, "theta1 = pi/2, alpha - beta = 2 gamma1 - pi/2"));
        v.push_back(equator_double(1, kPi / 2, "theta2 = pi/2, alpha - beta = 2 gamma2 - pi/2"));
    } else if (id == "ua3") {
        Relation r;
        r.text = "any parameters (never entangling)";
        r.holds = [](const GateParams &, const std::vector<Bloch> &, double) { return true; };
        r.impose = [](GateParams &, std::vector<Bloch> &) {};
        v.push_back(r);
    } else if (id == "u16") {
        auto al = [](const GateParams &g) { return g.alpha; };
        // the bracket with E + G needs the quarter-turn offset
        int plus = upper ? 0 : 2;
        for (int k = 0; k < 3; k++) {
            std::string q = std::to_string(k + 1);
            if (k == plus) {
                v.push_back(equator_single(k, al, kPi / 2, "theta" + q + " = pi/2, alpha = gamma" + q + " + pi/2 (mod pi)"));
            } else {
                v.push_back(equator_single(k, al, 0, "theta" + q + " = pi/2, alpha = gamma" + q + " (mod pi)"));
            }
        }
    } else if (id == "u8b1" || id == "u8b2") {
        v.push_back(pole(0, "theta1 in {0, pi}"));
        v.push_back(pole(2, "theta3 in {0, pi}"));
        if (id == "u8b1") {
            v.push_back(equator_single(1, amb, 0, "theta2 = pi/2, alpha - beta = gamma2 (mod pi)"));
        } else {
            auto bma = [](const GateParams &g) { return g.beta - g.alpha; };
            v.push_back(equator_single(1, bma, 0, "theta2 = pi/2, alpha - beta = -gamma2 (mod pi)"));
        }
    } else if (id == "u8s1" || id == "u8s2") {
        v.push_back(pole(1, "theta2 in {0, pi}"));
        if (upper) {
            double off = p.kappa >= 0 ? 0 : kPi;
            std::string tail = p.kappa >= 0 ? "" : " - pi";
            v.push_back(equator_double(0, off, "theta1 = pi/2, alpha - beta = 2 gamma1" + tail));
            v.push_back(equator_double(2, off, "theta3 = pi/2, alpha - beta = 2 gamma3" + tail));
        }
    }
    return v;
}

std::vector<Relation> nonentangling_locus(const std::string &id, const GateParams &p, const std::vector<Bloch> &qubits,
                                          double tol) {
    need_qubits(qubits, gate_qubits(id, p), id);
    std::vector<Relation> out;
    for (auto &r : locus_relations(id, p)) {
        if (r.holds(p, qubits, tol)) {
            out.push_back(std::move(r));
        }
    }
    return out;
}

std::vector<GridHit> locus_grid_search(const std::string &id, const GateParams &p, const std::vector<Bloch> &qubits,
                                       int points, double tol) {
    int n = gate_qubits(id, p);
    need_qubits(qubits, n, id);
    std::vector<GridHit> hits;
    for (int k = 0; k < n; k++) {
        for (double th : {kPi / 2, kPi}) {
            for (int i = 0; i < points; i++) {
                double d = 2 * kPi * i / points;
                GateParams g = p;
                g.alpha = g.beta + d;
                auto q = qubits;
                q[(size_t)k].theta = th;
                double v = transformed_concurrence(id, g, q);
                if (v <= tol) {
                    hits.push_back({k, th, d, v});
                }
            }
        }
    }
    return hits;
}

}  // namespace bk
