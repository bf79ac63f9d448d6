#include "braidkit/catalog.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "braidkit/braid.h"
#include "braidkit/errors.h"

namespace bk {

const char *equation_name(Equation e) {
    switch (e) {
        case Equation::full:
            return "full";
        case Equation::partial13:
            return "partial-13";
        case Equation::none:
            return "none";
    }
    return "?";
}

int Family::arity_at(const Params &p) const {
    if (arity) {
        return arity;
    }
    return (int)std::lround(p.at("n").real());
}

int Family::claimed_rank(const Params &p, int variant) const {
    return rank_at ? rank_at(p, variant) : rank;
}

Equation Family::declared_equation(const Params &p, int variant) const {
    return equation_at ? equation_at(p, variant) : equation;
}

namespace {

constexpr double kPi = std::numbers::pi;
const cplx I1(0, 1);

struct Entry {
    int i, j;
    cplx v;
};

Matrix sp(size_t n, std::initializer_list<Entry> es) {
    Matrix m(n, n);
    for (const auto &e : es) {
        m((size_t)e.i, (size_t)e.j) = e.v;
    }
    return m;
}

// 1-based column of the 1 in each row, as the permutation matrices are printed.
Matrix perm_rows(std::initializer_list<int> cols) {
    std::vector<int> c(cols);
    Matrix m(c.size(), c.size());
    for (size_t r = 0; r < c.size(); r++) {
        m(r, (size_t)(c[r] - 1)) = 1;
    }
    return m;
}

double sg(int variant) {
    return variant == 0 ? 1.0 : -1.0;
}

cplx ex(double a) {
    return std::polar(1.0, a);
}

Constraint nonzero(const std::string &name) {
    return {name + " != 0", [name](const Params &p) { return std::abs(p.at(name)); }};
}

Constraint differs(const std::string &text, std::function<cplx(const Params &)> f, bool hard = true) {
    return {text, [f](const Params &p) { return std::abs(f(p)); }, hard};
}

std::vector<EigenClaim> claims(std::initializer_list<EigenClaim> c) {
    return std::vector<EigenClaim>(c);
}

const std::vector<std::string> kSigns{"upper", "lower"};
const std::vector<std::string> kPlain{"default"};
const std::vector<std::string> kShapes{"first", "second"};

std::vector<Family> make_registry() {
    std::vector<Family> r;
    auto add = [&](Family f) { r.push_back(std::move(f)); };

    // ---- binary permutation and parameter-permutation solutions, 4x4 ----
    {
        Family f;
        f.id = "yb.perm.bisymm";
        f.anchor = "cp";
        f.description = "bisymmetric 4x4 permutation solutions (SWAP and its antidiagonal partner)";
        f.vertices = 4;
        f.variants = kShapes;
        f.rank = 4;
        f.make = [](const Params &, int v) {
            return v == 0 ? perm_rows({1, 3, 2, 4}) : perm_rows({4, 2, 3, 1});
        };
        f.trace = [](const Params &, int) { return cplx(2); };
        f.det = [](const Params &, int) { return cplx(-1); };
        f.eigen = [](const Params &, int) { return claims({{1.0, 3}, {-1.0, 1}}); };
        add(f);
    }
    {
        Family f;
        f.id = "yb.perm.circ";
        f.anchor = "cpc";
        f.description = "circle 4x4 permutation solutions (4-cycles)";
        f.vertices = 4;
        f.variants = kShapes;
        f.rank = 4;
        f.make = [](const Params &, int v) {
            return v == 0 ? perm_rows({2, 4, 1, 3}) : perm_rows({3, 1, 4, 2});
        };
        f.trace = [](const Params &, int) { return cplx(0); };
        f.det = [](const Params &, int) { return cplx(-1); };
        f.eigen = [](const Params &, int) { return claims({{1.0, 1}, {I1, 1}, {-1.0, 1}, {-I1, 1}}); };
        add(f);
    }
    {
        Family f;
        f.id = "yb.pp.star";
        f.anchor = "cp1";
        f.description = "star 4-vertex parameter-permutation solutions";
        f.vertices = 4;
        f.params = {"x", "y", "z", "t"};
        f.constraints = {nonzero("x"), nonzero("y"), nonzero("z"), nonzero("t")};
        f.constraints.push_back({"x = t (second shape)", [](const Params &p) {
                                     // only binding for the second shape, see make()
                                     return 1.0 + 0 * std::abs(p.at("x"));
                                 }});
        f.variants = kShapes;
        f.rank = 4;
        f.make = [](const Params &p, int v) {
            cplx x = p.at("x"), y = p.at("y"), z = p.at("z"), t = p.at("t");
            if (v == 0) {
                return sp(4, {{0, 0, x}, {1, 2, y}, {2, 1, z}, {3, 3, t}});
            }
            if (std::abs(x - t) > 1e-12 * std::max(1.0, std::abs(x))) {
                throw ConstraintViolation("yb.pp.star second shape needs x = t");
            }
            return sp(4, {{0, 3, y}, {1, 1, x}, {2, 2, t}, {3, 0, z}});
        };
        f.trace = [](const Params &p, int) { return p.at("x") + p.at("t"); };
        f.det = [](const Params &p, int) { return -p.at("x") * p.at("y") * p.at("z") * p.at("t"); };
        f.eigen = [](const Params &p, int) {
            cplx s = std::sqrt(p.at("y") * p.at("z"));
            return claims({{p.at("x"), 1}, {p.at("t"), 1}, {s, 1}, {-s, 1}});
        };
        add(f);
    }
    {
        Family f;
        f.id = "yb.pp.circ";
        f.anchor = "cp2";
        f.description = "circle 4-vertex parameter-permutation solutions";
        f.vertices = 4;
        f.params = {"x", "y"};
        f.constraints = {nonzero("x"), nonzero("y")};
        f.variants = kShapes;
        f.rank = 4;
        f.make = [](const Params &p, int v) {
            cplx x = p.at("x"), y = p.at("y");
            if (v == 0) {
                return sp(4, {{0, 2, x}, {1, 0, y}, {2, 3, x}, {3, 1, y}});
            }
            return sp(4, {{0, 1, x}, {1, 3, x}, {2, 0, y}, {3, 2, y}});
        };
        f.trace = [](const Params &, int) { return cplx(0); };
        f.det = [](const Params &p, int) {
            cplx x = p.at("x"), y = p.at("y");
            return -x * x * y * y;
        };
        f.eigen = [](const Params &p, int) {
            cplx s = std::sqrt(p.at("x") * p.at("y"));
            return claims({{s, 1}, {-s, 1}, {I1 * s, 1}, {-I1 * s, 1}});
        };
        add(f);
    }

    // ---- star / circle 8-vertex binary solutions ----
    {
        Family f;
        f.id = "yb.star8.c24";
        f.anchor = "c24";
        f.description = "invertible star 8-vertex solution, two parameters";
        f.vertices = 8;
        f.params = {"x", "y"};
        f.constraints = {nonzero("x"), nonzero("y")};
        f.variants = kSigns;
        f.rank = 4;
        f.make = [](const Params &p, int v) {
            cplx x = p.at("x"), y = p.at("y"), s = sg(v);
            return sp(4, {{0, 0, x * y},
                          {0, 3, y * y},
                          {1, 1, x * y},
                          {1, 2, s * x * y},
                          {2, 1, -s * x * y},
                          {2, 2, x * y},
                          {3, 0, -x * x},
                          {3, 3, x * y}});
        };
        f.trace = [](const Params &p, int) { return 4.0 * p.at("x") * p.at("y"); };
        f.det = [](const Params &p, int) { return 4.0 * std::pow(p.at("x") * p.at("y"), 4); };
        f.eigen = [](const Params &p, int) {
            cplx xy = p.at("x") * p.at("y");
            return claims({{(1.0 + I1) * xy, 2}, {(1.0 - I1) * xy, 2}});
        };
        add(f);
    }
    {
        Family f;
        f.id = "yb.star8.c34";
        f.anchor = "c34";
        f.description = "invertible star 8-vertex solution, three parameters";
        f.vertices = 8;
        f.params = {"x", "y", "z"};
        f.constraints = {nonzero("y"), differs("z != x", [](const Params &p) { return p.at("z") - p.at("x"); }),
                         differs("z != -x", [](const Params &p) { return p.at("z") + p.at("x"); })};
        f.variants = kSigns;
        f.rank = 4;
        f.make = [](const Params &p, int v) {
            cplx x = p.at("x"), y = p.at("y"), z = p.at("z"), s = sg(v);
            return sp(4, {{0, 0, x * y},
                          {0, 3, y * y},
                          {1, 1, z * y},
                          {1, 2, s * x * y},
                          {2, 1, s * x * y},
                          {2, 2, z * y},
                          {3, 0, z * z},
                          {3, 3, x * y}});
        };
        f.trace = [](const Params &p, int) { return 2.0 * p.at("y") * (p.at("x") + p.at("z")); };
        // printed with the opposite sign
        f.det = [](const Params &p, int) {
            cplx x = p.at("x"), y = p.at("y"), z = p.at("z");
            return -std::pow(y, 4) * std::pow(z * z - x * x, 2);
        };
        f.eigen = [](const Params &p, int) {
            cplx x = p.at("x"), y = p.at("y"), z = p.at("z");
            return claims({{y * (x - z), 1}, {-y * (x - z), 1}, {y * (x + z), 2}});
        };
        add(f);
    }
    {
        Family f;
        f.id = "yb.star8.c34y";
        f.anchor = "c34y";
        f.description = "irrational invertible star 8-vertex solution";
        f.vertices = 8;
        f.params = {"x", "y", "z"};
        f.constraints = {nonzero("y"), differs("z != x", [](const Params &p) { return p.at("z") - p.at("x"); })};
        f.variants = kSigns;
        f.rank = 4;
        f.make = [](const Params &p, int v) {
            cplx x = p.at("x"), y = p.at("y"), z = p.at("z"), s = sg(v);
            cplx r = std::sqrt((x * x + z * z) / 2.0);
            cplx m = (x + z) * y / 2.0;
            return sp(4, {{0, 0, x * y},
                          {0, 3, y * y},
                          {1, 1, m},
                          {1, 2, s * y * r},
                          {2, 1, s * y * r},
                          {2, 2, m},
                          {3, 0, (x + z) * (x + z) / 4.0},
                          {3, 3, y * z}});
        };
        f.trace = [](const Params &p, int) { return 2.0 * p.at("y") * (p.at("x") + p.at("z")); };
        f.det = [](const Params &p, int) {
            cplx x = p.at("x"), y = p.at("y"), z = p.at("z");
            return std::pow(y, 4) * std::pow(x - z, 4) / 16.0;
        };
        f.eigen = [](const Params &p, int) {
            cplx x = p.at("x"), y = p.at("y"), z = p.at("z");
            cplx w = std::sqrt(2.0) * std::sqrt(x * x + z * z);
            return claims({{y * (x + z - w) / 2.0, 2}, {y * (x + z + w) / 2.0, 2}});
        };
        add(f);
    }
    {
        Family f;
        f.id = "yb.star8.c22";
        f.anchor = "c22";
        f.description = "non-invertible star 8-vertex solution of rank 2";
        f.vertices = 8;
        f.params = {"x", "y"};
        f.constraints = {nonzero("x"), nonzero("y")};
        f.variants = kSigns;
        f.rank = 2;
        f.make = [](const Params &p, int v) {
            cplx x = p.at("x"), y = p.at("y"), s = sg(v);
            return sp(4, {{0, 0, x * y},
                          {0, 3, y * y},
                          {1, 1, x * y},
                          {1, 2, s * x * y},
                          {2, 1, s * x * y},
                          {2, 2, x * y},
                          {3, 0, x * x},
                          {3, 3, x * y}});
        };
        f.trace = [](const Params &p, int) { return 4.0 * p.at("x") * p.at("y"); };
        f.det = [](const Params &, int) { return cplx(0); };
        f.eigen = [](const Params &p, int) { return claims({{2.0 * p.at("x") * p.at("y"), 2}, {0.0, 2}}); };
        add(f);
    }
    {
        Family f;
        f.id = "yb.circ8.c4c";
        f.anchor = "c4c";
        f.description = "invertible traceless circle 8-vertex solution";
        f.vertices = 8;
        f.params = {"x", "y", "z"};
        f.constraints = {nonzero("y"), nonzero("z"),
                         differs("z != x", [](const Params &p) { return p.at("z") - p.at("x"); }),
                         differs("z != -x", [](const Params &p) { return p.at("z") + p.at("x"); })};
        f.variants = kPlain;
        f.rank = 4;
        f.make = [](const Params &p, int) {
            cplx x = p.at("x"), y = p.at("y"), z = p.at("z");
            return sp(4, {{0, 1, x * y},
                          {0, 2, y * z},
                          {1, 0, z * z},
                          {1, 3, x * y},
                          {2, 0, x * z},
                          {2, 3, y * z},
                          {3, 1, z * z},
                          {3, 2, x * z}});
        };
        f.trace = [](const Params &, int) { return cplx(0); };
        // printed as y^2 z^2 (z^2 - x^2), which does not match the matrix
        f.det = [](const Params &p, int) {
            cplx x = p.at("x"), y = p.at("y"), z = p.at("z");
            return -y * y * z * z * std::pow(x * x - z * z, 2);
        };
        f.eigen = [](const Params &p, int) {
            cplx x = p.at("x"), y = p.at("y"), z = p.at("z");
            cplx a = std::sqrt(-y * z) * (x - z), b = std::sqrt(y * z) * (x + z);
            return claims({{a, 1}, {-a, 1}, {b, 1}, {-b, 1}});
        };
        add(f);
    }
    {
        Family f;
        f.id = "yb.circ8.c2c";
        f.anchor = "c2c";
        f.description = "non-invertible circle 8-vertex solution of rank 2 (all-plus signs)";
        f.vertices = 8;
        f.params = {"x", "y"};
        f.constraints = {nonzero("x"), nonzero("y")};
        f.variants = kPlain;
        f.rank = 2;
        f.make = [](const Params &p, int) {
            cplx x = p.at("x"), y = p.at("y");
            return sp(4, {{0, 1, y}, {0, 2, y}, {1, 0, x}, {1, 3, y}, {2, 0, x}, {2, 3, y}, {3, 1, x}, {3, 2, x}});
        };
        f.trace = [](const Params &, int) { return cplx(0); };
        f.det = [](const Params &, int) { return cplx(0); };
        f.eigen = [](const Params &p, int) {
            cplx s = 2.0 * std::sqrt(p.at("x") * p.at("y"));
            return claims({{s, 1}, {-s, 1}, {0.0, 2}});
        };
        add(f);
    }

    // ---- triangle 9- and 10-vertex solutions ----
    auto tri9 = [&](const std::string &id, std::function<Matrix(cplx, cplx, cplx, cplx)> mk, bool four) {
        Family f;
        f.id = id;
        f.anchor = "c9";
        f.description = "upper-triangular 9-vertex solution";
        f.vertices = 9;
        f.params = four ? std::vector<std::string>{"x", "y", "z", "s"} : std::vector<std::string>{"x", "y", "z"};
        f.constraints = {nonzero("x")};
        if (id == "yb.tri9.v3") {
            f.constraints.push_back(nonzero("y"));
        }
        f.variants = kPlain;
        f.rank = 4;
        f.make = [mk, four](const Params &p, int) {
            return mk(p.at("x"), p.at("y"), p.at("z"), four ? p.at("s") : cplx(0));
        };
        f.trace = [](const Params &p, int) { return 2.0 * p.at("x"); };
        f.det = [](const Params &p, int) { return -std::pow(p.at("x"), 4); };
        f.eigen = [](const Params &p, int) { return claims({{p.at("x"), 3}, {-p.at("x"), 1}}); };
        add(f);
    };
    tri9(
        "yb.tri9.v1",
        [](cplx x, cplx y, cplx z, cplx s) {
            return Matrix{{x, y, z, s}, {0, 0, x, y}, {0, x, 0, z}, {0, 0, 0, x}};
        },
        true);
    tri9(
        "yb.tri9.v2",
        [](cplx x, cplx y, cplx z, cplx) {
            return Matrix{{x, y, y, z}, {0, 0, -x, -y}, {0, -x, 0, -y}, {0, 0, 0, x}};
        },
        false);
    tri9(
        "yb.tri9.v3",
        [](cplx x, cplx y, cplx z, cplx) {
            return Matrix{{x, y, -y, z}, {0, 0, x, -z * x / y}, {0, x, 0, z * x / y}, {0, 0, 0, x}};
        },
        false);
    {
        Family f;
        f.id = "yb.tri9.f2";
        f.anchor = "9-vert,2";
        f.description = "9-vertex solution with fractions, first form";
        f.vertices = 9;
        f.params = {"x", "y", "z"};
        f.constraints = {nonzero("x"), nonzero("y"), differs("z != 3y^2/(4x)", [](const Params &p) {
                             cplx x = p.at("x"), y = p.at("y"), z = p.at("z");
                             return 4.0 * x * z - 3.0 * y * y;
                         })};
        f.variants = kPlain;
        f.rank = 4;
        f.make = [](const Params &p, int) {
            cplx x = p.at("x"), y = p.at("y"), z = p.at("z");
            cplx e = y - 2.0 * x * z / y;
            return Matrix{{x, y, y, z}, {0, 0, -x, e}, {0, -x, 0, e}, {0, 0, 0, x * (4.0 * x * z / (y * y) - 3.0)}};
        };
        f.trace = [](const Params &p, int) {
            cplx x = p.at("x"), y = p.at("y"), z = p.at("z");
            return 2.0 * x * (2.0 * x * z - y * y) / (y * y);
        };
        f.det = [](const Params &p, int) {
            cplx x = p.at("x"), y = p.at("y"), z = p.at("z");
            return std::pow(x, 4) * (3.0 - 4.0 * x * z / (y * y));
        };
        f.eigen = [](const Params &p, int) {
            cplx x = p.at("x"), y = p.at("y"), z = p.at("z");
            return claims({{x, 2}, {-x, 1}, {x * (4.0 * x * z / (y * y) - 3.0), 1}});
        };
        add(f);
    }
    {
        Family f;
        f.id = "yb.tri9.f3";
        f.anchor = "9-vert,3";
        f.description = "9-vertex solution with fractions, second form";
        f.vertices = 9;
        f.params = {"x", "y", "z"};
        f.constraints = {nonzero("x"), nonzero("y"), differs("z != y^2/(4x)", [](const Params &p) {
                             cplx x = p.at("x"), y = p.at("y"), z = p.at("z");
                             return 4.0 * x * z - y * y;
                         })};
        f.variants = kPlain;
        f.rank = 4;
        f.make = [](const Params &p, int) {
            cplx x = p.at("x"), y = p.at("y"), z = p.at("z");
            return Matrix{{x, y, -y, z},
                          {0, 0, -x, 2.0 * z * x / y + y},
                          {0, 3.0 * x, 0, 2.0 * z * x / y - y},
                          {0, 0, 0, 4.0 * z * x * x / (y * y) + x}};
        };
        f.trace = [](const Params &p, int) {
            cplx x = p.at("x"), y = p.at("y"), z = p.at("z");
            return 2.0 * x * (1.0 + 2.0 * x * z / (y * y));
        };
        f.det = [](const Params &p, int) {
            cplx x = p.at("x"), y = p.at("y"), z = p.at("z");
            return 3.0 * std::pow(x, 4) * (4.0 * z * x / (y * y) + 1.0);
        };
        f.eigen = [](const Params &p, int) {
            cplx x = p.at("x"), y = p.at("y"), z = p.at("z");
            cplx r3 = I1 * std::sqrt(3.0) * x;
            return claims({{x, 1}, {r3, 1}, {-r3, 1}, {x * (1.0 + 4.0 * z * x / (y * y)), 1}});
        };
        add(f);
    }
    {
        Family f;
        f.id = "yb.tri9.p4";
        f.anchor = "9-vert,par=4";
        f.description = "4-parameter 9-vertex solution";
        f.vertices = 9;
        f.params = {"x", "y", "z", "s"};
        f.constraints = {nonzero("x"), nonzero("z"),
                         differs("y != z/2", [](const Params &p) { return 2.0 * p.at("y") - p.at("z"); })};
        f.variants = kPlain;
        f.rank = 4;
        f.make = [](const Params &p, int) {
            cplx x = p.at("x"), y = p.at("y"), z = p.at("z"), s = p.at("s");
            return Matrix{{x, y, z, s},
                          {0, 0, -x, y - 2.0 * s * x / z},
                          {0, x - 2.0 * x * y / z, 0, z - 2.0 * s * x / z},
                          {0, 0, 0, x * (4.0 * s * x - z * (2.0 * y + z)) / (z * z)}};
        };
        f.trace = [](const Params &p, int) {
            cplx x = p.at("x"), y = p.at("y"), z = p.at("z"), s = p.at("s");
            return 2.0 * x * (2.0 * s * x - y * z) / (z * z);
        };
        f.det = [](const Params &p, int) {
            cplx x = p.at("x"), y = p.at("y"), z = p.at("z"), s = p.at("s");
            return std::pow(x, 4) * (2.0 * y - z) * (z * (2.0 * y + z) - 4.0 * s * x) / std::pow(z, 3);
        };
        f.eigen = [](const Params &p, int) {
            cplx x = p.at("x"), y = p.at("y"), z = p.at("z"), s = p.at("s");
            cplx r = x * std::sqrt(2.0 * y / z - 1.0);
            return claims({{x, 1}, {r, 1}, {-r, 1}, {x * (4.0 * s * x - z * (2.0 * y + z)) / (z * z), 1}});
        };
        add(f);
    }
    {
        Family f;
        f.id = "yb.tri9.p5";
        f.anchor = "9-vert,par=5";
        f.description = "5-parameter 9-vertex solution";
        f.vertices = 9;
        f.params = {"x", "y", "z", "s", "t"};
        f.constraints = {nonzero("x"), nonzero("z"), nonzero("t")};
        f.variants = kPlain;
        f.rank = -1;
        f.make = [](const Params &p, int) {
            cplx x = p.at("x"), y = p.at("y"), z = p.at("z"), s = p.at("s"), t = p.at("t");
            cplx d = (s * (t - x) * (t - x) + t * z * (y + z) - x * y * z) / (z * z);
            return Matrix{{x, y, z, s},
                          {0, 0, t, s * (t - x) / z + y},
                          {0, y * (t - x) / z + x, 0, s * (t - x) / z + z},
                          {0, 0, 0, d}};
        };
        f.trace = [](const Params &p, int) {
            cplx x = p.at("x"), y = p.at("y"), z = p.at("z"), s = p.at("s"), t = p.at("t");
            return (s * t * t + s * x * x + t * z * z + x * z * z - 2.0 * s * t * x + t * y * z - x * y * z) / (z * z);
        };
        f.det = [](const Params &p, int) {
            cplx x = p.at("x"), y = p.at("y"), z = p.at("z"), s = p.at("s"), t = p.at("t");
            return x * t * (x * (y - z) - t * y) * (s * (t - x) * (t - x) + t * z * (y + z) - x * y * z) /
                   std::pow(z, 3);
        };
        f.eigen = [](const Params &p, int) {
            cplx x = p.at("x"), y = p.at("y"), z = p.at("z"), s = p.at("s"), t = p.at("t");
            cplx r = std::sqrt(t / z * (t * y - x * y + x * z));
            cplx d = (s * t * t - 2.0 * s * t * x + t * z * z + y * t * z + s * x * x - y * x * z) / (z * z);
            return claims({{x, 1}, {r, 1}, {-r, 1}, {d, 1}});
        };
        add(f);
    }
    {
        Family f;
        f.id = "yb.tri10";
        f.anchor = "c10";
        f.description = "3-parameter 10-vertex solution";
        f.vertices = 10;
        f.params = {"x", "y", "z"};
        f.constraints = {nonzero("x")};
        f.variants = kPlain;
        f.rank = -1;
        f.make = [](const Params &p, int) {
            cplx x = p.at("x"), y = p.at("y"), z = p.at("z");
            return Matrix{{x, y, y, y * y / x}, {0, 0, -x, -y}, {0, -x, 0, -y}, {z, 0, 0, x}};
        };
        f.trace = [](const Params &p, int) { return 2.0 * p.at("x"); };
        f.det = [](const Params &p, int) {
            cplx x = p.at("x"), y = p.at("y"), z = p.at("z");
            return -x * (x * x * x + z * y * y);
        };
        f.eigen = [](const Params &p, int) {
            cplx x = p.at("x"), y = p.at("y"), z = p.at("z");
            cplx r = std::sqrt(x * x + z * y * y / x);
            return claims({{x, 2}, {r, 1}, {-r, 1}});
        };
        add(f);
    }
    {
        Family f;
        f.id = "aux.c4x";
        f.anchor = "c4x";
        f.description = "x * SWAP, conjugation target of the third 9-vertex solution";
        f.vertices = 4;
        f.params = {"x"};
        f.constraints = {nonzero("x")};
        f.variants = kPlain;
        f.rank = 4;
        f.make = [](const Params &p, int) {
            cplx x = p.at("x");
            return sp(4, {{0, 0, x}, {1, 2, x}, {2, 1, x}, {3, 3, x}});
        };
        add(f);
    }
    {
        Family f;
        f.id = "aux.c4";
        f.anchor = "c4";
        f.description = "4-vertex conjugation target of the 10-vertex solution";
        f.vertices = 4;
        f.params = {"x", "y", "z"};
        f.constraints = {nonzero("x")};
        f.variants = kPlain;
        f.make = [](const Params &p, int) {
            cplx x = p.at("x"), y = p.at("y"), z = p.at("z");
            return sp(4, {{0, 0, x}, {1, 2, x + y * y * z / (x * x)}, {2, 1, x}, {3, 3, x}});
        };
        add(f);
    }

    // ---- partial unitary examples ----
    auto angle_sampler = [](std::vector<std::string> names) {
        return [names](std::mt19937_64 &rng, int) {
            std::uniform_real_distribution<double> u(-kPi, kPi);
            Params p;
            for (const auto &n : names) {
                p[n] = u(rng);
            }
            return p;
        };
    };
    {
        Family f;
        f.id = "aux.m2";
        f.anchor = "M(2)";
        f.description = "left 2-partial unitary rank-2 solution";
        f.vertices = 4;
        f.params = {"alpha", "beta"};
        f.variants = kPlain;
        f.rank = 2;
        f.make = [](const Params &p, int) {
            double a = p.at("alpha").real(), b = p.at("beta").real();
            double s = 1 / std::sqrt(2.0);
            return sp(4, {{0, 3, s * ex(a)}, {1, 1, s * ex(b)}, {2, 1, s * ex(b)}, {3, 3, s * ex(b)}});
        };
        f.sampler = angle_sampler(f.params);
        add(f);
    }
    {
        Family f;
        f.id = "aux.m3";
        f.anchor = "M(3)";
        f.description = "3-partial unitary rank-3 matrix (not a braid solution)";
        f.vertices = 3;
        f.params = {"alpha", "beta", "gamma"};
        f.variants = kPlain;
        f.rank = 3;
        f.equation = Equation::none;
        f.make = [](const Params &p, int) {
            double a = p.at("alpha").real(), b = p.at("beta").real(), g = p.at("gamma").real();
            return sp(4, {{1, 1, ex(b)}, {2, 3, ex(g)}, {3, 0, ex(a)}});
        };
        f.sampler = angle_sampler(f.params);
        add(f);
    }
    {
        Family f;
        f.id = "aux.unil";
        f.anchor = "U_nil(2)";
        f.description = "zero-norm partial unitary rank-2 matrix";
        f.vertices = 2;
        f.params = {"alpha", "beta"};
        f.variants = kPlain;
        f.rank = 2;
        f.equation = Equation::none;
        f.make = [](const Params &p, int) {
            double a = p.at("alpha").real(), b = p.at("beta").real();
            return sp(4, {{1, 3, ex(b)}, {2, 0, ex(a)}});
        };
        f.sampler = angle_sampler(f.params);
        add(f);
    }

    // ---- ternary permutation solutions ----
    auto tperm = [&](const std::string &id, std::initializer_list<int> rows) {
        Family f;
        f.id = id;
        f.anchor = id.find("bisymm") != std::string::npos ? "cp8b" : "cp8s";
        f.description = "8x8 permutation solution of the ternary braid equations";
        f.arity = 3;
        f.dim = 8;
        f.vertices = 8;
        f.variants = kPlain;
        f.rank = 8;
        Matrix m = perm_rows(rows);
        f.make = [m](const Params &, int) { return m; };
        f.trace = [](const Params &, int) { return cplx(4); };
        f.det = [](const Params &, int) { return cplx(1); };
        // printed as {1}^4 {-1}^4, which contradicts trace 4
        f.eigen = [](const Params &, int) { return claims({{1.0, 6}, {-1.0, 2}}); };
        add(f);
    };
    tperm("tb.perm.bisymm1", {1, 7, 3, 5, 4, 6, 2, 8});
    tperm("tb.perm.bisymm2", {8, 2, 6, 4, 5, 3, 7, 1});
    tperm("tb.perm.symm1", {1, 5, 8, 4, 2, 6, 7, 3});
    tperm("tb.perm.symm2", {6, 2, 3, 7, 5, 1, 4, 8});

    // ---- ternary parameter-permutation series ----
    auto tpp = [&](const std::string &id, const std::string &anchor,
                   std::function<Matrix(cplx, cplx, double)> mk, std::function<cplx(cplx, cplx, double)> tr,
                   std::function<cplx(cplx, cplx)> dt, std::function<std::vector<EigenClaim>(cplx, cplx, double)> ev) {
        Family f;
        f.id = id;
        f.anchor = anchor;
        f.description = "8-vertex two-parameter ternary solution";
        f.arity = 3;
        f.dim = 8;
        f.vertices = 8;
        f.params = {"x", "y"};
        f.constraints = {nonzero("x"), nonzero("y")};
        f.variants = kSigns;
        f.rank = 8;
        f.make = [mk](const Params &p, int v) { return mk(p.at("x"), p.at("y"), sg(v)); };
        f.trace = [tr](const Params &p, int v) { return tr(p.at("x"), p.at("y"), sg(v)); };
        f.det = [dt](const Params &p, int) { return dt(p.at("x"), p.at("y")); };
        f.eigen = [ev](const Params &p, int v) { return ev(p.at("x"), p.at("y"), sg(v)); };
        add(f);
    };
    auto tr4xy = [](cplx x, cplx y, double) { return 4.0 * x * y; };
    auto d8 = [](cplx x, cplx y) { return std::pow(x * y, 8); };
    auto d24 = [](cplx x, cplx y) { return std::pow(x * y, 24); };
    auto e62 = [](cplx x, cplx y, double) { return claims({{x * y, 6}, {-x * y, 2}}); };
    auto e4i = [](cplx x, cplx y, double) { return claims({{x * y, 4}, {I1 * x * y, 2}, {-I1 * x * y, 2}}); };
    tpp(
        "tb.star8.b11", "b11",
        [](cplx x, cplx y, double s) {
            cplx d = x * y;
            return sp(8, {{0, 0, d},
                          {2, 2, d},
                          {5, 5, d},
                          {7, 7, d},
                          {1, 6, s * y * y},
                          {3, 4, s * x * x},
                          {4, 3, s * y * y},
                          {6, 1, s * x * x}});
        },
        tr4xy, d8, e62);
    tpp(
        "tb.star8.b12", "b12",
        [](cplx x, cplx y, double s) {
            cplx d = x * y;
            return sp(8, {{0, 0, d},
                          {2, 2, d},
                          {5, 5, d},
                          {7, 7, d},
                          {1, 6, s * y * y},
                          {3, 4, s * x * x},
                          {4, 3, -s * y * y},
                          {6, 1, -s * x * x}});
        },
        tr4xy, d8, e4i);
    auto b2 = [](cplx x, cplx y, double s, double tail) {
        cplx k = s * std::pow(x * y, 3);
        return sp(8, {{0, 7, std::pow(x, 6)},
                      {1, 1, k},
                      {3, 3, k},
                      {4, 4, k},
                      {6, 6, k},
                      {2, 5, std::pow(x, 4) * y * y},
                      {5, 2, tail * x * x * std::pow(y, 4)},
                      {7, 0, tail * std::pow(y, 6)}});
    };
    auto tr_k = [](cplx x, cplx y, double s) { return 4.0 * s * std::pow(x * y, 3); };
    tpp(
        "tb.star8.b21", "b21", [b2](cplx x, cplx y, double s) { return b2(x, y, s, 1.0); }, tr_k, d24,
        [](cplx x, cplx y, double s) {
            cplx k = std::pow(x * y, 3);
            return s > 0 ? claims({{k, 6}, {-k, 2}}) : claims({{k, 2}, {-k, 6}});
        });
    tpp(
        "tb.star8.b22", "b22", [b2](cplx x, cplx y, double s) { return b2(x, y, s, -1.0); }, tr_k, d24,
        [](cplx x, cplx y, double s) {
            cplx k = std::pow(x * y, 3);
            return claims({{I1 * k, 2}, {-I1 * k, 2}, {s * k, 4}});
        });
    auto s1 = [](cplx x, cplx y, double s, double tail) {
        cplx d = x * y;
        return sp(8, {{0, 0, d},
                      {3, 3, d},
                      {5, 5, d},
                      {6, 6, d},
                      {1, 4, s * d},
                      {4, 1, tail * s * d},
                      {2, 7, y * y},
                      {7, 2, tail * x * x}});
    };
    auto s2 = [](cplx x, cplx y, double s, double tail) {
        cplx d = x * y;
        return sp(8, {{1, 1, d},
                      {2, 2, d},
                      {4, 4, d},
                      {7, 7, d},
                      {0, 5, y * y},
                      {5, 0, tail * x * x},
                      {3, 6, s * d},
                      {6, 3, tail * s * d}});
    };
    tpp("tb.circ8.s11", "s11", [s1](cplx x, cplx y, double s) { return s1(x, y, s, 1.0); }, tr4xy, d8, e62);
    // s12 and s21 spectra are swapped in print
    tpp("tb.circ8.s12", "s12", [s1](cplx x, cplx y, double s) { return s1(x, y, s, -1.0); }, tr4xy, d8, e4i);
    tpp("tb.circ8.s21", "s21", [s2](cplx x, cplx y, double s) { return s2(x, y, s, 1.0); }, tr4xy, d8, e62);
    tpp("tb.circ8.s22", "s22", [s2](cplx x, cplx y, double s) { return s2(x, y, s, -1.0); }, tr4xy, d8, e4i);

    // ---- 16-vertex ternary solutions ----
    {
        Family f;
        f.id = "tb.star16.cv16";
        f.anchor = "cv16";
        f.description = "invertible 16-vertex star ternary solution";
        f.arity = 3;
        f.dim = 8;
        f.vertices = 16;
        f.params = {"x"};
        f.constraints = {nonzero("x")};
        f.variants = kSigns;
        f.rank = 8;
        f.make = [](const Params &p, int v) {
            cplx x = p.at("x"), s = sg(v), x2 = x * x, x3 = x2 * x, x4 = x2 * x2;
            Matrix m(8, 8);
            for (size_t i = 0; i < 8; i++) {
                m(i, i) = x3;
            }
            m(0, 7) = -1.0;
            m(1, 6) = -s * x2;
            m(2, 5) = -x2;
            m(3, 4) = -s * x4;
            m(4, 3) = s * x2;
            m(5, 2) = x4;
            m(6, 1) = s * x4;
            m(7, 0) = x4 * x2;
            return m;
        };
        f.trace = [](const Params &p, int) { return 8.0 * std::pow(p.at("x"), 3); };
        f.det = [](const Params &p, int) { return 16.0 * std::pow(p.at("x"), 24); };
        f.eigen = [](const Params &p, int) {
            cplx x3 = std::pow(p.at("x"), 3);
            return claims({{(1.0 + I1) * x3, 4}, {(1.0 - I1) * x3, 4}});
        };
        add(f);
    }
    {
        Family f;
        f.id = "tb.circ16.cv16c";
        f.anchor = "cv16c";
        f.description = "non-invertible 16-vertex circle ternary solution of rank 4";
        f.arity = 3;
        f.dim = 8;
        f.vertices = 16;
        f.params = {"x", "y"};
        f.constraints = {nonzero("x"), nonzero("y")};
        f.variants = kSigns;
        f.rank = 4;
        f.make = [](const Params &p, int v) {
            cplx x = p.at("x"), y = p.at("y"), s = sg(v);
            Matrix m(8, 8);
            for (size_t i = 0; i < 8; i++) {
                m(i, i) = s * x * y;
            }
            m(0, 5) = y * y;
            m(1, 4) = x * y;
            m(2, 7) = y * y;
            m(3, 6) = x * y;
            m(4, 1) = x * y;
            m(5, 0) = x * x;
            m(6, 3) = x * y;
            m(7, 2) = x * x;
            return m;
        };
        f.trace = [](const Params &p, int v) { return 8.0 * sg(v) * p.at("x") * p.at("y"); };
        f.det = [](const Params &, int) { return cplx(0); };
        f.eigen = [](const Params &p, int v) { return claims({{2.0 * sg(v) * p.at("x") * p.at("y"), 4}, {0.0, 4}}); };
        add(f);
    }
    auto p13 = [&](const std::string &id, const std::string &anchor, double w, bool irr) {
        Family f;
        f.id = id;
        f.anchor = anchor;
        f.description = irr ? "irrational 16-vertex solution of the 13-partial ternary equation"
                            : "16-vertex solution of the 13-partial ternary equation";
        f.arity = 3;
        f.dim = 8;
        f.vertices = 16;
        f.params = {"x", "y"};
        f.constraints = {nonzero("x"),
                         differs("y != 1", [](const Params &p) { return p.at("y") - 1.0; }, false)};
        f.variants = kSigns;
        f.equation = Equation::partial13;
        auto at_one = [](const Params &p) { return std::abs(p.at("y") - 1.0) <= 1e-12; };
        f.rank_at = [at_one](const Params &p, int) { return at_one(p) ? 4 : 8; };
        f.equation_at = [at_one](const Params &p, int) { return at_one(p) ? Equation::full : Equation::partial13; };
        f.make = [w, irr](const Params &p, int v) {
            cplx x = p.at("x"), y = p.at("y"), s = sg(v);
            cplx r = irr ? std::sqrt(2.0 * (y - 1.0) * y + 1.0) : cplx(1);
            cplx a = irr ? x * (2.0 * y - 1.0) : x;
            Matrix m(8, 8);
            m(0, 0) = a;
            m(1, 1) = x * y;
            m(2, 2) = a;
            m(3, 3) = x * y;
            m(4, 4) = x * y;
            m(5, 5) = x;
            m(6, 6) = x * y;
            m(7, 7) = x;
            m(0, 5) = y * y;
            m(1, 4) = w * x * r;
            m(2, 7) = s * y * y;
            m(3, 6) = w * s * x * r;
            m(4, 1) = w * x * r;
            m(5, 0) = x * x;
            m(6, 3) = w * s * x * r;
            m(7, 2) = s * x * x;
            return m;
        };
        if (irr) {
            f.trace = [](const Params &p, int) { return 8.0 * p.at("x") * p.at("y"); };
            f.det = [](const Params &p, int) { return std::pow(p.at("x"), 8) * std::pow(p.at("y") - 1.0, 8); };
            f.eigen = [](const Params &p, int) {
                cplx x = p.at("x"), y = p.at("y");
                cplx r = std::sqrt(2.0 * (y - 1.0) * y + 1.0);
                return claims({{x * (y + r), 4}, {x * (y - r), 4}});
            };
        } else {
            f.trace = [](const Params &p, int) { return 4.0 * p.at("x") * (p.at("y") + 1.0); };
            f.det = [](const Params &p, int) {
                cplx y = p.at("y");
                return std::pow(p.at("x"), 8) * std::pow(y * y - 1.0, 4);
            };
            f.eigen = [](const Params &p, int) {
                cplx x = p.at("x"), y = p.at("y");
                return claims({{x * (y + 1.0), 4}, {x * (y - 1.0), 2}, {-x * (y - 1.0), 2}});
            };
        }
        add(f);
    };
    p13("tb.circ16.p13", "c16c", 1.0, false);
    p13("tb.circ16.p13b", "c16c", -1.0, false);
    p13("tb.circ16.p13x1", "c16c1", 1.0, true);
    p13("tb.circ16.p13x2", "c16c2", -1.0, true);

    // ---- n-ary ----
    {
        Family f;
        f.id = "nb.minkowski";
        f.anchor = "cn";
        f.description = "Minkowski star solution of the n-ary braid equations (2^n x 2^n)";
        f.arity = 0;
        f.dim = 0;
        f.params = {"n"};
        f.constraints = {{"n integer in 2..6", [](const Params &p) {
                              double n = p.at("n").real();
                              bool ok = std::abs(n - std::round(n)) < 1e-12 && n >= 2 && n <= 6 &&
                                        p.at("n").imag() == 0;
                              return ok ? 1.0 : 0.0;
                          }}};
        f.variants = kPlain;
        f.make = [](const Params &p, int) {
            int n = (int)std::lround(p.at("n").real());
            size_t N = (size_t)1 << n;
            Matrix m(N, N);
            for (size_t i = 0; i < N; i++) {
                m(i, i) = 1;
                m(i, N - 1 - i) = i < N / 2 ? -1.0 : 1.0;
            }
            return m;
        };
        f.rank_at = [](const Params &p, int) { return 1 << (int)std::lround(p.at("n").real()); };
        f.sampler = [](std::mt19937_64 &rng, int) {
            std::uniform_int_distribution<int> u(2, 4);
            return Params{{"n", (double)u(rng)}};
        };
        add(f);
    }

    // ---- structural helpers ----
    {
        Family f;
        f.id = "aux.q4";
        f.anchor = "q4";
        f.description = "q (x) q for q = [[a,1],[c,d]]";
        f.params = {"a", "c", "d"};
        f.constraints = {differs("ad - c != 0", [](const Params &p) { return p.at("a") * p.at("d") - p.at("c"); })};
        f.variants = kPlain;
        f.equation = Equation::none;
        f.rank = 4;
        f.make = [](const Params &p, int) {
            Matrix q{{p.at("a"), 1.0}, {p.at("c"), p.at("d")}};
            return kron(q, q);
        };
        add(f);
    }
    {
        Family f;
        f.id = "aux.q8";
        f.anchor = "q8";
        f.description = "q (x) q (x) q for q = [[a,b],[c,d]]";
        f.arity = 3;
        f.dim = 8;
        f.params = {"a", "b", "c", "d"};
        f.constraints = {differs("ad - bc != 0",
                                 [](const Params &p) { return p.at("a") * p.at("d") - p.at("b") * p.at("c"); })};
        f.variants = kPlain;
        f.equation = Equation::none;
        f.rank = 8;
        f.make = [](const Params &p, int) {
            Matrix q{{p.at("a"), p.at("b")}, {p.at("c"), p.at("d")}};
            return kron_power(q, 3);
        };
        add(f);
    }
    {
        Family f;
        f.id = "aux.reverse";
        f.anchor = "J_n";
        f.description = "n x n reverse (exchange) matrix";
        f.dim = 0;
        f.params = {"n"};
        f.constraints = {{"n in {4, 8}", [](const Params &p) {
                              double n = p.at("n").real();
                              return (n == 4 || n == 8) && p.at("n").imag() == 0 ? 1.0 : 0.0;
                          }}};
        f.variants = kPlain;
        f.equation = Equation::none;
        f.make = [](const Params &p, int) {
            size_t n = (size_t)std::lround(p.at("n").real());
            Matrix m(n, n);
            for (size_t i = 0; i < n; i++) {
                m(i, n - 1 - i) = 1;
            }
            return m;
        };
        f.sampler = [](std::mt19937_64 &, int) { return Params{{"n", 4.0}}; };
        add(f);
    }
    {
        Family f;
        f.id = "aux.pauli.sigma";
        f.anchor = "si";
        f.description = "rho_i (x) rho_j (x) rho_k";
        f.arity = 3;
        f.dim = 8;
        f.params = {"i", "j", "k"};
        f.constraints = {{"i, j, k in 1..4", [](const Params &p) {
                              for (const char *n : {"i", "j", "k"}) {
                                  double v = p.at(n).real();
                                  if (v != std::round(v) || v < 1 || v > 4 || p.at(n).imag() != 0) {
                                      return 0.0;
                                  }
                              }
                              return 1.0;
                          }}};
        f.variants = kPlain;
        f.equation = Equation::none;
        f.rank = 8;
        f.make = [](const Params &p, int) {
            return pauli_sigma((int)p.at("i").real(), (int)p.at("j").real(), (int)p.at("k").real());
        };
        f.sampler = [](std::mt19937_64 &rng, int) {
            std::uniform_int_distribution<int> u(1, 4);
            return Params{{"i", (double)u(rng)}, {"j", (double)u(rng)}, {"k", (double)u(rng)}};
        };
        add(f);
    }
    const std::vector<std::string> letters16{"x", "y", "z", "s", "t", "u", "v", "w",
                                             "a", "b", "c", "d", "f", "g", "h", "p"};
    auto det16 = [](const Params &p, int) {
        auto g = [&](const char *k) { return p.at(k); };
        return (g("b") * g("v") - g("a") * g("w")) * (g("c") * g("u") - g("d") * g("t")) *
               (g("f") * g("s") - g("g") * g("z")) * (g("p") * g("x") - g("h") * g("y"));
    };
    {
        Family f;
        f.id = "aux.mstar8";
        f.anchor = "m8s";
        f.description = "16-vertex 8x8 star matrix";
        f.arity = 3;
        f.dim = 8;
        f.vertices = 16;
        f.params = letters16;
        f.variants = kPlain;
        f.equation = Equation::none;
        f.make = [](const Params &p, int) { return mstar8(p); };
        f.det = det16;
        add(f);
    }
    {
        Family f;
        f.id = "aux.mcirc8";
        f.anchor = "m8c";
        f.description = "16-vertex 8x8 circle matrix";
        f.arity = 3;
        f.dim = 8;
        f.vertices = 16;
        f.params = letters16;
        f.variants = kPlain;
        f.equation = Equation::none;
        f.make = [](const Params &p, int) { return mcirc8(p); };
        f.det = det16;
        add(f);
    }
    return r;
}

}  // namespace

Matrix mstar8(const Params &p) {
    auto g = [&](const char *k) { return p.at(k); };
    return sp(8, {{0, 0, g("x")}, {0, 7, g("y")}, {1, 1, g("z")}, {1, 6, g("s")}, {2, 2, g("t")}, {2, 5, g("u")},
                  {3, 3, g("v")}, {3, 4, g("w")}, {4, 3, g("a")}, {4, 4, g("b")}, {5, 2, g("c")}, {5, 5, g("d")},
                  {6, 1, g("f")}, {6, 6, g("g")}, {7, 0, g("h")}, {7, 7, g("p")}});
}

Matrix mcirc8(const Params &p) {
    auto g = [&](const char *k) { return p.at(k); };
    return sp(8, {{0, 0, g("x")}, {0, 5, g("y")}, {1, 1, g("z")}, {1, 4, g("s")}, {2, 2, g("t")}, {2, 7, g("u")},
                  {3, 3, g("v")}, {3, 6, g("w")}, {4, 1, g("f")}, {4, 4, g("g")}, {5, 0, g("h")}, {5, 5, g("p")},
                  {6, 3, g("a")}, {6, 6, g("b")}, {7, 2, g("c")}, {7, 7, g("d")}});
}

const std::vector<Family> &registry() {
    static const std::vector<Family> r = make_registry();
    return r;
}

const Family &family(const std::string &id) {
    for (const auto &f : registry()) {
        if (f.id == id) {
            return f;
        }
    }
    throw UnknownId("unknown family id: " + id);
}

int variant_index(const Family &f, const std::string &variant) {
    if (variant.empty()) {
        return 0;
    }
    for (size_t k = 0; k < f.variants.size(); k++) {
        if (f.variants[k] == variant) {
            return (int)k;
        }
    }
    throw UnknownId("family " + f.id + " has no variant '" + variant + "'");
}

static void check_params(const Family &f, const Params &p, int variant) {
    for (const auto &name : f.params) {
        if (!p.count(name)) {
            throw ConstraintViolation(f.id + ": missing parameter " + name);
        }
    }
    for (const auto &c : f.constraints) {
        if (c.hard && c.margin(p) <= 1e-12) {
            throw ConstraintViolation(f.id + ": violates " + c.text);
        }
    }
    (void)variant;
}

Matrix build(const std::string &id, const Params &params, const std::string &variant) {
    const auto &f = family(id);
    int v = variant_index(f, variant);
    check_params(f, params, v);
    return f.make(params, v);
}

static bool close(cplx a, cplx b, double tol) {
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

MetaReport verify_meta(const std::string &id, const Params &params, const std::string &variant, double tol) {
    const auto &f = family(id);
    int v = variant_index(f, variant);
    check_params(f, params, v);
    Matrix m = f.make(params, v);
    MetaReport rep;
    rep.id = id;
    if (f.trace) {
        rep.has_trace = true;
        rep.trace_claim = f.trace(params, v);
        rep.trace_actual = trace(m);
        rep.trace_ok = close(rep.trace_claim, rep.trace_actual, tol);
    }
    if (f.det) {
        rep.has_det = true;
        rep.det_claim = f.det(params, v);
        rep.det_actual = det(m);
        // determinants of homogeneous families scale like |entry|^n
        double scale = std::pow(std::max(1.0, max_abs(m)), (double)m.rows());
        rep.det_ok = std::abs(rep.det_claim - rep.det_actual) <= tol * scale;
    }
    if (f.eigen) {
        rep.has_eigen = true;
        rep.eigen_ok = eigencheck(m, f.eigen(params, v), tol);
    }
    int rk = f.claimed_rank(params, v);
    if (rk >= 0) {
        rep.has_rank = true;
        rep.rank_claim = rk;
        rep.rank_actual = (int)numeric_rank(m);
        rep.rank_ok = rep.rank_claim == rep.rank_actual;
    }
    return rep;
}

Params sample_params(const Family &f, int variant, std::mt19937_64 &rng) {
    if (f.sampler) {
        return f.sampler(rng, variant);
    }
    std::uniform_real_distribution<double> mod(0.5, 2.0);
    std::uniform_real_distribution<double> ph(0.0, 2 * kPi);
    for (int attempt = 0; attempt < 10000; attempt++) {
        Params p;
        for (const auto &n : f.params) {
            double r = mod(rng);
            p[n] = std::polar(r, ph(rng));
        }
        if (f.id == "yb.pp.star" && variant == 1) {
            p["t"] = p["x"];
        }
        bool ok = true;
        for (const auto &c : f.constraints) {
            ok &= c.margin(p) >= 0.1;
        }
        if (ok) {
            return p;
        }
    }
    throw ConstraintViolation(f.id + ": could not sample admissible parameters");
}

Matrix pauli(int i) {
    switch (i) {
        case 1:
            return Matrix{{0, 1}, {1, 0}};
        case 2:
            return Matrix{{0, -I1}, {I1, 0}};
        case 3:
            return Matrix{{1, 0}, {0, -1}};
        case 4:
            return Matrix::identity(2);
    }
    throw DimensionError("Pauli index must be in 1..4");
}

Matrix pauli_sigma(int i, int j, int k) {
    return kron(kron(pauli(i), pauli(j)), pauli(k));
}

const std::vector<std::string> &conjugation_pairs() {
    static const std::vector<std::string> ids{"tri9-to-4vert", "tri10-to-4vert", "star16-circ16", "cp1-to-c34",
                                              "cp1b-to-c34"};
    return ids;
}

Conjugation known_conjugator(const std::string &pair_id, const Params &params) {
    auto get = [&](const char *k, cplx dflt) {
        auto it = params.find(k);
        return it == params.end() ? dflt : it->second;
    };
    cplx x = get("x", 1.3), y = get("y", cplx(0.7, 0.4)), z = get("z", cplx(-0.6, 1.1));
    Conjugation c;
    if (pair_id == "tri9-to-4vert") {
        // printed as U^-1 B U = A; we return U^-1
        Matrix u{{1, -y / (2.0 * x), y / (2.0 * x), 0}, {0, 1, 0, -z / y}, {0, 0, 1, 0}, {0, 0, 0, 1}};
        c.u = inverse(u);
        c.from = build("yb.tri9.v3", {{"x", x}, {"y", y}, {"z", z}});
        c.to = build("aux.c4x", {{"x", x}});
        return c;
    }
    if (pair_id == "tri10-to-4vert") {
        cplx f = x * x / (y * z);
        Matrix u{{0, x / z, -x / z, 0}, {-1, -f, f, -y / x}, {1, -f, f, 0}, {0, 0, 1, 1}};
        c.u = inverse(u);
        c.from = build("yb.tri10", {{"x", x}, {"y", y}, {"z", z}});
        c.to = build("aux.c4", {{"x", x}, {"y", y}, {"z", z}});
        return c;
    }
    if (pair_id == "star16-circ16") {
        Params p;
        const char *letters[] = {"x", "y", "z", "s", "t", "u", "v", "w", "a", "b", "c", "d", "f", "g", "h", "p"};
        for (int k = 0; k < 16; k++) {
            p[letters[k]] = get(letters[k], std::polar(0.6 + 0.1 * k, 0.7 * k + 0.3));
        }
        // the printed matrix has a stray 1 on the diagonal; this is the permutation it means
        c.u = Matrix::permutation({0, 1, 2, 3, 6, 7, 4, 5});
        c.from = mstar8(p);
        c.to = mcirc8(p);
        return c;
    }
    if (pair_id == "cp1-to-c34") {
        cplx b = y / z;
        cplx r = std::sqrt(y / z);
        Matrix q{{r, b}, {1, -b * std::sqrt(z / y)}};
        c.u = kron(q, q);
        cplx p = y * (x + z), m = y * (x - z);
        c.from = sp(4, {{0, 0, p}, {1, 2, m}, {2, 1, m}, {3, 3, p}});
        c.to = build("yb.star8.c34", {{"x", x}, {"y", y}, {"z", z}}, "upper");
        return c;
    }
    if (pair_id == "cp1b-to-c34") {
        cplx r = I1 * std::sqrt(y / z);
        // the two printed signs must be opposite or q is singular
        Matrix q{{r, r}, {-1, 1}};
        c.u = kron(q, q);
        cplx p = y * (x + z), m = y * (x - z);
        c.from = sp(4, {{0, 3, m}, {1, 1, p}, {2, 2, p}, {3, 0, m}});
        c.to = build("yb.star8.c34", {{"x", x}, {"y", y}, {"z", z}}, "lower");
        return c;
    }
    throw UnknownId("unknown conjugation pair: " + pair_id);
}

bool is_kron_power(const Matrix &m, int n, bool same_factor, double tol) {
    if (!m.is_square() || m.rows() != ((size_t)1 << n)) {
        return false;
    }
    size_t N = m.rows();
    size_t r0 = 0, c0 = 0;
    double best = -1;
    for (size_t i = 0; i < N; i++) {
        for (size_t j = 0; j < N; j++) {
            if (std::abs(m(i, j)) > best) {
                best = std::abs(m(i, j));
                r0 = i;
                c0 = j;
            }
        }
    }
    if (best <= 0) {
        return false;
    }
    cplx ref = m(r0, c0);
    // slot k is bit (n-1-k): slot 0 is the leftmost factor
    std::vector<Matrix> q;
    for (int k = 0; k < n; k++) {
        size_t bit = (size_t)1 << (n - 1 - k);
        Matrix qk(2, 2);
        for (size_t a = 0; a < 2; a++) {
            for (size_t b = 0; b < 2; b++) {
                size_t r = (r0 & ~bit) | (a ? bit : 0);
                size_t c = (c0 & ~bit) | (b ? bit : 0);
                qk(a, b) = m(r, c) / ref;
            }
        }
        q.push_back(qk);
    }
    Matrix rebuilt(N, N);
    for (size_t i = 0; i < N; i++) {
        for (size_t j = 0; j < N; j++) {
            cplx v = ref;
            for (int k = 0; k < n; k++) {
                size_t bit = (size_t)1 << (n - 1 - k);
                v *= q[(size_t)k]((i & bit) ? 1 : 0, (j & bit) ? 1 : 0);
            }
            rebuilt(i, j) = v;
        }
    }
    if (!approx_equal(rebuilt, m, tol)) {
        return false;
    }
    if (same_factor) {
        for (int k = 1; k < n; k++) {
            for (size_t e = 0; e < 4; e++) {
                for (size_t g = 0; g < 4; g++) {
                    cplx lhs = q[(size_t)k].data()[e] * q[0].data()[g];
                    cplx rhs = q[(size_t)k].data()[g] * q[0].data()[e];
                    if (std::abs(lhs - rhs) > tol * std::max(1.0, std::abs(lhs) + std::abs(rhs))) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

}  // namespace bk
