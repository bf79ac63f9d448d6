#include <cmath>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "braidkit/braid.h"
#include "braidkit/catalog.h"
#include "braidkit/errors.h"
#include "braidkit/gates.h"
#include "braidkit/polyadic.h"
#include "braidkit/search.h"
#include "json.hpp"

using json = nlohmann::ordered_json;
using namespace bk;

#ifndef BRAIDKIT_VERSION
#define BRAIDKIT_VERSION "0.0.0"
#endif

namespace {

constexpr double kPi = std::numbers::pi;

struct Globals {
    double tol = 1e-9;
    uint64_t seed = 7;
    bool json = false;
};

std::string trim(std::string s) {
    while (!s.empty() && std::isspace((unsigned char)s.back())) {
        s.pop_back();
    }
    size_t i = 0;
    while (i < s.size() && std::isspace((unsigned char)s[i])) {
        i++;
    }
    return s.substr(i);
}

std::string replace_all(std::string s, const std::string &from, const std::string &to) {
    size_t pos = 0;
    while ((pos = s.find(from, pos)) != std::string::npos) {
        s.replace(pos, from.size(), to);
        pos += to.size();
    }
    return s;
}

double parse_number(const std::string &s) {
    size_t used = 0;
    double v = std::stod(s, &used);
    if (used != s.size()) {
        throw std::invalid_argument(s);
    }
    return v;
}

// "1.5", "-pi/2", "3pi/4", "2*pi", "π"
double parse_real(std::string s) {
    s = trim(replace_all(s, "π", "pi"));
    auto p = s.find("pi");
    if (p == std::string::npos) {
        return parse_number(s);
    }
    std::string coef = s.substr(0, p), rest = s.substr(p + 2);
    if (!coef.empty() && coef.back() == '*') {
        coef.pop_back();
    }
    double c = coef.empty() || coef == "+" ? 1.0 : coef == "-" ? -1.0 : parse_number(coef);
    double v = c * kPi;
    if (!rest.empty()) {
        if (rest[0] != '/') {
            throw std::invalid_argument(s);
        }
        v /= parse_number(rest.substr(1));
    }
    return v;
}

// real, "re+imi", "imi", or polar "r@theta"
cplx parse_complex(std::string s) {
    s = trim(s);
    auto at = s.find('@');
    if (at != std::string::npos) {
        return std::polar(parse_real(s.substr(0, at)), parse_real(s.substr(at + 1)));
    }
    bool imag = !s.empty() && s.back() == 'i' && !(s.size() >= 2 && s[s.size() - 2] == 'p');
    if (!imag) {
        return parse_real(s);
    }
    std::string body = s.substr(0, s.size() - 1);
    size_t split = std::string::npos;
    for (size_t i = body.size(); i-- > 1;) {
        if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    auto im_part = [](const std::string &t) {
        if (t.empty() || t == "+") {
            return 1.0;
        }
        if (t == "-") {
            return -1.0;
        }
        return parse_real(t);
    };
    if (split == std::string::npos) {
        return {0, im_part(body)};
    }
    return {parse_real(body.substr(0, split)), im_part(body.substr(split))};
}

std::vector<std::string> split(const std::string &s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) {
        if (!trim(cur).empty()) {
            out.push_back(trim(cur));
        }
    }
    return out;
}

std::string canonical_key(std::string k) {
    k = trim(k);
    if (k == "α" || k == "a" || k == "alpha") {
        return "alpha";
    }
    if (k == "β" || k == "b" || k == "beta") {
        return "beta";
    }
    return k;
}

Params parse_params(const std::string &s, bool gate_keys = false) {
    Params p;
    for (const auto &kv : split(s, ',')) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("expected key=value, got '" + kv + "'");
        }
        std::string key = trim(kv.substr(0, eq));
        if (gate_keys) {
            key = canonical_key(key);
        }
        p[key] = parse_complex(kv.substr(eq + 1));
    }
    return p;
}

std::vector<Bloch> parse_states(const std::string &s) {
    std::vector<Bloch> out;
    for (const auto &q : split(s, ';')) {
        auto parts = split(q, ',');
        if (parts.size() != 2) {
            throw std::invalid_argument("state '" + q + "' must be theta,gamma");
        }
        out.push_back({parse_real(parts[0]), parse_real(parts[1])});
    }
    return out;
}

json cjson(cplx z) {
    return json::array({z.real(), z.imag()});
}

json mjson(const Matrix &m) {
    json rows = json::array();
    for (size_t i = 0; i < m.rows(); i++) {
        json r = json::array();
        for (size_t j = 0; j < m.cols(); j++) {
            r.push_back(cjson(m(i, j)));
        }
        rows.push_back(r);
    }
    return rows;
}

std::string cstr(cplx z) {
    std::ostringstream os;
    os << std::setprecision(10) << z.real();
    if (z.imag() != 0) {
        os << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
    }
    return os.str();
}

json stamp(const std::string &command) {
    json j;
    j["version"] = BRAIDKIT_VERSION;
    j["command"] = command;
    return j;
}

void emit(const Globals &g, const json &j, const std::string &text) {
    if (g.json) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << text;
    }
}

json family_manifest(const Family &f) {
    json j;
    j["id"] = f.id;
    j["anchor"] = f.anchor;
    j["description"] = f.description;
    j["arity"] = f.arity ? json(f.arity) : json("n");
    j["dim"] = f.dim ? json(f.dim) : json("param");
    j["vertices"] = f.vertices ? json(f.vertices) : json(nullptr);
    j["params"] = f.params;
    json cs = json::array();
    for (const auto &c : f.constraints) {
        cs.push_back({{"text", c.text}, {"hard", c.hard}});
    }
    j["constraints"] = cs;
    j["variants"] = f.variants;
    j["equation"] = equation_name(f.equation);
    if (f.rank_at) {
        j["rank"] = "param";
    } else {
        j["rank"] = f.rank >= 0 ? json(f.rank) : json(nullptr);
    }
    j["metadata"] = {{"trace", (bool)f.trace}, {"det", (bool)f.det}, {"eigen", (bool)f.eigen}};
    return j;
}

// ---- catalog ----

int cmd_catalog_list(const Globals &g) {
    json j = stamp("catalog list");
    json fams = json::array();
    std::ostringstream os;
    for (const auto &f : registry()) {
        fams.push_back(family_manifest(f));
        os << std::left << std::setw(20) << f.id << " " << std::setw(10) << f.anchor << " " << f.description
           << "\n";
    }
    j["families"] = fams;
    emit(g, j, os.str());
    return 0;
}

int cmd_catalog_manifest() {
    json fams = json::array();
    for (const auto &f : registry()) {
        fams.push_back(family_manifest(f));
    }
    std::cout << fams.dump(2) << "\n";
    return 0;
}

Params params_or_sample(const Family &f, const std::string &text, int variant, uint64_t seed) {
    if (!text.empty()) {
        return parse_params(text);
    }
    if (f.params.empty()) {
        return {};
    }
    std::mt19937_64 rng(seed);
    return sample_params(f, variant, rng);
}

json params_json(const Params &p) {
    json j = json::object();
    for (const auto &[k, v] : p) {
        j[k] = cjson(v);
    }
    return j;
}

int cmd_catalog_build(const Globals &g, const std::string &id, const std::string &params, const std::string &variant) {
    const auto &f = family(id);
    int v = variant_index(f, variant);
    Params p = params_or_sample(f, params, v, g.seed);
    Matrix m = build(id, p, variant);
    json j = stamp("catalog build");
    j["id"] = id;
    j["variant"] = f.variants.empty() ? "" : f.variants[(size_t)v];
    j["params"] = params_json(p);
    j["matrix"] = mjson(m);
    emit(g, j, m.str(6) + "\n");
    return 0;
}

// ---- verify ----

int cmd_verify(const Globals &g, const std::string &id, const std::string &params, const std::string &variant) {
    const auto &f = family(id);
    int v = variant_index(f, variant);
    Params p = params_or_sample(f, params, v, g.seed);
    Matrix m = build(id, p, variant);
    int n = f.arity_at(p);
    Equation eq = f.declared_equation(p, v);

    json j = stamp("verify");
    j["id"] = id;
    j["variant"] = f.variants[(size_t)v];
    j["params"] = params_json(p);
    j["seed"] = g.seed;
    j["tol"] = g.tol;
    j["arity"] = n;
    j["equation"] = equation_name(eq);

    std::ostringstream os;
    os << id << " [" << f.variants[(size_t)v] << "] arity " << n << ", declared equation " << equation_name(eq)
       << "\n";

    bool ok = true;
    auto rep = nary_braid_report(m, {n, 2}, g.tol);
    j["braid"] = {{"residuals", rep.residuals}, {"max_residual", rep.max_residual()}, {"passed", rep.passed}};
    os << "  braid: max residual " << std::scientific << std::setprecision(2) << rep.max_residual()
       << (rep.passed ? "  pass" : "  fail") << "\n";
    bool eq_ok = rep.passed;
    if (n == 3) {
        auto pt = partial_ternary_reports(m, g.tol);
        j["partial"] = {{"r12", pt.r12}, {"r13", pt.r13}, {"r23", pt.r23}};
        os << "  partial: r12 " << pt.r12 << "  r13 " << pt.r13 << "  r23 " << pt.r23 << "\n";
        if (eq == Equation::partial13) {
            eq_ok = pt.b13;
        }
    }
    if (eq != Equation::none) {
        ok &= eq_ok;
    }
    j["equation_passed"] = eq_ok;

    auto meta = verify_meta(id, p, variant, std::max(g.tol, 1e-9));
    json mj = json::object();
    os << std::defaultfloat << std::setprecision(10);
    if (meta.has_trace) {
        mj["trace"] = {{"claim", cjson(meta.trace_claim)}, {"actual", cjson(meta.trace_actual)}, {"ok", meta.trace_ok}};
        os << "  trace " << cstr(meta.trace_actual) << (meta.trace_ok ? "  ok" : "  MISMATCH claim " + cstr(meta.trace_claim))
           << "\n";
    }
    if (meta.has_det) {
        mj["det"] = {{"claim", cjson(meta.det_claim)}, {"actual", cjson(meta.det_actual)}, {"ok", meta.det_ok}};
        os << "  det " << cstr(meta.det_actual) << (meta.det_ok ? "  ok" : "  MISMATCH claim " + cstr(meta.det_claim))
           << "\n";
    }
    if (meta.has_eigen) {
        mj["eigen"] = {{"ok", meta.eigen_ok}};
        os << "  eigenvalues " << (meta.eigen_ok ? "ok" : "MISMATCH") << "\n";
    }
    int rank = (int)numeric_rank(m);
    mj["rank"] = rank;
    if (meta.has_rank) {
        mj["rank_claim"] = meta.rank_claim;
        mj["rank_ok"] = meta.rank_ok;
    }
    os << "  rank " << rank << (meta.has_rank ? (meta.rank_ok ? "  ok" : "  MISMATCH") : "") << "\n";
    ok &= meta.all_ok();
    j["meta"] = mj;
    j["passed"] = ok;
    os << (ok ? "PASS" : "FAIL") << "\n";
    emit(g, j, os.str());
    return ok ? 0 : 1;
}

// ---- search ----

struct SearchOpts {
    std::string space = "perms";
    int dim = 4;
    int arity = 2;
    std::string equation = "full";
    int threads = 1;
    std::string support = "star8";
    std::string values = "-1,1";
    size_t cap = 10'000'000;
};

int cmd_search(const Globals &g, const SearchOpts &o) {
    EqKind eq = eq_kind_from_name(o.equation);
    json j = stamp("search");
    j["space"] = o.space;
    j["dim"] = o.dim;
    j["arity"] = o.arity;
    j["equation"] = o.equation;
    std::ostringstream os;
    if (o.space == "perms") {
        auto res = permutation_search(o.dim, o.arity, eq, o.threads, g.tol);
        json sols = json::array();
        os << "candidates " << res.candidates << "\n";
        for (const auto &s : res.solutions) {
            sols.push_back({{"perm", s.perm}, {"trivial", s.trivial}});
            os << (s.trivial ? "  (identity) " : "  ");
            for (size_t i = 0; i < s.perm.size(); i++) {
                os << (i ? " " : "[") << s.perm[i];
            }
            os << "]\n";
        }
        j["candidates"] = res.candidates;
        j["count"] = res.nontrivial();
        j["identity_included"] = res.solutions.size() != res.nontrivial();
        j["solutions"] = sols;
        os << "count " << res.nontrivial() << " (identity reported separately)\n";
    } else if (o.space == "pattern") {
        Shape s = o.support == "star8" ? Shape::Mstar : o.support == "circ8" ? Shape::Mcirc : Shape::Other;
        std::vector<std::pair<int, int>> sup;
        if (s != Shape::Other) {
            sup = shape_support(s);
        } else if (o.support != "empty") {
            throw UnknownId("unknown support: " + o.support + " (star8, circ8, empty)");
        }
        std::vector<cplx> vals;
        for (const auto &t : split(o.values, ',')) {
            vals.push_back(parse_complex(t));
        }
        auto res = pattern_search(sup, (size_t)o.dim, vals, o.arity, eq, o.cap, g.tol);
        json sols = json::array();
        for (const auto &m : res.solutions) {
            sols.push_back(mjson(m));
        }
        j["label"] = PatternSearchResult::label;
        j["candidates"] = res.candidates;
        j["count"] = res.solutions.size();
        j["solutions"] = sols;
        os << PatternSearchResult::label << "\ncandidates " << res.candidates << "\ncount " << res.solutions.size()
           << "\n";
    } else {
        throw UnknownId("unknown search space: " + o.space + " (perms, pattern)");
    }
    emit(g, j, os.str());
    return 0;
}

// ---- entangle ----

int cmd_entangle(const Globals &g, const std::string &gate, const std::string &gparams, const std::string &states,
                 const std::string &variant, int kappa, int L) {
    GateParams gp;
    for (const auto &[k, v] : parse_params(gparams, true)) {
        if (k == "alpha") {
            gp.alpha = v.real();
        } else if (k == "beta") {
            gp.beta = v.real();
        } else {
            throw std::invalid_argument("unknown gate parameter " + k);
        }
    }
    if (variant == "upper" || variant.empty()) {
        gp.sign = 1;
    } else if (variant == "lower") {
        gp.sign = -1;
    } else {
        throw UnknownId("variant must be upper or lower");
    }
    gp.kappa = kappa;
    gp.L = L;
    auto q = parse_states(states);
    double value = transformed_concurrence(gate, gp, q);
    json j = stamp("entangle");
    j["gate"] = gate;
    j["params"] = {{"alpha", gp.alpha}, {"beta", gp.beta}, {"sign", gp.sign}, {"kappa", gp.kappa}};
    json sj = json::array();
    for (auto b : q) {
        sj.push_back({b.theta, b.gamma});
    }
    j["state"] = sj;
    j["concurrence"] = value;
    std::ostringstream os;
    os << std::setprecision(12);
    os << "concurrence " << value << "\n";
    if (has_closed_form(gate, gp)) {
        double cf = closed_form(gate, gp, q);
        j["closed_form"] = cf;
        j["residual"] = std::abs(cf - value);
        os << "closed form " << cf << "  (residual " << std::abs(cf - value) << ")\n";
    } else {
        j["closed_form"] = nullptr;
        os << "closed form n/a\n";
    }
    json rel = json::array();
    for (const auto &r : nonentangling_locus(gate, gp, q)) {
        rel.push_back(r.text);
        os << "on locus: " << r.text << "\n";
    }
    j["relations"] = rel;
    j["entangling"] = value > 1e-3;
    os << (value > 1e-3 ? "entangling" : value <= 1e-10 ? "not entangling" : "weak") << "\n";
    emit(g, j, os.str());
    return 0;
}

// ---- laws ----

int suite_closure(const Globals &g, json &j, std::ostringstream &os) {
    bool all = true;
    json rows = json::array();
    for (const auto &law : closure_laws()) {
        auto r = closure_check(law.id, 20, g.seed);
        rows.push_back({{"law", law.id}, {"passed", r.passed}});
        os << "  " << std::left << std::setw(6) << law.id << (r.passed ? " pass" : " FAIL") << "\n";
        all &= r.passed;
    }
    for (const auto &law : querelement_laws()) {
        bool ok = querelement_check(law.id, 20, g.seed, g.tol);
        rows.push_back({{"law", law.id}, {"passed", ok}});
        os << "  " << std::left << std::setw(6) << law.id << (ok ? " pass" : " FAIL") << "\n";
        all &= ok;
    }
    j["laws"] = rows;
    return all ? 0 : 1;
}

int suite_identities(const Globals &g, json &j, std::ostringstream &os) {
    bool all = true;
    json rows = json::array();
    std::mt19937_64 rng(g.seed);
    auto row = [&](const std::string &name, const IdentityReport &r, bool expect) {
        bool ok = r.passed() == expect;
        rows.push_back({{"identity", name},
                        {"power", r.power},
                        {"left", r.left},
                        {"right", r.right},
                        {"middle", r.middle},
                        {"expected", expect},
                        {"ok", ok}});
        os << "  " << std::left << std::setw(16) << name << " power " << r.power << " left " << r.left << " right "
           << r.right << " middle " << r.middle << (ok ? "  ok" : "  UNEXPECTED") << "\n";
        all &= ok;
    };
    for (const auto &f : identity_families()) {
        row(f.id + " zero", polyadic_identity_check(f.make(std::vector<double>((size_t)f.phases, 0.0)), f.k, f.cls, 5,
                                                    g.seed),
            true);
        auto a = sample_identity_phases(f, rng);
        row(f.id + " phases", polyadic_identity_check(f.make(a), f.k, f.cls, 5, g.seed), true);
        a.back() += 0.1;
        row(f.id + " broken", polyadic_identity_check(f.make(a), f.k, f.cls, 5, g.seed), false);
    }
    Matrix J(4, 4);
    for (size_t i = 0; i < 4; i++) {
        J(i, 3 - i) = 1;
    }
    row("J4", polyadic_identity_check(J, 3, Shape::ADiag, 5, g.seed), true);
    std::uniform_real_distribution<double> u(0.5, 2.0);
    for (int form = 0; form < 3; form++) {
        cplx a = u(rng), b = u(rng), c = u(rng), d = u(rng);
        row("i3c" + std::to_string(form), polyadic_identity_check(i3c(form, a, b, c, d), 3, Shape::Mcirc, 5, g.seed),
            true);
    }
    j["identities"] = rows;
    return all ? 0 : 1;
}

int suite_partial_unitarity(const Globals &g, json &j, std::ostringstream &os) {
    struct Ex {
        std::string name, id;
        std::string left, right;
        bool orth;
    };
    std::vector<Ex> exs{
        {"M(3)", "aux.m3", "diag(1,1,0,1)", "diag(0,1,1,1)", false},
        {"M(2)", "aux.m2", "diag(0,1,0,1)", "none", false},
        {"U(3)", "aux.m3", "diag(1,1,0,1)", "diag(0,1,1,1)", false},
        {"U_nil(2)", "aux.unil", "diag(1,0,0,1)", "diag(0,1,1,0)", true},
    };
    std::mt19937_64 rng(g.seed);
    bool all = true;
    json rows = json::array();
    for (const auto &e : exs) {
        Matrix m = build(e.id, sample_params(family(e.id), 0, rng));
        auto pu = partial_unitarity(m);
        std::string l = pu.left ? pu.left->str() : "none", r = pu.right ? pu.right->str() : "none";
        bool ok = l == e.left && r == e.right && pu.orthogonal == e.orth;
        rows.push_back({{"example", e.name}, {"left", l}, {"right", r}, {"orthogonal", pu.orthogonal}, {"ok", ok}});
        os << "  " << std::left << std::setw(9) << e.name << " left " << l << "  right " << r << "  orthogonal "
           << pu.orthogonal << (ok ? "  ok" : "  MISMATCH") << "\n";
        all &= ok;
    }
    j["examples"] = rows;
    return all ? 0 : 1;
}

int suite_braid_group(const Globals &g, json &j, std::ostringstream &os) {
    struct Case {
        std::string id;
        int n, m;
    };
    std::vector<Case> cases{{"yb.star8.c24", 2, 4}, {"tb.star8.b11", 3, 4}, {"tb.star8.b11", 3, 8}};
    std::mt19937_64 rng(g.seed);
    bool all = true;
    json rows = json::array();
    for (const auto &c : cases) {
        Matrix op = build(c.id, sample_params(family(c.id), 0, rng));
        auto r = braid_group_check(op, {c.n, 2}, c.m, g.tol);
        rows.push_back({{"family", c.id},
                        {"n", c.n},
                        {"m", c.m},
                        {"braid_relations", r.braid_relations},
                        {"far_tuples", r.far_tuples},
                        {"far_checks", r.far_checks},
                        {"max_residual", r.max_residual},
                        {"passed", r.passed}});
        os << "  n=" << c.n << " m=" << c.m << " " << c.id << ": " << r.braid_relations << " braid relations, "
           << r.far_tuples << " far tuples, residual " << std::scientific << std::setprecision(2) << r.max_residual
           << std::defaultfloat << (r.passed ? "  pass" : "  FAIL") << "\n";
        all &= r.passed;
    }
    j["checks"] = rows;
    return all ? 0 : 1;
}

int cmd_laws(const Globals &g, const std::string &suite) {
    json j = stamp("laws");
    j["suite"] = suite;
    j["seed"] = g.seed;
    std::ostringstream os;
    int rc;
    if (suite == "closure") {
        rc = suite_closure(g, j, os);
    } else if (suite == "identities") {
        rc = suite_identities(g, j, os);
    } else if (suite == "partial-unitarity") {
        rc = suite_partial_unitarity(g, j, os);
    } else if (suite == "braid-group") {
        rc = suite_braid_group(g, j, os);
    } else {
        throw UnknownId("unknown suite: " + suite + " (closure, identities, partial-unitarity, braid-group)");
    }
    j["passed"] = rc == 0;
    os << (rc == 0 ? "PASS" : "FAIL") << "\n";
    emit(g, j, os.str());
    return rc;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"braidkit: constant braid-equation solutions, polyadic structure and braiding gates"};
    app.set_version_flag("--version", BRAIDKIT_VERSION);
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--tol", g.tol, "relative tolerance for braid residuals")->capture_default_str();
    app.add_option("--seed", g.seed, "seed for sampled parameters")->capture_default_str();
    app.add_flag("--json", g.json, "emit a JSON report");

    auto *cat = app.add_subcommand("catalog", "list or build catalog families");
    cat->require_subcommand(1);
    auto *cat_list = cat->add_subcommand("list", "list all families");
    auto *cat_manifest = cat->add_subcommand("manifest", "print the family manifest (core/data/catalog.json)");
    auto *cat_build = cat->add_subcommand("build", "build one family matrix");
    std::string b_id, b_params, b_variant;
    cat_build->add_option("id", b_id, "family id")->required();
    cat_build->add_option("--params", b_params, "k=v,... (sampled from --seed when omitted)");
    cat_build->add_option("--variant", b_variant, "sign variant");

    auto *ver = app.add_subcommand("verify", "check the braid equation and metadata of a family");
    std::string v_id, v_params, v_variant;
    ver->add_option("id", v_id, "family id")->required();
    ver->add_option("--params", v_params, "k=v,... values: 1.5, pi/2, 1+2i, 2@pi/3");
    ver->add_option("--variant", v_variant, "sign variant");

    auto *srch = app.add_subcommand("search", "exhaustive permutation or value-grid search");
    SearchOpts so;
    srch->add_option("--space", so.space, "perms | pattern")->capture_default_str();
    srch->add_option("--dim", so.dim, "matrix dimension")->capture_default_str();
    srch->add_option("--arity", so.arity, "braid arity n")->capture_default_str();
    srch->add_option("--equation", so.equation, "full | partial-12 | partial-13 | partial-23")->capture_default_str();
    srch->add_option("--threads", so.threads, "worker threads")->capture_default_str();
    srch->add_option("--support", so.support, "pattern support: star8 | circ8 | empty")->capture_default_str();
    srch->add_option("--values", so.values, "comma separated value grid")->capture_default_str();
    srch->add_option("--cap", so.cap, "maximum number of candidates")->capture_default_str();

    auto *ent = app.add_subcommand("entangle", "transformed concurrence of a braiding gate on a product state");
    std::string e_gate, e_params, e_states, e_variant;
    int e_kappa = 1, e_L = 2;
    ent->add_option("gate", e_gate, "ua1 ua2 ua3 u8b1 u8b2 u8s1 u8s2 u16")->required();
    ent->add_option("--gate-params", e_params, "alpha=..,beta=..");
    ent->add_option("--state", e_states, "theta1,gamma1;theta2,gamma2[;theta3,gamma3]")->required();
    ent->add_option("--variant", e_variant, "upper | lower");
    ent->add_option("--kappa", e_kappa, "overall sign of the 8-vertex ternary gates (1 or -1)");
    ent->add_option("--L", e_L, "qubit count for ul");

    auto *laws = app.add_subcommand("laws", "run a suite of structural checks");
    std::string l_suite = "closure";
    laws->add_option("--suite", l_suite, "closure | identities | partial-unitarity | braid-group")
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cat_list) {
            return cmd_catalog_list(g);
        }
        if (*cat_manifest) {
            return cmd_catalog_manifest();
        }
        if (*cat_build) {
            return cmd_catalog_build(g, b_id, b_params, b_variant);
        }
        if (*ver) {
            return cmd_verify(g, v_id, v_params, v_variant);
        }
        if (*srch) {
            return cmd_search(g, so);
        }
        if (*ent) {
            return cmd_entangle(g, e_gate, e_params, e_states, e_variant, e_kappa, e_L);
        }
        if (*laws) {
            return cmd_laws(g, l_suite);
        }
    } catch (const UnknownId &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DimensionError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ConstraintViolation &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const CapExceeded &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: bad argument: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
