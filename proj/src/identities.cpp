#include "qforms/identities.hpp"

#include <functional>
#include <map>
#include <random>
#include <stdexcept>

#include "json.hpp"

#include "qforms/errors.hpp"

namespace qf {

namespace {

using ordered_json = nlohmann::ordered_json;

// Every quantity an identity can be stated in. Symbolic by default; the
// numeric mode replaces the entries by random integers.
struct Point {
    ParamPoint ab = symbolic_ab();
    ParamPoint alpha_beta = symbolic_alpha_beta();
    Polynomial theta = var(Var::u);
    Polynomial xi = var(Var::u);
    Polynomial eta = var(Var::v);
    Polynomial lambda = var(Var::u);
    bool numeric = false;

    std::vector<std::pair<std::string, std::string>> describe() const {
        if (!numeric) return {{"mode", "symbolic"}};
        return {{"mode", "numeric"},           {"a", ab.a.to_string()},
                {"b", ab.b.to_string()},       {"alpha", alpha_beta.a.to_string()},
                {"beta", alpha_beta.b.to_string()}, {"theta", theta.to_string()},
                {"xi", xi.to_string()},        {"eta", eta.to_string()},
                {"lambda", lambda.to_string()}};
    }
};

Point random_point(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> draw(-9, 9);
    Point p;
    p.numeric = true;
    do {
        p.ab = {draw(rng), draw(rng)};
        p.alpha_beta = {draw(rng), draw(rng)};
    } while (form_determinant(p.ab, p.alpha_beta).is_zero());
    p.theta = draw(rng);
    p.xi = draw(rng);
    p.eta = draw(rng);
    p.lambda = draw(rng);
    return p;
}

Polynomial sign_power(unsigned e) { return e % 2 ? -1 : 1; }

std::vector<Polynomial> table(Kind kind, const ParamPoint& ab, const ParamPoint& alpha_beta, unsigned n) {
    const unsigned top = top_index(kind, n);
    std::vector<Polynomial> rows;
    rows.reserve(top + 1);
    for (unsigned r = 0; r <= top; ++r) rows.push_back(coeff(kind, ab, alpha_beta, n, r));
    return rows;
}

// First nonzero row difference, or zero.
IdentityReport compare_rows(std::string id, unsigned n, const std::vector<Polynomial>& lhs,
                            const std::vector<Polynomial>& rhs) {
    if (lhs.size() != rhs.size()) throw std::logic_error("row count mismatch in " + id);
    for (std::size_t i = 0; i < lhs.size(); ++i)
        if (lhs[i] != rhs[i]) return make_report(std::move(id), n, lhs[i], rhs[i]);
    return make_report(std::move(id), n, 0, 0);
}

IdentityReport with_params(IdentityReport r, const Point& p) {
    r.params = p.describe();
    return r;
}

IdentityReport sum_theta(Kind kind, unsigned n, const Point& p, const Polynomial& theta, std::string id) {
    const auto rows = table(kind, p.ab, p.alpha_beta, n);
    Polynomial lhs;
    Polynomial power = 1;
    for (const auto& row : rows) {
        lhs += row * power;
        power *= theta;
    }
    const ParamPoint shifted{p.ab.a - p.alpha_beta.a * theta, p.ab.b - p.alpha_beta.b * theta};
    return with_params(make_report(std::move(id), n, lhs, value(kind, shifted, n)), p);
}

IdentityReport sum_general(Kind kind, unsigned n, const Point& p) {
    const auto rows = table(kind, p.ab, p.alpha_beta, n);
    const unsigned top = static_cast<unsigned>(rows.size()) - 1;
    Polynomial lhs;
    for (unsigned r = 0; r <= top; ++r) lhs += rows[r] * pow(p.xi, top - r) * pow(p.eta, r);
    const ParamPoint mixed{p.ab.a * p.xi - p.alpha_beta.a * p.eta, p.ab.b * p.xi - p.alpha_beta.b * p.eta};
    return with_params(make_report(std::string("sum-general-") + kind_name(kind), n, lhs, value(kind, mixed, n)), p);
}

IdentityReport sum_binom(Kind kind, unsigned n, unsigned k, const Point& p, bool general) {
    const auto rows = table(kind, p.ab, p.alpha_beta, n);
    const unsigned top = static_cast<unsigned>(rows.size()) - 1;
    if (k > top) throw IndexOutOfRange("binomial index exceeds the table");
    Polynomial lhs;
    for (unsigned r = k; r <= top; ++r) {
        Polynomial w = general ? pow(p.xi, top - r) * pow(p.eta, r - k) : pow(p.theta, r - k);
        lhs += scale(rows[r] * w, binomial(r, k));
    }
    const ParamPoint shifted = general
        ? ParamPoint{p.ab.a * p.xi - p.alpha_beta.a * p.eta, p.ab.b * p.xi - p.alpha_beta.b * p.eta}
        : ParamPoint{p.ab.a - p.alpha_beta.a * p.theta, p.ab.b - p.alpha_beta.b * p.theta};
    const std::string id = std::string(general ? "sum-binom-general-" : "sum-binom-") + kind_name(kind) +
                           "-k" + std::to_string(k);
    return with_params(make_report(id, n, lhs, coeff(kind, shifted, p.alpha_beta, n, k)), p);
}

IdentityReport sum_binom_all(Kind kind, unsigned n, const Point& p, bool general) {
    IdentityReport last;
    for (unsigned k = 0; k <= top_index(kind, n); ++k) {
        last = sum_binom(kind, n, k, p, general);
        if (!last.holds) return last;
    }
    last.identity_id = std::string(general ? "sum-binom-general-" : "sum-binom-") + kind_name(kind);
    return last;
}

IdentityReport scaling(Kind kind, ScalingLaw law, unsigned n, const Point& p) {
    const std::string id = std::string(scaling_name(law)) + "-" + kind_name(kind);
    const unsigned top = top_index(kind, n);
    const Polynomial& l = p.lambda;
    if (law == ScalingLaw::CommonFactor) {
        const ParamPoint scaled{l * p.ab.a, l * p.ab.b};
        return with_params(make_report(id, n, pow(l, top) * value(kind, p.ab, n), value(kind, scaled, n)), p);
    }
    std::vector<Polynomial> lhs, rhs;
    for (unsigned r = 0; r <= top; ++r) {
        switch (law) {
        case ScalingLaw::Partner:
            lhs.push_back(coeff(kind, p.ab, {l * p.alpha_beta.a, l * p.alpha_beta.b}, n, r));
            rhs.push_back(pow(l, r) * coeff(kind, p.ab, p.alpha_beta, n, r));
            break;
        case ScalingLaw::Base:
            lhs.push_back(coeff(kind, {l * p.ab.a, l * p.ab.b}, p.alpha_beta, n, r));
            rhs.push_back(pow(l, top - r) * coeff(kind, p.ab, p.alpha_beta, n, r));
            break;
        case ScalingLaw::Swap:
            lhs.push_back(coeff(kind, p.ab, p.alpha_beta, n, r));
            rhs.push_back(sign_power(top) * coeff(kind, p.alpha_beta, p.ab, n, top - r));
            break;
        case ScalingLaw::CommonFactor:
            break;
        }
    }
    return with_params(compare_rows(id, n, lhs, rhs), p);
}

IdentityReport product(unsigned n, const Point& p) {
    return with_params(make_report("product", n, phi(p.ab, 2 * n), phi(p.ab, n) * psi(p.ab, n)), p);
}

IdentityReport parity(Kind kind, unsigned n, const Point& p) {
    const ParamPoint flipped_b{p.ab.a, -p.ab.b};
    const ParamPoint both{-p.ab.a, -p.ab.b};
    const Kind other = kind == Kind::Psi ? Kind::Phi : Kind::Psi;
    const Kind target = n % 2 ? other : kind;
    return with_params(make_report(std::string("parity-") + kind_name(kind), n, value(kind, flipped_b, n),
                                   value(target, both, n)),
                       p);
}

IdentityReport xy_formula_at(Kind kind, unsigned n, const Polynomial& x, const Polynomial& y) {
    const ParamPoint point{x * y, -(x * x) - y * y};
    Substitution s{{Var::x, x}, {Var::y, y}};
    return make_report(std::string("xy-formula-") + kind_name(kind), n, value(kind, point, n),
                       substitute(power_quotient(kind, n), s));
}

// Forward, reverse and (for Phi) the from-Psi route must agree row by row.
IdentityReport coeff_routes(Kind kind, unsigned n, const Point& p) {
    const unsigned top = top_index(kind, n);
    std::vector<Polynomial> forward, other;
    for (unsigned r = 0; r <= top; ++r) {
        forward.push_back(coeff(kind, p.ab, p.alpha_beta, n, r));
        other.push_back(coeff_reverse(kind, p.ab, p.alpha_beta, n, r));
    }
    auto report = compare_rows(std::string("coeff-routes-") + kind_name(kind), n, forward, other);
    if (report.holds && kind == Kind::Phi) {
        other.clear();
        for (unsigned r = 0; r <= top; ++r) other.push_back(phi_coeff_from_psi(p.ab, p.alpha_beta, n, r));
        report = compare_rows(report.identity_id, n, forward, other);
    }
    return with_params(std::move(report), p);
}

IdentityReport value_routes(Kind kind, unsigned n, const Point& p) {
    const std::string id = std::string("value-routes-") + kind_name(kind);
    const Polynomial rec = value(kind, p.ab, n);
    const Polynomial bin = kind == Kind::Psi ? psi_binomial(p.ab, n) : phi_binomial(p.ab, n);
    if (rec != bin) return with_params(make_report(id, n, rec, bin), p);
    const auto a = p.ab.a.constant_value();
    const auto b = p.ab.b.constant_value();
    if (a && b && *b != 2 * *a && *b != -2 * *a) {
        const BigRational closed = kind == Kind::Psi ? psi_closed_exact(*a, *b, n) : phi_closed_exact(*a, *b, n);
        if (closed.get_den() != 1) return with_params(make_report(id, n, rec, rec + 1), p);
        return with_params(make_report(id, n, rec, Polynomial(BigInt(closed.get_num()))), p);
    }
    return with_params(make_report(id, n, rec, bin), p);
}

Kind kind_from_suffix(const std::string& name, std::string& stem) {
    auto ends = [&](const char* s) {
        std::string suffix(s);
        return name.size() > suffix.size() && name.compare(name.size() - suffix.size(), suffix.size(), suffix) == 0;
    };
    if (ends("-psi")) {
        stem = name.substr(0, name.size() - 4);
        return Kind::Psi;
    }
    if (ends("-phi")) {
        stem = name.substr(0, name.size() - 4);
        return Kind::Phi;
    }
    stem = name;
    return Kind::Psi;
}

} // namespace

std::string to_json(const IdentityReport& report) {
    ordered_json j;
    j["identity_id"] = report.identity_id;
    j["n"] = report.n;
    ordered_json params = ordered_json::object();
    for (const auto& [k, v] : report.params) params[k] = v;
    j["params"] = params;
    j["verdict"] = report.holds ? "Holds" : "Fails";
    if (!report.holds) j["witness"] = report.witness.to_string();
    return j.dump();
}

IdentityReport make_report(std::string id, unsigned n, const Polynomial& lhs, const Polynomial& rhs) {
    IdentityReport r;
    r.identity_id = std::move(id);
    r.n = n;
    r.witness = lhs - rhs;
    r.holds = r.witness.is_zero();
    return r;
}

Polynomial power_quotient(Kind kind, unsigned n, FormVars vars) {
    const Polynomial x = var(vars.x);
    const Polynomial y = var(vars.y);
    if (kind == Kind::Psi) {
        Polynomial num = pow(x, n) + pow(y, n);
        return delta(n) ? exact_divide(num, x + y) : num;
    }
    if (n == 0) throw IndexOutOfRange("difference quotient needs n >= 1");
    Polynomial q = exact_divide(pow(x, n) - pow(y, n), x - y);
    return delta(n - 1) ? exact_divide(q, x + y) : q;
}

Polynomial binary_form(const ParamPoint& p, FormVars vars) {
    const Polynomial x = var(vars.x);
    const Polynomial y = var(vars.y);
    return p.a * (x * x + y * y) + p.b * x * y;
}

Polynomial expansion_lhs(Kind kind, unsigned n, const ParamPoint& ab, const ParamPoint& alpha_beta, FormVars vars) {
    return pow(form_determinant(ab, alpha_beta), top_index(kind, n)) * power_quotient(kind, n, vars);
}

Polynomial expansion_rhs_from(const std::vector<Polynomial>& entries, const ParamPoint& ab,
                              const ParamPoint& alpha_beta, FormVars vars) {
    const Polynomial q1 = binary_form(alpha_beta, vars);
    const Polynomial q2 = binary_form(ab, vars);
    const unsigned top = static_cast<unsigned>(entries.size()) - 1;
    std::vector<Polynomial> p1{1}, p2{1};
    for (unsigned i = 1; i <= top; ++i) {
        p1.push_back(p1.back() * q1);
        p2.push_back(p2.back() * q2);
    }
    Polynomial sum;
    for (unsigned r = 0; r <= top; ++r) sum += entries[r] * (p1[top - r] * p2[r]);
    return sum;
}

Polynomial expansion_rhs(Kind kind, unsigned n, const ParamPoint& ab, const ParamPoint& alpha_beta, FormVars vars) {
    return expansion_rhs_from(table(kind, ab, alpha_beta, n), ab, alpha_beta, vars);
}

Polynomial expansion_lhs(Kind kind, unsigned n) {
    return expansion_lhs(kind, n, symbolic_ab(), symbolic_alpha_beta());
}

Polynomial expansion_rhs(Kind kind, unsigned n) {
    return expansion_rhs(kind, n, symbolic_ab(), symbolic_alpha_beta());
}

IdentityReport verify_expansion_at(Kind kind, unsigned n, const ParamPoint& ab, const ParamPoint& alpha_beta,
                                   FormVars vars) {
    const std::string id = kind == Kind::Psi ? "expansion-plus" : "expansion-minus";
    return make_report(id, n, expansion_lhs(kind, n, ab, alpha_beta, vars),
                       expansion_rhs(kind, n, ab, alpha_beta, vars));
}

IdentityReport verify_expansion(Kind kind, unsigned n) {
    auto r = verify_expansion_at(kind, n, symbolic_ab(), symbolic_alpha_beta());
    r.params = {{"mode", "symbolic"}};
    return r;
}

IdentityReport verify_expansion_numeric(Kind kind, unsigned n, unsigned samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed ^ (static_cast<std::uint64_t>(n) << 32) ^ static_cast<std::uint64_t>(kind));
    IdentityReport last;
    for (unsigned i = 0; i < samples; ++i) {
        const Point p = random_point(rng);
        last = with_params(verify_expansion_at(kind, n, p.ab, p.alpha_beta), p);
        if (!last.holds) return last;
    }
    last.params = {{"mode", "numeric"}, {"samples", std::to_string(samples)}, {"seed", std::to_string(seed)}};
    return last;
}

IdentityReport verify_haldeman() {
    const ParamPoint ab{1, 1};
    const ParamPoint alpha_beta{1, 2};
    const std::vector<std::pair<std::string, std::string>> params = {
        {"a", "1"}, {"b", "1"}, {"alpha", "1"}, {"beta", "2"}};

    auto report = verify_expansion_at(Kind::Psi, 4, ab, alpha_beta);
    report.identity_id = "haldeman";
    report.params = params;
    if (!report.holds) return report;

    if (Polynomial middle = coeff(Kind::Psi, ab, alpha_beta, 4, 1); !middle.is_zero()) {
        report = make_report("haldeman", 4, middle, 0);
        report.params = params;
        return report;
    }
    const Polynomial x = var(Var::x), y = var(Var::y);
    const Polynomial q = x * x + x * y + y * y;
    report = make_report("haldeman", 4, pow(x, 4) + pow(y, 4) + pow(x + y, 4), 2 * q * q);
    report.params = params;
    return report;
}

IdentityReport verify_sum_theta(Kind kind, unsigned n) {
    Point p;
    return sum_theta(kind, n, p, p.theta, std::string("sum-theta-") + kind_name(kind));
}

IdentityReport verify_sum_theta_at(Kind kind, unsigned n, long theta) {
    Point p;
    const std::string id = std::string(theta == 1 ? "sum-one-" : theta == -1 ? "sum-minus-one-" : "sum-theta-") +
                           kind_name(kind);
    auto r = sum_theta(kind, n, p, Polynomial(theta), id);
    r.params.emplace_back("theta", std::to_string(theta));
    return r;
}

IdentityReport verify_sum_general(Kind kind, unsigned n) { return sum_general(kind, n, Point{}); }

IdentityReport verify_sum_binom(Kind kind, unsigned n, unsigned k) { return sum_binom(kind, n, k, Point{}, false); }

IdentityReport verify_sum_binom_general(Kind kind, unsigned n, unsigned k) {
    return sum_binom(kind, n, k, Point{}, true);
}

IdentityReport verify_xy_formula(Kind kind, unsigned n) {
    auto r = xy_formula_at(kind, n, var(Var::x), var(Var::y));
    r.params = {{"mode", "symbolic"}};
    return r;
}

Polynomial jacobian_det(const ParamPoint& alpha_beta, const ParamPoint& ab) {
    const Polynomial q1 = binary_form(alpha_beta);
    const Polynomial q2 = binary_form(ab);
    return partial(q1, Var::x) * partial(q2, Var::y) - partial(q1, Var::y) * partial(q2, Var::x);
}

IdentityReport verify_trajectory_sum_powers(Kind kind, unsigned n) {
    const Polynomial x = var(Var::x), y = var(Var::y), z = var(Var::z), t = var(Var::t);
    const Polynomial u = var(Var::u), v = var(Var::v);
    const ParamPoint from{x * y, -(x * x) - y * y};
    const ParamPoint to{-(z * t), z * z + t * t};
    const std::string id = kind == Kind::Psi ? "trajectory-sum-powers" : "trajectory-difference-powers";

    Polynomial total;
    for (unsigned r = 0; r <= top_index(kind, n); ++r) total += coeff(kind, from, to, n, r);
    const ParamPoint joined{x * y + z * t, -(x * x) - y * y - z * z - t * t};
    auto report = make_report(id, n, total, value(kind, joined, n));
    report.params = {{"mode", "symbolic"}};
    if (!report.holds || n > 10) return report;

    // The factored shapes of the two forms and the determinant in (u, v).
    const FormVars uv{Var::u, Var::v};
    const std::vector<std::pair<Polynomial, Polynomial>> shapes = {
        {binary_form(to, uv), (z * u - t * v) * (z * v - t * u)},
        {binary_form(from, uv), (u * x - v * y) * (u * y - v * x)},
        {form_determinant(from, to), (z * x - t * y) * (z * y - t * x)},
    };
    for (const auto& [lhs, rhs] : shapes) {
        if (lhs != rhs) {
            report = make_report(id, n, lhs, rhs);
            report.params = {{"mode", "symbolic"}};
            return report;
        }
    }
    report = verify_expansion_at(kind, n, from, to, uv);
    report.identity_id = id;
    report.params = {{"mode", "symbolic"}, {"vars", "u,v"}};
    return report;
}

const char* scaling_name(ScalingLaw law) {
    switch (law) {
    case ScalingLaw::Partner: return "scaling-partner";
    case ScalingLaw::Base: return "scaling-base";
    case ScalingLaw::Swap: return "scaling-swap";
    case ScalingLaw::CommonFactor: return "common-factor";
    }
    return "scaling";
}

IdentityReport verify_scaling(Kind kind, ScalingLaw law, unsigned n) { return scaling(kind, law, n, Point{}); }

IdentityReport verify_product(unsigned n) { return product(n, Point{}); }

IdentityReport verify_parity(Kind kind, unsigned n) { return parity(kind, n, Point{}); }

IdentityReport verify_operator_exhaustion(Kind kind, unsigned n) {
    const unsigned top = top_index(kind, n);
    const DiffMap d = {{Var::a, var(Var::alpha)}, {Var::b, var(Var::beta)}};
    Polynomial image = apply_diff_map(value(kind, symbolic_ab(), n), d, top);
    image = exact_scalar_divide(image, factorial(top));
    auto r = make_report(std::string("exhaustion-") + kind_name(kind), n, image, value(kind, symbolic_alpha_beta(), n));
    r.params = {{"mode", "symbolic"}};
    return r;
}

// ---------------------------------------------------------------------------
// Selector table shared by the CLI and the test harnesses.

namespace {

using Checker = std::function<IdentityReport(Kind, unsigned, const Point&)>;

struct Entry {
    bool per_kind;
    bool takes_n;
    bool numeric_ok;
    Checker check;
};

const std::map<std::string, Entry>& entries() {
    static const std::map<std::string, Entry> table = {
        {"expansion-plus",
         {false, true, true,
          [](Kind, unsigned n, const Point& p) {
              return with_params(verify_expansion_at(Kind::Psi, n, p.ab, p.alpha_beta), p);
          }}},
        {"expansion-minus",
         {false, true, true,
          [](Kind, unsigned n, const Point& p) {
              return with_params(verify_expansion_at(Kind::Phi, n, p.ab, p.alpha_beta), p);
          }}},
        {"haldeman", {false, false, false, [](Kind, unsigned, const Point&) { return verify_haldeman(); }}},
        {"sum-theta",
         {true, true, true,
          [](Kind k, unsigned n, const Point& p) {
              return sum_theta(k, n, p, p.theta, std::string("sum-theta-") + kind_name(k));
          }}},
        {"sum-one",
         {true, true, true,
          [](Kind k, unsigned n, const Point& p) {
              return sum_theta(k, n, p, 1, std::string("sum-one-") + kind_name(k));
          }}},
        {"sum-minus-one",
         {true, true, true,
          [](Kind k, unsigned n, const Point& p) {
              return sum_theta(k, n, p, -1, std::string("sum-minus-one-") + kind_name(k));
          }}},
        {"sum-general", {true, true, true, [](Kind k, unsigned n, const Point& p) { return sum_general(k, n, p); }}},
        {"sum-binom",
         {true, true, true, [](Kind k, unsigned n, const Point& p) { return sum_binom_all(k, n, p, false); }}},
        {"sum-binom-general",
         {true, true, true, [](Kind k, unsigned n, const Point& p) { return sum_binom_all(k, n, p, true); }}},
        {"xy-formula",
         {true, true, false, [](Kind k, unsigned n, const Point&) { return verify_xy_formula(k, n); }}},
        {"trajectory-sum-powers",
         {false, true, false,
          [](Kind, unsigned n, const Point&) { return verify_trajectory_sum_powers(Kind::Psi, n); }}},
        {"trajectory-difference-powers",
         {false, true, false,
          [](Kind, unsigned n, const Point&) { return verify_trajectory_sum_powers(Kind::Phi, n); }}},
        {"scaling-partner",
         {true, true, true,
          [](Kind k, unsigned n, const Point& p) { return scaling(k, ScalingLaw::Partner, n, p); }}},
        {"scaling-base",
         {true, true, true, [](Kind k, unsigned n, const Point& p) { return scaling(k, ScalingLaw::Base, n, p); }}},
        {"scaling-swap",
         {true, true, true, [](Kind k, unsigned n, const Point& p) { return scaling(k, ScalingLaw::Swap, n, p); }}},
        {"common-factor",
         {true, true, true,
          [](Kind k, unsigned n, const Point& p) { return scaling(k, ScalingLaw::CommonFactor, n, p); }}},
        {"product", {false, true, true, [](Kind, unsigned n, const Point& p) { return product(n, p); }}},
        {"parity", {true, true, true, [](Kind k, unsigned n, const Point& p) { return parity(k, n, p); }}},
        {"exhaustion",
         {true, true, false, [](Kind k, unsigned n, const Point&) { return verify_operator_exhaustion(k, n); }}},
        {"coeff-routes", {true, true, true, [](Kind k, unsigned n, const Point& p) { return coeff_routes(k, n, p); }}},
        {"value-routes", {true, true, true, [](Kind k, unsigned n, const Point& p) { return value_routes(k, n, p); }}},
    };
    return table;
}

} // namespace

const std::vector<IdentitySelector>& identity_selectors() {
    static const std::vector<IdentitySelector> list = [] {
        std::vector<IdentitySelector> out;
        for (const auto& [name, e] : entries()) {
            if (e.per_kind) {
                out.push_back({name + "-psi", e.takes_n, 1});
                out.push_back({name + "-phi", e.takes_n, 1});
            } else {
                out.push_back({name, e.takes_n, e.takes_n ? 1u : 0u});
            }
        }
        return out;
    }();
    return list;
}

IdentityReport run_identity(const std::string& selector, unsigned n, bool numeric, unsigned samples,
                            std::uint64_t seed) {
    std::string stem;
    const Kind kind = kind_from_suffix(selector, stem);
    auto it = entries().find(stem);
    if (it == entries().end() || (it->second.per_kind && stem == selector) ||
        (!it->second.per_kind && stem != selector))
        throw ConfigError("unknown identity '" + selector + "'");
    const Entry& e = it->second;
    if (e.takes_n && n < 1) throw IndexOutOfRange("identity '" + selector + "' needs n >= 1");

    if (!numeric || !e.numeric_ok) return e.check(kind, n, Point{});

    std::mt19937_64 rng(seed ^ (static_cast<std::uint64_t>(n) * 0x9e3779b97f4a7c15ull));
    IdentityReport last;
    for (unsigned i = 0; i < samples; ++i) {
        last = e.check(kind, n, random_point(rng));
        if (!last.holds) return last;
    }
    last.params = {{"mode", "numeric"}, {"samples", std::to_string(samples)}, {"seed", std::to_string(seed)}};
    return last;
}

} // namespace qf
