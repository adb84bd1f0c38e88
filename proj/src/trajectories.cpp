#include "qforms/trajectories.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "json.hpp"

#include "qforms/errors.hpp"
#include "qforms/sequences.hpp"

namespace qf {

namespace {

// Largest Fermat-orbit exponent k accepted; the order is 2^k.
constexpr unsigned kMaxFermatK = 7;

std::string fold(std::string_view s) {
    std::string out;
    for (char c : s)
        if (c != '-' && c != '_') out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

std::vector<CatalogEntry> make_catalog() {
    const Polynomial x = var(Var::x), y = var(Var::y), z = var(Var::z), t = var(Var::t);
    const Polynomial x1 = var(Var::x1), x2 = var(Var::x2), par = var(Var::par);
    const FormVars zt{Var::z, Var::t};
    const FormVars uv{Var::u, Var::v};
    const ParamPoint lucas{-1, -3}, lucas_to{-1, 3};
    const ParamPoint pell_to{1, 6};
    const ParamPoint mersenne{2, -5}, mersenne_to{2, 5};
    const ParamPoint cheb_first{1, 2 - 4 * x1 * x1};
    const ParamPoint dickson_to{-par, -2 * par + x2 * x2};
    const ParamPoint sums_from{x * y, -(x * x) - y * y};
    const ParamPoint sums_to{-(z * t), z * z + t * t};
    using N = TrajectoryName;
    using K = Kind;
    return {
        {N::ChebyshevLucas, "chebyshev-lucas", K::Psi, {1, 2 - 4 * x * x}, {1, 3}, Parity::Any, zt},
        {N::LucasFibonacci, "lucas-fibonacci", K::Psi, lucas, lucas_to, Parity::Odd, zt},
        {N::LucasOrbit, "lucas-orbit", K::Psi, lucas, lucas_to, Parity::Even, zt},
        {N::LucasPell, "lucas-pell", K::Psi, lucas, pell_to, Parity::Any, zt},
        {N::FibonacciPell, "fibonacci-pell", K::Phi, lucas, pell_to, Parity::Any, zt},
        {N::FibonacciOrbit, "fibonacci-orbit", K::Phi, lucas, lucas_to, Parity::Even, zt},
        {N::FibonacciLucas, "fibonacci-lucas", K::Phi, lucas, lucas_to, Parity::Odd, zt},
        {N::MersenneOrbit, "mersenne-orbit", K::Phi, mersenne, mersenne_to, Parity::Even, zt},
        {N::MersenneTrajectory, "mersenne-trajectory", K::Phi, mersenne, mersenne_to, Parity::Odd, zt},
        {N::ChebyshevDicksonFirst, "chebyshev-dickson-first", K::Psi, cheb_first, dickson_to, Parity::Any, zt},
        {N::ChebyshevDicksonSecond, "chebyshev-dickson-second", K::Phi, cheb_first, dickson_to, Parity::Any, zt},
        {N::FermatOrbit, "fermat-orbit", K::Psi, {-2, -5}, {-2, 5}, Parity::Even, zt},
        {N::SumsOfPowers, "sums-of-powers", K::Psi, sums_from, sums_to, Parity::Any, uv},
        {N::DifferenceOfPowers, "difference-of-powers", K::Phi, sums_from, sums_to, Parity::Any, uv},
    };
}

Polynomial rename(const Polynomial& p, Var from, Var to) { return substitute(p, {{from, var(to)}}); }

Polynomial int_term(SequenceName s, unsigned n) { return oracle_term(s, n); }

// p / base^delta(n + offset)
Polynomial strip(const Polynomial& p, const Polynomial& base, unsigned n, unsigned offset) {
    return delta(n + offset) ? exact_divide(p, base) : p;
}

bool is_orbit_entry(TrajectoryName name) {
    switch (name) {
    case TrajectoryName::LucasOrbit:
    case TrajectoryName::FibonacciOrbit:
    case TrajectoryName::MersenneOrbit:
    case TrajectoryName::FermatOrbit: return true;
    default: return false;
    }
}

nlohmann::ordered_json point_json(const ParamPoint& p) { return {p.a.to_string(), p.b.to_string()}; }

} // namespace

Trajectory trajectory(const TrajectorySpec& spec) {
    CoeffTable table = coeff_table(spec.kind, spec.from, spec.to, spec.n);
    Trajectory tr{spec, std::move(table.entries), {}, {}, false};
    tr.start_value = value(spec.kind, spec.from, spec.n);
    tr.end_value = value(spec.kind, {-spec.to.a, -spec.to.b}, spec.n);
    if (tr.terms.front() != tr.start_value || tr.terms.back() != tr.end_value)
        throw Error("trajectory endpoints disagree with the recurrence");
    tr.is_orbit = tr.start_value == tr.end_value;
    return tr;
}

const std::vector<CatalogEntry>& trajectory_catalog() {
    static const std::vector<CatalogEntry> catalog = make_catalog();
    return catalog;
}

const CatalogEntry& catalog_entry(TrajectoryName name) {
    const auto& c = trajectory_catalog();
    return *std::find_if(c.begin(), c.end(), [name](const CatalogEntry& e) { return e.name == name; });
}

TrajectoryName trajectory_from_name(std::string_view text) {
    const std::string key = fold(text);
    for (const auto& e : trajectory_catalog())
        if (fold(e.slug) == key) return e.name;
    throw ConfigError("unknown trajectory '" + std::string(text) + "'");
}

unsigned catalog_order(TrajectoryName name, unsigned arg) {
    if (name != TrajectoryName::FermatOrbit) return arg;
    if (arg < 1 || arg > kMaxFermatK)
        throw IndexOutOfRange("fermat orbit exponent k must lie in [1, " + std::to_string(kMaxFermatK) + "]");
    return 1u << arg;
}

std::pair<Polynomial, Polynomial> expected_endpoints(TrajectoryName name, unsigned n) {
    using S = SequenceName;
    const Polynomial two_pow = Polynomial(BigInt(ipow(BigInt(2), n)));
    auto cheb_start = [&](Var v) {
        Polynomial t = rename(oracle_term(S::ChebyshevT, n), Var::x, v);
        t = delta(n + 1) ? 2 * t : t;
        return strip(t, var(v), n, 0);
    };
    switch (name) {
    case TrajectoryName::ChebyshevLucas: return {cheb_start(Var::x), int_term(S::Lucas, n)};
    case TrajectoryName::LucasFibonacci: return {int_term(S::Lucas, n), int_term(S::Fibonacci, n)};
    case TrajectoryName::LucasOrbit: return {int_term(S::Lucas, n), int_term(S::Lucas, n)};
    case TrajectoryName::LucasPell:
        return {int_term(S::Lucas, n), strip(int_term(S::PellLucas, n), 2, n, 0)};
    case TrajectoryName::FibonacciPell:
        return {int_term(S::Fibonacci, n), strip(int_term(S::Pell, n), 2, n, 1)};
    case TrajectoryName::FibonacciOrbit: return {int_term(S::Fibonacci, n), int_term(S::Fibonacci, n)};
    case TrajectoryName::FibonacciLucas: return {int_term(S::Fibonacci, n), int_term(S::Lucas, n)};
    case TrajectoryName::MersenneOrbit: {
        Polynomial m = exact_scalar_divide(two_pow - 1, 3);
        return {m, m};
    }
    case TrajectoryName::MersenneTrajectory: return {two_pow - 1, exact_scalar_divide(two_pow + 1, 3)};
    case TrajectoryName::ChebyshevDicksonFirst: {
        Polynomial d = rename(oracle_term(S::DicksonD, n), Var::x, Var::x2);
        return {cheb_start(Var::x1), strip(d, var(Var::x2), n, 0)};
    }
    case TrajectoryName::ChebyshevDicksonSecond: {
        if (n == 0) throw IndexOutOfRange("second-kind trajectories need n >= 1");
        Polynomial u = rename(oracle_term(S::ChebyshevU, n - 1), Var::x, Var::x1);
        Polynomial e = rename(oracle_term(S::DicksonE, n - 1), Var::x, Var::x2);
        return {strip(u, 2 * var(Var::x1), n, 1), strip(e, var(Var::x2), n, 1)};
    }
    case TrajectoryName::FermatOrbit: return {two_pow + 1, two_pow + 1};
    case TrajectoryName::SumsOfPowers:
        return {power_quotient(Kind::Psi, n), power_quotient(Kind::Psi, n, {Var::z, Var::t})};
    case TrajectoryName::DifferenceOfPowers:
        return {power_quotient(Kind::Phi, n), power_quotient(Kind::Phi, n, {Var::z, Var::t})};
    }
    throw ConfigError("unknown trajectory");
}

Trajectory named_trajectory(TrajectoryName name, unsigned arg) {
    const CatalogEntry& e = catalog_entry(name);
    const unsigned n = catalog_order(name, arg);
    if (n == 0) throw IndexOutOfRange("trajectory order must be positive");
    if ((e.parity == Parity::Even && n % 2) || (e.parity == Parity::Odd && n % 2 == 0))
        throw ParityMismatch(std::string(e.slug) + " requires " + (e.parity == Parity::Even ? "even" : "odd") +
                             " n, got " + std::to_string(n));

    Trajectory tr = trajectory({e.kind, e.from, e.to, n});
    const auto [start, end] = expected_endpoints(name, n);
    if (tr.start_value != start || tr.end_value != end)
        throw Error(std::string(e.slug) + ": endpoints disagree with their classical labels");
    if (is_orbit_entry(name) && !tr.is_orbit) throw Error(std::string(e.slug) + ": expected an orbit");
    return tr;
}

IdentityReport verify_box_identity(TrajectoryName name, unsigned n) {
    const CatalogEntry& e = catalog_entry(name);
    Trajectory tr = trajectory({e.kind, e.from, e.to, n});
    auto r = make_report("box-" + std::string(e.slug), n, expansion_lhs(e.kind, n, e.from, e.to, e.box_vars),
                         expansion_rhs_from(tr.terms, e.from, e.to, e.box_vars));
    r.params = {{"trajectory", std::string(e.slug)}};
    return r;
}

std::vector<Polynomial> combined_fibonacci_lucas_orbit(unsigned n) {
    if (n % 2 == 0) throw ParityMismatch("the combined orbit needs odd n, got " + std::to_string(n));
    const ParamPoint from{-1, -3}, to{-1, 3};
    const auto first = trajectory({Kind::Phi, from, to, n}).terms;
    const auto second = trajectory({Kind::Psi, from, to, n}).terms;
    std::vector<Polynomial> out = first;
    out.insert(out.end(), second.begin() + 1, second.end());
    return out;
}

IdentityReport trajectory_sum_check(const TrajectorySpec& spec, const Polynomial& theta) {
    const Trajectory tr = trajectory(spec);
    Polynomial lhs;
    Polynomial power = 1;
    for (const auto& t : tr.terms) {
        lhs += t * power;
        power *= theta;
    }
    const ParamPoint shifted{spec.from.a - spec.to.a * theta, spec.from.b - spec.to.b * theta};
    auto r = make_report("trajectory-sum", spec.n, lhs, value(spec.kind, shifted, spec.n));
    r.params = {{"theta", theta.to_string()}};
    return r;
}

std::string to_json(const Trajectory& t) {
    nlohmann::ordered_json j;
    j["kind"] = kind_name(t.spec.kind);
    j["from"] = point_json(t.spec.from);
    j["to"] = point_json(t.spec.to);
    j["n"] = t.spec.n;
    auto terms = nlohmann::ordered_json::array();
    for (const auto& p : t.terms) terms.push_back(p.to_string());
    j["terms"] = terms;
    j["is_orbit"] = t.is_orbit;
    return j.dump();
}

std::string to_csv(const Trajectory& t) {
    std::ostringstream out;
    out << "r,term\n";
    for (std::size_t r = 0; r < t.terms.size(); ++r) out << r << ',' << t.terms[r].to_string() << '\n';
    return out.str();
}

} // namespace qf
