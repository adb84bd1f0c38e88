#include "properties.hpp"

#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "qforms/errors.hpp"
#include "qforms/identities.hpp"
#include "qforms/psiphi.hpp"
#include "qforms/search.hpp"
#include "qforms/sequences.hpp"
#include "qforms/trajectories.hpp"

namespace props {

namespace {

using namespace qf;

using Rng = std::mt19937_64;

long draw(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

const std::vector<Var> kPolyVars = {Var::x, Var::y, Var::a, Var::b};

Polynomial random_poly(Rng& rng, int max_terms = 4, unsigned max_exp = 3) {
    Polynomial p;
    const int terms = static_cast<int>(draw(rng, 0, max_terms));
    for (int i = 0; i < terms; ++i) {
        Monomial m;
        for (Var v : kPolyVars) m = m.with_exponent(v, static_cast<unsigned>(draw(rng, 0, max_exp)));
        p += Polynomial::term(m, draw(rng, -9, 9));
    }
    return p;
}

std::map<Var, long> random_assignment(Rng& rng) {
    std::map<Var, long> at;
    for (Var v : all_vars()) at[v] = draw(rng, -6, 6);
    return at;
}

ParamPoint random_point(Rng& rng) { return {draw(rng, -9, 9), draw(rng, -9, 9)}; }

std::pair<ParamPoint, ParamPoint> random_pair(Rng& rng) {
    for (;;) {
        auto p = random_point(rng), q = random_point(rng);
        if (!form_determinant(p, q).is_zero()) return {p, q};
    }
}

struct Suite {
    std::vector<Result> results;

    void check(const std::string& module, const std::string& name, const std::function<std::string()>& body) {
        std::string failure;
        try {
            failure = body();
        } catch (const std::exception& e) {
            failure = std::string("exception: ") + e.what();
        }
        results.push_back({module, name, failure.empty(), failure});
    }
};

std::string describe(const Polynomial& p) { return p.to_string(); }

void polyring(Suite& s, Rng& rng) {
    s.check("polyring", "ring axioms", [&]() -> std::string {
        for (int i = 0; i < 200; ++i) {
            auto p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
            if ((p + q) + r != p + (q + r)) return "additive associativity at " + describe(p);
            if (p + q != q + p) return "additive commutativity";
            if ((p * q) * r != p * (q * r)) return "multiplicative associativity";
            if (p * q != q * p) return "multiplicative commutativity";
            if (p * (q + r) != p * q + p * r) return "distributivity";
            if (!(p + negate(p)).is_zero() || !(p + negate(p)).terms().empty()) return "additive inverse";
            if (p * 1 != p || p + 0 != p) return "identities";
        }
        return {};
    });
    s.check("polyring", "evaluation homomorphism", [&]() -> std::string {
        for (int i = 0; i < 200; ++i) {
            auto p = random_poly(rng), q = random_poly(rng);
            auto at = random_assignment(rng);
            if (oracle::eval(p * q, at) != oracle::eval(p, at) * oracle::eval(q, at)) return "product";
            if (oracle::eval(p + q, at) != oracle::eval(p, at) + oracle::eval(q, at)) return "sum";
            const unsigned k = static_cast<unsigned>(draw(rng, 0, 4));
            if (oracle::eval(pow(p, k), at) != oracle::ipow(oracle::eval(p, at), k)) return "power";
        }
        return {};
    });
    s.check("polyring", "exact division round trip", [&]() -> std::string {
        for (int i = 0; i < 200; ++i) {
            auto p = random_poly(rng), q = random_poly(rng);
            if (q.is_zero()) continue;
            if (exact_divide(p * q, q) * q != p * q) return "round trip with divisor " + describe(q);
        }
        return {};
    });
    s.check("polyring", "partial is linear and Leibniz", [&]() -> std::string {
        for (int i = 0; i < 200; ++i) {
            auto p = random_poly(rng), q = random_poly(rng);
            Var v = kPolyVars[static_cast<std::size_t>(draw(rng, 0, 3))];
            const long c = draw(rng, -5, 5);
            if (partial(scale(p, c) + q, v) != scale(partial(p, v), c) + partial(q, v)) return "linearity";
            if (partial(p * q, v) != partial(p, v) * q + p * partial(q, v)) return "Leibniz";
        }
        return {};
    });
    s.check("polyring", "differential map composes", [&]() -> std::string {
        const DiffMap d = {{Var::a, var(Var::alpha)}, {Var::b, var(Var::beta)}};
        for (int i = 0; i < 100; ++i) {
            auto p = random_poly(rng, 4, 4);
            const unsigned j = static_cast<unsigned>(draw(rng, 0, 3)), k = static_cast<unsigned>(draw(rng, 0, 3));
            if (apply_diff_map(p, d, j + k) != apply_diff_map(apply_diff_map(p, d, j), d, k)) return describe(p);
        }
        return {};
    });
    s.check("polyring", "render then parse round trip", [&]() -> std::string {
        for (int i = 0; i < 200; ++i) {
            auto p = random_poly(rng);
            if (Polynomial::parse(p.to_string()) != p) return p.to_string();
        }
        return {};
    });
    s.check("polyring", "simultaneous substitution commutes with evaluation", [&]() -> std::string {
        for (int i = 0; i < 100; ++i) {
            auto p = random_poly(rng);
            auto qa = random_poly(rng, 2, 2), qb = random_poly(rng, 2, 2);
            auto at = random_assignment(rng);
            auto image = substitute(p, {{Var::a, qa}, {Var::b, qb}});
            auto at2 = at;
            at2[Var::a] = oracle::eval(qa, at).get_si();
            at2[Var::b] = oracle::eval(qb, at).get_si();
            if (oracle::eval(image, at) != oracle::eval(p, at2)) return describe(p);
        }
        return {};
    });
}

void psiphi(Suite& s, Rng& rng) {
    s.check("psiphi", "value routes agree for n <= 60", [&]() -> std::string {
        for (int i = 0; i < 60; ++i) {
            const long a = draw(rng, -9, 9), b = draw(rng, -9, 9);
            const unsigned n = static_cast<unsigned>(draw(rng, 0, 60));
            for (Kind k : {Kind::Psi, Kind::Phi}) {
                const Polynomial rec = value(k, {a, b}, n);
                const Polynomial bin = k == Kind::Psi ? psi_binomial({a, b}, n) : phi_binomial({a, b}, n);
                if (rec != bin) return "binomial route at n=" + std::to_string(n);
                if (Polynomial(value_int(k, a, b, n)) != rec) return "integer recurrence";
                if (b != 2 * a && b != -2 * a) {
                    BigRational c = k == Kind::Psi ? psi_closed_exact(a, b, n) : phi_closed_exact(a, b, n);
                    if (c != BigRational(rec.constant_value().value())) return "closed form";
                }
            }
        }
        return {};
    });
    s.check("psiphi", "table endpoints", [&]() -> std::string {
        for (int i = 0; i < 40; ++i) {
            auto [p, q] = random_pair(rng);
            const unsigned n = static_cast<unsigned>(draw(rng, 1, 30));
            for (Kind k : {Kind::Psi, Kind::Phi}) {
                auto t = coeff_table(k, p, q, n);
                Polynomial end = value(k, {-q.a, -q.b}, n);
                if (t.entries.front() != value(k, p, n) || t.entries.back() != end) return "n=" + std::to_string(n);
            }
        }
        return {};
    });
    s.check("psiphi", "scaling laws at random lambda", [&]() -> std::string {
        for (int i = 0; i < 30; ++i) {
            auto [p, q] = random_pair(rng);
            const long l = draw(rng, -5, 5);
            const unsigned n = static_cast<unsigned>(draw(rng, 1, 30));
            for (Kind k : {Kind::Psi, Kind::Phi}) {
                const unsigned top = top_index(k, n);
                for (unsigned r = 0; r <= top; ++r) {
                    const Polynomial base = coeff(k, p, q, n, r);
                    if (coeff(k, p, {l * q.a, l * q.b}, n, r) != pow(Polynomial(l), r) * base) return "partner";
                    if (coeff(k, {l * p.a, l * p.b}, q, n, r) != pow(Polynomial(l), top - r) * base) return "base";
                    Polynomial swapped = coeff(k, q, p, n, top - r);
                    if (top % 2) swapped = -swapped;
                    if (swapped != base) return "swap";
                }
                if (pow(Polynomial(l), top) * value(k, p, n) != value(k, {l * p.a, l * p.b}, n)) return "common";
            }
        }
        return {};
    });
    s.check("psiphi", "parity relations", [&]() -> std::string {
        for (int i = 0; i < 100; ++i) {
            const long a = draw(rng, -9, 9), b = draw(rng, -9, 9);
            if (a == b || a == -b) continue;
            const unsigned n = static_cast<unsigned>(draw(rng, 1, 40));
            for (Kind k : {Kind::Psi, Kind::Phi}) {
                const Kind target = n % 2 ? (k == Kind::Psi ? Kind::Phi : Kind::Psi) : k;
                if (value_int(k, a, -b, n) != value_int(target, -a, -b, n)) return "n=" + std::to_string(n);
            }
        }
        return {};
    });
    s.check("psiphi", "product law symbolic n <= 20", []() -> std::string {
        for (unsigned n = 0; n <= 20; ++n)
            if (!verify_product(n).holds) return "n=" + std::to_string(n);
        return {};
    });
    s.check("psiphi", "operator exhaustion n <= 16", []() -> std::string {
        for (unsigned n = 1; n <= 16; ++n)
            for (Kind k : {Kind::Psi, Kind::Phi})
                if (!verify_operator_exhaustion(k, n).holds) return "n=" + std::to_string(n);
        return {};
    });
    s.check("psiphi", "coefficients match the linear-system oracle", [&]() -> std::string {
        for (int i = 0; i < 30; ++i) {
            auto [p, q] = random_pair(rng);
            const unsigned n = static_cast<unsigned>(draw(rng, 1, 14));
            for (Kind k : {Kind::Psi, Kind::Phi}) {
                auto expect = oracle::expansion_coefficients(k == Kind::Psi, p.a.constant_value()->get_si(),
                                                             p.b.constant_value()->get_si(),
                                                             q.a.constant_value()->get_si(),
                                                             q.b.constant_value()->get_si(), n);
                auto t = coeff_table(k, p, q, n);
                for (std::size_t r = 0; r < expect.size(); ++r)
                    if (t.entries[r] != Polynomial(expect[r])) return "n=" + std::to_string(n);
            }
        }
        return {};
    });
}

void identities(Suite& s, Rng& rng) {
    s.check("identities", "numeric expansions at random points", [&]() -> std::string {
        for (int i = 0; i < 20; ++i) {
            const unsigned n = static_cast<unsigned>(draw(rng, 1, 60));
            for (Kind k : {Kind::Psi, Kind::Phi}) {
                auto r = verify_expansion_numeric(k, n, 3, rng());
                if (!r.holds) return r.identity_id + " n=" + std::to_string(n);
            }
        }
        return {};
    });
    s.check("identities", "sum theorems numerically for n <= 60", [&]() -> std::string {
        const std::vector<std::string> ids = {"sum-theta-psi",   "sum-theta-phi",         "sum-general-psi",
                                              "sum-general-phi", "sum-binom-psi",         "sum-binom-phi",
                                              "sum-one-psi",     "sum-minus-one-phi",     "sum-binom-general-psi",
                                              "sum-binom-general-phi"};
        for (const auto& id : ids) {
            const unsigned n = static_cast<unsigned>(draw(rng, 1, 60));
            auto r = run_identity(id, n, true, 2, rng());
            if (!r.holds) return id + " n=" + std::to_string(n);
        }
        return {};
    });
    s.check("identities", "jacobian vanishes iff forms are proportional", []() -> std::string {
        for (long al = -3; al <= 3; ++al)
            for (long be = -3; be <= 3; ++be)
                for (long a = -3; a <= 3; ++a)
                    for (long b = -3; b <= 3; ++b) {
                        const bool zero = jacobian_det({al, be}, {a, b}).is_zero();
                        if (zero != (be * a - al * b == 0)) return "at " + std::to_string(al) + "," + std::to_string(be);
                    }
        return {};
    });
}

void sequences(Suite& s, Rng& rng) {
    s.check("sequences", "terms match definitions at random n", [&]() -> std::string {
        for (SequenceName name : all_sequences()) {
            for (int i = 0; i < 5; ++i) {
                const unsigned n = static_cast<unsigned>(draw(rng, 0, 20));
                if (term(name, n) != oracle_term(name, n))
                    return std::string(sequence_name(name)) + " n=" + std::to_string(n);
            }
        }
        return {};
    });
    s.check("sequences", "mixed-sign parity tables", []() -> std::string {
        for (unsigned n = 0; n <= 50; ++n) {
            const BigInt l = oracle::linear(2, 1, 1, 1, n), f = oracle::linear(0, 1, 1, 1, n);
            if (value_int(Kind::Psi, 1, -3, n) != (n % 2 ? f : l)) return "psi n=" + std::to_string(n);
            if (value_int(Kind::Phi, 1, -3, n) != (n % 2 ? l : f)) return "phi n=" + std::to_string(n);
        }
        return {};
    });
    s.check("sequences", "Fermat coincidence for k <= 4", []() -> std::string {
        for (unsigned k = 0; k <= 4; ++k) {
            const unsigned n = 1u << k;
            if (k >= 1 && value_int(Kind::Psi, -2, -5, n) != value_int(Kind::Psi, 2, -5, n))
                return "k=" + std::to_string(k);
        }
        return {};
    });
}

void trajectories(Suite& s, Rng& rng) {
    s.check("trajectories", "endpoint theorem and orbit detection", [&]() -> std::string {
        for (int i = 0; i < 40; ++i) {
            auto [p, q] = random_pair(rng);
            const unsigned n = static_cast<unsigned>(draw(rng, 1, 24));
            for (Kind k : {Kind::Psi, Kind::Phi}) {
                Trajectory t = trajectory({k, p, q, n});
                if (t.terms.front() != value(k, p, n)) return "start";
                if (t.terms.back() != value(k, {-q.a, -q.b}, n)) return "end";
                if (t.is_orbit != (value(k, p, n) - value(k, {-q.a, -q.b}, n)).is_zero()) return "orbit flag";
                for (const auto& term : t.terms)
                    if (!term.is_constant()) return "integrality";
            }
        }
        return {};
    });
    s.check("trajectories", "catalog orbit parity claims", []() -> std::string {
        for (unsigned n = 2; n <= 20; n += 2)
            for (auto name : {TrajectoryName::LucasOrbit, TrajectoryName::FibonacciOrbit, TrajectoryName::MersenneOrbit})
                if (!named_trajectory(name, n).is_orbit) return "n=" + std::to_string(n);
        return {};
    });
}

void search(Suite& s, Rng& rng) {
    s.check("search", "recurrence route equals direct quotient", [&]() -> std::string {
        for (int i = 0; i < 500; ++i) {
            const long x = draw(rng, -15, 15), y = draw(rng, -15, 15);
            const unsigned n = static_cast<unsigned>(draw(rng, 2, 20));
            for (SearchKind k : {SearchKind::SumPowers, SearchKind::DiffPowers}) {
                auto q = quotient(k, n, x, y);
                if (q && *q != quotient_via_psi(k, n, x, y)) return "at " + std::to_string(x) + "," + std::to_string(y);
            }
        }
        return {};
    });
    s.check("search", "quotient is constant on symmetry classes", [&]() -> std::string {
        for (int i = 0; i < 300; ++i) {
            const long x = draw(rng, -12, 12), y = draw(rng, -12, 12);
            const unsigned n = static_cast<unsigned>(draw(rng, 2, 12));
            for (SearchKind k : {SearchKind::SumPowers, SearchKind::DiffPowers}) {
                auto [cx, cy] = canonical_pair(n, x, y);
                if (quotient(k, n, x, y) != quotient(k, n, cx, cy)) return "class of " + std::to_string(x);
                if (canonical_pair(n, y, x) != canonical_pair(n, x, y)) return "swap";
                if (canonical_pair(n, -x, -y) != canonical_pair(n, x, y)) return "negation";
            }
        }
        return {};
    });
    s.check("search", "hit list independent of worker count", []() -> std::string {
        SearchConfig cfg{SearchKind::SumPowers, 3, 6, 8, false};
        if (run_search(cfg, 1).hits != run_search(cfg, 4).hits) return "sum-powers";
        cfg.kind = SearchKind::DiffPowers;
        if (run_search(cfg, 1).hits != run_search(cfg, 3).hits) return "diff-powers";
        return {};
    });
}

} // namespace

std::vector<Result> run_all(std::uint64_t seed) {
    Suite s;
    Rng rng(seed);
    polyring(s, rng);
    psiphi(s, rng);
    identities(s, rng);
    sequences(s, rng);
    trajectories(s, rng);
    search(s, rng);
    return s.results;
}

} // namespace props
