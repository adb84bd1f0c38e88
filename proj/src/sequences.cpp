#include "qforms/sequences.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "qforms/errors.hpp"

namespace qf {

namespace {

struct NameEntry {
    SequenceName id;
    std::string_view text;
};

constexpr std::array<NameEntry, 12> kNames = {{
    {SequenceName::Lucas, "Lucas"},
    {SequenceName::Fibonacci, "Fibonacci"},
    {SequenceName::Pell, "Pell"},
    {SequenceName::PellLucas, "PellLucas"},
    {SequenceName::PellPoly, "PellPoly"},
    {SequenceName::PellLucasPoly, "PellLucasPoly"},
    {SequenceName::MersenneSide, "MersenneSide"},
    {SequenceName::FermatSide, "FermatSide"},
    {SequenceName::ChebyshevT, "ChebyshevT"},
    {SequenceName::ChebyshevU, "ChebyshevU"},
    {SequenceName::DicksonD, "DicksonD"},
    {SequenceName::DicksonE, "DicksonE"},
}};

std::string fold(std::string_view s) {
    std::string out;
    for (char c : s)
        if (c != '-' && c != '_') out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

std::vector<SequenceBinding> make_bindings() {
    const Polynomial x = var(Var::x);
    const Polynomial par = var(Var::par);
    const Polynomial cheb_b = 2 - 4 * x * x;
    const Polynomial pell_b = -2 - 4 * x * x;
    const Polynomial dickson_b = 2 * par - x * x;
    using K = Kind;
    using S = SequenceName;
    return {
        {S::Lucas, K::Psi, {-1, -3}, {}, 0, true},
        {S::Fibonacci, K::Phi, {-1, -3}, {}, 0, true},
        {S::Pell, K::Phi, {-1, -6}, {{2, 1, false}}, 0, true},
        {S::PellLucas, K::Psi, {-1, -6}, {{2, 0, false}}, 0, true},
        {S::PellPoly, K::Phi, {-1, pell_b}, {{2 * x, 1, false}}, 0, false},
        {S::PellLucasPoly, K::Psi, {-1, pell_b}, {{2 * x, 0, false}}, 0, false},
        {S::MersenneSide, K::Phi, {2, -5}, {{3, 1, false}}, 0, true},
        {S::FermatSide, K::Psi, {2, -5}, {{3, 0, false}}, 0, true},
        {S::ChebyshevT, K::Psi, {1, cheb_b}, {{x, 0, false}, {2, 1, true}}, 0, false},
        {S::ChebyshevU, K::Phi, {1, cheb_b}, {{2 * x, 0, false}}, 1, false},
        {S::DicksonD, K::Psi, {par, dickson_b}, {{x, 0, false}}, 0, false},
        {S::DicksonE, K::Phi, {par, dickson_b}, {{x, 0, false}}, 1, false},
    };
}

// n/(n-i) * C(n-i, i) as an exact integer (n > i).
BigInt lucas_weight(unsigned n, unsigned i) {
    BigInt w = binomial(n - i, i) * n;
    mpz_divexact_ui(w.get_mpz_t(), w.get_mpz_t(), n - i);
    return w;
}

template <class Step>
Polynomial linear_recurrence(Polynomial s0, Polynomial s1, unsigned n, Step step) {
    if (n == 0) return s0;
    for (unsigned k = 1; k < n; ++k) {
        Polynomial next = step(s1, s0);
        s0 = std::move(s1);
        s1 = std::move(next);
    }
    return s1;
}

} // namespace

const std::vector<SequenceName>& all_sequences() {
    static const std::vector<SequenceName> list = [] {
        std::vector<SequenceName> out;
        for (const auto& e : kNames) out.push_back(e.id);
        return out;
    }();
    return list;
}

std::string_view sequence_name(SequenceName s) {
    for (const auto& e : kNames)
        if (e.id == s) return e.text;
    return "?";
}

SequenceName sequence_from_name(std::string_view text) {
    const std::string key = fold(text);
    for (const auto& e : kNames)
        if (fold(e.text) == key) return e.id;
    throw ConfigError("unknown sequence '" + std::string(text) + "'");
}

const SequenceBinding& binding(SequenceName name) {
    static const std::vector<SequenceBinding> table = make_bindings();
    return *std::find_if(table.begin(), table.end(), [name](const SequenceBinding& b) { return b.name == name; });
}

Polynomial term(SequenceName name, unsigned n) {
    const SequenceBinding& b = binding(name);
    Polynomial t = value(b.kind, b.params, n + b.index_shift);
    for (const auto& f : b.prefactor) {
        if (!delta(n + f.parity_offset)) continue;
        if (!f.divide)
            t *= f.base;
        else if (auto c = f.base.constant_value())
            t = exact_scalar_divide(t, *c);
        else
            t = exact_divide(t, f.base);
    }
    return t;
}

Polynomial oracle_term(SequenceName name, unsigned n) {
    const Polynomial x = var(Var::x);
    const Polynomial par = var(Var::par);
    const Polynomial two_x = 2 * x;
    auto plain = [](const Polynomial& s1, const Polynomial& s0) { return s1 + s0; };
    auto doubled = [](const Polynomial& s1, const Polynomial& s0) { return 2 * s1 + s0; };
    auto poly = [&](const Polynomial& s1, const Polynomial& s0) { return two_x * s1 + s0; };
    const unsigned top = n / 2;

    switch (name) {
    case SequenceName::Lucas: return linear_recurrence(2, 1, n, plain);
    case SequenceName::Fibonacci: return linear_recurrence(0, 1, n, plain);
    case SequenceName::Pell: return linear_recurrence(0, 1, n, doubled);
    case SequenceName::PellLucas: return linear_recurrence(2, 2, n, doubled);
    case SequenceName::PellPoly: return linear_recurrence(0, 1, n, poly);
    case SequenceName::PellLucasPoly: return linear_recurrence(2, two_x, n, poly);
    case SequenceName::MersenneSide: return Polynomial(BigInt(ipow(BigInt(2), n) - 1));
    case SequenceName::FermatSide: return Polynomial(BigInt(ipow(BigInt(2), n) + 1));
    case SequenceName::ChebyshevT: {
        if (n == 0) return 1;
        Polynomial sum;
        for (unsigned i = 0; i <= top; ++i) {
            // n/(n-i) C(n-i,i) 2^(n-2i-1); the i = n/2 term has exponent -1 but an even weight.
            BigInt w = lucas_weight(n, i) * ipow(BigInt(2), n - 2 * i);
            mpz_divexact_ui(w.get_mpz_t(), w.get_mpz_t(), 2);
            if (i % 2) w = -w;
            sum += Polynomial::term(Monomial::of(Var::x, n - 2 * i), w);
        }
        return sum;
    }
    case SequenceName::ChebyshevU: {
        Polynomial sum;
        for (unsigned i = 0; i <= top; ++i) {
            BigInt w = binomial(n - i, i) * ipow(BigInt(2), n - 2 * i);
            if (i % 2) w = -w;
            sum += Polynomial::term(Monomial::of(Var::x, n - 2 * i), w);
        }
        return sum;
    }
    case SequenceName::DicksonD: {
        if (n == 0) return 2;
        Polynomial sum;
        for (unsigned i = 0; i <= top; ++i)
            sum += scale(pow(-par, i) * pow(x, n - 2 * i), lucas_weight(n, i));
        return sum;
    }
    case SequenceName::DicksonE: {
        Polynomial sum;
        for (unsigned i = 0; i <= top; ++i) sum += scale(pow(-par, i) * pow(x, n - 2 * i), binomial(n - i, i));
        return sum;
    }
    }
    throw ConfigError("unknown sequence");
}

std::vector<IdentityReport> crosscheck(SequenceName name, unsigned n_max) {
    std::vector<IdentityReport> out;
    out.reserve(n_max + 1);
    const std::string id = "sequence-" + std::string(sequence_name(name));
    for (unsigned n = 0; n <= n_max; ++n) {
        auto r = make_report(id, n, term(name, n), oracle_term(name, n));
        r.params = {{"sequence", std::string(sequence_name(name))}};
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace qf
