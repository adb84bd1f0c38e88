#include "qforms/polynomial.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "qforms/errors.hpp"

namespace qf {

namespace {

constexpr std::array<std::string_view, kVarCount> kVarNames = {
    "x", "y", "z", "t", "u", "v", "a", "b", "alpha", "beta", "x1", "x2", "par"};

constexpr std::array<Var, kVarCount> kVars = {
    Var::x, Var::y, Var::z, Var::t, Var::u, Var::v, Var::a,
    Var::b, Var::alpha, Var::beta, Var::x1, Var::x2, Var::par};

std::uint16_t checked_exponent(unsigned long e) {
    if (e > std::numeric_limits<std::uint16_t>::max())
        throw std::overflow_error("monomial exponent overflow");
    return static_cast<std::uint16_t>(e);
}

bool descending(const Term& lhs, const Term& rhs) { return lhs.monomial > rhs.monomial; }

} // namespace

std::string_view var_name(Var v) { return kVarNames[static_cast<std::size_t>(v)]; }

Var var_from_name(std::string_view name) {
    for (std::size_t i = 0; i < kVarCount; ++i)
        if (kVarNames[i] == name) return kVars[i];
    throw UnknownVariable("unknown variable '" + std::string(name) + "'");
}

std::span<const Var> all_vars() { return kVars; }

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::of(Var v, unsigned exponent) { return Monomial{}.with_exponent(v, exponent); }

bool Monomial::divides(const Monomial& other) const {
    for (std::size_t i = 0; i < kVarCount; ++i)
        if (exps_[i] > other.exps_[i]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& rhs) const {
    Monomial m;
    for (std::size_t i = 0; i < kVarCount; ++i)
        m.exps_[i] = checked_exponent(static_cast<unsigned long>(exps_[i]) + rhs.exps_[i]);
    m.degree_ = degree_ + rhs.degree_;
    return m;
}

Monomial Monomial::operator/(const Monomial& rhs) const {
    Monomial m;
    for (std::size_t i = 0; i < kVarCount; ++i) m.exps_[i] = exps_[i] - rhs.exps_[i];
    m.degree_ = degree_ - rhs.degree_;
    return m;
}

Monomial Monomial::with_exponent(Var v, unsigned exponent) const {
    Monomial m = *this;
    auto& slot = m.exps_[static_cast<std::size_t>(v)];
    m.degree_ = m.degree_ - slot + exponent;
    slot = checked_exponent(exponent);
    return m;
}

std::size_t Monomial::hash() const {
    // FNV-1a over the exponent vector.
    std::size_t h = 1469598103934665603ull;
    for (auto e : exps_) {
        h ^= e;
        h *= 1099511628211ull;
    }
    return h;
}

std::strong_ordering operator<=>(const Monomial& lhs, const Monomial& rhs) {
    if (auto c = lhs.degree_ <=> rhs.degree_; c != 0) return c;
    for (std::size_t i = 0; i < kVarCount; ++i)
        if (auto c = lhs.exps_[i] <=> rhs.exps_[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// Accumulator producing canonical term vectors.

class PolynomialBuilder {
public:
    void add(const Monomial& m, const BigInt& c) {
        if (c == 0) return;
        auto [it, inserted] = acc_.try_emplace(m, c);
        if (!inserted) it->second += c;
    }

    void add_product(const Monomial& m, const BigInt& c1, const BigInt& c2) {
        auto [it, inserted] = acc_.try_emplace(m);
        mpz_addmul(it->second.get_mpz_t(), c1.get_mpz_t(), c2.get_mpz_t());
    }

    void reserve(std::size_t n) { acc_.reserve(n); }

    Polynomial build() {
        std::vector<Term> terms;
        terms.reserve(acc_.size());
        for (auto& [m, c] : acc_)
            if (c != 0) terms.push_back(Term{m, std::move(c)});
        acc_.clear();
        std::sort(terms.begin(), terms.end(), descending);
        return Polynomial(std::move(terms));
    }

    static Polynomial from_sorted(std::vector<Term> terms) { return Polynomial(std::move(terms)); }

private:
    std::unordered_map<Monomial, BigInt, MonomialHash> acc_;
};

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(const BigInt& c) {
    if (c != 0) terms_.push_back(Term{Monomial{}, c});
}

Polynomial Polynomial::variable(Var v) { return term(Monomial::of(v), 1); }

Polynomial Polynomial::term(const Monomial& m, const BigInt& c) {
    if (c == 0) return {};
    return Polynomial(std::vector<Term>{Term{m, c}});
}

bool Polynomial::is_constant() const { return terms_.empty() || terms_.front().monomial.is_one(); }

std::optional<BigInt> Polynomial::constant_value() const {
    if (terms_.empty()) return BigInt(0);
    if (terms_.size() == 1 && terms_.front().monomial.is_one()) return terms_.front().coeff;
    return std::nullopt;
}

unsigned Polynomial::total_degree() const { return terms_.empty() ? 0 : terms_.front().monomial.degree(); }

bool Polynomial::contains(Var v) const {
    return std::any_of(terms_.begin(), terms_.end(), [v](const Term& t) { return t.monomial.exponent(v) > 0; });
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool negative = c < 0;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;

        BigInt mag = abs(c);
        bool need_star = false;
        if (m.is_one() || mag != 1) {
            out += mag.get_str();
            need_star = true;
        }
        for (Var v : all_vars()) {
            unsigned e = m.exponent(v);
            if (e == 0) continue;
            if (need_star) out += '*';
            out += var_name(v);
            if (e > 1) out += "^" + std::to_string(e);
            need_star = true;
        }
    }
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (rhs.terms_.empty()) return *this;
    std::vector<Term> merged;
    merged.reserve(terms_.size() + rhs.terms_.size());
    auto i = terms_.begin();
    auto j = rhs.terms_.begin();
    while (i != terms_.end() && j != rhs.terms_.end()) {
        auto c = i->monomial <=> j->monomial;
        if (c > 0) {
            merged.push_back(std::move(*i++));
        } else if (c < 0) {
            merged.push_back(*j++);
        } else {
            BigInt s = i->coeff + j->coeff;
            if (s != 0) merged.push_back(Term{i->monomial, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i != terms_.end(); ++i) merged.push_back(std::move(*i));
    for (; j != rhs.terms_.end(); ++j) merged.push_back(*j);
    terms_ = std::move(merged);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) { return *this += -rhs; }

Polynomial& Polynomial::operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    if (auto c = rhs.constant_value()) return scale(lhs, *c);
    if (auto c = lhs.constant_value()) return scale(rhs, *c);
    if (lhs.size() == 1 || rhs.size() == 1) {
        // A monomial times a polynomial keeps the order; no re-sort needed.
        const Term& mono = lhs.size() == 1 ? lhs.terms_.front() : rhs.terms_.front();
        const Polynomial& other = lhs.size() == 1 ? rhs : lhs;
        std::vector<Term> out;
        out.reserve(other.size());
        for (const auto& t : other.terms_) out.push_back(Term{t.monomial * mono.monomial, t.coeff * mono.coeff});
        return PolynomialBuilder::from_sorted(std::move(out));
    }
    PolynomialBuilder b;
    b.reserve(lhs.size() * rhs.size());
    for (const auto& s : lhs.terms_)
        for (const auto& t : rhs.terms_) b.add_product(s.monomial * t.monomial, s.coeff, t.coeff);
    return b.build();
}

Polynomial operator-(const Polynomial& p) {
    std::vector<Term> out = p.terms_;
    for (auto& t : out) t.coeff = -t.coeff;
    return Polynomial(std::move(out));
}

bool operator==(const Polynomial& lhs, const Polynomial& rhs) {
    if (lhs.terms_.size() != rhs.terms_.size()) return false;
    for (std::size_t i = 0; i < lhs.terms_.size(); ++i) {
        if (lhs.terms_[i].monomial != rhs.terms_[i].monomial) return false;
        if (lhs.terms_[i].coeff != rhs.terms_[i].coeff) return false;
    }
    return true;
}

std::strong_ordering operator<=>(const Polynomial& lhs, const Polynomial& rhs) {
    const std::size_t n = std::min(lhs.terms_.size(), rhs.terms_.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (auto c = lhs.terms_[i].monomial <=> rhs.terms_[i].monomial; c != 0) return c;
        int k = cmp(lhs.terms_[i].coeff, rhs.terms_[i].coeff);
        if (k != 0) return k < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return lhs.terms_.size() <=> rhs.terms_.size();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

// ---------------------------------------------------------------------------
// Free operations

Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }

Polynomial negate(const Polynomial& p) { return -p; }

Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }

Polynomial scale(const Polynomial& p, const BigInt& k) {
    if (k == 0) return {};
    std::vector<Term> out = p.terms();
    for (auto& t : out) t.coeff *= k;
    return PolynomialBuilder::from_sorted(std::move(out));
}

Polynomial pow(const Polynomial& p, unsigned k) {
    if (auto c = p.constant_value()) return Polynomial(ipow(*c, k));
    Polynomial result(1);
    Polynomial base = p;
    while (k > 0) {
        if (k & 1u) result *= base;
        k >>= 1;
        if (k > 0) base *= base;
    }
    return result;
}

Polynomial partial(const Polynomial& p, Var v) {
    std::vector<Term> out;
    for (const auto& [m, c] : p.terms()) {
        unsigned e = m.exponent(v);
        if (e == 0) continue;
        out.push_back(Term{m.with_exponent(v, e - 1), c * e});
    }
    // Lowering one exponent by one can reorder terms of equal degree, so
    // re-sort; every image monomial is distinct because the map is injective.
    std::sort(out.begin(), out.end(), descending);
    return PolynomialBuilder::from_sorted(std::move(out));
}

Polynomial substitute(const Polynomial& p, const Substitution& bindings) {
    if (bindings.empty() || p.is_zero()) return p;

    std::array<const Polynomial*, kVarCount> image{};
    bool all_constant = true;
    for (const auto& [v, q] : bindings) {
        image[static_cast<std::size_t>(v)] = &q;
        all_constant = all_constant && q.is_constant();
    }

    PolynomialBuilder b;
    if (all_constant) {
        std::array<std::vector<BigInt>, kVarCount> powers;
        auto power_of = [&](std::size_t i, unsigned e) -> const BigInt& {
            auto& cache = powers[i];
            if (cache.empty()) cache.push_back(BigInt(1));
            const BigInt base = image[i]->constant_value().value();
            while (cache.size() <= e) cache.push_back(cache.back() * base);
            return cache[e];
        };
        for (const auto& [m, c] : p.terms()) {
            BigInt coeff = c;
            Monomial rest = m;
            for (std::size_t i = 0; i < kVarCount && coeff != 0; ++i) {
                if (!image[i]) continue;
                Var v = all_vars()[i];
                unsigned e = m.exponent(v);
                if (e == 0) continue;
                coeff *= power_of(i, e);
                rest = rest.with_exponent(v, 0);
            }
            b.add(rest, coeff);
        }
        return b.build();
    }

    std::array<std::vector<Polynomial>, kVarCount> powers;
    auto power_of = [&](std::size_t i, unsigned e) -> const Polynomial& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(Polynomial(1));
        while (cache.size() <= e) cache.push_back(cache.back() * *image[i]);
        return cache[e];
    };
    for (const auto& [m, c] : p.terms()) {
        Polynomial product = Polynomial::term(Monomial{}, c);
        Monomial rest = m;
        for (std::size_t i = 0; i < kVarCount; ++i) {
            if (!image[i]) continue;
            Var v = all_vars()[i];
            unsigned e = m.exponent(v);
            if (e == 0) continue;
            product *= power_of(i, e);
            rest = rest.with_exponent(v, 0);
        }
        for (const auto& t : product.terms()) b.add(t.monomial * rest, t.coeff);
    }
    return b.build();
}

Polynomial exact_scalar_divide(const Polynomial& p, const BigInt& k) {
    if (k == 0) throw NotDivisible("division by zero");
    std::vector<Term> out = p.terms();
    for (auto& t : out) {
        if (!divides(k, t.coeff))
            throw NotDivisible("coefficient " + t.coeff.get_str() + " is not a multiple of " + k.get_str());
        mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), k.get_mpz_t());
    }
    return PolynomialBuilder::from_sorted(std::move(out));
}

Polynomial exact_divide(const Polynomial& p, const Polynomial& q) {
    if (q.is_zero()) throw NotDivisible("division by the zero polynomial");
    if (auto c = q.constant_value()) return exact_scalar_divide(p, *c);

    const Term& lead = q.leading_term();
    std::vector<Term> quotient;
    Polynomial rem = p;
    while (!rem.is_zero()) {
        const Term& top = rem.leading_term();
        if (!lead.monomial.divides(top.monomial) || !divides(lead.coeff, top.coeff))
            throw NotDivisible("(" + p.to_string() + ") is not divisible by (" + q.to_string() + ")");
        BigInt c;
        mpz_divexact(c.get_mpz_t(), top.coeff.get_mpz_t(), lead.coeff.get_mpz_t());
        Monomial m = top.monomial / lead.monomial;
        rem -= Polynomial::term(m, c) * q;
        // Quotient terms are produced in strictly descending order.
        quotient.push_back(Term{m, std::move(c)});
    }
    return PolynomialBuilder::from_sorted(std::move(quotient));
}

Polynomial apply_diff_map(const Polynomial& p, const DiffMap& map, unsigned times) {
    Polynomial cur = p;
    for (unsigned i = 0; i < times && !cur.is_zero(); ++i) {
        Polynomial next;
        for (const auto& [v, img] : map) {
            if (img.is_zero()) continue;
            next += img * partial(cur, v);
        }
        cur = std::move(next);
    }
    return cur;
}

BigInt evaluate(const Polynomial& p, const std::map<Var, BigInt>& values) {
    BigInt sum = 0;
    for (const auto& [m, c] : p.terms()) {
        BigInt term = c;
        for (Var v : all_vars()) {
            unsigned e = m.exponent(v);
            if (e == 0) continue;
            auto it = values.find(v);
            if (it == values.end())
                throw UnknownVariable("no value bound for '" + std::string(var_name(v)) + "'");
            term *= ipow(it->second, e);
        }
        sum += term;
    }
    return sum;
}

} // namespace qf
