#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qforms/bigint.hpp"

namespace qf {

// Closed variable registry. The declaration order is the lexicographic
// order used to break ties between monomials of equal total degree.
// `par` is the Dickson parameter; `alpha` belongs to the second quadratic form.
enum class Var : std::uint8_t { x, y, z, t, u, v, a, b, alpha, beta, x1, x2, par };

inline constexpr std::size_t kVarCount = 13;

std::string_view var_name(Var v);
Var var_from_name(std::string_view name);
std::span<const Var> all_vars();

/// Exponent vector over the registry. Zero exponents are implicit.
class Monomial {
public:
    Monomial() = default;

    static Monomial of(Var v, unsigned exponent = 1);

    unsigned exponent(Var v) const { return exps_[static_cast<std::size_t>(v)]; }
    unsigned degree() const { return degree_; }
    bool is_one() const { return degree_ == 0; }

    bool divides(const Monomial& other) const;
    Monomial operator*(const Monomial& rhs) const;
    /// Requires divides(*this, rhs) the other way round: rhs | *this.
    Monomial operator/(const Monomial& rhs) const;
    Monomial with_exponent(Var v, unsigned exponent) const;

    std::size_t hash() const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    /// Graded lexicographic: total degree first, then registry order.
    friend std::strong_ordering operator<=>(const Monomial& lhs, const Monomial& rhs);

private:
    std::array<std::uint16_t, kVarCount> exps_{};
    std::uint32_t degree_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

struct Term {
    Monomial monomial;
    BigInt coeff;
};

/// Sparse multivariate polynomial with arbitrary-precision integer
/// coefficients. Terms are kept in descending graded-lex order with no zero
/// coefficients, so structural equality is mathematical equality.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(int c) : Polynomial(BigInt(c)) {}
    Polynomial(long c) : Polynomial(BigInt(c)) {}
    Polynomial(const BigInt& c);

    static Polynomial variable(Var v);
    static Polynomial term(const Monomial& m, const BigInt& c);
    /// Parses the text grammar accepted by the CLI (see parse.cpp).
    static Polynomial parse(std::string_view text);

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// The value of a constant polynomial, nullopt otherwise.
    std::optional<BigInt> constant_value() const;
    unsigned total_degree() const;
    bool contains(Var v) const;
    const Term& leading_term() const { return terms_.front(); }

    std::string to_string() const;

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);

    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
    friend Polynomial operator-(const Polynomial& p);

    friend bool operator==(const Polynomial& lhs, const Polynomial& rhs);
    /// Arbitrary but total order; lets polynomials key ordered containers.
    friend std::strong_ordering operator<=>(const Polynomial& lhs, const Polynomial& rhs);

private:
    friend class PolynomialBuilder;
    explicit Polynomial(std::vector<Term> canonical) : terms_(std::move(canonical)) {}

    std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

using Substitution = std::map<Var, Polynomial>;
using DiffMap = std::vector<std::pair<Var, Polynomial>>;

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial negate(const Polynomial& p);
Polynomial mul(const Polynomial& p, const Polynomial& q);
Polynomial scale(const Polynomial& p, const BigInt& k);
Polynomial pow(const Polynomial& p, unsigned k);
Polynomial partial(const Polynomial& p, Var v);

/// Simultaneous substitution: every bound variable is replaced at once.
Polynomial substitute(const Polynomial& p, const Substitution& bindings);

/// Returns r with r * q == p, or throws NotDivisible.
Polynomial exact_divide(const Polynomial& p, const Polynomial& q);
Polynomial exact_scalar_divide(const Polynomial& p, const BigInt& k);

/// Applies sum_i image_i * d/d(var_i) to p, `times` times.
Polynomial apply_diff_map(const Polynomial& p, const DiffMap& map, unsigned times);

/// Value of p with every variable bound to an integer.
BigInt evaluate(const Polynomial& p, const std::map<Var, BigInt>& values);

inline Polynomial var(Var v) { return Polynomial::variable(v); }

} // namespace qf
