#pragma once

#include <vector>

#include "qforms/bigint.hpp"
#include "qforms/polynomial.hpp"

namespace qf {

enum class Kind { Psi, Phi };

const char* kind_name(Kind k);

/// The argument pair (a, b) of the recurrences.
struct ParamPoint {
    Polynomial a;
    Polynomial b;

    friend bool operator==(const ParamPoint&, const ParamPoint&) = default;
};

/// The generic point (a, b) and its partner (alpha, beta).
ParamPoint symbolic_ab();
ParamPoint symbolic_alpha_beta();

inline unsigned delta(unsigned n) { return n & 1u; }

/// Largest coefficient index: floor(n/2) for Psi, floor((n-1)/2) for Phi.
/// Throws IndexOutOfRange for Phi at n = 0.
unsigned top_index(Kind kind, unsigned n);

/// The determinant beta*a - alpha*b of the pair of forms.
Polynomial form_determinant(const ParamPoint& ab, const ParamPoint& alpha_beta);

// Recurrence values. Polynomial results are memoized per (kind, a, b).
Polynomial psi(const ParamPoint& p, unsigned n);
Polynomial phi(const ParamPoint& p, unsigned n);
Polynomial value(Kind kind, const ParamPoint& p, unsigned n);

/// Unmemoized integer recurrence.
BigInt value_int(Kind kind, const BigInt& a, const BigInt& b, unsigned n);

// Binomial sums; psi_binomial(p, 0) is 2 by convention.
Polynomial psi_binomial(const ParamPoint& p, unsigned n);
Polynomial phi_binomial(const ParamPoint& p, unsigned n);

// Exact evaluation of the radical closed form at integer points.
// Throws DegenerateParams when b = 2a or b = -2a.
BigRational psi_closed_exact(const BigInt& a, const BigInt& b, unsigned n);
BigRational phi_closed_exact(const BigInt& a, const BigInt& b, unsigned n);

/// Symbolic coefficient families in {a, b, alpha, beta}, computed by
/// repeated application of the differential map. Cached per (kind, n).
const std::vector<Polynomial>& symbolic_coefficients(Kind kind, unsigned n);
/// Same family computed from the opposite endpoint.
const std::vector<Polynomial>& symbolic_coefficients_reverse(Kind kind, unsigned n);

/// Coefficient r of the family at (a, b) and (alpha, beta).
Polynomial coeff(Kind kind, const ParamPoint& ab, const ParamPoint& alpha_beta, unsigned n, unsigned r);
Polynomial coeff_reverse(Kind kind, const ParamPoint& ab, const ParamPoint& alpha_beta, unsigned n, unsigned r);

inline Polynomial psi_coeff(const ParamPoint& ab, const ParamPoint& ab2, unsigned n, unsigned r) {
    return coeff(Kind::Psi, ab, ab2, n, r);
}
inline Polynomial phi_coeff(const ParamPoint& ab, const ParamPoint& ab2, unsigned n, unsigned r) {
    return coeff(Kind::Phi, ab, ab2, n, r);
}
inline Polynomial psi_coeff_reverse(const ParamPoint& ab, const ParamPoint& ab2, unsigned n, unsigned r) {
    return coeff_reverse(Kind::Psi, ab, ab2, n, r);
}
inline Polynomial phi_coeff_reverse(const ParamPoint& ab, const ParamPoint& ab2, unsigned n, unsigned r) {
    return coeff_reverse(Kind::Phi, ab, ab2, n, r);
}

/// Phi coefficient obtained from two Psi coefficients of order n + 1.
/// Throws DegenerateParams when beta*a - alpha*b vanishes.
Polynomial phi_coeff_from_psi(const ParamPoint& ab, const ParamPoint& alpha_beta, unsigned n, unsigned r);

struct CoeffTable {
    Kind kind;
    ParamPoint ab;
    ParamPoint alpha_beta;
    unsigned n;
    std::vector<Polynomial> entries;
};

/// Full family with both endpoint invariants checked.
CoeffTable coeff_table(Kind kind, const ParamPoint& ab, const ParamPoint& alpha_beta, unsigned n);

} // namespace qf
