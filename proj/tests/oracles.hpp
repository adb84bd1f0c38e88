#pragma once

// Independent reference computations used only by the tests. None of them
// goes through the recurrence tables or the differential map.

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qforms/bigint.hpp"
#include "qforms/polynomial.hpp"

namespace oracle {

using qf::BigInt;
using qf::BigRational;

inline BigInt ipow(const BigInt& b, unsigned e) { return qf::ipow(b, e); }

/// Solves M c = rhs over the rationals by Gauss-Jordan elimination.
inline std::vector<BigRational> solve(std::vector<std::vector<BigRational>> m, std::vector<BigRational> rhs) {
    const std::size_t n = rhs.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) throw std::runtime_error("singular system");
        std::swap(m[piv], m[col]);
        std::swap(rhs[piv], rhs[col]);
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || m[row][col] == 0) continue;
            BigRational f = m[row][col] / m[col][col];
            for (std::size_t k = col; k < n; ++k) m[row][k] -= f * m[col][k];
            rhs[row] -= f * rhs[col];
        }
    }
    for (std::size_t i = 0; i < n; ++i) rhs[i] /= m[i][i];
    return rhs;
}

/// Numeric (x^n + y^n)/(x+y)^delta(n) or the difference analog.
inline BigRational power_quotient(bool plus, unsigned n, long x, long y) {
    BigRational num = plus ? BigRational(ipow(x, n) + ipow(y, n)) : BigRational(ipow(x, n) - ipow(y, n));
    if (plus) return n % 2 ? num / BigRational(x + y) : num;
    BigRational den(x - y);
    if ((n - 1) % 2) den *= BigRational(x + y);
    return num / den;
}

/// Coefficients c_r with det^R * quotient = sum c_r q1^(R-r) q2^r, found by
/// evaluating at R+1 points y = 1, x = 2, 3, ... and solving the linear system.
inline std::vector<BigInt> expansion_coefficients(bool plus, long a, long b, long alpha, long beta, unsigned n) {
    const unsigned top = plus ? n / 2 : (n - 1) / 2;
    const BigInt det = BigInt(beta * a) - BigInt(alpha * b);
    if (det == 0) throw std::runtime_error("degenerate parameters");
    std::vector<std::vector<BigRational>> m;
    std::vector<BigRational> rhs;
    std::vector<BigRational> ratios;
    for (long x = 2; m.size() < top + 1; ++x) {
        const long y = 1;
        const BigRational q1(alpha * (x * x + y * y) + beta * x * y);
        const BigRational q2(a * (x * x + y * y) + b * x * y);
        if (q1 == 0 || x + y == 0 || x - y == 0) continue;
        const BigRational ratio = q2 / q1;
        bool seen = false;
        for (const auto& r : ratios) seen = seen || r == ratio;
        if (seen) continue;
        ratios.push_back(ratio);
        std::vector<BigRational> row;
        for (unsigned r = 0; r <= top; ++r) {
            BigRational p1 = 1, p2 = 1;
            for (unsigned i = 0; i < top - r; ++i) p1 *= q1;
            for (unsigned i = 0; i < r; ++i) p2 *= q2;
            row.push_back(p1 * p2);
        }
        m.push_back(std::move(row));
        rhs.push_back(BigRational(ipow(det, top)) * power_quotient(plus, n, x, y));
    }
    auto sol = solve(std::move(m), std::move(rhs));
    std::vector<BigInt> out;
    for (auto& v : sol) {
        if (v.get_den() != 1) throw std::runtime_error("non-integral coefficient");
        out.push_back(v.get_num());
    }
    return out;
}

/// Lucas-type integer sequence s(n+1) = p*s(n) + q*s(n-1).
inline BigInt linear(long s0, long s1, long p, long q, unsigned n) {
    BigInt u = s0, v = s1;
    if (n == 0) return u;
    for (unsigned k = 1; k < n; ++k) {
        BigInt w = p * v + q * u;
        u = v;
        v = w;
    }
    return v;
}

/// Evaluates p at the given integer assignment without touching library
/// evaluation code: expands term by term with repeated multiplication.
inline BigInt eval(const qf::Polynomial& p, const std::map<qf::Var, long>& at) {
    BigInt sum = 0;
    for (const auto& t : p.terms()) {
        BigInt v = t.coeff;
        for (qf::Var x : qf::all_vars())
            for (unsigned i = 0; i < t.monomial.exponent(x); ++i) v *= at.at(x);
        sum += v;
    }
    return sum;
}

} // namespace oracle
