#include "qforms/psiphi.hpp"

#include <map>
#include <mutex>
#include <tuple>

#include "qforms/errors.hpp"

namespace qf {

namespace {

// The recurrence over any ring with +, -, * and construction from int.
template <class Ring>
void extend_sequence(Kind kind, const Ring& a, const Ring& b, std::vector<Ring>& seq, unsigned n) {
    if (seq.empty()) {
        seq.push_back(kind == Kind::Psi ? Ring(2) : Ring(0));
        seq.push_back(Ring(1));
    }
    const Ring c = a + a - b;
    while (seq.size() <= n) {
        const unsigned k = static_cast<unsigned>(seq.size()) - 1;
        const unsigned twist = kind == Kind::Psi ? delta(k) : delta(k + 1);
        Ring next = twist ? c * seq[k] : seq[k];
        next = next - a * seq[k - 1];
        seq.push_back(std::move(next));
    }
}

constexpr std::size_t kMemoCap = 4096;

std::mutex memo_mutex;
std::map<std::tuple<Kind, Polynomial, Polynomial>, std::vector<Polynomial>> memo;

std::mutex table_mutex;
std::map<std::pair<Kind, unsigned>, std::vector<Polynomial>> forward_tables;
std::map<std::pair<Kind, unsigned>, std::vector<Polynomial>> reverse_tables;

Substitution bindings_for(const ParamPoint& ab, const ParamPoint& alpha_beta) {
    return {{Var::a, ab.a}, {Var::b, ab.b}, {Var::alpha, alpha_beta.a}, {Var::beta, alpha_beta.b}};
}

bool is_generic(const ParamPoint& ab, const ParamPoint& alpha_beta) {
    return ab == symbolic_ab() && alpha_beta == symbolic_alpha_beta();
}

void check_index(Kind kind, unsigned n, unsigned r) {
    const unsigned top = top_index(kind, n);
    if (r > top)
        throw IndexOutOfRange("coefficient index " + std::to_string(r) + " exceeds " + std::to_string(top) +
                              " at order " + std::to_string(n));
}

// 2 * sum_j C(n, 2j + offset) * s2^j
BigRational collapsed_sum(unsigned n, unsigned offset, const BigRational& s2) {
    BigRational sum = 0;
    BigRational power = 1;
    for (unsigned k = offset; k <= n; k += 2) {
        sum += BigRational(binomial(n, k)) * power;
        power *= s2;
    }
    return 2 * sum;
}

BigRational closed_exact(Kind kind, const BigInt& a, const BigInt& b, unsigned n) {
    if (b == 2 * a || b == -2 * a)
        throw DegenerateParams("closed form undefined for b = " + b.get_str() + ", a = " + a.get_str());
    if (kind == Kind::Phi && n == 0) return 0;
    BigRational s2(BigInt(b + 2 * a), BigInt(b - 2 * a));
    s2.canonicalize(); // gmp requires a positive denominator
    const unsigned top = kind == Kind::Psi ? n / 2 : (n - 1) / 2;
    BigRational scale(ipow(2 * a - b, top), ipow(BigInt(2), n));
    scale.canonicalize();
    return scale * collapsed_sum(n, kind == Kind::Psi ? 0 : 1, s2);
}

} // namespace

const char* kind_name(Kind k) { return k == Kind::Psi ? "psi" : "phi"; }

ParamPoint symbolic_ab() { return {var(Var::a), var(Var::b)}; }
ParamPoint symbolic_alpha_beta() { return {var(Var::alpha), var(Var::beta)}; }

unsigned top_index(Kind kind, unsigned n) {
    if (kind == Kind::Psi) return n / 2;
    if (n == 0) throw IndexOutOfRange("phi coefficient families need n >= 1");
    return (n - 1) / 2;
}

Polynomial form_determinant(const ParamPoint& ab, const ParamPoint& alpha_beta) {
    return alpha_beta.b * ab.a - alpha_beta.a * ab.b;
}

Polynomial value(Kind kind, const ParamPoint& p, unsigned n) {
    std::lock_guard lock(memo_mutex);
    auto key = std::make_tuple(kind, p.a, p.b);
    auto it = memo.find(key);
    if (it == memo.end()) {
        if (memo.size() >= kMemoCap) memo.clear();
        it = memo.emplace(std::move(key), std::vector<Polynomial>{}).first;
    }
    extend_sequence(kind, p.a, p.b, it->second, n);
    return it->second[n];
}

Polynomial psi(const ParamPoint& p, unsigned n) { return value(Kind::Psi, p, n); }
Polynomial phi(const ParamPoint& p, unsigned n) { return value(Kind::Phi, p, n); }

BigInt value_int(Kind kind, const BigInt& a, const BigInt& b, unsigned n) {
    if (n == 0) return kind == Kind::Psi ? 2 : 0;
    const BigInt c = 2 * a - b;
    BigInt prev = kind == Kind::Psi ? 2 : 0;
    BigInt cur = 1;
    for (unsigned k = 1; k < n; ++k) {
        const unsigned twist = kind == Kind::Psi ? delta(k) : delta(k + 1);
        BigInt next = twist ? BigInt(c * cur) : cur;
        next -= a * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Polynomial psi_binomial(const ParamPoint& p, unsigned n) {
    if (n == 0) return 2;
    const Polynomial c = p.a + p.a - p.b;
    const Polynomial minus_a = -p.a;
    const unsigned top = n / 2;
    Polynomial sum;
    for (unsigned i = 0; i <= top; ++i) {
        // n/(n-i) * C(n-i, i) is an integer: it equals C(n-i, i) + C(n-i-1, i-1).
        BigInt w = binomial(n - i, i) * n;
        mpz_divexact_ui(w.get_mpz_t(), w.get_mpz_t(), n - i);
        sum += scale(pow(minus_a, i) * pow(c, top - i), w);
    }
    return sum;
}

Polynomial phi_binomial(const ParamPoint& p, unsigned n) {
    if (n == 0) return 0;
    const Polynomial c = p.a + p.a - p.b;
    const Polynomial minus_a = -p.a;
    const unsigned top = (n - 1) / 2;
    Polynomial sum;
    for (unsigned i = 0; i <= top; ++i) sum += scale(pow(minus_a, i) * pow(c, top - i), binomial(n - i - 1, i));
    return sum;
}

BigRational psi_closed_exact(const BigInt& a, const BigInt& b, unsigned n) { return closed_exact(Kind::Psi, a, b, n); }
BigRational phi_closed_exact(const BigInt& a, const BigInt& b, unsigned n) { return closed_exact(Kind::Phi, a, b, n); }

const std::vector<Polynomial>& symbolic_coefficients(Kind kind, unsigned n) {
    std::lock_guard lock(table_mutex);
    auto key = std::make_pair(kind, n);
    if (auto it = forward_tables.find(key); it != forward_tables.end()) return it->second;

    const unsigned top = top_index(kind, n);
    const DiffMap d = {{Var::a, var(Var::alpha)}, {Var::b, var(Var::beta)}};
    std::vector<Polynomial> rows;
    rows.reserve(top + 1);
    Polynomial cur;
    {
        // Avoid the shared memo here; the table lock is already held.
        std::vector<Polynomial> seq;
        extend_sequence(kind, var(Var::a), var(Var::b), seq, n);
        cur = seq[n];
    }
    rows.push_back(cur);
    for (unsigned r = 1; r <= top; ++r) {
        // row_r = (-1)^r / r! * D^r(start) = -D(row_{r-1}) / r
        cur = exact_scalar_divide(-apply_diff_map(cur, d, 1), BigInt(r));
        rows.push_back(cur);
    }
    return forward_tables.emplace(key, std::move(rows)).first->second;
}

const std::vector<Polynomial>& symbolic_coefficients_reverse(Kind kind, unsigned n) {
    std::lock_guard lock(table_mutex);
    auto key = std::make_pair(kind, n);
    if (auto it = reverse_tables.find(key); it != reverse_tables.end()) return it->second;

    const unsigned top = top_index(kind, n);
    const DiffMap d = {{Var::alpha, var(Var::a)}, {Var::beta, var(Var::b)}};
    std::vector<Polynomial> seq;
    extend_sequence(kind, var(Var::alpha), var(Var::beta), seq, n);
    const Polynomial end = seq[n];

    std::vector<Polynomial> rows(top + 1);
    for (unsigned r = 0; r <= top; ++r) {
        const unsigned j = top - r;
        Polynomial image = apply_diff_map(end, d, j);
        image = exact_scalar_divide(image, factorial(j));
        rows[r] = r % 2 ? -image : image;
    }
    return reverse_tables.emplace(key, std::move(rows)).first->second;
}

Polynomial coeff(Kind kind, const ParamPoint& ab, const ParamPoint& alpha_beta, unsigned n, unsigned r) {
    check_index(kind, n, r);
    const Polynomial& row = symbolic_coefficients(kind, n)[r];
    if (is_generic(ab, alpha_beta)) return row;
    return substitute(row, bindings_for(ab, alpha_beta));
}

Polynomial coeff_reverse(Kind kind, const ParamPoint& ab, const ParamPoint& alpha_beta, unsigned n, unsigned r) {
    check_index(kind, n, r);
    const Polynomial& row = symbolic_coefficients_reverse(kind, n)[r];
    if (is_generic(ab, alpha_beta)) return row;
    return substitute(row, bindings_for(ab, alpha_beta));
}

Polynomial phi_coeff_from_psi(const ParamPoint& ab, const ParamPoint& alpha_beta, unsigned n, unsigned r) {
    check_index(Kind::Phi, n, r);
    const Polynomial det = form_determinant(ab, alpha_beta);
    if (det.is_zero()) throw DegenerateParams("beta*a - alpha*b vanishes");
    const unsigned m = n + 1;
    Polynomial lhs = (alpha_beta.a + alpha_beta.a - alpha_beta.b) * Polynomial(static_cast<long>((m / 2) - r)) *
                     coeff(Kind::Psi, ab, alpha_beta, m, r);
    Polynomial rhs = (ab.a + ab.a - ab.b) * Polynomial(static_cast<long>(r + 1)) *
                     coeff(Kind::Psi, ab, alpha_beta, m, r + 1);
    return exact_divide(lhs + rhs, scale(det, BigInt(m)));
}

CoeffTable coeff_table(Kind kind, const ParamPoint& ab, const ParamPoint& alpha_beta, unsigned n) {
    if (form_determinant(ab, alpha_beta).is_zero()) throw DegenerateParams("beta*a - alpha*b vanishes");
    const unsigned top = top_index(kind, n);
    CoeffTable table{kind, ab, alpha_beta, n, {}};
    table.entries.reserve(top + 1);
    for (unsigned r = 0; r <= top; ++r) table.entries.push_back(coeff(kind, ab, alpha_beta, n, r));

    const Polynomial start = value(kind, ab, n);
    Polynomial end = value(kind, alpha_beta, n);
    if (top % 2) end = -end;
    if (table.entries.front() != start || table.entries.back() != end)
        throw Error("coefficient table endpoints disagree with the recurrence");
    return table;
}

} // namespace qf
