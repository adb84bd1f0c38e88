#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qforms/psiphi.hpp"

namespace qf {

/// Outcome of checking one identity: holds iff `witness` (lhs - rhs) is zero.
struct IdentityReport {
    std::string identity_id;
    unsigned n = 0;
    std::vector<std::pair<std::string, std::string>> params;
    bool holds = false;
    Polynomial witness;
};

/// One JSON object per report: {identity_id, n, params, verdict, witness?}.
std::string to_json(const IdentityReport& report);

IdentityReport make_report(std::string id, unsigned n, const Polynomial& lhs, const Polynomial& rhs);

/// The two variables a binary form is written in.
struct FormVars {
    Var x = Var::x;
    Var y = Var::y;
};

/// (x^n + y^n)/(x+y)^delta(n) for Psi, (x^n - y^n)/((x-y)(x+y)^delta(n-1)) for Phi.
Polynomial power_quotient(Kind kind, unsigned n, FormVars vars = {});

/// The form alpha*x^2 + beta*x*y + alpha*y^2 for a parameter point.
Polynomial binary_form(const ParamPoint& p, FormVars vars = {});

// Both sides of the master expansion; Psi is the sum case, Phi the difference case.
Polynomial expansion_lhs(Kind kind, unsigned n, const ParamPoint& ab, const ParamPoint& alpha_beta, FormVars vars = {});
Polynomial expansion_rhs(Kind kind, unsigned n, const ParamPoint& ab, const ParamPoint& alpha_beta, FormVars vars = {});
Polynomial expansion_lhs(Kind kind, unsigned n);
Polynomial expansion_rhs(Kind kind, unsigned n);

/// Expansion with table entries supplied by the caller (used for trajectories).
Polynomial expansion_rhs_from(const std::vector<Polynomial>& entries, const ParamPoint& ab,
                              const ParamPoint& alpha_beta, FormVars vars);

IdentityReport verify_expansion(Kind kind, unsigned n);
IdentityReport verify_expansion_at(Kind kind, unsigned n, const ParamPoint& ab, const ParamPoint& alpha_beta,
                                   FormVars vars = {});
/// Numeric variant: `samples` random integer parameter sets with a nonzero
/// determinant, drawn from [-9, 9]. Returns the first failure or a Holds report.
IdentityReport verify_expansion_numeric(Kind kind, unsigned n, unsigned samples, std::uint64_t seed);

IdentityReport verify_haldeman();

// Auxiliary symbols live on registry variables: theta and lambda on u, xi on u, eta on v.
IdentityReport verify_sum_theta(Kind kind, unsigned n);
/// theta fixed to an integer, e.g. +1 or -1.
IdentityReport verify_sum_theta_at(Kind kind, unsigned n, long theta);
IdentityReport verify_sum_general(Kind kind, unsigned n);
IdentityReport verify_sum_binom(Kind kind, unsigned n, unsigned k);
IdentityReport verify_sum_binom_general(Kind kind, unsigned n, unsigned k);

IdentityReport verify_xy_formula(Kind kind, unsigned n);

/// Determinant of the Jacobian of (q1, q2) with respect to (x, y).
Polynomial jacobian_det(const ParamPoint& alpha_beta, const ParamPoint& ab);

/// Sum theorem on the sums/differences-of-powers trajectory, plus (for n <= 10)
/// its expansion identity written in (u, v).
IdentityReport verify_trajectory_sum_powers(Kind kind, unsigned n);

enum class ScalingLaw { Partner, Base, Swap, CommonFactor };
const char* scaling_name(ScalingLaw law);
IdentityReport verify_scaling(Kind kind, ScalingLaw law, unsigned n);

/// Phi(a,b,2n) = Phi(a,b,n) * Psi(a,b,n).
IdentityReport verify_product(unsigned n);
/// The four sign relations between (a,-b,n) and (-a,-b,n).
IdentityReport verify_parity(Kind kind, unsigned n);
/// Applying the differential map floor-index times exhausts Psi(a,b,n) into Psi(alpha,beta,n).
IdentityReport verify_operator_exhaustion(Kind kind, unsigned n);

/// Report id and verifier for the CLI/harness selector table.
struct IdentitySelector {
    std::string name;
    bool takes_n;
    unsigned min_n;
};
const std::vector<IdentitySelector>& identity_selectors();

/// Runs a selector at n. Numeric mode samples random parameter points where
/// the identity allows it.
IdentityReport run_identity(const std::string& selector, unsigned n, bool numeric, unsigned samples,
                            std::uint64_t seed);

} // namespace qf
