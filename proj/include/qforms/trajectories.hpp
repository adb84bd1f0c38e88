#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qforms/identities.hpp"
#include "qforms/psiphi.hpp"

namespace qf {

struct TrajectorySpec {
    Kind kind;
    ParamPoint from;
    ParamPoint to;
    unsigned n;
};

/// Coefficient family read as a path from value(from, n) to value(-to, n).
struct Trajectory {
    TrajectorySpec spec;
    std::vector<Polynomial> terms;
    Polynomial start_value;
    Polynomial end_value;
    bool is_orbit;
};

/// Throws DegenerateParams when beta*a - alpha*b vanishes.
Trajectory trajectory(const TrajectorySpec& spec);

enum class TrajectoryName {
    ChebyshevLucas,
    LucasFibonacci,
    LucasOrbit,
    LucasPell,
    FibonacciPell,
    FibonacciOrbit,
    FibonacciLucas,
    MersenneOrbit,
    MersenneTrajectory,
    ChebyshevDicksonFirst,
    ChebyshevDicksonSecond,
    FermatOrbit,
    SumsOfPowers,
    DifferenceOfPowers,
};

enum class Parity { Any, Even, Odd };

struct CatalogEntry {
    TrajectoryName name;
    std::string_view slug;
    Kind kind;
    ParamPoint from;
    ParamPoint to;
    Parity parity;
    /// Variables the box identity is written in.
    FormVars box_vars;
};

const std::vector<CatalogEntry>& trajectory_catalog();
const CatalogEntry& catalog_entry(TrajectoryName name);
/// Accepts the kebab-case slug or the enumerator spelling.
TrajectoryName trajectory_from_name(std::string_view text);

/// Order used by a catalog entry: n itself, or 2^n for the Fermat orbit.
unsigned catalog_order(TrajectoryName name, unsigned arg);

/// Generates a catalog trajectory. For FermatOrbit `arg` is k and the order is
/// 2^k (k >= 1); otherwise it is the order. Throws ParityMismatch when the
/// order violates the entry's parity, and Error when an endpoint disagrees
/// with the classical value it is labelled with.
Trajectory named_trajectory(TrajectoryName name, unsigned arg);

/// The classical values an entry's endpoints are labelled with.
std::pair<Polynomial, Polynomial> expected_endpoints(TrajectoryName name, unsigned order);

/// The entry's expansion identity, in its box variables, with its own terms.
IdentityReport verify_box_identity(TrajectoryName name, unsigned order);

/// Phi path followed by the Psi path at (-1,-3) -> (-1,3), sharing the
/// middle value once. n must be odd.
std::vector<Polynomial> combined_fibonacci_lucas_orbit(unsigned n);

/// Sum of the terms against value(from - theta*to, n).
IdentityReport trajectory_sum_check(const TrajectorySpec& spec, const Polynomial& theta);

std::string to_json(const Trajectory& t);
/// One "r,term" row per term, with a header line.
std::string to_csv(const Trajectory& t);

} // namespace qf
