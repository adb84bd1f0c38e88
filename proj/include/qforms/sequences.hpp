#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qforms/identities.hpp"
#include "qforms/psiphi.hpp"

namespace qf {

enum class SequenceName {
    Lucas,
    Fibonacci,
    Pell,
    PellLucas,
    PellPoly,
    PellLucasPoly,
    MersenneSide,
    FermatSide,
    ChebyshevT,
    ChebyshevU,
    DicksonD,
    DicksonE,
};

const std::vector<SequenceName>& all_sequences();
std::string_view sequence_name(SequenceName s);
/// Accepts the enumerator spelling or kebab-case, case-insensitively.
SequenceName sequence_from_name(std::string_view text);

/// base^delta(n + parity_offset), multiplied in or divided out.
struct PrefactorFactor {
    Polynomial base;
    unsigned parity_offset;
    bool divide;
};

struct SequenceBinding {
    SequenceName name;
    Kind kind;
    ParamPoint params;
    std::vector<PrefactorFactor> prefactor;
    unsigned index_shift;
    /// True when terms are integers rather than polynomials in x / par.
    bool integer;
};

const SequenceBinding& binding(SequenceName name);

/// The term at index n through the recurrence family.
Polynomial term(SequenceName name, unsigned n);
/// The same term from its classical definition.
Polynomial oracle_term(SequenceName name, unsigned n);
/// term vs oracle_term for n = 0..n_max.
std::vector<IdentityReport> crosscheck(SequenceName name, unsigned n_max);

} // namespace qf
