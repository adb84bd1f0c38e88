#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qforms/bigint.hpp"

namespace qf {

enum class SearchKind { SumPowers, DiffPowers };

const char* search_kind_name(SearchKind k);
SearchKind search_kind_from_name(std::string_view text);

struct SearchConfig {
    SearchKind kind = SearchKind::SumPowers;
    unsigned n_min = 3;
    unsigned n_max = 3;
    long bound = 10;
    bool exclude_trivial = false;
};

/// Throws ConfigError on an invalid or degenerate configuration.
void validate(const SearchConfig& config);

/// Reads key=value lines (kind, n_min, n_max, bound, exclude_trivial);
/// blank lines and '#' comments are ignored. Keys not present keep `base`.
SearchConfig parse_search_config(std::string_view text, SearchConfig base = {});

/// (x^n + y^n)/(x+y)^delta(n) or (x^n - y^n)/((x-y)(x+y)^delta(n-1));
/// nullopt when a denominator vanishes.
std::optional<BigInt> quotient(SearchKind kind, unsigned n, long x, long y);
/// The same quotient through the recurrence at (xy, -x^2-y^2); always defined.
BigInt quotient_via_psi(SearchKind kind, unsigned n, long x, long y);

enum class HitClass { Trivial, Nontrivial };

struct SearchHit {
    unsigned n;
    long x, y, z, t;
    BigInt value;
    HitClass classification;

    friend bool operator==(const SearchHit&, const SearchHit&) = default;
};

struct SearchCounts {
    std::size_t trivial = 0;
    std::size_t nontrivial = 0;
};

struct SearchResult {
    std::vector<SearchHit> hits;
    std::map<unsigned, SearchCounts> counts;
};

/// Canonical representative of (x, y) under swap and global negation, plus
/// independent sign flips when n is even.
std::pair<long, long> canonical_pair(unsigned n, long x, long y);

/// Exhaustive scan of |x|, |y| <= bound. Pairs in one symmetry class yield
/// Trivial hits (representative, member); distinct classes sharing a value
/// yield Nontrivial hits between representatives. Output order is fixed
/// regardless of `jobs`.
SearchResult run_search(const SearchConfig& config, unsigned jobs = 1);

std::string to_json(const SearchHit& hit);
std::string summary_json(const SearchResult& result);

} // namespace qf
