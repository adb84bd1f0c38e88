#include "doctest.h"

#include "json.hpp"
#include "qforms/errors.hpp"
#include "qforms/search.hpp"

using namespace qf;

TEST_CASE("direct quotients") {
    CHECK(quotient(SearchKind::SumPowers, 3, 2, 1) == BigInt(3));
    CHECK(quotient(SearchKind::SumPowers, 4, 2, 1) == BigInt(17));
    CHECK(quotient(SearchKind::DiffPowers, 3, 2, 1) == BigInt(7));
    CHECK(quotient(SearchKind::DiffPowers, 4, 3, 1) == BigInt(10));
    CHECK_FALSE(quotient(SearchKind::SumPowers, 3, 1, -1).has_value());
    CHECK_FALSE(quotient(SearchKind::DiffPowers, 3, 2, 2).has_value());
}

TEST_CASE("quotient through the recurrence") {
    CHECK(quotient_via_psi(SearchKind::SumPowers, 3, 1, -1) == 3);
    CHECK(quotient_via_psi(SearchKind::DiffPowers, 3, 2, 2) == 12);
    for (long x = -6; x <= 6; ++x)
        for (long y = -6; y <= 6; ++y)
            for (unsigned n = 2; n <= 9; ++n) {
                if (auto q = quotient(SearchKind::SumPowers, n, x, y)) CHECK(*q == quotient_via_psi(SearchKind::SumPowers, n, x, y));
                if (auto q = quotient(SearchKind::DiffPowers, n, x, y)) CHECK(*q == quotient_via_psi(SearchKind::DiffPowers, n, x, y));
            }
}

TEST_CASE("canonical pairs") {
    CHECK(canonical_pair(4, -3, 1) == std::pair<long, long>{3, 1});
    CHECK(canonical_pair(4, 1, -3) == std::pair<long, long>{3, 1});
    CHECK(canonical_pair(3, 1, -3) == std::pair<long, long>{3, -1});
    CHECK(canonical_pair(3, -3, 1) == std::pair<long, long>{3, -1});
    CHECK(canonical_pair(3, 2, 5) == std::pair<long, long>{5, 2});
    CHECK(canonical_pair(3, -2, -5) == std::pair<long, long>{5, 2});
}

TEST_CASE("configuration") {
    const auto c = parse_search_config("# comment\nkind = diff-powers\nn_min=3\nn_max = 5\n\nbound=7\nexclude_trivial=true\n");
    CHECK(c.kind == SearchKind::DiffPowers);
    CHECK(c.n_min == 3);
    CHECK(c.n_max == 5);
    CHECK(c.bound == 7);
    CHECK(c.exclude_trivial);
    CHECK_THROWS_AS(parse_search_config("bogus=1"), ConfigError);
    CHECK_THROWS_AS(validate({SearchKind::DiffPowers, 2, 2, 5, false}), ConfigError);
    CHECK_THROWS_AS(validate({SearchKind::SumPowers, 3, 3, 0, false}), ConfigError);
    CHECK_THROWS_AS(validate({SearchKind::SumPowers, 5, 3, 5, false}), ConfigError);
    CHECK_NOTHROW(validate({SearchKind::SumPowers, 2, 2, 5, false}));
}

TEST_CASE("small scans") {
    const auto r = run_search({SearchKind::SumPowers, 4, 4, 2, false}, 1);
    // even n: classes are {|x|,|y|} multisets
    for (const auto& h : r.hits) {
        CHECK(h.n == 4);
        if (h.classification == HitClass::Trivial) CHECK(canonical_pair(4, h.z, h.t) == std::pair<long, long>{h.x, h.y});
    }
    CHECK(r.counts.at(4).nontrivial == 0);
    // 7 = Q(2,-1) = Q(3,1) at n = 3 relates different classes
    const auto odd = run_search({SearchKind::SumPowers, 3, 3, 3, true}, 2);
    bool seen = false;
    for (const auto& h : odd.hits) {
        CHECK(h.classification == HitClass::Nontrivial);
        seen = seen || (h.value == 7);
    }
    CHECK(seen);
}

TEST_CASE("job count does not change output") {
    const SearchConfig c{SearchKind::DiffPowers, 3, 6, 6, false};
    CHECK(run_search(c, 1).hits == run_search(c, 4).hits);
}

TEST_CASE("hit serialization") {
    const SearchHit h{3, 3, 1, 3, 2, BigInt(7), HitClass::Nontrivial};
    const auto j = nlohmann::json::parse(to_json(h));
    CHECK(j["value"] == "7");
    CHECK(j["classification"] == "Nontrivial");
    CHECK(j["t"] == 2);
}
