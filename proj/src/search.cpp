#include "qforms/search.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <sstream>
#include <thread>
#include <tuple>

#include "json.hpp"

#include "qforms/errors.hpp"
#include "qforms/psiphi.hpp"

namespace qf {

namespace {

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

long parse_long(const std::string& key, const std::string& v) {
    try {
        std::size_t used = 0;
        long out = std::stol(v, &used);
        if (used != v.size()) throw std::invalid_argument(v);
        return out;
    } catch (const std::exception&) {
        throw ConfigError("invalid integer for " + key + ": '" + v + "'");
    }
}

bool parse_bool(const std::string& key, std::string v) {
    std::transform(v.begin(), v.end(), v.begin(), [](unsigned char c) { return std::tolower(c); });
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw ConfigError("invalid boolean for " + key + ": '" + v + "'");
}

auto hit_key(const SearchHit& h) { return std::tie(h.n, h.x, h.y, h.z, h.t); }

// Hits for one order n, already sorted.
std::vector<SearchHit> scan_order(const SearchConfig& cfg, unsigned n) {
    using Pair = std::pair<long, long>;
    // value -> representative -> members
    std::map<BigInt, std::map<Pair, std::vector<Pair>>> groups;
    for (long x = -cfg.bound; x <= cfg.bound; ++x) {
        for (long y = -cfg.bound; y <= cfg.bound; ++y) {
            auto q = quotient(cfg.kind, n, x, y);
            if (!q) continue;
            groups[*q][canonical_pair(n, x, y)].push_back({x, y});
        }
    }

    std::vector<SearchHit> hits;
    for (const auto& [val, classes] : groups) {
        if (!cfg.exclude_trivial) {
            for (const auto& [rep, members] : classes)
                for (const auto& m : members)
                    if (m != rep) hits.push_back({n, rep.first, rep.second, m.first, m.second, val, HitClass::Trivial});
        }
        for (auto i = classes.begin(); i != classes.end(); ++i)
            for (auto j = std::next(i); j != classes.end(); ++j)
                hits.push_back({n, i->first.first, i->first.second, j->first.first, j->first.second, val,
                                HitClass::Nontrivial});
    }
    std::sort(hits.begin(), hits.end(), [](const SearchHit& l, const SearchHit& r) { return hit_key(l) < hit_key(r); });
    return hits;
}

} // namespace

const char* search_kind_name(SearchKind k) { return k == SearchKind::SumPowers ? "sum-powers" : "diff-powers"; }

SearchKind search_kind_from_name(std::string_view text) {
    std::string key;
    for (char c : text)
        if (c != '-' && c != '_') key += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (key == "sumpowers" || key == "sum") return SearchKind::SumPowers;
    if (key == "diffpowers" || key == "diff") return SearchKind::DiffPowers;
    throw ConfigError("unknown search kind '" + std::string(text) + "'");
}

void validate(const SearchConfig& c) {
    if (c.bound < 1) throw ConfigError("bound must be >= 1");
    if (c.bound > 100000) throw ConfigError("bound is beyond desk scale");
    if (c.n_min < 2 || c.n_max > 64 || c.n_min > c.n_max) throw ConfigError("n range must lie within [2, 64]");
    if (c.kind == SearchKind::DiffPowers && c.n_min == 2)
        throw ConfigError("diff-powers at n = 2 is degenerate: the quotient is identically 1");
}

SearchConfig parse_search_config(std::string_view text, SearchConfig cfg) {
    std::istringstream in{std::string(text)};
    std::string line;
    unsigned lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError("line " + std::to_string(lineno) + ": expected key=value");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key == "kind")
            cfg.kind = search_kind_from_name(val);
        else if (key == "n_min")
            cfg.n_min = static_cast<unsigned>(std::max(0L, parse_long(key, val)));
        else if (key == "n_max")
            cfg.n_max = static_cast<unsigned>(std::max(0L, parse_long(key, val)));
        else if (key == "bound")
            cfg.bound = parse_long(key, val);
        else if (key == "exclude_trivial")
            cfg.exclude_trivial = parse_bool(key, val);
        else
            throw ConfigError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
    return cfg;
}

std::optional<BigInt> quotient(SearchKind kind, unsigned n, long x, long y) {
    const BigInt bx(x), by(y);
    const BigInt xn = ipow(bx, n), yn = ipow(by, n);
    BigInt q;
    if (kind == SearchKind::SumPowers) {
        if (!delta(n)) return BigInt(xn + yn);
        if (x + y == 0) return std::nullopt;
        q = xn + yn;
        mpz_divexact(q.get_mpz_t(), q.get_mpz_t(), BigInt(bx + by).get_mpz_t());
        return q;
    }
    if (x == y) return std::nullopt;
    const bool extra = delta(n - 1);
    if (extra && x + y == 0) return std::nullopt;
    q = xn - yn;
    mpz_divexact(q.get_mpz_t(), q.get_mpz_t(), BigInt(bx - by).get_mpz_t());
    if (extra) mpz_divexact(q.get_mpz_t(), q.get_mpz_t(), BigInt(bx + by).get_mpz_t());
    return q;
}

BigInt quotient_via_psi(SearchKind kind, unsigned n, long x, long y) {
    const BigInt bx(x), by(y);
    return value_int(kind == SearchKind::SumPowers ? Kind::Psi : Kind::Phi, bx * by, -(bx * bx) - by * by, n);
}

std::pair<long, long> canonical_pair(unsigned n, long x, long y) {
    if (n % 2 == 0) {
        long p = std::abs(x), q = std::abs(y);
        return {std::max(p, q), std::min(p, q)};
    }
    std::pair<long, long> best{x, y};
    for (auto c : {std::pair{y, x}, std::pair{-x, -y}, std::pair{-y, -x}}) best = std::max(best, c);
    return best;
}

SearchResult run_search(const SearchConfig& config, unsigned jobs) {
    validate(config);
    const unsigned count = config.n_max - config.n_min + 1;
    std::vector<std::vector<SearchHit>> per_n(count);
    std::atomic<unsigned> next{0};
    auto worker = [&] {
        for (unsigned i = next++; i < count; i = next++) per_n[i] = scan_order(config, config.n_min + i);
    };
    const unsigned threads = std::max(1u, std::min(jobs, count));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    SearchResult result;
    for (unsigned i = 0; i < count; ++i) {
        auto& c = result.counts[config.n_min + i];
        for (auto& h : per_n[i]) {
            (h.classification == HitClass::Trivial ? c.trivial : c.nontrivial)++;
            result.hits.push_back(std::move(h));
        }
    }
    return result;
}

std::string to_json(const SearchHit& hit) {
    nlohmann::ordered_json j;
    j["n"] = hit.n;
    j["x"] = hit.x;
    j["y"] = hit.y;
    j["z"] = hit.z;
    j["t"] = hit.t;
    j["value"] = hit.value.get_str();
    j["classification"] = hit.classification == HitClass::Trivial ? "Trivial" : "Nontrivial";
    return j.dump();
}

std::string summary_json(const SearchResult& result) {
    nlohmann::ordered_json per_n = nlohmann::ordered_json::object();
    for (const auto& [n, c] : result.counts)
        per_n[std::to_string(n)] = {{"trivial", c.trivial}, {"nontrivial", c.nontrivial}};
    nlohmann::ordered_json j;
    j["summary"] = per_n;
    return j.dump();
}

} // namespace qf
