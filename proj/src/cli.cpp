#include "qforms/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "qforms/errors.hpp"
#include "qforms/identities.hpp"
#include "qforms/psiphi.hpp"
#include "qforms/search.hpp"
#include "qforms/sequences.hpp"
#include "qforms/trajectories.hpp"

namespace qf {

namespace {

// Raised for argument problems found after CLI11 has accepted the syntax.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Kind parse_kind(const std::string& s) {
    if (s == "psi") return Kind::Psi;
    if (s == "phi") return Kind::Phi;
    throw UsageError("kind must be 'psi' or 'phi', got '" + s + "'");
}

std::pair<unsigned, unsigned> parse_range(const std::string& s) {
    auto number = [&](const std::string& part) {
        if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
            throw UsageError("invalid range '" + s + "'");
        return static_cast<unsigned>(std::stoul(part));
    };
    if (auto dots = s.find(".."); dots != std::string::npos) {
        unsigned lo = number(s.substr(0, dots)), hi = number(s.substr(dots + 2));
        if (lo > hi) throw UsageError("empty range '" + s + "'");
        return {lo, hi};
    }
    unsigned n = number(s);
    return {n, n};
}

ParamPoint parse_point(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) throw UsageError("expected 'a,b', got '" + s + "'");
    return {Polynomial::parse(s.substr(0, comma)), Polynomial::parse(s.substr(comma + 1))};
}

unsigned default_jobs() {
    if (const char* env = std::getenv("QF_JOBS")) {
        try {
            long v = std::stol(env);
            if (v >= 1) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
        throw UsageError(std::string("QF_JOBS must be a positive integer, got '") + env + "'");
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

// Runs `task(i)` for i in [0, count) on `jobs` threads.
template <class Task>
void parallel_for(unsigned count, unsigned jobs, Task task) {
    std::atomic<unsigned> next{0};
    auto worker = [&] {
        for (unsigned i = next++; i < count; i = next++) task(i);
    };
    jobs = std::max(1u, std::min(jobs, count));
    if (jobs == 1) return worker();
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
}

struct EvalArgs {
    std::string kind, a, b;
    unsigned n = 0;
};

struct CoeffArgs {
    std::string kind, a, b, alpha, beta, format = "csv";
    unsigned n = 0;
};

struct VerifyArgs {
    std::string selector, range = "1";
    std::string mode = "symbolic";
    unsigned samples = 50;
    std::uint64_t seed = 20240601;
    std::optional<unsigned> jobs;
};

struct SequenceArgs {
    std::vector<std::string> names;
    unsigned n_max = 20;
    bool check = false;
};

struct TrajectoryArgs {
    std::string name;
    unsigned n = 0;
    std::string format = "json";
    std::string kind = "psi", from, to;
};

struct SearchArgs {
    std::string config_file, kind;
    std::optional<unsigned> n_min, n_max;
    std::optional<long> bound;
    bool exclude_trivial = false;
    std::optional<unsigned> jobs;
};

int cmd_eval(const EvalArgs& a, std::ostream& out) {
    const ParamPoint p{Polynomial::parse(a.a), Polynomial::parse(a.b)};
    out << value(parse_kind(a.kind), p, a.n) << '\n';
    return kExitOk;
}

int cmd_coeffs(const CoeffArgs& a, std::ostream& out) {
    const ParamPoint ab{Polynomial::parse(a.a), Polynomial::parse(a.b)};
    const ParamPoint ab2{Polynomial::parse(a.alpha), Polynomial::parse(a.beta)};
    const CoeffTable t = coeff_table(parse_kind(a.kind), ab, ab2, a.n);
    if (a.format == "csv") {
        out << "r,coefficient\n";
        for (std::size_t r = 0; r < t.entries.size(); ++r) out << r << ',' << t.entries[r] << '\n';
    } else {
        nlohmann::ordered_json j;
        j["kind"] = kind_name(t.kind);
        j["ab"] = {ab.a.to_string(), ab.b.to_string()};
        j["alpha_beta"] = {ab2.a.to_string(), ab2.b.to_string()};
        j["n"] = t.n;
        auto rows = nlohmann::ordered_json::array();
        for (const auto& e : t.entries) rows.push_back(e.to_string());
        j["entries"] = rows;
        out << j.dump() << '\n';
    }
    return kExitOk;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
    if (a.selector == "list") {
        for (const auto& s : identity_selectors()) out << s.name << '\n';
        return kExitOk;
    }
    const auto& sel = identity_selectors();
    auto it = std::find_if(sel.begin(), sel.end(), [&](const IdentitySelector& s) { return s.name == a.selector; });
    if (it == sel.end()) throw UsageError("unknown identity '" + a.selector + "' (try 'verify list')");
    if (a.mode != "symbolic" && a.mode != "numeric") throw UsageError("mode must be symbolic or numeric");

    auto [lo, hi] = it->takes_n ? parse_range(a.range) : std::pair<unsigned, unsigned>{0, 0};
    if (it->takes_n && lo < it->min_n) throw UsageError(a.selector + " needs n >= " + std::to_string(it->min_n));
    const unsigned count = hi - lo + 1;
    std::vector<IdentityReport> reports(count);
    std::vector<std::string> errors(count);
    const bool numeric = a.mode == "numeric";
    parallel_for(count, a.jobs.value_or(default_jobs()), [&](unsigned i) {
        try {
            reports[i] = run_identity(a.selector, lo + i, numeric, a.samples, a.seed);
        } catch (const std::exception& e) {
            errors[i] = e.what();
        }
    });

    int status = kExitOk;
    for (unsigned i = 0; i < count; ++i) {
        if (!errors[i].empty()) throw Error("n = " + std::to_string(lo + i) + ": " + errors[i]);
        out << to_json(reports[i]) << '\n';
        if (!reports[i].holds) status = kExitFinding;
    }
    return status;
}

int cmd_sequences(const SequenceArgs& a, std::ostream& out) {
    std::vector<SequenceName> names;
    for (const auto& n : a.names) names.push_back(sequence_from_name(n));
    if (names.empty()) names = all_sequences();
    int status = kExitOk;
    out << "name,n,term" << (a.check ? ",oracle,verdict" : "") << '\n';
    for (SequenceName s : names) {
        for (unsigned n = 0; n <= a.n_max; ++n) {
            const Polynomial t = term(s, n);
            out << sequence_name(s) << ',' << n << ',' << t;
            if (a.check) {
                const Polynomial o = oracle_term(s, n);
                out << ',' << o << ',' << (t == o ? "Holds" : "Fails");
                if (t != o) status = kExitFinding;
            }
            out << '\n';
        }
    }
    return status;
}

int cmd_trajectory(const TrajectoryArgs& a, std::ostream& out) {
    if (a.format != "json" && a.format != "csv") throw UsageError("format must be json or csv");
    Trajectory t = [&] {
        if (a.name == "custom") {
            if (a.from.empty() || a.to.empty()) throw UsageError("custom trajectories need --from and --to");
            return trajectory({parse_kind(a.kind), parse_point(a.from), parse_point(a.to), a.n});
        }
        return named_trajectory(trajectory_from_name(a.name), a.n);
    }();
    out << (a.format == "json" ? to_json(t) + "\n" : to_csv(t));
    return kExitOk;
}

int cmd_search(const SearchArgs& a, std::ostream& out) {
    SearchConfig cfg;
    if (!a.config_file.empty()) {
        std::ifstream in(a.config_file);
        if (!in) throw ConfigError("cannot read config file '" + a.config_file + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        cfg = parse_search_config(buf.str());
    }
    if (!a.kind.empty()) cfg.kind = search_kind_from_name(a.kind);
    if (a.n_min) cfg.n_min = *a.n_min;
    if (a.n_max) cfg.n_max = *a.n_max;
    if (a.n_min && !a.n_max && cfg.n_max < cfg.n_min) cfg.n_max = cfg.n_min;
    if (a.bound) cfg.bound = *a.bound;
    if (a.exclude_trivial) cfg.exclude_trivial = true;
    validate(cfg);

    const SearchResult result = run_search(cfg, a.jobs.value_or(default_jobs()));
    for (const auto& h : result.hits) out << to_json(h) << '\n';
    out << summary_json(result) << '\n';
    const bool found = std::any_of(result.hits.begin(), result.hits.end(),
                                   [](const SearchHit& h) { return h.classification == HitClass::Nontrivial; });
    return found ? kExitFinding : kExitOk;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations with the Psi/Phi polynomial families", "qforms"};
    app.require_subcommand(1);

    EvalArgs ev;
    auto* eval = app.add_subcommand("eval", "Evaluate psi/phi at (a, b) and order n");
    eval->add_option("kind", ev.kind, "psi or phi")->required();
    eval->add_option("a", ev.a, "first parameter (integer or polynomial)")->required();
    eval->add_option("b", ev.b, "second parameter")->required();
    eval->add_option("n", ev.n, "order")->required();

    CoeffArgs co;
    auto* coeffs = app.add_subcommand("coeffs", "Coefficient table for (a, b) and (alpha, beta)");
    coeffs->add_option("kind", co.kind, "psi or phi")->required();
    coeffs->add_option("a", co.a)->required();
    coeffs->add_option("b", co.b)->required();
    coeffs->add_option("alpha", co.alpha)->required();
    coeffs->add_option("beta", co.beta)->required();
    coeffs->add_option("n", co.n, "order")->required();
    coeffs->add_option("--format", co.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    VerifyArgs ve;
    auto* verify = app.add_subcommand("verify", "Check identities; 'verify list' shows the selectors");
    verify->add_option("identity", ve.selector, "identity selector")->required();
    verify->add_option("range", ve.range, "n or lo..hi");
    verify->add_option("--mode", ve.mode, "symbolic or numeric")->check(CLI::IsMember({"symbolic", "numeric"}));
    verify->add_option("--samples", ve.samples, "random parameter sets per n in numeric mode");
    verify->add_option("--seed", ve.seed, "seed for numeric sampling");
    verify->add_option("--jobs", ve.jobs, "worker threads (default: QF_JOBS or all cores)");

    SequenceArgs se;
    auto* seqs = app.add_subcommand("sequences", "Emit sequence terms as CSV");
    seqs->add_option("--name", se.names, "sequence name (repeatable; default all)");
    seqs->add_option("--n-max", se.n_max, "largest index");
    seqs->add_flag("--check", se.check, "compare with the classical definitions");

    TrajectoryArgs tr;
    auto* traj = app.add_subcommand("trajectory", "Generate a named or custom trajectory");
    traj->add_option("name", tr.name, "catalog name or 'custom'")->required();
    traj->add_option("n", tr.n, "order (k for fermat-orbit)")->required();
    traj->add_option("--format", tr.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    traj->add_option("--kind", tr.kind, "custom: psi or phi");
    traj->add_option("--from", tr.from, "custom: start point 'a,b'");
    traj->add_option("--to", tr.to, "custom: partner point 'alpha,beta'");

    SearchArgs sa;
    auto* search = app.add_subcommand("search", "Bounded search for equal power quotients");
    search->add_option("--config", sa.config_file, "key=value config file");
    search->add_option("--kind", sa.kind, "sum-powers or diff-powers");
    search->add_option("--n-min", sa.n_min);
    search->add_option("--n-max", sa.n_max);
    search->add_option("--bound", sa.bound, "search |x|,|y| <= bound");
    search->add_flag("--exclude-trivial", sa.exclude_trivial);
    search->add_option("--jobs", sa.jobs, "worker threads (default: QF_JOBS or all cores)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (*eval) return cmd_eval(ev, out);
        if (*coeffs) return cmd_coeffs(co, out);
        if (*verify) return cmd_verify(ve, out);
        if (*seqs) return cmd_sequences(se, out);
        if (*traj) return cmd_trajectory(tr, out);
        if (*search) return cmd_search(sa, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ParityMismatch& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UnknownVariable& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DegenerateParams& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const IndexOutOfRange& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFinding;
    }
    return kExitUsage;
}

} // namespace qf
