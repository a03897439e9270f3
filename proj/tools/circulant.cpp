// Command-line front end: verify, search, audit, conjecture, construct,
// barker, autocorr.  Exit codes: 0 success/holds, 1 verification failure,
// 2 input error, 3 unresolved (node budget exhausted).

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "chm/conditions.hpp"
#include "chm/constructions.hpp"
#include "chm/core.hpp"
#include "chm/search.hpp"
#include "chm/symmetric.hpp"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitUnresolved = 3;

long long parse_d(const std::string& text) {
    // d given as an integer or a decimal ending in .5; converted to d2 = 2d
    std::string s = text;
    long long half = 0;
    if (auto dot = s.find('.'); dot != std::string::npos) {
        if (s.substr(dot) != ".5") throw chm::Error(chm::Errc::parse, "d must be integer or end in .5");
        s = s.substr(0, dot);
        half = 1;
        if (s.empty()) s = "0";
    }
    std::size_t used = 0;
    long long whole = std::stoll(s, &used);
    if (used != s.size() || whole < 0) throw chm::Error(chm::Errc::parse, "invalid d value '" + text + "'");
    return 2 * whole + half;
}

int default_workers(int requested) {
    int w = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
    if (w < 1) w = 1;
    if (const char* cap = std::getenv("CHM_MAX_WORKERS")) {
        int limit = std::atoi(cap);
        if (limit >= 1 && w > limit) w = limit;
    }
    return w;
}

std::string sign_string(const chm::Generator& g) {
    std::string s;
    for (int j = 1; j < g.n; ++j) s.push_back(g.sign(j) > 0 ? '+' : '-');
    return s;
}

json condition_json(const chm::ConditionReport& rep) {
    json arr = json::array();
    for (const auto& v : rep.verdicts)
        arr.push_back({{"condition", v.id}, {"status", chm::to_string(v.status)}});
    return arr;
}

std::string factor_string(const chm::Factorization& f) {
    if (f.factors.empty()) return "1";
    std::ostringstream out;
    for (std::size_t i = 0; i < f.factors.size(); ++i) {
        if (i) out << "*";
        out << f.factors[i].first;
        if (f.factors[i].second > 1) out << "^" << f.factors[i].second;
    }
    return out.str();
}

int cmd_verify(const std::string& path, bool records) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "cannot open '" << path << "'\n";
        return kExitInput;
    }
    std::string line;
    std::size_t lineno = 0;
    bool all_orthogonal = true;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        chm::Generator g;
        try {
            g = chm::parse_generator(line);
        } catch (const chm::ParseError& e) {
            std::cerr << path << ":" << lineno << ": " << e.what() << "\n";
            return kExitInput;
        } catch (const chm::Error& e) {
            std::cerr << path << ":" << lineno << ": " << e.what() << "\n";
            return kExitInput;
        }
        bool orth = chm::is_orthogonal(g);
        all_orthogonal = all_orthogonal && orth;
        chm::ConditionReport rep = chm::check_generator(g);
        chm::Family fam = chm::classify(g);
        if (records) {
            json rec{{"n", g.n},
                     {"d2", g.d2},
                     {"signs", sign_string(g)},
                     {"verdict", orth ? "orthogonal" : "not-orthogonal"},
                     {"family", chm::to_string(fam)},
                     {"conditions", condition_json(rep)}};
            std::cout << rec.dump() << "\n";
        } else {
            std::cout << chm::format_generator(g) << "  " << (orth ? "orthogonal" : "NOT orthogonal")
                      << "  family=" << chm::to_string(fam)
                      << "  conditions=" << (rep.admissible ? "pass" : "fail") << "\n";
        }
    }
    return all_orthogonal ? kExitOk : kExitVerifyFail;
}

int cmd_search(int n, const std::string& d_text, bool symmetric_only, int workers, bool long_run,
               bool first_only, bool force, bool records, long long budget_arg) {
    long long d2;
    try {
        d2 = parse_d(d_text);
    } catch (const chm::Error& e) {
        std::cerr << e.what() << "\n";
        return kExitInput;
    }
    chm::ConditionReport rep = chm::check_pair(n, d2);
    if (!rep.admissible && !force) {
        std::cerr << "pair (n=" << n << ", d2=" << d2 << ") fails necessary conditions:";
        for (const auto& v : rep.verdicts)
            if (v.status == chm::Status::fail) std::cerr << " " << v.id;
        std::cerr << "; use --force to search anyway\n";
        return kExitInput;
    }

    chm::SearchOptions opts;
    opts.symmetric_only = symmetric_only;
    opts.worker_count = default_workers(workers);
    opts.collect_all = !first_only;
    opts.progress = true;
    if (budget_arg > 0)
        opts.node_budget = static_cast<unsigned long long>(budget_arg);
    else if (n > 30 && !long_run)
        opts.node_budget = 50'000'000ULL;  // escalate with --long

    auto t0 = std::chrono::steady_clock::now();
    chm::SearchResult res = symmetric_only ? chm::symmetric_enumerate(n, d2, opts)
                                           : chm::dfs_enumerate(n, d2, opts);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    for (const auto& rec : res.solutions) {
        if (records) {
            json obj{{"n", rec.generator.n},
                     {"d2", rec.generator.d2},
                     {"signs", sign_string(rec.generator)},
                     {"family", chm::to_string(rec.family)},
                     {"verdict", rec.verified ? "orthogonal" : "not-orthogonal"}};
            std::cout << obj.dump() << "\n";
        } else {
            std::cout << chm::format_generator(rec.generator) << "  family=" << chm::to_string(rec.family)
                      << "\n";
        }
    }
    if (!records)
        std::cout << res.solutions.size() << " solutions, " << res.nodes << " nodes, " << secs << " s"
                  << (res.complete ? "" : " (INCOMPLETE: node budget exhausted)") << "\n";
    return res.complete ? kExitOk : kExitUnresolved;
}

int cmd_audit(long long kmax, bool cases, bool records) {
    chm::KAudit audit = chm::k_audit(kmax);
    for (const auto& row : audit.rows) {
        if (records) {
            json obj{{"k", row.k},
                     {"t", row.tuple.t},
                     {"u", row.tuple.u},
                     {"w", row.tuple.w},
                     {"z", row.tuple.z},
                     {"n", row.n},
                     {"factorization", factor_string(row.factorization)},
                     {"r", row.r},
                     {"passes", row.passes},
                     {"d2", row.d2}};
            std::cout << obj.dump() << "\n";
        } else {
            std::cout << "k=" << row.k << " (t,u,w,z)=(" << row.tuple.t << "," << row.tuple.u << ","
                      << row.tuple.w << "," << row.tuple.z << ") n=" << row.n << "="
                      << factor_string(row.factorization) << " r=" << row.r
                      << (row.passes ? " k+1>2^r" : " EXCEPTION d=" + std::to_string(row.d2 / 2)) << "\n";
        }
    }
    if (!records) {
        std::cout << audit.rows.size() << " rows, " << audit.exceptions.size() << " exceptions\n";
        for (const auto& row : audit.exceptions)
            std::cout << "exception: k=" << row.k << " n=" << row.n << " d=" << row.d2 / 2 << "\n";
    }
    if (cases) {
        for (auto [n, d2] : {std::pair<long long, long long>{120, 10}, {924, 58}}) {
            chm::EliminationReport rep = chm::eliminate_case(n, d2);
            if (records) {
                json obj{{"n", rep.n},
                         {"d2", rep.d2},
                         {"cases", rep.cases_tried},
                         {"survivors", rep.survivors.size()}};
                std::cout << obj.dump() << "\n";
            } else {
                std::cout << "eliminate (" << n << "," << d2 / 2 << "): " << rep.cases_tried
                          << " cases, " << rep.survivors.size() << " survivors\n";
            }
        }
    }
    return kExitOk;
}

int cmd_conjecture(int nmax, int workers, bool long_run, bool records) {
    chm::SearchOptions opts;
    opts.worker_count = default_workers(workers);
    if (!long_run) opts.node_budget = 50'000'000ULL;
    chm::ConjectureReport report = chm::verify_conjecture(nmax, opts);
    bool counterexample = false;
    for (const auto& p : report.pairs) {
        if (records) {
            json obj{{"n", p.n},
                     {"d2", p.d2},
                     {"maximal", p.maximal},
                     {"count", p.count},
                     {"resolved", p.resolved}};
            std::cout << obj.dump() << "\n";
        } else {
            std::cout << "n=" << p.n << " d2=" << p.d2 << (p.maximal ? " maximal " : " searched ")
                      << p.count << " solutions" << (p.resolved ? "" : " [UNRESOLVED: budget]") << "\n";
        }
        if (!p.maximal && p.resolved && p.count != 0) counterexample = true;
    }
    if (!records) {
        if (!report.all_resolved)
            std::cout << "verdict: UNRESOLVED up to n=" << nmax << " (rerun with --long)\n";
        else if (report.holds)
            std::cout << "verdict: n = 2(d+1) holds for all solutions up to n=" << nmax << "\n";
        else
            std::cout << "verdict: COUNTEREXAMPLE found\n";
    }
    if (counterexample) return kExitVerifyFail;
    if (!report.all_resolved) return kExitUnresolved;
    return kExitOk;
}

int cmd_construct(const std::string& family, int n) {
    try {
        if (family == "all") {
            for (const auto& g : chm::enumerate_max_d(n))
                std::cout << chm::format_generator(g) << "  family=" << chm::to_string(chm::classify(g))
                          << "\n";
        } else {
            chm::Generator g = chm::family_generator(chm::family_from_string(family), n);
            std::cout << chm::format_generator(g) << "\n";
        }
    } catch (const chm::Error& e) {
        std::cerr << e.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}

int cmd_barker(int lenmax) {
    if (lenmax > 13)
        std::cerr << "warning: lengths beyond 13 are expected to yield nothing new\n";
    auto codes = chm::barker_enumerate(lenmax);
    for (const auto& c : codes) {
        for (int v : c) std::cout << (v > 0 ? '+' : '-');
        std::cout << "  (length " << c.size() << ")\n";
    }
    std::cout << codes.size() << " Barker codes up to length " << lenmax << "\n";
    return kExitOk;
}

int cmd_autocorr(const std::string& line) {
    chm::Generator g;
    try {
        g = chm::parse_generator(line);
    } catch (const chm::Error& e) {
        std::cerr << e.what() << "\n";
        return kExitInput;
    }
    chm::AutocorrelationProfile p = chm::autocorrelation(g);
    for (int m = 0; m < p.n; ++m)
        std::cout << "shift " << m << ": " << static_cast<double>(p.values4[m]) / 4.0 << "\n";
    std::cout << (chm::is_orthogonal(g) ? "orthogonal" : "not orthogonal") << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Circulant +-1 matrix toolkit: orthogonality, enumeration, classification"};
    app.require_subcommand(1);

    // verify
    std::string verify_path;
    bool verify_records = false;
    auto* verify = app.add_subcommand("verify", "check a file of generators (format: n d2 +-...)");
    verify->add_option("file", verify_path, "input file")->required();
    verify->add_flag("--records", verify_records, "emit JSON records");

    // search
    int search_n = 0;
    std::string search_d;
    bool sym_only = false, search_long = false, search_first = false, search_force = false,
         search_records = false, search_all = false;
    int search_workers = 0;
    long long search_budget = 0;
    auto* search = app.add_subcommand("search", "enumerate orthogonal generators for (n, d)");
    search->add_option("n", search_n, "order")->required();
    search->add_option("d", search_d, "diagonal (integer or .5 decimal)")->required();
    search->add_flag("--symmetric-only", sym_only, "restrict to symmetric generators");
    search->add_option("--workers", search_workers, "worker threads");
    search->add_flag("--long", search_long, "lift the default node budget for n > 30");
    search->add_flag("--all", search_all, "collect all solutions (default)");
    search->add_flag("--first", search_first, "stop at the first solution");
    search->add_flag("--force", search_force, "search even if the pair fails necessary conditions");
    search->add_flag("--records", search_records, "emit JSON records");
    search->add_option("--budget", search_budget, "explicit node budget");

    // audit
    long long audit_kmax = 127;
    bool audit_cases = false, audit_records = false;
    auto* audit = app.add_subcommand("audit", "symmetric-case k-audit and case eliminations");
    audit->add_option("--kmax", audit_kmax, "largest odd k (default 127)");
    audit->add_flag("--cases", audit_cases, "run the (120,5) and (924,29) eliminations");
    audit->add_flag("--records", audit_records, "emit JSON records");

    // conjecture
    int conj_nmax = 50, conj_workers = 0;
    bool conj_long = false, conj_records = false;
    auto* conjecture = app.add_subcommand("conjecture", "verify n = 2(d+1) up to n_max");
    conjecture->add_option("--nmax", conj_nmax, "largest order (default 50)");
    conjecture->add_option("--workers", conj_workers, "worker threads");
    conjecture->add_flag("--long", conj_long, "no node budget (needed for n > 30 pairs)");
    conjecture->add_flag("--records", conj_records, "emit JSON records");

    // construct
    std::string construct_family;
    int construct_n = 0;
    auto* construct = app.add_subcommand("construct", "emit family generators (g1,g2,g4a,g4b,all)");
    construct->add_option("family", construct_family, "family name or 'all'")->required();
    construct->add_option("n", construct_n, "order")->required();

    // barker
    int barker_lenmax = 13;
    auto* barker = app.add_subcommand("barker", "enumerate Barker codes");
    barker->add_option("--lenmax", barker_lenmax, "largest length (default 13)");

    // autocorr
    std::string autocorr_line;
    auto* autocorr = app.add_subcommand("autocorr", "print a generator's autocorrelation profile");
    autocorr->add_option("generator", autocorr_line, "generator in text format, quoted")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*verify) return cmd_verify(verify_path, verify_records);
        if (*search)
            return cmd_search(search_n, search_d, sym_only, search_workers, search_long,
                              search_first && !search_all, search_force, search_records, search_budget);
        if (*audit) return cmd_audit(audit_kmax, audit_cases, audit_records);
        if (*conjecture) return cmd_conjecture(conj_nmax, conj_workers, conj_long, conj_records);
        if (*construct) return cmd_construct(construct_family, construct_n);
        if (*barker) return cmd_barker(barker_lenmax);
        if (*autocorr) return cmd_autocorr(autocorr_line);
    } catch (const chm::Error& e) {
        std::cerr << e.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}
