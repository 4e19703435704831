/**
 * @file cli.cpp
 * @brief Subcommands ring, groups, verify-corpus, export-complex and word.
 */
#include "seifert_cli/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "seifert/simplicial.hpp"
#include "seifert/words.hpp"
#include "seifert_cli/corpus.hpp"
#include "seifert_cli/report.hpp"

namespace seifert::cli {

namespace {

constexpr int kPass = 0;
constexpr int kParseError = 1;
constexpr int kMismatch = 2;

std::vector<std::uint32_t> parse_primes(const std::string& text) {
    std::vector<std::uint32_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
        if (item.empty()) continue;
        std::size_t pos = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(item, &pos);
        } catch (const std::exception&) {
            throw InputError("not a number: '" + item + "'");
        }
        if (pos != item.size() || v > 0x7fffffffUL || !is_prime(v)) throw InputError("not a prime below 2^31: '" + item + "'");
        out.push_back(static_cast<std::uint32_t>(v));
    }
    if (out.empty()) throw InputError("no primes given");
    return out;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw InputError("cannot write '" + path + "'");
    f << text;
}

std::vector<RingReport> sweep(const std::vector<SeifertInvariants>& fixtures, const std::vector<std::uint32_t>& primes,
                              const RunOptions& options) {
    std::vector<std::pair<std::size_t, std::uint32_t>> jobs;
    for (std::size_t i = 0; i < fixtures.size(); ++i) {
        for (auto p : primes) jobs.emplace_back(i, p);
    }
    std::vector<RingReport> reports(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < jobs.size(); k = next++) {
            reports[k] = check_fixture(fixtures[jobs[k].first], jobs[k].second, options);
        }
    };
    const unsigned n = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return reports;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Mod-p cohomology rings of Seifert manifolds, computed two ways and compared"};
    app.require_subcommand(1);

    std::string invariants;
    std::uint32_t prime = 2;
    std::string primes_text = "2,3,5";
    std::string output = "text";
    std::string variant_text = "theorem";
    std::string export_path;
    bool paranoid = false;
    std::int64_t alpha = 1, beta = 0;

    auto add_common = [&](CLI::App* c) {
        c->add_option("--output", output, "text or json")->check(CLI::IsMember({"text", "json"}));
        c->add_option("--export", export_path, "also write the report to this file");
    };

    CLI::App* ring = app.add_subcommand("ring", "compute the ring and compare with the closed form");
    ring->add_option("--invariants", invariants, "e=<int>;type=<o1..n4>;g=<uint>[;fibers=(a,b),...]")->required();
    ring->add_option("--prime", prime, "coefficient prime")->required();
    ring->add_flag("--paranoid", paranoid, "also evaluate products that vanish for degree reasons");
    ring->add_option("--basis-variant", variant_text, "theorem or table")->check(CLI::IsMember({"theorem", "table"}));
    add_common(ring);

    CLI::App* groups = app.add_subcommand("groups", "cohomology dimensions only");
    groups->add_option("--invariants", invariants, "invariant list")->required();
    groups->add_option("--prime", prime, "coefficient prime")->required();
    add_common(groups);

    CLI::App* corpus_cmd = app.add_subcommand("verify-corpus", "run every check on the pinned corpus");
    corpus_cmd->add_option("--primes", primes_text, "comma-separated primes");
    corpus_cmd->add_flag("--paranoid", paranoid, "also evaluate products that vanish for degree reasons");
    corpus_cmd->add_option("--basis-variant", variant_text, "theorem or table")
        ->check(CLI::IsMember({"theorem", "table"}));
    add_common(corpus_cmd);

    CLI::App* export_cmd = app.add_subcommand("export-complex", "dump the Delta-complex");
    export_cmd->add_option("--invariants", invariants, "invariant list")->required();
    export_cmd->add_option("--export", export_path, "output file (default: standard output)");

    CLI::App* word = app.add_subcommand("word", "pavement word of a fiber");
    word->add_option("--alpha", alpha, "a_k")->required();
    word->add_option("--beta", beta, "b_k")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kPass : kParseError;
    }

    try {
        RunOptions options;
        options.paranoid = paranoid;
        options.variant = parse_variant(variant_text);
        const bool json = output == "json";

        if (*word) {
            const PavementWord w = build_word(alpha, beta);
            out << w.letters << " u=" << w.u << " v=" << w.v << " w=" << w.w << " z=" << w.z << '\n';
            return kPass;
        }
        if (*export_cmd) {
            const std::string dump = export_complex(build_delta_complex(parse(invariants)));
            if (export_path.empty()) {
                out << dump;
            } else {
                write_file(export_path, dump);
            }
            return kPass;
        }
        if (*ring || *groups) {
            if (!is_prime(prime) || prime > 0x7fffffffU) throw InputError("--prime must be a prime below 2^31");
            options.groups_only = static_cast<bool>(*groups);
            const RingReport r = check_fixture(parse(invariants), prime, options);
            const std::string text = json ? nlohmann::json(r).dump(2) + "\n" : render_text(r);
            out << text;
            if (!export_path.empty()) write_file(export_path, nlohmann::json(r).dump(2) + "\n");
            return r.passed ? kPass : kMismatch;
        }
        if (*corpus_cmd) {
            const auto reports = sweep(corpus(), parse_primes(primes_text), options);
            std::size_t failed = 0, theorem_only = 0, table_only = 0, both = 0, neither = 0;
            for (const auto& r : reports) {
                if (!r.passed) ++failed;
                if (r.matching_variants == "theorem") ++theorem_only;
                if (r.matching_variants == "table") ++table_only;
                if (r.matching_variants == "both") ++both;
                if (r.matching_variants == "neither") ++neither;
            }
            nlohmann::json summary{{"fixtures", reports.size()},
                                   {"failed", failed},
                                   {"variants", {{"both", both}, {"theorem", theorem_only}, {"table", table_only}, {"neither", neither}}},
                                   {"verdict", failed == 0 ? "PASS" : "FAIL"}};
            nlohmann::json all{{"reports", reports}, {"summary", summary}};
            if (json) {
                out << all.dump(2) << '\n';
            } else {
                for (const auto& r : reports) {
                    out << (r.passed ? "PASS " : "FAIL ") << r.invariants << " p=" << r.p << " Case " << r.case_id
                        << " variants=" << r.matching_variants;
                    for (const auto& c : r.checks) {
                        if (!c.passed) out << "  [" << c.name << ": " << c.detail << ']';
                    }
                    out << '\n';
                }
                out << "fixtures " << reports.size() << ", failed " << failed << "; products match brute force for both bases "
                    << both << ", theorem basis only " << theorem_only << ", table basis only " << table_only
                    << ", neither " << neither << '\n'
                    << (failed == 0 ? "PASS" : "FAIL") << '\n';
            }
            if (!export_path.empty()) write_file(export_path, all.dump(2) + "\n");
            return failed == 0 ? kPass : kMismatch;
        }
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kParseError;
    }
    return kParseError;
}

}  // namespace seifert::cli
