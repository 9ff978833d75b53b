#pragma once

// Command-line frontend: find, witness, verify, bench.
//
// Exit codes: 0 success, 1 verify mismatch, 2 bad arguments or input.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "antipower/antipower.hpp"

namespace antipower::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::string read_input(const std::string& source, std::istream& in, bool strip_newline) {
    std::string data;
    if (source == "-") {
        data.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    } else {
        std::ifstream file(source, std::ios::binary);
        if (!file) throw InputError("cannot read " + source);
        data.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
    }
    if (strip_newline && !data.empty() && data.back() == '\n') {
        data.pop_back();
        if (!data.empty() && data.back() == '\r') data.pop_back();
    }
    return data;
}

enum class Format { tsv, json };

/// Writes one hit in the selected coordinates. Zero-based is half-open,
/// one-based is inclusive.
inline void write_record(std::ostream& out, const AntiPowerHit& hit, bool one_based, Format format) {
    const std::size_t start = one_based ? hit.start + 1 : hit.start;
    const std::size_t end = hit.end();
    if (format == Format::json) {
        nlohmann::ordered_json record;
        record["start"] = start;
        record["end"] = end;
        record["anti_period"] = hit.anti_period;
        record["order"] = hit.order;
        out << record.dump() << '\n';
    } else {
        out << start << '\t' << end << '\t' << hit.anti_period << '\t' << hit.order << '\n';
    }
}

namespace detail {

inline Text bench_input(const std::string& kind, std::size_t n, std::mt19937_64& rng) {
    if (kind == "random") {
        std::string s(n, '0');
        std::bernoulli_distribution coin(0.5);
        for (auto& c : s) c = coin(rng) ? '1' : '0';
        return Text::from_bytes(s);
    }
    if (kind == "distinct") {
        std::vector<std::uint32_t> v(n);
        std::iota(v.begin(), v.end(), 0u);
        return Text::from_symbols(v);
    }
    // witness: shortest w_m of length >= n, truncated to n
    std::uint64_t m = 0;
    while (witness::params(m).n < n) ++m;
    return Text::from_bytes(witness::generate(m).substr(0, n));
}

}  // namespace detail

/// Runs the CLI on argv-style arguments (args[0] is the program name).
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
               std::ostream& err) {
    CLI::App app{"Locate anti-powers: substrings made of k consecutive equal-length, "
                 "pairwise-distinct blocks."};
    app.require_subcommand(1);

    std::string input = "-";
    std::size_t order = 0;
    bool one_based = false;
    bool json = false;
    bool count_only = false;
    bool strip_newline = true;
    std::size_t min_p = 1;
    std::size_t max_p = 0;

    auto* find = app.add_subcommand("find", "List every k-anti-power occurrence");
    find->add_option("input", input, "Input file, or - for standard input")->capture_default_str();
    find->add_option("-k,--order", order, "Number of blocks (k >= 2)")
        ->required()
        ->check(CLI::Range(std::size_t{2}, std::numeric_limits<std::size_t>::max()));
    find->add_flag("--one-based", one_based, "1-based inclusive coordinates");
    find->add_flag("--json", json, "One JSON object per line");
    find->add_flag("--count-only", count_only, "Print only the number of hits");
    find->add_option("--min-anti-period", min_p, "Smallest anti-period reported")
        ->check(CLI::PositiveNumber);
    find->add_option("--max-anti-period", max_p, "Largest anti-period reported")
        ->check(CLI::PositiveNumber);
    find->add_flag("--strip-newline,!--keep-newline", strip_newline,
                   "Drop one trailing newline from the input (default on)");

    std::uint64_t m = 0;
    std::size_t bound_order = 0;
    auto* wit = app.add_subcommand("witness", "Write the witness string w_m");
    wit->add_option("m", m, "Largest integer written")->required();
    auto* bound_opt = wit->add_option("--bound", bound_order,
                                      "Also print n and the anti-power lower bound for order k")
                          ->check(CLI::Range(std::size_t{2}, std::numeric_limits<std::size_t>::max()));

    std::size_t limit = 1000;
    auto* verify = app.add_subcommand("verify", "Cross-check the search against brute force");
    verify->add_option("input", input, "Input file, or - for standard input")->capture_default_str();
    verify->add_option("-k,--order", order, "Number of blocks (k >= 2)")
        ->required()
        ->check(CLI::Range(std::size_t{2}, std::numeric_limits<std::size_t>::max()));
    verify->add_option("--limit", limit, "Refuse inputs longer than this")->capture_default_str();
    verify->add_flag("--strip-newline,!--keep-newline", strip_newline,
                     "Drop one trailing newline from the input (default on)");

    std::vector<std::size_t> sizes{1000, 2000, 4000};
    std::vector<std::string> kinds{"random", "distinct", "witness"};
    std::uint64_t seed = 1;
    auto* bench = app.add_subcommand("bench", "Time the search on generated inputs (CSV)");
    bench->add_option("-k,--order", order, "Number of blocks (k >= 2)")
        ->required()
        ->check(CLI::Range(std::size_t{2}, std::numeric_limits<std::size_t>::max()));
    bench->add_option("--sizes", sizes, "Input lengths")->delimiter(',')->capture_default_str();
    bench->add_option("--inputs", kinds, "Input kinds")
        ->delimiter(',')
        ->check(CLI::IsMember({"random", "distinct", "witness"}))
        ->capture_default_str();
    bench->add_option("--seed", seed, "Seed for random inputs")->capture_default_str();

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (find->parsed()) {
            const Text text = Text::from_bytes(read_input(input, in, strip_newline));
            SearchOptions options;
            options.min_anti_period = min_p;
            if (max_p != 0) options.max_anti_period = max_p;
            const Format format = json ? Format::json : Format::tsv;
            if (count_only) {
                out << find_all(text, order, options, [](const AntiPowerHit&) {}) << '\n';
            } else {
                find_all(text, order, options,
                         [&](const AntiPowerHit& h) { write_record(out, h, one_based, format); });
            }
            return kExitOk;
        }

        if (wit->parsed()) {
            out << witness::generate(m) << '\n';
            if (bound_opt->count() > 0) {
                const auto n = witness::params(m).n;
                out << n << '\t' << witness::lower_bound_value(n, bound_order, m) << '\n';
            }
            return kExitOk;
        }

        if (verify->parsed()) {
            const Text text = Text::from_bytes(read_input(input, in, strip_newline));
            if (text.size() > limit) {
                err << "input length " << text.size() << " exceeds limit " << limit << '\n';
                return kExitUsage;
            }
            std::set<AntiPowerHit> fast;
            find_all(text, order, {}, [&](const AntiPowerHit& h) { fast.insert(h); });
            const auto slow = oracle::enumerate_all(text, order);
            if (fast == slow) {
                out << "ok\t" << fast.size() << '\n';
                return kExitOk;
            }
            for (const auto& h : slow)
                if (!fast.count(h)) {
                    out << "missing\t";
                    write_record(out, h, false, Format::tsv);
                }
            for (const auto& h : fast)
                if (!slow.count(h)) {
                    out << "extra\t";
                    write_record(out, h, false, Format::tsv);
                }
            return kExitMismatch;
        }

        // bench
        std::mt19937_64 rng(seed);
        out << "input,n,k,seconds,hits\n";
        for (const auto& kind : kinds) {
            for (auto n : sizes) {
                const Text text = detail::bench_input(kind, n, rng);
                SearchWorkspace ws(text);
                const auto t0 = std::chrono::steady_clock::now();
                const auto hits = find_all(ws, order, {}, [](const AntiPowerHit&) {});
                const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
                out << kind << ',' << n << ',' << order << ',' << dt.count() << ',' << hits << '\n';
            }
        }
        return kExitOk;
    } catch (const InputError& e) {
        err << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace antipower::cli
