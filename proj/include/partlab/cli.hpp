#pragma once

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "partlab/cache.hpp"
#include "partlab/common.hpp"
#include "partlab/identity.hpp"
#include "partlab/io.hpp"
#include "partlab/matrix.hpp"
#include "partlab/partition.hpp"
#include "partlab/path.hpp"
#include "partlab/squared.hpp"

// Command-line front end. Exit codes: 0 success, 1 verification mismatch,
// 2 usage error (including unreadable or invalid inputs).

namespace partlab::cli {

enum class Format { text, json, csv };

namespace detail {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    Format format = Format::text;
    std::string cache_path;
    int jobs = 1;
    Int seed_check = 5;
};

inline std::string read_stream(std::istream& in) {
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// Matrices arrive as JSON: "-" reads stdin, an inline {...} literal is parsed
// directly, anything else is a file path.
inline TwoLineMatrix load_matrix(const std::string& arg, std::istream& in) {
    std::string text;
    if (arg == "-") {
        text = read_stream(in);
    } else if (arg.find_first_not_of(" \t\r\n") != std::string::npos &&
               arg[arg.find_first_not_of(" \t\r\n")] == '{') {
        text = arg;
    } else {
        std::ifstream file(arg);
        if (!file) throw UsageError("cannot open matrix file: " + arg);
        text = read_stream(file);
    }
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("matrix JSON parse error: ") + e.what());
    }
    try {
        return io::matrix_from_json(j);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

inline Partition parse_partition(const std::string& arg) {
    Partition p;
    std::string normalized = arg;
    for (char& c : normalized)
        if (c == ',') c = ' ';
    std::istringstream is(normalized);
    Int value;
    while (is >> value) p.parts.push_back(value);
    if (!is.eof()) throw UsageError("partition must be a list of integers: " + arg);
    if (p.parts.empty()) throw UsageError("partition must not be empty");
    if (!is_valid(p))
        throw UsageError("parts must be positive and weakly decreasing: " + arg);
    return p;
}

inline std::string dump(const nlohmann::json& j) { return j.dump() + "\n"; }

inline std::string format_tuple(const std::vector<Int>& xs) {
    std::string s = "(";
    for (std::size_t i = 0; i < xs.size(); ++i)
        s += (i ? "," : "") + std::to_string(xs[i]);
    return s + ")";
}

inline std::string format_matrix_text(const TwoLineMatrix& M) {
    auto row = [](const std::vector<Int>& xs) {
        std::string s = "(";
        for (Int x : xs) s += " " + std::to_string(x);
        return s + " )";
    };
    return row(M.top) + "\n" + row(M.bottom) + "\n";
}

// m -> frequency with optional cache. Computed values are written back.
inline Int cached_frequency(Int m, FrequencyCache* cache) {
    if (cache)
        if (const auto hit = cache->lookup(m)) return *hit;
    const Int f = frequency(m);
    if (cache) cache->store(m, f);
    return f;
}

inline int cmd_partitions(Int n, const Options& opt, std::ostream& out) {
    const auto parts = enumerate_partitions(n);
    switch (opt.format) {
        case Format::json: {
            nlohmann::json list = nlohmann::json::array();
            for (const auto& p : parts) list.push_back(p.parts);
            out << dump({{"n", n}, {"count", parts.size()}, {"partitions", list}});
            break;
        }
        case Format::csv:
            out << "index,partition\n";
            for (std::size_t i = 0; i < parts.size(); ++i) {
                out << i + 1 << ',';
                for (std::size_t k = 0; k < parts[i].parts.size(); ++k)
                    out << (k ? "+" : "") << parts[i].parts[k];
                out << '\n';
            }
            break;
        case Format::text:
            for (const auto& p : parts) out << format_tuple(p.parts) << '\n';
            break;
    }
    return 0;
}

inline int cmd_matrix(const Partition& p, const Options& opt, std::ostream& out) {
    TwoLineMatrix M;
    try {
        M = partition_to_matrix(p);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (opt.format == Format::json) {
        out << dump(io::matrix_to_json(M));
    } else if (opt.format == Format::csv) {
        for (std::size_t j = 0; j < M.top.size(); ++j) out << (j ? "," : "") << M.top[j];
        out << '\n';
        for (std::size_t j = 0; j < M.bottom.size(); ++j) out << (j ? "," : "") << M.bottom[j];
        out << '\n';
    } else {
        out << format_matrix_text(M);
    }
    return 0;
}

inline int cmd_demat(const TwoLineMatrix& M, const Options& opt, std::ostream& out) {
    Partition p;
    try {
        p = matrix_to_partition(M);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (opt.format == Format::json) {
        out << dump(io::partition_to_json(p));
    } else if (opt.format == Format::csv) {
        out << "part\n";
        for (Int part : p.parts) out << part << '\n';
    } else {
        for (std::size_t i = 0; i < p.parts.size(); ++i)
            out << (i ? "+" : "") << p.parts[i];
        out << '\n';
    }
    return 0;
}

inline int cmd_path(const TwoLineMatrix& M, const Options& opt, std::ostream& out) {
    LatticePath path;
    try {
        path = matrix_to_path(M);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (opt.format == Format::json) {
        out << dump(io::path_to_json(path));
    } else if (opt.format == Format::csv) {
        out << "x,y\n";
        for (const Point& pt : path.points) out << pt.x << ',' << pt.y << '\n';
    } else {
        const auto pts = path.reduced();
        for (std::size_t i = 0; i < pts.size(); ++i)
            out << (i ? " -> " : "") << "(" << pts[i].x << "," << pts[i].y << ")";
        out << '\n';
    }
    return 0;
}

inline int cmd_hooks(const TwoLineMatrix& M, const Options& opt, std::ostream& out) {
    OddPartition odd;
    try {
        odd = hooks(M);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (opt.format == Format::json) {
        out << dump(io::hooks_to_json(odd));
    } else if (opt.format == Format::csv) {
        out << "part\n";
        for (Int part : odd.parts) out << part << '\n';
    } else {
        if (odd.parts.empty())
            out << "empty  m = 0\n";
        else
            out << format_tuple(odd.parts) << "  m = " << odd.weight() << '\n';
    }
    return 0;
}

inline int cmd_weight(const TwoLineMatrix& M, const Options& opt, std::ostream& out) {
    Int m;
    try {
        m = weight_P(M);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (opt.format == Format::json)
        out << dump({{"m", m}});
    else if (opt.format == Format::csv)
        out << "m\n" << m << '\n';
    else
        out << m << '\n';
    return 0;
}

inline int cmd_tsq(const TwoLineMatrix& M, const Options& opt, std::ostream& out) {
    SquaredPartition sp;
    try {
        sp = tsquared_from_matrix(M);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (opt.format == Format::json) {
        out << dump(io::tsquared_to_json(sp));
    } else if (opt.format == Format::csv) {
        out << "component\n";
        for (Int c : sp.components) out << c << '\n';
    } else {
        // e.g.  28 = (2+1+1)^2 + 2(2^2+1^2+1^2)
        std::string sums, squares;
        for (std::size_t i = 0; i < sp.components.size(); ++i) {
            sums += (i ? "+" : "") + std::to_string(sp.components[i]);
            squares += (i ? "+" : "") + std::to_string(sp.components[i]) + "^2";
        }
        out << sp.m() << " = (" << sums << ")^2 + 2(" << squares << ")\n";
    }
    return 0;
}

inline int cmd_freq(Int m, const Options& opt, FrequencyCache* cache, std::ostream& out) {
    std::vector<SystemSolutionSet> sets;
    for (const auto& [a, b] : decompositions(m)) sets.push_back(solve_system(a, b));
    Int f = 0;
    for (const auto& set : sets) f = checked_add(f, set.size());
    if (cache) cache->store(m, f);
    if (opt.format == Format::json) {
        nlohmann::json by_system = nlohmann::json::array();
        for (const auto& set : sets) by_system.push_back(io::solutions_to_json(set));
        out << dump({{"m", m}, {"frequency", f}, {"systems", by_system}});
    } else if (opt.format == Format::csv) {
        out << io::frequency_table_csv({{m, f}});
    } else {
        out << "f(" << m << ") = " << f << '\n';
        for (const auto& set : sets) {
            out << "  a=" << set.a << " b=" << set.b << ":";
            if (set.solutions.empty()) out << " (none)";
            for (const auto& sol : set.solutions) out << ' ' << format_tuple(sol);
            out << '\n';
        }
    }
    return 0;
}

inline int cmd_gaps(Int limit, const Options& opt, FrequencyCache* cache, std::ostream& out) {
    std::vector<Int> gaps;
    if (cache) {
        for (Int m = 1; m <= limit; ++m)
            if (cached_frequency(m, cache) == 0) gaps.push_back(m);
    } else {
        gaps = image_gaps(limit);
    }
    if (opt.format == Format::json) {
        out << dump({{"limit", limit}, {"gaps", gaps}});
    } else if (opt.format == Format::csv) {
        out << "m\n";
        for (Int m : gaps) out << m << '\n';
    } else {
        for (std::size_t i = 0; i < gaps.size(); ++i) out << (i ? " " : "") << gaps[i];
        out << '\n';
    }
    return 0;
}

inline int cmd_table(Int m_max, const std::string& out_file, const Options& opt,
                     FrequencyCache* cache, std::ostream& out, std::ostream& err) {
    std::vector<io::FrequencyRow> rows(static_cast<std::size_t>(m_max));
    // cache lookups first; the misses are recomputed, in parallel when asked
    std::vector<std::size_t> misses;
    for (Int m = 1; m <= m_max; ++m) {
        rows[static_cast<std::size_t>(m - 1)].m = m;
        if (cache) {
            if (const auto hit = cache->lookup(m)) {
                rows[static_cast<std::size_t>(m - 1)].frequency = *hit;
                continue;
            }
        }
        misses.push_back(static_cast<std::size_t>(m - 1));
    }
    partlab::detail::parallel_for(misses.size(), opt.jobs, [&](std::size_t i) {
        rows[misses[i]].frequency = frequency(rows[misses[i]].m);
    });
    if (cache)
        for (std::size_t i : misses) cache->store(rows[i].m, rows[i].frequency);

    const std::string csv = io::frequency_table_csv(rows);
    if (!out_file.empty()) {
        std::ofstream file(out_file);
        if (!file) {
            err << "error: cannot write " << out_file << '\n';
            return 2;
        }
        file << csv;
        return 0;
    }
    if (opt.format == Format::json) {
        nlohmann::json list = nlohmann::json::array();
        for (const auto& row : rows)
            list.push_back({{"m", row.m}, {"frequency", row.frequency}, {"residue_mod_4", row.m % 4}});
        out << dump(list);
    } else if (opt.format == Format::csv) {
        out << csv;
    } else {
        out << "    m  frequency  residue_mod_4\n";
        for (const auto& row : rows) {
            out.width(5);
            out << row.m;
            out.width(11);
            out << row.frequency;
            out.width(15);
            out << row.m % 4;
            out << '\n';
        }
    }
    return 0;
}

inline int cmd_verify(Int to, bool per_m, const Options& opt, std::ostream& out) {
    const auto reports = verify_range(to, opt.jobs);
    bool all_match = true;
    for (const auto& r : reports) all_match = all_match && r.match;
    if (opt.format == Format::json) {
        nlohmann::json list = nlohmann::json::array();
        for (const auto& r : reports) list.push_back(io::report_to_json(r, per_m));
        out << dump(list);
    } else if (opt.format == Format::csv) {
        out << io::reports_csv(reports);
    } else {
        for (const auto& r : reports) {
            out << "n=" << r.n << "  p(n)=" << r.lhs << "  theorem=" << r.rhs
                << "  " << (r.match ? "ok" : "MISMATCH") << '\n';
            if (per_m && !r.per_m.empty()) {
                out << "  per m:";
                for (const auto& [m, count] : r.per_m)
                    out << ' ' << m << ':' << count;
                out << '\n';
            }
        }
    }
    return all_match ? 0 : 1;
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::istream& in, std::ostream& out,
               std::ostream& err) {
    using detail::Options;

    CLI::App app{"partition identity toolkit: partitions, two-line matrices, "
                 "lattice paths, squared partitions and the counting identity "
                 "p(n) = sum |B(m,n)| + 1"};
    app.name("partlab");
    app.require_subcommand(1);

    Options opt;
    const std::map<std::string, Format> format_names{
        {"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};
    app.add_option("--format", opt.format, "output format")
        ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case))
        ->default_val("text");
    app.add_option("--cache", opt.cache_path,
                   "frequency cache file (PARTITION_LAB_CACHE overrides)");
    app.add_option("--jobs", opt.jobs, "worker threads for verify and table")
        ->check(CLI::PositiveNumber)
        ->default_val(1);
    app.add_option("--seed-check", opt.seed_check,
                   "cache entries to recompute on load")
        ->check(CLI::NonNegativeNumber)
        ->default_val(5);

    Int arg_n = 0, arg_m = 0, arg_limit = 0, arg_m_max = 0, arg_to = 10;
    std::string arg_partition, arg_matrix, arg_out_file;
    bool arg_per_m = false;

    auto* partitions_cmd = app.add_subcommand("partitions", "list all partitions of n");
    partitions_cmd->add_option("n", arg_n, "weight")->required()->check(CLI::NonNegativeNumber);

    auto* matrix_cmd = app.add_subcommand("matrix", "encode a partition, e.g. 6,5,2,2");
    matrix_cmd->add_option("partition", arg_partition, "comma-separated parts")->required();

    auto* demat_cmd = app.add_subcommand("demat", "decode a matrix back to its partition");
    demat_cmd->add_option("matrix-json", arg_matrix, "JSON file, inline {...}, or - for stdin")
        ->required();

    auto* path_cmd = app.add_subcommand("path", "lattice path of a matrix");
    path_cmd->add_option("matrix-json", arg_matrix, "JSON file, inline {...}, or - for stdin")
        ->required();

    auto* hooks_cmd = app.add_subcommand("hooks", "distinct-odd-part partition of a matrix");
    hooks_cmd->add_option("matrix-json", arg_matrix, "JSON file, inline {...}, or - for stdin")
        ->required();

    auto* weight_cmd = app.add_subcommand("weight", "P(M), the hook weight of a matrix");
    weight_cmd->add_option("matrix-json", arg_matrix, "JSON file, inline {...}, or - for stdin")
        ->required();

    auto* tsq_cmd = app.add_subcommand("tsq", "squared partition of a d_1 = 0 matrix");
    tsq_cmd->add_option("matrix-json", arg_matrix, "JSON file, inline {...}, or - for stdin")
        ->required();

    auto* freq_cmd = app.add_subcommand("freq", "frequency f(m) and its solution tuples");
    freq_cmd->add_option("m", arg_m, "target value")->required()->check(CLI::PositiveNumber);

    auto* gaps_cmd = app.add_subcommand("gaps", "values <= limit with no preimage");
    gaps_cmd->add_option("limit", arg_limit, "upper bound")->required()->check(CLI::PositiveNumber);

    auto* table_cmd = app.add_subcommand("table", "frequency table for m = 1..m_max");
    table_cmd->add_option("m_max", arg_m_max, "upper bound")->required()->check(CLI::PositiveNumber);
    table_cmd->add_option("--out", arg_out_file, "write CSV to this file");

    auto* verify_cmd = app.add_subcommand("verify", "check p(n) = sum |B(m,n)| + 1");
    verify_cmd->add_option("--to", arg_to, "verify n = 1..N")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    verify_cmd->add_flag("--per-m", arg_per_m, "include the per-m breakdown");

    // let the global flags appear after the subcommand, e.g. `freq 72 --format json`
    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    std::vector<const char*> argv;
    argv.push_back("partlab");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n' << app.help();
        return 2;
    }

    if (const char* env = std::getenv("PARTITION_LAB_CACHE")) opt.cache_path = env;

    try {
        FrequencyCache cache;
        const bool use_cache = !opt.cache_path.empty();
        if (use_cache) cache = FrequencyCache::load(opt.cache_path, opt.seed_check, err);
        FrequencyCache* cache_ptr = use_cache ? &cache : nullptr;

        int code = 0;
        if (partitions_cmd->parsed()) {
            code = detail::cmd_partitions(arg_n, opt, out);
        } else if (matrix_cmd->parsed()) {
            code = detail::cmd_matrix(detail::parse_partition(arg_partition), opt, out);
        } else if (demat_cmd->parsed()) {
            code = detail::cmd_demat(detail::load_matrix(arg_matrix, in), opt, out);
        } else if (path_cmd->parsed()) {
            code = detail::cmd_path(detail::load_matrix(arg_matrix, in), opt, out);
        } else if (hooks_cmd->parsed()) {
            code = detail::cmd_hooks(detail::load_matrix(arg_matrix, in), opt, out);
        } else if (weight_cmd->parsed()) {
            code = detail::cmd_weight(detail::load_matrix(arg_matrix, in), opt, out);
        } else if (tsq_cmd->parsed()) {
            code = detail::cmd_tsq(detail::load_matrix(arg_matrix, in), opt, out);
        } else if (freq_cmd->parsed()) {
            code = detail::cmd_freq(arg_m, opt, cache_ptr, out);
        } else if (gaps_cmd->parsed()) {
            code = detail::cmd_gaps(arg_limit, opt, cache_ptr, out);
        } else if (table_cmd->parsed()) {
            code = detail::cmd_table(arg_m_max, arg_out_file, opt, cache_ptr, out, err);
        } else if (verify_cmd->parsed()) {
            code = detail::cmd_verify(arg_to, arg_per_m, opt, out);
        }
        if (cache_ptr && code == 0) cache.save(err);
        return code;
    } catch (const detail::UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

inline int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
               std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(std::move(args), in, out, err);
}

}  // namespace partlab::cli
