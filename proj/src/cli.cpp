#include "alliance/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "alliance/catalog.hpp"
#include "alliance/enumerate.hpp"
#include "alliance/error.hpp"
#include "alliance/graph_io.hpp"
#include "alliance/invariants.hpp"
#include "alliance/reference_tables.hpp"
#include "json.hpp"

namespace alliance::cli {

namespace {

enum class input_format { graph6, edgelist };
enum class output_format { text, json };

struct run_config {
    std::string input = "-";
    input_format format = input_format::graph6;
    output_format output = output_format::text;
    int workers = -1;  // -1: not given on the command line
    bool naive = false;
    bool strict = false;
    int naive_limit = default_naive_limit;
    int canonical_limit = default_canonical_limit;
    int brute_force_limit = default_naive_limit;
};

int effective_workers(const run_config& config) {
    if (config.workers >= 0) return config.workers;
    if (const char* env = std::getenv("ALLIANCE_WORKERS")) {
        try {
            const int value = std::stoi(env);
            if (value >= 0) return value;
        } catch (const std::exception&) {
        }
    }
    return 0;
}

int exit_code_for(errc code) {
    if (is_capacity_error(code)) return exit_capacity;
    return exit_usage;
}

// Tracks the most serious input problem seen so far; parse errors outrank capacity errors.
struct error_tally {
    int code = exit_ok;

    void record(const error& e) {
        const int c = exit_code_for(e.code());
        if (code == exit_ok || c == exit_usage) code = c;
    }
};

struct graph_source {
    std::unique_ptr<std::ifstream> file;
    std::istream* stream = nullptr;
};

std::optional<graph_source> open_input(const std::string& path, std::istream& in, std::ostream& err) {
    graph_source src;
    if (path == "-") {
        src.stream = &in;
        return src;
    }
    src.file = std::make_unique<std::ifstream>(path);
    if (!*src.file) {
        err << "cannot open " << path << "\n";
        return std::nullopt;
    }
    src.stream = src.file.get();
    return src;
}

// Calls handle(graph, label) for every graph in the input. Returns the input exit code.
template <class Handle>
int for_each_input_graph(const run_config& config, std::istream& in, std::ostream& err, Handle&& handle) {
    auto src = open_input(config.input, in, err);
    if (!src) return exit_usage;
    error_tally tally;
    if (config.format == input_format::edgelist) {
        try {
            const graph g = parse_edge_list(*src->stream);
            handle(g, config.input);
        } catch (const error& e) {
            err << config.input << ": " << e.what() << "\n";
            tally.record(e);
        }
        return tally.code;
    }
    std::string line;
    int line_no = 0;
    while (std::getline(*src->stream, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        try {
            const graph g = parse_graph6(line);
            handle(g, "line " + std::to_string(line_no));
        } catch (const error& e) {
            err << "line " << line_no << ": " << e.what() << "\n";
            tally.record(e);
            if (config.strict) break;
        }
    }
    return tally.code;
}

polynomial compute_polynomial(const graph& g, const run_config& config) {
    if (config.naive) return alliance_polynomial_naive(g, config.naive_limit);
    return alliance_polynomial(g, effective_workers(config));
}

std::string render(const polynomial& p, output_format format) {
    return format == output_format::json ? render_json(p) : render_text(p);
}

void add_input_options(CLI::App& cmd, run_config& config) {
    const std::map<std::string, input_format> formats{{"graph6", input_format::graph6},
                                                      {"edgelist", input_format::edgelist}};
    cmd.add_option("input", config.input, "input file, or - for standard input")->capture_default_str();
    cmd.add_option("--format", config.format, "input format: graph6 (one graph per line) or edgelist")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case).description(""))
        ->type_name("graph6|edgelist");
    cmd.add_flag("--strict", config.strict, "stop at the first bad input line");
}

void add_output_option(CLI::App& cmd, run_config& config) {
    const std::map<std::string, output_format> outputs{{"text", output_format::text}, {"json", output_format::json}};
    cmd.add_option("--output", config.output, "output format: text or json")
        ->transform(CLI::CheckedTransformer(outputs, CLI::ignore_case).description(""))
        ->type_name("text|json");
}

void add_workers_option(CLI::App& cmd, run_config& config) {
    cmd.add_option("--workers", config.workers, "worker threads, 0 = all cores (default: $ALLIANCE_WORKERS or 0)")
        ->check(CLI::NonNegativeNumber);
}

int cmd_compute(const run_config& config, std::istream& in, std::ostream& out, std::ostream& err) {
    error_tally tally;
    const int input_code = for_each_input_graph(config, in, err, [&](const graph& g, const std::string& label) {
        try {
            out << render(compute_polynomial(g, config), config.output) << "\n";
        } catch (const error& e) {
            err << label << ": " << e.what() << "\n";
            tally.record(e);
        }
    });
    if (input_code == exit_usage || tally.code == exit_usage) return exit_usage;
    return input_code != exit_ok ? input_code : tally.code;
}

int cmd_invariants(const run_config& config, const std::string& poly_path, std::istream& in, std::ostream& out,
                   std::ostream& err) {
    std::optional<polynomial> supplied;
    if (!poly_path.empty()) {
        std::ifstream file(poly_path);
        if (!file) {
            err << "cannot open " << poly_path << "\n";
            return exit_usage;
        }
        std::stringstream text;
        text << file.rdbuf();
        try {
            supplied = polynomial_from_json(text.str());
        } catch (const error& e) {
            err << poly_path << ": " << e.what() << "\n";
            return exit_usage;
        }
    }
    invariant_options options;
    options.brute_force_limit = config.brute_force_limit;

    error_tally tally;
    int failures = 0;
    const int input_code = for_each_input_graph(config, in, err, [&](const graph& g, const std::string& label) {
        try {
            const polynomial p = supplied ? *supplied : compute_polynomial(g, config);
            const invariant_report report = check_all(g, p, options);
            failures += report.failures();
            const std::string g6 = g.order() <= graph6_max_order ? encode_graph6(g) : label;
            if (config.output == output_format::json) {
                nlohmann::ordered_json row;
                row["graph"] = g6;
                row["polynomial"] = nlohmann::ordered_json::parse(render_json(p));
                row["checks"] = nlohmann::ordered_json::parse(render_report_json(report));
                out << row.dump() << "\n";
            } else {
                out << g6 << "  " << render_text(p) << "\n";
                out << render_report_table(report);
                out << report.count(check_status::pass) << " passed, " << report.failures() << " failed, "
                    << report.count(check_status::not_applicable) << " not applicable\n";
            }
        } catch (const error& e) {
            err << label << ": " << e.what() << "\n";
            tally.record(e);
        }
    });
    if (input_code == exit_usage || tally.code == exit_usage) return exit_usage;
    if (input_code != exit_ok) return input_code;
    if (tally.code != exit_ok) return tally.code;
    return failures == 0 ? exit_ok : exit_check_failed;
}

nlohmann::ordered_json entry_json(const catalog_entry& e) {
    nlohmann::ordered_json row;
    row["canonical"] = e.canonical.bytes;
    row["graph6"] = encode_graph6(e.representative);
    row["polynomial"] = nlohmann::ordered_json::parse(render_json(e.poly));
    row["connected"] = e.connected;
    row["source"] = std::string(to_string(e.source));
    return row;
}

void write_entries(const std::vector<catalog_entry>& entries, output_format format, std::ostream& out) {
    if (format == output_format::json) {
        nlohmann::ordered_json all = nlohmann::ordered_json::array();
        for (const auto& e : entries) all.push_back(entry_json(e));
        out << all.dump() << "\n";
        return;
    }
    for (const auto& e : entries) out << encode_graph6(e.representative) << '\t' << render_text(e.poly) << "\n";
}

int cmd_catalog(const run_config& config, int n, int degree, bool connected_only, std::ostream& out, std::ostream& err) {
    try {
        catalog_options options{effective_workers(config), config.canonical_limit};
        write_entries(enumerate_regular(n, degree, connected_only, options), config.output, out);
        return exit_ok;
    } catch (const error& e) {
        err << e.what() << "\n";
        return exit_code_for(e.code());
    }
}

int cmd_verify(const run_config& config, int order, std::ostream& out, std::ostream& err) {
    try {
        const auto cmp = verify_against_reference(order, {effective_workers(config), config.canonical_limit});
        const std::size_t collisions = cmp.collisions.by_polynomial.size();
        if (config.output == output_format::json) {
            nlohmann::ordered_json doc;
            doc["order"] = order;
            doc["matched"] = cmp.matched;
            doc["expected"] = cmp.expected.size();
            doc["computed"] = cmp.computed.size();
            doc["polynomial_collisions"] = collisions;
            doc["evaluation_collisions"] = cmp.collisions.by_evaluation_at_one.size();
            auto missing = nlohmann::ordered_json::array();
            for (const auto& row : cmp.missing) {
                missing.push_back({{"label", row.label}, {"polynomial", render_text(row.poly)}});
            }
            auto extra = nlohmann::ordered_json::array();
            for (auto i : cmp.extra) {
                extra.push_back({{"graph6", encode_graph6(cmp.computed[i].representative)},
                                 {"polynomial", render_text(cmp.computed[i].poly)}});
            }
            doc["missing"] = std::move(missing);
            doc["extra"] = std::move(extra);
            out << doc.dump() << "\n";
        } else {
            out << cmp.matched << "/" << cmp.expected.size() << " matched, " << collisions << " collisions\n";
            out << cmp.computed.size() << " cubic graphs of order " << order << ", "
                << cmp.collisions.by_evaluation_at_one.size() << " collisions of A(G;1)\n";
            for (const auto& row : cmp.missing) out << "missing\t" << row.label << '\t' << render_text(row.poly) << "\n";
            for (auto i : cmp.extra) {
                out << "extra\t" << encode_graph6(cmp.computed[i].representative) << '\t'
                    << render_text(cmp.computed[i].poly) << "\n";
            }
        }
        return cmp.exact_match() && cmp.pairwise_distinct() ? exit_ok : exit_check_failed;
    } catch (const error& e) {
        err << e.what() << "\n";
        return exit_code_for(e.code());
    }
}

void write_groups(const std::string& title, const std::vector<std::vector<std::size_t>>& groups,
                  const std::vector<catalog_entry>& pool, std::ostream& out) {
    out << title << ": " << groups.size() << " collision group(s)\n";
    for (const auto& group : groups) {
        out << "  group\n";
        for (auto i : group) {
            out << "    " << encode_graph6(pool[i].representative) << '\t' << render_text(pool[i].poly) << "\n";
        }
    }
}

int cmd_distinguish(const run_config& config, int exhaustive, const std::vector<std::string>& regular_specs,
                    bool use_input, std::istream& in, std::ostream& out, std::ostream& err) {
    const catalog_options options{effective_workers(config), config.canonical_limit};
    std::vector<std::vector<catalog_entry>> parts;
    try {
        for (int n = 1; n <= exhaustive; ++n) parts.push_back(enumerate_all_graphs(n, options));
        for (const auto& spec : regular_specs) {
            const auto colon = spec.find(':');
            int n = 0, d = 0;
            try {
                if (colon == std::string::npos) throw std::invalid_argument(spec);
                std::size_t used_n = 0, used_d = 0;
                n = std::stoi(spec.substr(0, colon), &used_n);
                d = std::stoi(spec.substr(colon + 1), &used_d);
                if (used_n != colon || used_d != spec.size() - colon - 1) throw std::invalid_argument(spec);
            } catch (const std::exception&) {
                err << "--regular expects N:DEGREE, got '" << spec << "'\n";
                return exit_usage;
            }
            parts.push_back(enumerate_regular(n, d, false, options));
        }
    } catch (const error& e) {
        err << e.what() << "\n";
        return exit_code_for(e.code());
    }
    int input_code = exit_ok;
    if (use_input) {
        std::vector<catalog_entry> given;
        error_tally tally;
        input_code = for_each_input_graph(config, in, err, [&](const graph& g, const std::string& label) {
            try {
                given.push_back(make_entry(g, entry_source::named, options));
            } catch (const error& e) {
                err << label << ": " << e.what() << "\n";
                tally.record(e);
            }
        });
        if (input_code == exit_ok) input_code = tally.code;
        parts.push_back(std::move(given));
    }
    const auto pool = pool_entries(std::move(parts));
    const auto report = distinguish(pool);
    const auto violations = regularity_violations(pool, report);

    if (config.output == output_format::json) {
        auto groups = [&](const std::vector<std::vector<std::size_t>>& gs) {
            auto arr = nlohmann::ordered_json::array();
            for (const auto& g : gs) {
                auto members = nlohmann::ordered_json::array();
                for (auto i : g) members.push_back(encode_graph6(pool[i].representative));
                arr.push_back(std::move(members));
            }
            return arr;
        };
        nlohmann::ordered_json doc;
        doc["pool_size"] = pool.size();
        doc["polynomial_collisions"] = groups(report.by_polynomial);
        doc["evaluation_collisions"] = groups(report.by_evaluation_at_one);
        auto v = nlohmann::ordered_json::array();
        for (const auto& violation : violations) v.push_back(violation.reason);
        doc["violations"] = std::move(v);
        out << doc.dump() << "\n";
    } else {
        out << "pool: " << pool.size() << " graph(s)\n";
        write_groups("by polynomial", report.by_polynomial, pool, out);
        write_groups("by A(G;1)", report.by_evaluation_at_one, pool, out);
        out << "violations: " << violations.size() << "\n";
        for (const auto& violation : violations) out << "  " << violation.reason << "\n";
    }
    if (input_code != exit_ok) return input_code;
    return violations.empty() ? exit_ok : exit_check_failed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact alliance polynomials of small graphs", "alliance"};
    app.require_subcommand(1);

    run_config config;

    auto* compute = app.add_subcommand("compute", "alliance polynomial of each input graph");
    add_input_options(*compute, config);
    add_output_option(*compute, config);
    add_workers_option(*compute, config);
    compute->add_flag("--naive", config.naive, "enumerate all 2^n subsets instead of connected subsets only");
    compute->add_option("--naive-limit", config.naive_limit, "largest order accepted by --naive")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    std::string poly_path;
    auto* invariants = app.add_subcommand("invariants", "check coefficient identities for each input graph");
    add_input_options(*invariants, config);
    add_output_option(*invariants, config);
    add_workers_option(*invariants, config);
    invariants->add_flag("--naive", config.naive, "compute polynomials by full subset enumeration");
    invariants->add_option("--poly", poly_path, "check this JSON polynomial instead of computing one");
    invariants->add_option("--brute-force-limit", config.brute_force_limit, "largest order for brute-force oracles")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    int n = 0, degree = 0;
    bool connected_only = false;
    auto* catalog = app.add_subcommand("catalog", "all regular graphs of an order, one per isomorphism class");
    catalog->add_option("--n", n, "order")->required();
    catalog->add_option("--degree", degree, "vertex degree")->required();
    catalog->add_flag("--connected", connected_only, "connected graphs only");
    catalog->add_option("--canonical-limit", config.canonical_limit)->check(CLI::PositiveNumber)->capture_default_str();
    add_output_option(*catalog, config);
    add_workers_option(*catalog, config);

    int order = 0;
    auto* verify = app.add_subcommand("verify", "compare the cubic catalog with the reference polynomials");
    verify->add_option("--order", order, "4, 6, 8 or 10")->required()->check(CLI::IsMember({4, 6, 8, 10}));
    add_output_option(*verify, config);
    add_workers_option(*verify, config);

    int exhaustive = 0;
    std::vector<std::string> regular_specs;
    auto* distinguish_cmd = app.add_subcommand("distinguish", "collision groups of a pool of graphs");
    distinguish_cmd->add_option("--exhaustive", exhaustive, "pool every graph of order 1..N (N <= 7)")
        ->check(CLI::NonNegativeNumber);
    distinguish_cmd->add_option("--regular", regular_specs, "pool all N-vertex DEGREE-regular graphs, as N:DEGREE");
    auto* input_opt = distinguish_cmd->add_option("input", config.input, "additional graphs, or - for standard input");
    const std::map<std::string, input_format> formats{{"graph6", input_format::graph6},
                                                      {"edgelist", input_format::edgelist}};
    distinguish_cmd->add_option("--format", config.format, "input format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case).description(""))
        ->type_name("graph6|edgelist");
    add_output_option(*distinguish_cmd, config);
    add_workers_option(*distinguish_cmd, config);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        const auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
        err << sub->help();
        return exit_usage;
    }

    if (compute->parsed()) return cmd_compute(config, in, out, err);
    if (invariants->parsed()) return cmd_invariants(config, poly_path, in, out, err);
    if (catalog->parsed()) return cmd_catalog(config, n, degree, connected_only, out, err);
    if (verify->parsed()) return cmd_verify(config, order, out, err);
    if (distinguish_cmd->parsed()) {
        if (exhaustive > exhaustive_limit) {
            err << "--exhaustive is limited to " << exhaustive_limit << "\n";
            return exit_capacity;
        }
        return cmd_distinguish(config, exhaustive, regular_specs, input_opt->count() > 0, in, out, err);
    }
    return exit_usage;
}

}  // namespace alliance::cli
