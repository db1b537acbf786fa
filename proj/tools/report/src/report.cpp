#include <helix/oracle.hpp>
#include <helix/report.hpp>

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <future>
#include <iomanip>
#include <iterator>
#include <ostream>
#include <random>
#include <sstream>

using json = nlohmann::ordered_json;
using std::size_t;
using std::string;
using std::uint64_t;
using std::vector;

namespace helix::cli
{
    namespace
    {
        constexpr std::size_t listing_cap = 20;
        constexpr std::size_t violation_cap = 50;

        auto split(std::string_view text, char sep) -> vector<string>
        {
            vector<string> parts;
            size_t start = 0;
            while (true) {
                auto pos = text.find(sep, start);
                parts.emplace_back(text.substr(start, pos - start));
                if (pos == std::string_view::npos)
                    return parts;
                start = pos + 1;
            }
        }

        template <typename T>
        auto parse_number(const string & text, const char * what) -> T
        {
            T value{};
            auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
            if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
                throw ConfigError(string{"invalid "} + what + " '" + text + "'");
            return value;
        }

        auto parse_probability(const string & text) -> double
        {
            size_t used = 0;
            double p = 0;
            try {
                p = std::stod(text, &used);
            }
            catch (const std::exception &) {
                used = 0;
            }
            if (used == 0 || used != text.size() || ! (p >= 0.0 && p <= 1.0))
                throw ConfigError("invalid edge probability '" + text + "' (want a number in [0, 1])");
            return p;
        }

        auto read_file(const string & path) -> string
        {
            std::ifstream in{path, std::ios::binary};
            if (! in)
                throw IoError("cannot open '" + path + "'");
            std::ostringstream buffer;
            buffer << in.rdbuf();
            if (in.bad())
                throw IoError("cannot read '" + path + "'");
            return buffer.str();
        }

        void write_file(const string & path, const string & content)
        {
            std::ofstream out{path, std::ios::binary | std::ios::trunc};
            if (! out)
                throw IoError("cannot open '" + path + "' for writing");
            out << content;
            out.flush();
            if (! out)
                throw IoError("cannot write '" + path + "'");
        }

        auto with_mode_suffix(const string & path, SolveMode mode) -> string
        {
            auto slash = path.find_last_of('/');
            auto dot = path.find_last_of('.');
            if (dot == string::npos || (slash != string::npos && dot < slash))
                return path + "." + to_string(mode);
            return path.substr(0, dot) + "." + to_string(mode) + path.substr(dot);
        }

        auto format_token(Token t) -> string
        {
            return "v" + std::to_string(t.vertex) + "/" + color_name(t.color);
        }

        auto format_coloring(const Coloring & c) -> string
        {
            string text;
            for (size_t i = 0; i < c.size(); ++i) {
                if (i)
                    text += ' ';
                text += color_name(c[i]);
            }
            return text;
        }

        auto format_counts(const vector<uint64_t> & counts) -> string
        {
            string text;
            for (size_t i = 0; i < counts.size(); ++i) {
                if (i)
                    text += '/';
                text += std::to_string(counts[i]);
            }
            return text;
        }

        auto space_text(Color k, Vertex n) -> string
        {
            auto space = solution_space_size(k, n);
            return space ? std::to_string(*space) : string{"overflow"};
        }

        // Maps library exceptions onto exit codes and prints the diagnostic.
        auto guarded(std::ostream & err, const std::function<int()> & body) -> int
        {
            try {
                return body();
            }
            catch (const ConfigError & e) {
                err << "config error: " << e.what() << "\n";
                return exit_config;
            }
            catch (const LookupError & e) {
                err << "config error: " << e.what() << "\n";
                return exit_config;
            }
            catch (const BudgetError & e) {
                err << "config error: " << e.what() << "\n";
                return exit_config;
            }
            catch (const GenerationError & e) {
                err << "config error: " << e.what() << "\n";
                return exit_config;
            }
            catch (const SoundnessError & e) {
                err << "config error: " << e.what() << "\n";
                return exit_config;
            }
            catch (const IoError & e) {
                err << "i/o error: " << e.what() << "\n";
                return exit_io;
            }
            catch (const ParseError & e) {
                err << "parse error: " << e.what() << "\n";
                return exit_io;
            }
            catch (const EncodingError & e) {
                err << "parse error: " << e.what() << "\n";
                return exit_io;
            }
            catch (const Error & e) {
                err << "internal error: " << e.what() << "\n";
                return exit_internal;
            }
        }

        auto solver_options(const RunConfig & cfg, const Graph & g, const SolverOptions & hooks) -> SolverOptions
        {
            auto options = hooks;
            options.match = cfg.match;
            options.order = parse_order(cfg.order, g.vertex_count());
            options.monolithic_budget = cfg.budget;
            options.parallel_colors = cfg.parallel_colors;
            return options;
        }

        auto run_mode(SolveMode mode, const Graph & g, Color k, const Codebook & cb, const SolverOptions & options)
            -> RunResult
        {
            return mode == SolveMode::incremental ? solve_incremental(g, k, cb, options)
                                                  : solve_monolithic(g, k, cb, options);
        }

        auto report_to_json(const ValidationReport & report) -> json
        {
            auto token = [](Token t) { return json{{"vertex", t.vertex}, {"color", t.color}}; };
            json duplicates = json::array();
            for (auto [a, b] : report.duplicates)
                duplicates.push_back({token(a), token(b)});
            json violations = json::array();
            for (const auto & v : report.junction_violations) {
                json between = json::array();
                for (auto t : v.between)
                    between.push_back(token(t));
                violations.push_back({{"codeword", token(v.codeword)}, {"left", token(v.left)},
                    {"right", token(v.right)}, {"offset", v.offset}, {"between", std::move(between)}});
            }
            return {{"ok", report.ok()}, {"duplicates", std::move(duplicates)},
                {"junction_violations", std::move(violations)},
                {"min_pairwise_hamming",
                    report.min_pairwise_hamming ? json(*report.min_pairwise_hamming) : json(nullptr)}};
        }
    }

    auto parse_mode_choice(std::string_view s) -> ModeChoice
    {
        if (s == "incremental")
            return ModeChoice::incremental;
        if (s == "monolithic")
            return ModeChoice::monolithic;
        if (s == "both")
            return ModeChoice::both;
        throw ConfigError("unknown mode '" + string{s} + "' (valid: incremental, monolithic, both)");
    }

    auto random_graph(Vertex n, double p, uint64_t seed) -> Graph
    {
        if (n < 1)
            throw ConfigError("random graph needs at least one vertex");
        if (! (p >= 0.0 && p <= 1.0))
            throw ConfigError("edge probability must lie in [0, 1]");

        std::mt19937_64 rng{seed};
        vector<Edge> edges;
        for (Vertex u = 1; u <= n; ++u)
            for (Vertex v = u + 1; v <= n; ++v)
                if (static_cast<double>(rng() >> 11) * 0x1p-53 < p)
                    edges.push_back({u, v});
        return Graph{n, edges};
    }

    auto load_graph(const string & spec, std::ostream * warnings) -> Graph
    {
        if (spec.empty())
            throw ConfigError("no graph given (use a path, builtin:NAME or random:n,p,seed)");

        if (spec.starts_with("builtin:"))
            return builtin_graph(std::string_view{spec}.substr(8));

        if (spec.starts_with("random:")) {
            auto parts = split(std::string_view{spec}.substr(7), ',');
            if (parts.size() != 3)
                throw ConfigError("random graph spec must be random:n,p,seed (got '" + spec + "')");
            auto n = parse_number<Vertex>(parts[0], "vertex count");
            return random_graph(n, parse_probability(parts[1]), parse_number<uint64_t>(parts[2], "seed"));
        }

        auto parsed = parse_dimacs(read_file(spec));
        if (warnings) {
            if (parsed.duplicate_edges)
                *warnings << "warning: " << spec << ": duplicate edges were merged\n";
            if (parsed.edge_count_mismatch)
                *warnings << "warning: " << spec << ": header declares " << parsed.declared_edges
                          << " edges, found " << parsed.graph.edge_count() << " distinct\n";
        }
        return std::move(parsed.graph);
    }

    auto resolve_codebook_spec(const string & spec, Vertex n, Color k) -> string
    {
        if (! spec.empty())
            return spec;
        const auto & t1 = builtin_table1();
        return n <= t1.vertex_count() && k <= t1.color_count() ? "table1" : "gen:20,1";
    }

    auto load_codebook(const string & requested, Vertex n, Color k) -> Codebook
    {
        auto spec = resolve_codebook_spec(requested, n, k);

        if (spec == "table1") {
            const auto & t1 = builtin_table1();
            if (n > t1.vertex_count() || k > t1.color_count())
                throw ConfigError("the table1 codebook covers " + std::to_string(t1.vertex_count()) + " vertices and "
                    + std::to_string(t1.color_count()) + " colors; this run needs " + std::to_string(n) + " and "
                    + std::to_string(k));
            return t1.restrict(n, k);
        }

        if (spec.starts_with("gen:")) {
            auto parts = split(std::string_view{spec}.substr(4), ',');
            if (parts.size() != 2)
                throw ConfigError("generated codebook spec must be gen:len,seed (got '" + spec + "')");
            auto length = parse_number<size_t>(parts[0], "codeword length");
            if (length < 4)
                throw ConfigError("codeword length must be at least 4");
            return generate_codebook(n, k, length, parse_number<uint64_t>(parts[1], "seed"));
        }

        auto cb = codebook_from_json(read_file(spec));
        if (cb.vertex_count() < n || cb.color_count() < k)
            throw ConfigError("codebook '" + spec + "' covers " + std::to_string(cb.vertex_count()) + " vertices x "
                + std::to_string(cb.color_count()) + " colors; this run needs " + std::to_string(n) + " x "
                + std::to_string(k));
        return cb.vertex_count() == n && cb.color_count() == k ? cb : cb.restrict(n, k);
    }

    auto parse_order(const string & spec, Vertex n) -> vector<Vertex>
    {
        if (spec.empty() || spec == "natural")
            return {};
        vector<Vertex> order;
        for (const auto & part : split(spec, ','))
            order.push_back(parse_number<Vertex>(part, "vertex in --order"));

        vector<Vertex> sorted = order;
        std::sort(sorted.begin(), sorted.end());
        bool permutation = sorted.size() == static_cast<size_t>(n);
        for (size_t i = 0; permutation && i < sorted.size(); ++i)
            permutation = sorted[i] == static_cast<Vertex>(i + 1);
        if (! permutation)
            throw ConfigError("--order must be a permutation of 1.." + std::to_string(n));
        return order;
    }

    auto budget_from_env(uint64_t fallback) -> uint64_t
    {
        const char * raw = std::getenv("HELIX_BUDGET");
        if (! raw || ! *raw)
            return fallback;
        return parse_number<uint64_t>(raw, "HELIX_BUDGET");
    }

    void print_summary(std::ostream & out, const RunResult & run, const string & codebook_label)
    {
        const auto & t = run.trace;
        out << "mode: " << to_string(t.mode) << " (" << to_string(t.match) << " match, codebook " << codebook_label
            << ")\n";
        out << "graph: n=" << t.graph_n << " m=" << t.graph_m << ", colors: " << t.k << "\n";

        if (t.steps.empty())
            out << "steps: none recorded (initial tube enumerated directly)\n";
        else {
            out << "order:";
            for (auto v : t.order)
                out << ' ' << v;
            out << "\n";
            out << std::setw(5) << "step" << std::setw(8) << "vertex" << std::setw(11) << "t0_before"
                << "  " << std::left << std::setw(22) << "after_append" << std::setw(22) << "after_filter"
                << std::right << std::setw(10) << "discarded" << std::setw(10) << "t0_after" << "\n";
            for (size_t i = 0; i < t.steps.size(); ++i) {
                const auto & s = t.steps[i];
                out << std::setw(5) << i + 1 << std::setw(8) << s.vertex << std::setw(11) << s.t0_before << "  "
                    << std::left << std::setw(22) << format_counts(s.per_color_after_append) << std::setw(22)
                    << format_counts(s.per_color_after_filter) << std::right << std::setw(10) << s.discarded
                    << std::setw(10) << s.t0_after << "\n";
            }
        }

        out << "peak tube size: " << t.peak_tube_size << " (k^n = " << space_text(t.k, t.graph_n);
        if (auto space = solution_space_size(t.k, t.graph_n); space && *space > 0)
            out << ", ratio " << t.peak_tube_size << "/" << *space << " = " << std::fixed << std::setprecision(4)
                << static_cast<double>(t.peak_tube_size) / static_cast<double>(*space) << std::defaultfloat;
        out << ")\n";

        const auto & c = t.op_totals;
        out << "operations: append=" << c.append << " copy=" << c.copy << " merge=" << c.merge
            << " extract=" << c.extract << " detect=" << c.detect << " discard=" << c.discard << " (total "
            << c.total() << ")\n";

        out << "colorable: " << (run.solutions.colorable ? "true" : "false") << "\n";
        out << "solutions: " << run.solutions.colorings.size() << "\n";
        const auto & all = run.solutions.colorings;
        for (size_t i = 0; i < std::min(all.size(), listing_cap); ++i)
            out << "  " << format_coloring(all[i]) << "\n";
        if (all.size() > listing_cap)
            out << "  ... (" << all.size() - listing_cap << " more)\n";
    }

    auto cmd_solve(const RunConfig & cfg, std::ostream & out, std::ostream & err, const SolverOptions & hooks) -> int
    {
        return guarded(err, [&] {
            auto g = load_graph(cfg.graph, &err);
            auto label = resolve_codebook_spec(cfg.codebook, g.vertex_count(), cfg.k);
            auto cb = load_codebook(label, g.vertex_count(), cfg.k);
            auto options = solver_options(cfg, g, hooks);

            vector<SolveMode> modes;
            if (cfg.mode != ModeChoice::monolithic)
                modes.push_back(SolveMode::incremental);
            if (cfg.mode != ModeChoice::incremental)
                modes.push_back(SolveMode::monolithic);

            vector<RunResult> runs;
            for (auto mode : modes)
                runs.push_back(run_mode(mode, g, cfg.k, cb, options));

            if (cfg.trace_path)
                for (const auto & run : runs)
                    write_file(runs.size() == 1 ? *cfg.trace_path : with_mode_suffix(*cfg.trace_path, run.trace.mode),
                        run_to_json(run));

            if (cfg.json) {
                if (runs.size() == 1)
                    out << run_to_json(runs.front());
                else {
                    json docs = json::array();
                    for (const auto & run : runs)
                        docs.push_back(json::parse(run_to_json(run)));
                    out << docs.dump(2) << "\n";
                }
            }
            else
                for (size_t i = 0; i < runs.size(); ++i) {
                    if (i)
                        out << "\n";
                    print_summary(out, runs[i], label);
                }
            return int{exit_ok};
        });
    }

    auto cmd_compare(const RunConfig & cfg, std::ostream & out, std::ostream & err, const SolverOptions & hooks)
        -> int
    {
        return guarded(err, [&] {
            auto g = load_graph(cfg.graph, &err);
            auto label = resolve_codebook_spec(cfg.codebook, g.vertex_count(), cfg.k);
            auto cb = load_codebook(label, g.vertex_count(), cfg.k);
            auto options = solver_options(cfg, g, hooks);
            auto k = cfg.k;

            auto oracle_job = std::async(std::launch::async, [&] { return enumerate_colorings(g, k); });
            auto mono_job = std::async(std::launch::async, [&]() -> std::optional<RunResult> {
                try {
                    return solve_monolithic(g, k, cb, options);
                }
                catch (const BudgetError & e) {
                    err << "note: monolithic run skipped: " << e.what() << "\n";
                    return std::nullopt;
                }
            });
            auto incremental = solve_incremental(g, k, cb, options);
            auto monolithic = mono_job.get();
            auto oracle = oracle_job.get();

            struct Engine
            {
                string name;
                const vector<Coloring> * colorings;
            };
            vector<Engine> engines{{"incremental", &incremental.solutions.colorings}};
            if (monolithic)
                engines.push_back({"monolithic", &monolithic->solutions.colorings});

            // Smallest coloring on which some engine and the oracle differ.
            std::optional<std::pair<Coloring, string>> counterexample;
            for (const auto & e : engines) {
                vector<Coloring> diff;
                std::set_symmetric_difference(oracle.begin(), oracle.end(), e.colorings->begin(), e.colorings->end(),
                    std::back_inserter(diff));
                if (! diff.empty() && (! counterexample || diff.front() < counterexample->first))
                    counterexample = std::pair{diff.front(), e.name};
            }
            bool agree = ! counterexample;

            auto space = solution_space_size(k, g.vertex_count());
            auto inc_peak = incremental.trace.peak_tube_size;
            std::optional<double> factor;
            if (space && inc_peak > 0)
                factor = static_cast<double>(*space) / static_cast<double>(inc_peak);

            if (cfg.json) {
                json doc = {{"graph", {{"n", g.vertex_count()}, {"m", g.edge_count()}}}, {"k", k}, {"agree", agree},
                    {"counts",
                        {{"oracle", oracle.size()}, {"incremental", incremental.solutions.colorings.size()},
                            {"monolithic",
                                monolithic ? json(monolithic->solutions.colorings.size()) : json(nullptr)}}},
                    {"peaks",
                        {{"incremental", inc_peak},
                            {"monolithic", monolithic ? json(monolithic->trace.peak_tube_size) : json(nullptr)}}},
                    {"solution_space", space ? json(*space) : json(nullptr)},
                    {"reduction_factor", factor ? json(*factor) : json(nullptr)}, {"counterexample", nullptr}};
                if (counterexample) {
                    const auto & [coloring, engine] = *counterexample;
                    doc["counterexample"] = {{"coloring", coloring}, {"engine", engine},
                        {"proper", is_proper(g, coloring)}};
                }
                out << doc.dump(2) << "\n";
            }
            else {
                out << "graph: n=" << g.vertex_count() << " m=" << g.edge_count() << ", colors: " << k
                    << ", codebook " << label << "\n";
                out << "oracle:      " << oracle.size() << " colorings\n";
                out << "incremental: " << incremental.solutions.colorings.size() << " colorings, peak " << inc_peak
                    << "\n";
                if (monolithic)
                    out << "monolithic:  " << monolithic->solutions.colorings.size() << " colorings, peak "
                        << monolithic->trace.peak_tube_size << "\n";
                else
                    out << "monolithic:  skipped (k^n = " << space_text(k, g.vertex_count()) << " over budget "
                        << cfg.budget << ")\n";
                out << "agree: " << (agree ? "true" : "false") << "\n";
                out << "reduction factor: ";
                if (factor)
                    out << std::fixed << std::setprecision(3) << *factor << std::defaultfloat << "x (k^n "
                        << *space << " / incremental peak " << inc_peak << ")\n";
                else
                    out << "n/a\n";
                if (counterexample) {
                    const auto & [coloring, engine] = *counterexample;
                    bool proper = is_proper(g, coloring);
                    out << "counterexample: [" << format_coloring(coloring) << "] is "
                        << (proper ? "proper" : "improper") << "; " << engine << " "
                        << (proper ? "missed it" : "reported it") << "\n";
                }
            }
            return int{agree ? exit_ok : exit_disagree};
        });
    }

    auto cmd_codebook_generate(const GenerateParams & params, std::ostream & out, std::ostream & err) -> int
    {
        return guarded(err, [&] {
            if (params.n < 0 || params.k < 1)
                throw ConfigError("codebook needs n >= 0 and k >= 1");
            if (params.length < 4)
                throw ConfigError("codeword length must be at least 4");
            auto text = codebook_to_json(generate_codebook(params.n, params.k, params.length, params.seed));
            if (params.out_path.empty())
                out << text;
            else {
                write_file(params.out_path, text);
                err << "wrote " << params.out_path << "\n";
            }
            return int{exit_ok};
        });
    }

    void print_report(std::ostream & out, const ValidationReport & report)
    {
        out << "duplicates: " << report.duplicates.size() << "\n";
        for (size_t i = 0; i < std::min(report.duplicates.size(), violation_cap); ++i)
            out << "  " << format_token(report.duplicates[i].first) << " == "
                << format_token(report.duplicates[i].second) << "\n";

        out << "junction violations: " << report.junction_violations.size() << "\n";
        for (size_t i = 0; i < std::min(report.junction_violations.size(), violation_cap); ++i) {
            const auto & v = report.junction_violations[i];
            out << "  " << format_token(v.codeword) << " inside " << format_token(v.left);
            for (auto t : v.between)
                out << "|" << format_token(t);
            out << "|" << format_token(v.right) << " at offset " << v.offset << "\n";
        }
        if (report.junction_violations.size() > violation_cap)
            out << "  ... (" << report.junction_violations.size() - violation_cap << " more)\n";

        out << "min pairwise hamming (equal-length pairs): ";
        if (report.min_pairwise_hamming)
            out << *report.min_pairwise_hamming << "\n";
        else
            out << "n/a\n";
        out << "ok: " << (report.ok() ? "true" : "false") << "\n";
    }

    auto cmd_codebook_validate(const string & source, Vertex n, Color k, bool as_json, std::ostream & out,
        std::ostream & err) -> int
    {
        return guarded(err, [&] {
            Codebook cb = source == "table1" ? builtin_table1()
                : source.starts_with("gen:")   ? load_codebook(source, n, k)
                                               : codebook_from_json(read_file(source));
            const auto & report = cb.report();
            if (as_json)
                out << report_to_json(report).dump(2) << "\n";
            else {
                out << "codebook: " << source << " (" << cb.vertex_count() << " vertices x " << cb.color_count()
                    << " colors, " << cb.size() << " codewords";
                auto lengths = cb.lengths();
                if (! lengths.empty()) {
                    out << ", length " << lengths.front();
                    if (lengths.size() > 1)
                        out << "-" << lengths.back();
                }
                out << ")\n";
                print_report(out, report);
            }
            return int{report.ok() ? exit_ok : exit_invalid};
        });
    }
}
