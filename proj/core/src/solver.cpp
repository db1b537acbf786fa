#include <helix/errors.hpp>
#include <helix/solver.hpp>

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <numeric>
#include <thread>

using std::size_t;
using std::string;
using std::uint64_t;
using std::vector;

namespace helix
{
    auto to_string(SolveMode m) -> string
    {
        return m == SolveMode::incremental ? "incremental" : "monolithic";
    }

    auto solution_space_size(Color k, Vertex n) -> std::optional<uint64_t>
    {
        uint64_t total = 1;
        for (Vertex i = 0; i < n; ++i) {
            if (total > std::numeric_limits<uint64_t>::max() / static_cast<uint64_t>(k))
                return std::nullopt;
            total *= static_cast<uint64_t>(k);
        }
        return total;
    }

    namespace
    {
        void check_inputs(const Graph & g, Color k, const Codebook & cb, MatchMode match)
        {
            if (k < 1)
                throw LookupError("need at least one color");
            if (cb.vertex_count() < g.vertex_count() || cb.color_count() < k)
                throw LookupError("codebook covers " + std::to_string(cb.vertex_count()) + " vertices x "
                    + std::to_string(cb.color_count()) + " colors, but the run needs "
                    + std::to_string(g.vertex_count()) + " x " + std::to_string(k));
            if (match == MatchMode::nucleotide && ! cb.validated())
                throw SoundnessError("nucleotide matching needs a codebook that passes validation");
        }

        auto resolve_order(const Graph & g, const vector<Vertex> & requested) -> vector<Vertex>
        {
            auto n = g.vertex_count();
            if (requested.empty()) {
                vector<Vertex> natural(static_cast<size_t>(n));
                std::iota(natural.begin(), natural.end(), 1);
                return natural;
            }

            if (requested.size() != static_cast<size_t>(n))
                throw LookupError("vertex order has " + std::to_string(requested.size()) + " entries for "
                    + std::to_string(n) + " vertices");
            vector<bool> seen(static_cast<size_t>(n) + 1, false);
            for (auto v : requested) {
                if (v < 1 || v > n || seen[v])
                    throw LookupError("vertex order is not a permutation of 1.." + std::to_string(n));
                seen[v] = true;
            }
            return requested;
        }

        // Reads a strand of T0 back as a full coloring in natural vertex order.
        auto read_out(const Strand & strand, Vertex n, Color k, const Codebook & cb, MatchMode match) -> Coloring
        {
            Strand decoded = match == MatchMode::nucleotide ? decode_strand(render(strand, cb), cb) : strand;

            Coloring coloring(static_cast<size_t>(n), -1);
            for (auto [v, c] : decoded.tokens()) {
                if (v < 1 || v > n || c < 0 || c >= k || coloring[v - 1] != -1)
                    throw DecodeError("final strand carries an invalid or repeated token (" + std::to_string(v) + ","
                        + std::to_string(c) + ")");
                coloring[v - 1] = c;
            }
            if (std::find(coloring.begin(), coloring.end(), -1) != coloring.end())
                throw DecodeError("final strand does not color every vertex");
            return coloring;
        }

        auto collect(TubeMachine & machine, Tube & t0, Vertex n, Color k, const Codebook & cb, MatchMode match)
            -> SolutionSet
        {
            SolutionSet result;
            result.colorable = machine.detect(t0);
            for (const auto & s : t0.strands())
                result.colorings.push_back(read_out(s, n, k, cb, match));
            std::sort(result.colorings.begin(), result.colorings.end());
            result.colorings.erase(std::unique(result.colorings.begin(), result.colorings.end()),
                result.colorings.end());
            return result;
        }

        // Counts extracts so the testing hook can drop exactly one of them.
        struct ExtractGate
        {
            std::optional<uint64_t> skip;
            std::atomic<uint64_t> issued{0};

            auto should_skip() -> bool
            {
                auto index = issued.fetch_add(1);
                return skip && *skip == index;
            }
        };

        // One color's share of a step: append the vertex's codeword, then pull
        // out every strand that gives an earlier neighbour the same color.
        // Successive bad outputs are poured into a single bad tube.
        struct ColorPipeline
        {
            Tube tube;
            std::optional<Tube> bad;
            uint64_t after_append = 0;

            void run(TubeMachine & machine, Vertex vertex, Color color, std::span<const Vertex> earlier_neighbours,
                const Codebook & cb, MatchMode match, ExtractGate & gate)
            {
                machine.append(tube, cb.codeword(vertex, color));
                after_append = tube.size();

                auto name = color_name(color);
                for (auto j : earlier_neighbours) {
                    if (gate.should_skip())
                        continue;
                    auto [plus, minus] = machine.extract(tube, cb.codeword(j, color), match, cb,
                        "T_" + name + "_bad", "T_" + name);
                    tube = std::move(minus);
                    if (! bad)
                        bad = std::move(plus);
                    else
                        machine.merge(*bad, {&plus});
                }
            }
        };
    }

    auto solve_incremental(const Graph & g, Color k, const Codebook & cb, const SolverOptions & options) -> RunResult
    {
        check_inputs(g, k, cb, options.match);
        auto order = resolve_order(g, options.order);
        auto n = g.vertex_count();

        RunResult run;
        auto & trace = run.trace;
        trace.graph_n = n;
        trace.graph_m = g.edge_count();
        trace.k = k;
        trace.order = order;
        trace.mode = SolveMode::incremental;
        trace.match = options.match;
        trace.construction = "machine";

        vector<size_t> position(static_cast<size_t>(n) + 1, 0);
        for (size_t i = 0; i < order.size(); ++i)
            position[order[i]] = i;

        vector<string> labels;
        for (Color c = 0; c < k; ++c)
            labels.push_back("T_" + color_name(c));

        TubeMachine machine;
        ExtractGate gate{options.skip_extract};

        // A single blank strand stands in for the primer: appending to a
        // truly empty tube would never produce anything.
        Tube t0 = machine.make_tube("T_0", {Strand{}});

        for (size_t step = 0; step < order.size(); ++step) {
            auto vertex = order[step];
            StepRecord record;
            record.vertex = vertex;
            record.t0_before = t0.size();

            vector<Vertex> earlier;
            for (auto j : g.neighbours(vertex))
                if (position[j] < step)
                    earlier.push_back(j);
            std::sort(earlier.begin(), earlier.end(), [&](Vertex a, Vertex b) { return position[a] < position[b]; });

            auto copies = machine.copy(t0, labels);
            vector<ColorPipeline> pipelines;
            pipelines.reserve(static_cast<size_t>(k));
            for (auto & tube : copies)
                pipelines.push_back(ColorPipeline{std::move(tube), std::nullopt, 0});

            if (options.parallel_colors && k > 1) {
                vector<std::exception_ptr> failures(static_cast<size_t>(k));
                {
                    vector<std::jthread> workers;
                    for (Color c = 0; c < k; ++c)
                        workers.emplace_back([&, c] {
                            try {
                                pipelines[c].run(machine, vertex, c, earlier, cb, options.match, gate);
                            }
                            catch (...) {
                                failures[c] = std::current_exception();
                            }
                        });
                }
                for (auto & f : failures)
                    if (f)
                        std::rethrow_exception(f);
            }
            else
                for (Color c = 0; c < k; ++c)
                    pipelines[c].run(machine, vertex, c, earlier, cb, options.match, gate);

            vector<Tube *> survivors;
            for (auto & p : pipelines) {
                record.per_color_after_append.push_back(p.after_append);
                record.per_color_after_filter.push_back(p.tube.size());
                survivors.push_back(&p.tube);
            }
            machine.merge(t0, survivors);

            for (auto & p : pipelines)
                if (p.bad) {
                    record.discarded += p.bad->size();
                    machine.discard(*p.bad);
                }

            record.t0_after = t0.size();
            if (options.check_purity && t0.max_multiplicity() > 1)
                throw MachineFault("T_0 holds a repeated strand after vertex " + std::to_string(vertex));
            trace.steps.push_back(std::move(record));
        }

        run.solutions = collect(machine, t0, n, k, cb, options.match);
        trace.op_totals = machine.counts();
        trace.peak_tube_size = machine.peak_live_strands();
        return run;
    }

    auto solve_monolithic(const Graph & g, Color k, const Codebook & cb, const SolverOptions & options) -> RunResult
    {
        check_inputs(g, k, cb, options.match);
        auto n = g.vertex_count();
        auto space = solution_space_size(k, n);
        if (! space || *space > options.monolithic_budget)
            throw BudgetError("monolithic mode needs " + std::to_string(k) + "^" + std::to_string(n)
                + (space ? " = " + std::to_string(*space) : string{" (overflow)"}) + " strands, above the budget of "
                + std::to_string(options.monolithic_budget));

        RunResult run;
        auto & trace = run.trace;
        trace.graph_n = n;
        trace.graph_m = g.edge_count();
        trace.k = k;
        trace.order = resolve_order(g, {});
        trace.mode = SolveMode::monolithic;
        trace.match = options.match;
        trace.construction = "synthetic";

        // Every total assignment, odometer order, built directly rather than
        // through copy/append.
        vector<Strand> all;
        all.reserve(*space);
        vector<Token> tokens(static_cast<size_t>(n));
        for (Vertex v = 1; v <= n; ++v)
            tokens[v - 1] = {v, 0};
        for (uint64_t i = 0; i < *space; ++i) {
            all.emplace_back(tokens);
            for (auto pos = static_cast<size_t>(n); pos-- > 0;) {
                if (++tokens[pos].color < k)
                    break;
                tokens[pos].color = 0;
            }
        }

        TubeMachine machine;
        ExtractGate gate{options.skip_extract};
        Tube tube = machine.make_tube("T", std::move(all));

        for (auto [u, v] : g.edges())
            for (Color c = 0; c < k; ++c) {
                if (gate.should_skip())
                    continue;
                auto [has_u, lacks_u] = machine.extract(tube, cb.codeword(u, c), options.match, cb);
                if (gate.should_skip()) {
                    machine.merge(tube, {&lacks_u, &has_u});
                    continue;
                }
                auto [bad, good] = machine.extract(has_u, cb.codeword(v, c), options.match, cb);
                machine.merge(tube, {&lacks_u, &good});
                machine.discard(bad);
            }

        run.solutions = collect(machine, tube, n, k, cb, options.match);
        trace.op_totals = machine.counts();
        trace.peak_tube_size = machine.peak_live_strands();
        return run;
    }

    auto step_census(const Graph & g, Color k, std::span<const Vertex> order, size_t i) -> uint64_t
    {
        vector<Vertex> prefix;
        if (order.empty())
            for (Vertex v = 1; v <= static_cast<Vertex>(std::min<size_t>(i, static_cast<size_t>(g.vertex_count()))); ++v)
                prefix.push_back(v);
        else
            prefix.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(std::min(i, order.size())));
        if (i > static_cast<size_t>(g.vertex_count()))
            throw LookupError("step_census: prefix length " + std::to_string(i) + " exceeds the vertex count");
        return count_colorings(g.induced(prefix), k);
    }
}
