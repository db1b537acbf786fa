#pragma once

#include <helix/codec.hpp>
#include <helix/graph.hpp>
#include <helix/oracle.hpp>
#include <helix/tube.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace helix
{
    inline constexpr std::uint64_t default_monolithic_budget = 2'000'000;

    enum class SolveMode
    {
        incremental,
        monolithic
    };

    auto to_string(SolveMode m) -> std::string;

    struct SolutionSet
    {
        /// Sorted, no duplicates, in natural vertex order.
        std::vector<Coloring> colorings;
        bool colorable = false;

        auto operator==(const SolutionSet &) const -> bool = default;
    };

    /// One pass of the outer loop: copy, append, filter, merge, discard.
    struct StepRecord
    {
        Vertex vertex = 0;
        std::uint64_t t0_before = 0;
        std::vector<std::uint64_t> per_color_after_append;
        std::vector<std::uint64_t> per_color_after_filter;
        std::uint64_t discarded = 0;
        std::uint64_t t0_after = 0;

        auto operator==(const StepRecord &) const -> bool = default;
    };

    struct Trace
    {
        Vertex graph_n = 0;
        std::uint64_t graph_m = 0;
        Color k = 0;
        std::vector<Vertex> order;
        SolveMode mode = SolveMode::incremental;
        MatchMode match = MatchMode::symbolic;
        /// "machine" when every strand came from tube operations; "synthetic"
        /// when the initial tube was enumerated directly (monolithic mode).
        std::string construction = "machine";

        std::vector<StepRecord> steps;
        OpCounts op_totals;
        /// Largest total strand count across all live tubes at any instant.
        std::uint64_t peak_tube_size = 0;

        auto operator==(const Trace &) const -> bool = default;
    };

    struct RunResult
    {
        SolutionSet solutions;
        Trace trace;

        auto operator==(const RunResult &) const -> bool = default;
    };

    struct SolverOptions
    {
        MatchMode match = MatchMode::symbolic;
        /// Vertex processing order; natural order when empty.
        std::vector<Vertex> order;
        /// Run the k per-color append/extract pipelines on separate threads.
        bool parallel_colors = false;
        /// After every step, fault if any strand in T0 has multiplicity > 1.
        bool check_purity = false;
        std::uint64_t monolithic_budget = default_monolithic_budget;
        /// Testing hook: silently skip the extract with this 0-based index.
        std::optional<std::uint64_t> skip_extract;
    };

    /// Colors the vertices one at a time, pruning infeasible strands after
    /// each step so the tube never holds the full k^n space.
    auto solve_incremental(const Graph & g, Color k, const Codebook & cb, const SolverOptions & options = {})
        -> RunResult;

    /// Materialises all k^n assignments, then filters each edge and color.
    /// Throws BudgetError when k^n exceeds options.monolithic_budget.
    auto solve_monolithic(const Graph & g, Color k, const Codebook & cb, const SolverOptions & options = {})
        -> RunResult;

    /// Number of proper k-colorings of the subgraph induced by the first i
    /// vertices of `order` (natural order when empty): the expected T0 size
    /// after step i.
    auto step_census(const Graph & g, Color k, std::span<const Vertex> order, std::size_t i) -> std::uint64_t;

    /// k^n, or nullopt on overflow.
    auto solution_space_size(Color k, Vertex n) -> std::optional<std::uint64_t>;

    /// JSON trace document; field names are part of the file format.
    auto run_to_json(const RunResult & run) -> std::string;
    auto run_from_json(std::string_view text) -> RunResult;
}
