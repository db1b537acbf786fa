#pragma once

#include <helix/codec.hpp>
#include <helix/errors.hpp>
#include <helix/graph.hpp>
#include <helix/solver.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace helix::cli
{
    /// Process exit codes shared by every subcommand.
    enum ExitCode : int
    {
        exit_ok = 0,
        exit_io = 1,
        exit_config = 2,
        exit_disagree = 3,
        exit_invalid = 4,
        exit_internal = 5
    };

    /// Bad flag value or an inconsistent combination of flags.
    class ConfigError : public Error
    {
    public:
        using Error::Error;
    };

    /// File could not be opened, read or written.
    class IoError : public Error
    {
    public:
        using Error::Error;
    };

    enum class ModeChoice
    {
        incremental,
        monolithic,
        both
    };

    struct RunConfig
    {
        /// path, builtin:NAME or random:n,p,seed
        std::string graph;
        Color k = 3;
        ModeChoice mode = ModeChoice::incremental;
        /// table1, gen:len,seed or a JSON path. Empty picks table1 when it
        /// covers the graph and k, otherwise gen:20,1.
        std::string codebook;
        MatchMode match = MatchMode::symbolic;
        /// "natural" or a comma-separated permutation of 1..n.
        std::string order = "natural";
        std::optional<std::string> trace_path;
        bool json = false;
        std::uint64_t budget = default_monolithic_budget;
        bool parallel_colors = false;
    };

    auto parse_mode_choice(std::string_view s) -> ModeChoice;

    /// G(n, p): each pair u < v, in lexicographic order, is kept when the
    /// next uniform draw from mt19937_64(seed) falls below p.
    auto random_graph(Vertex n, double p, std::uint64_t seed) -> Graph;

    /// DIMACS warnings (duplicate edges, edge-count mismatch) go to `warnings`.
    auto load_graph(const std::string & spec, std::ostream * warnings = nullptr) -> Graph;
    /// The spec actually used: `spec` itself, or the default for an empty one.
    auto resolve_codebook_spec(const std::string & spec, Vertex n, Color k) -> std::string;
    auto load_codebook(const std::string & spec, Vertex n, Color k) -> Codebook;
    auto parse_order(const std::string & spec, Vertex n) -> std::vector<Vertex>;

    /// Budget from HELIX_BUDGET if set, else `fallback`.
    auto budget_from_env(std::uint64_t fallback = default_monolithic_budget) -> std::uint64_t;

    /// Human-readable report of one run.
    void print_summary(std::ostream & out, const RunResult & run, const std::string & codebook_label);

    /// `hooks` carries test-only solver options (fault injection).
    auto cmd_solve(const RunConfig & cfg, std::ostream & out, std::ostream & err, const SolverOptions & hooks = {})
        -> int;
    auto cmd_compare(const RunConfig & cfg, std::ostream & out, std::ostream & err, const SolverOptions & hooks = {})
        -> int;

    struct GenerateParams
    {
        Vertex n = 12;
        Color k = 3;
        std::size_t length = 20;
        std::uint64_t seed = 1;
        /// stdout when empty
        std::string out_path;
    };

    auto cmd_codebook_generate(const GenerateParams & params, std::ostream & out, std::ostream & err) -> int;

    /// `source` is table1, gen:len,seed (sized by n and k) or a JSON path.
    auto cmd_codebook_validate(const std::string & source, Vertex n, Color k, bool json, std::ostream & out,
        std::ostream & err) -> int;

    /// Validation report as text, the format printed by `codebook validate`.
    void print_report(std::ostream & out, const ValidationReport & report);
}
