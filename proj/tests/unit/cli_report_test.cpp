#include <helix/oracle.hpp>
#include <helix/report.hpp>

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace helix;
using namespace helix::cli;

namespace
{
    struct Outcome
    {
        int code;
        std::string out;
        std::string err;
    };

    auto solve(RunConfig cfg, const SolverOptions & hooks = {}) -> Outcome
    {
        std::ostringstream out, err;
        int code = cmd_solve(cfg, out, err, hooks);
        return {code, out.str(), err.str()};
    }

    auto compare(RunConfig cfg, const SolverOptions & hooks = {}) -> Outcome
    {
        std::ostringstream out, err;
        int code = cmd_compare(cfg, out, err, hooks);
        return {code, out.str(), err.str()};
    }

    auto config(std::string graph, Color k = 3) -> RunConfig
    {
        RunConfig cfg;
        cfg.graph = std::move(graph);
        cfg.k = k;
        return cfg;
    }

    auto contains(const std::string & hay, const std::string & needle) -> bool
    {
        return hay.find(needle) != std::string::npos;
    }

    auto scratch(const std::string & name) -> std::filesystem::path
    {
        auto dir = std::filesystem::temp_directory_path() / "helix_cli_test";
        std::filesystem::create_directories(dir);
        return dir / name;
    }

    auto slurp(const std::filesystem::path & p) -> std::string
    {
        std::ifstream in{p, std::ios::binary};
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    }
}

TEST(RandomGraph, DeterministicAndWithinBounds)
{
    auto a = random_graph(10, 0.4, 7);
    EXPECT_EQ(a, random_graph(10, 0.4, 7));
    EXPECT_EQ(a.vertex_count(), 10);
    EXPECT_EQ(random_graph(6, 0.0, 1).edge_count(), 0u);
    EXPECT_EQ(random_graph(6, 1.0, 1).edge_count(), 15u);
    EXPECT_THROW(random_graph(0, 0.5, 1), ConfigError);
    EXPECT_THROW(random_graph(5, 1.5, 1), ConfigError);
}

TEST(RandomGraph, DensityRoughlyP)
{
    std::size_t edges = 0;
    for (std::uint64_t seed = 0; seed < 50; ++seed)
        edges += random_graph(20, 0.4, seed).edge_count();
    double density = static_cast<double>(edges) / (50.0 * 190.0);
    EXPECT_NEAR(density, 0.4, 0.03);
}

TEST(LoadGraph, Specs)
{
    EXPECT_EQ(load_graph("builtin:c5"), builtin_graph("c5"));
    EXPECT_EQ(load_graph("random:8,0.3,5"), random_graph(8, 0.3, 5));
    EXPECT_EQ(load_graph(HELIX_TEST_DATA_DIR "/petersen.col"), builtin_graph("petersen"));
    EXPECT_THROW(load_graph("builtin:k9"), LookupError);
    EXPECT_THROW(load_graph("random:8,0.3"), ConfigError);
    EXPECT_THROW(load_graph("random:8,abc,1"), ConfigError);
    EXPECT_THROW(load_graph("/nonexistent/graph.col"), IoError);
    EXPECT_THROW(load_graph(""), ConfigError);

    std::ostringstream warnings;
    auto g = load_graph(HELIX_TEST_DATA_DIR "/path_dup.col", &warnings);
    EXPECT_EQ(g, Graph(3, {{1, 2}, {2, 3}}));
    EXPECT_TRUE(contains(warnings.str(), "duplicate"));
    EXPECT_TRUE(contains(warnings.str(), "declares 4"));
}

TEST(LoadCodebook, Selection)
{
    EXPECT_EQ(resolve_codebook_spec("", 12, 3), "table1");
    EXPECT_EQ(resolve_codebook_spec("", 13, 3), "gen:20,1");
    EXPECT_EQ(resolve_codebook_spec("", 5, 4), "gen:20,1");
    EXPECT_EQ(load_codebook("table1", 3, 2), builtin_table1().restrict(3, 2));
    EXPECT_THROW(load_codebook("table1", 13, 3), ConfigError);
    EXPECT_THROW(load_codebook("table1", 5, 4), ConfigError);
    EXPECT_EQ(load_codebook("gen:12,4", 5, 3), generate_codebook(5, 3, 12, 4));
    EXPECT_THROW(load_codebook("gen:3,4", 5, 3), ConfigError);
    EXPECT_THROW(load_codebook("gen:12", 5, 3), ConfigError);

    auto path = scratch("book.json");
    std::ofstream{path} << codebook_to_json(generate_codebook(6, 3, 10, 2));
    EXPECT_EQ(load_codebook(path.string(), 6, 3), generate_codebook(6, 3, 10, 2));
    EXPECT_EQ(load_codebook(path.string(), 4, 2).size(), 8u);
    EXPECT_THROW(load_codebook(path.string(), 7, 3), ConfigError);
}

TEST(ParseOrder, Forms)
{
    EXPECT_TRUE(parse_order("natural", 4).empty());
    EXPECT_EQ(parse_order("3,1,2", 3), (std::vector<Vertex>{3, 1, 2}));
    EXPECT_THROW(parse_order("1,2", 3), ConfigError);
    EXPECT_THROW(parse_order("1,1,2", 3), ConfigError);
    EXPECT_THROW(parse_order("1,x,2", 3), ConfigError);
}

TEST(BudgetFromEnv, Override)
{
    ::unsetenv("HELIX_BUDGET");
    EXPECT_EQ(budget_from_env(), default_monolithic_budget);
    ::setenv("HELIX_BUDGET", "1234", 1);
    EXPECT_EQ(budget_from_env(), 1234u);
    ::setenv("HELIX_BUDGET", "lots", 1);
    EXPECT_THROW(budget_from_env(), ConfigError);
    ::unsetenv("HELIX_BUDGET");
}

TEST(CmdSolve, TriangleSummary)
{
    auto r = solve(config("builtin:k3"));
    EXPECT_EQ(r.code, exit_ok);
    EXPECT_TRUE(contains(r.out, "solutions: 6"));
    EXPECT_TRUE(contains(r.out, "peak tube size: 18"));
    EXPECT_TRUE(contains(r.out, "ratio 18/27"));
    EXPECT_TRUE(contains(r.out, "red green blue"));
    EXPECT_TRUE(contains(r.out, "colorable: true"));
}

TEST(CmdSolve, K4NotColorableStillSucceeds)
{
    auto r = solve(config("builtin:k4"));
    EXPECT_EQ(r.code, exit_ok);
    EXPECT_TRUE(contains(r.out, "colorable: false"));
}

TEST(CmdSolve, Table1TooSmallIsConfigError)
{
    auto cfg = config("random:13,0.3,1");
    cfg.codebook = "table1";
    auto r = solve(cfg);
    EXPECT_EQ(r.code, exit_config);
    EXPECT_TRUE(contains(r.err, "table1"));
}

TEST(CmdSolve, ExitCodes)
{
    EXPECT_EQ(solve(config("/nonexistent.col")).code, exit_io);
    EXPECT_EQ(solve(config(HELIX_TEST_DATA_DIR "/self_loop.col")).code, exit_io);
    EXPECT_EQ(solve(config("builtin:nope")).code, exit_config);

    auto mono = config("random:16,0.3,2");
    mono.mode = ModeChoice::monolithic;
    mono.budget = 1000;
    EXPECT_EQ(solve(mono).code, exit_config);

    auto order = config("builtin:k3");
    order.order = "1,2";
    EXPECT_EQ(solve(order).code, exit_config);
}

TEST(CmdSolve, ListsAtMostTwentySolutions)
{
    auto r = solve(config("builtin:c5"));
    EXPECT_TRUE(contains(r.out, "solutions: 30"));
    EXPECT_TRUE(contains(r.out, "(10 more)"));
}

TEST(CmdSolve, TraceFileRoundTrips)
{
    auto path = scratch("trace.json");
    auto cfg = config("builtin:c5");
    cfg.trace_path = path.string();
    ASSERT_EQ(solve(cfg).code, exit_ok);
    auto run = run_from_json(slurp(path));
    EXPECT_EQ(run.solutions.colorings.size(), 30u);
    EXPECT_EQ(run.trace.steps.size(), 5u);
}

TEST(CmdSolve, BothModesWriteTwoTraces)
{
    auto path = scratch("both.json");
    auto cfg = config("builtin:p4");
    cfg.mode = ModeChoice::both;
    cfg.trace_path = path.string();
    auto r = solve(cfg);
    ASSERT_EQ(r.code, exit_ok);
    EXPECT_TRUE(contains(r.out, "mode: incremental"));
    EXPECT_TRUE(contains(r.out, "mode: monolithic"));
    auto inc = run_from_json(slurp(scratch("both.incremental.json")));
    auto mono = run_from_json(slurp(scratch("both.monolithic.json")));
    EXPECT_EQ(inc.solutions, mono.solutions);
    EXPECT_EQ(mono.trace.peak_tube_size, 81u);
}

TEST(CmdSolve, JsonOutput)
{
    auto cfg = config("builtin:k3");
    cfg.json = true;
    auto r = solve(cfg);
    ASSERT_EQ(r.code, exit_ok);
    EXPECT_EQ(run_from_json(r.out).trace.peak_tube_size, 18u);
}

TEST(CmdSolve, NucleotideWithGeneratedBook)
{
    auto cfg = config("builtin:petersen");
    cfg.match = MatchMode::nucleotide;
    cfg.codebook = "gen:14,3";
    auto r = solve(cfg);
    EXPECT_EQ(r.code, exit_ok);
    EXPECT_TRUE(contains(r.out, "solutions: 120"));
}

TEST(CmdCompare, FiveCycle)
{
    auto r = compare(config("builtin:c5"));
    EXPECT_EQ(r.code, exit_ok);
    EXPECT_TRUE(contains(r.out, "agree: true"));
    EXPECT_TRUE(contains(r.out, "monolithic:  30 colorings, peak 243"));
    EXPECT_TRUE(contains(r.out, "reduction factor"));
}

TEST(CmdCompare, Triangle)
{
    auto r = compare(config("builtin:k3"));
    EXPECT_EQ(r.code, exit_ok);
    EXPECT_TRUE(contains(r.out, "oracle:      6 colorings"));
    EXPECT_TRUE(contains(r.out, "incremental: 6 colorings"));
    EXPECT_TRUE(contains(r.out, "monolithic:  6 colorings"));
}

TEST(CmdCompare, InjectedFaultReportsCounterexample)
{
    SolverOptions fault;
    fault.skip_extract = 0;
    auto r = compare(config("builtin:k3"), fault);
    EXPECT_EQ(r.code, exit_disagree);
    EXPECT_TRUE(contains(r.out, "agree: false"));
    EXPECT_TRUE(contains(r.out, "counterexample: [red red green] is improper"));
}

TEST(CmdCompare, WholeBuiltinCorpusAgrees)
{
    for (auto name : builtin_graph_names())
        for (Color k = 2; k <= 4; ++k) {
            auto r = compare(config("builtin:" + std::string{name}, k));
            EXPECT_EQ(r.code, exit_ok) << name << " k=" << k << "\n" << r.out << r.err;
        }
}

TEST(CmdCompare, JsonReport)
{
    auto cfg = config("builtin:c5");
    cfg.json = true;
    auto r = compare(cfg);
    ASSERT_EQ(r.code, exit_ok);
    EXPECT_TRUE(contains(r.out, "\"agree\": true"));
    EXPECT_TRUE(contains(r.out, "\"monolithic\": 243"));
    EXPECT_TRUE(contains(r.out, "\"reduction_factor\": 3.375"));
}

TEST(CmdCompare, MonolithicSkippedOverBudget)
{
    auto cfg = config("builtin:petersen");
    cfg.budget = 100;
    auto r = compare(cfg);
    EXPECT_EQ(r.code, exit_ok);
    EXPECT_TRUE(contains(r.out, "monolithic:  skipped"));
    EXPECT_TRUE(contains(r.err, "skipped"));
}

TEST(CmdCodebook, GenerateIsByteIdentical)
{
    auto a = scratch("gen_a.json"), b = scratch("gen_b.json");
    std::ostringstream out, err;
    GenerateParams p{5, 3, 20, 1, a.string()};
    ASSERT_EQ(cmd_codebook_generate(p, out, err), exit_ok);
    p.out_path = b.string();
    ASSERT_EQ(cmd_codebook_generate(p, out, err), exit_ok);
    EXPECT_FALSE(slurp(a).empty());
    EXPECT_EQ(slurp(a), slurp(b));
    EXPECT_EQ(codebook_from_json(slurp(a)), generate_codebook(5, 3, 20, 1));
}

TEST(CmdCodebook, GenerateErrors)
{
    std::ostringstream out, err;
    EXPECT_EQ(cmd_codebook_generate({5, 3, 3, 1, ""}, out, err), exit_config);
    EXPECT_EQ(cmd_codebook_generate({5, 3, 20, 1, "/nonexistent/dir/x.json"}, out, err), exit_io);
}

TEST(CmdCodebook, ValidateTable1)
{
    std::ostringstream out, err;
    int code = cmd_codebook_validate("table1", 12, 3, false, out, err);
    EXPECT_EQ(code, builtin_table1().validated() ? exit_ok : exit_invalid);
    EXPECT_TRUE(contains(out.str(), "ok: true"));
    EXPECT_TRUE(contains(out.str(), "junction violations: 0"));
}

TEST(CmdCodebook, ValidateDuplicateRows)
{
    auto path = scratch("dups.json");
    std::ofstream{path} << R"({"n": 2, "k": 1, "length": 6, "provenance": {"kind": "external", "note": "dup"},
        "entries": [{"vertex": 1, "color": 0, "sequence": "ACGTTG"},
                    {"vertex": 2, "color": 0, "sequence": "ACGTTG"}]})";
    std::ostringstream out, err;
    EXPECT_EQ(cmd_codebook_validate(path.string(), 0, 0, false, out, err), exit_invalid);
    EXPECT_TRUE(contains(out.str(), "duplicates: 1"));
    EXPECT_TRUE(contains(out.str(), "ok: false"));

    std::ostringstream jout;
    EXPECT_EQ(cmd_codebook_validate(path.string(), 0, 0, true, jout, err), exit_invalid);
    EXPECT_TRUE(contains(jout.str(), "\"ok\": false"));
}

TEST(CmdCodebook, ValidateMissingFile)
{
    std::ostringstream out, err;
    EXPECT_EQ(cmd_codebook_validate("/nonexistent.json", 1, 1, false, out, err), exit_io);
}
