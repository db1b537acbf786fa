#include <helix/report.hpp>

#include <CLI11.hpp>

#include <iostream>

namespace
{
    void add_run_flags(CLI::App & cmd, helix::cli::RunConfig & cfg, std::string & match, std::string & trace)
    {
        cmd.add_option("--graph", cfg.graph, "path, builtin:NAME or random:n,p,seed")->required();
        cmd.add_option("--colors,-k", cfg.k, "number of colors")->check(CLI::PositiveNumber);
        cmd.add_option("--codebook", cfg.codebook, "table1, gen:len,seed or a JSON path");
        cmd.add_option("--match", match, "symbolic or nucleotide")->check(CLI::IsMember({"symbolic", "nucleotide"}));
        cmd.add_option("--order", cfg.order, "natural or a comma-separated vertex permutation");
        cmd.add_option("--trace", trace, "write the run trace as JSON");
        cmd.add_flag("--json", cfg.json, "print JSON instead of the text summary");
        cmd.add_flag("--parallel", cfg.parallel_colors, "run the per-color pipelines on separate threads");
    }
}

int main(int argc, char ** argv)
{
    using namespace helix::cli;

    CLI::App app{"Tube-machine simulator for incremental graph coloring"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string mode = "incremental", match = "symbolic", trace;

    auto * solve = app.add_subcommand("solve", "run a solver and print a summary");
    add_run_flags(*solve, cfg, match, trace);
    solve->add_option("--mode", mode, "incremental, monolithic or both")
        ->check(CLI::IsMember({"incremental", "monolithic", "both"}));

    auto * compare = app.add_subcommand("compare", "check both solvers against the brute-force oracle");
    add_run_flags(*compare, cfg, match, trace);

    auto * codebook = app.add_subcommand("codebook", "generate or validate codebooks");
    codebook->require_subcommand(1);

    GenerateParams gen;
    auto * generate = codebook->add_subcommand("generate", "write a seeded junction-safe codebook as JSON");
    generate->add_option("--vertices,-n", gen.n, "vertex count")->check(CLI::NonNegativeNumber);
    generate->add_option("--colors,-k", gen.k, "color count")->check(CLI::PositiveNumber);
    generate->add_option("--length", gen.length, "bases per codeword");
    generate->add_option("--seed", gen.seed, "generator seed");
    generate->add_option("--out,-o", gen.out_path, "output path (stdout if omitted)");

    std::string source = "table1";
    helix::Vertex val_n = 12;
    helix::Color val_k = 3;
    bool val_json = false;
    auto * validate = codebook->add_subcommand("validate", "print the validation report");
    validate->add_option("source", source, "table1, gen:len,seed or a JSON path");
    validate->add_option("--vertices,-n", val_n, "vertex count for gen:");
    validate->add_option("--colors,-k", val_k, "color count for gen:");
    validate->add_flag("--json", val_json, "print the report as JSON");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        auto code = app.exit(e);
        return code == 0 ? exit_ok : exit_config;
    }

    if (*generate)
        return cmd_codebook_generate(gen, std::cout, std::cerr);
    if (*validate)
        return cmd_codebook_validate(source, val_n, val_k, val_json, std::cout, std::cerr);

    try {
        cfg.mode = parse_mode_choice(mode);
        cfg.match = helix::match_mode_from_string(match);
        cfg.budget = budget_from_env();
    }
    catch (const helix::Error & e) {
        std::cerr << "config error: " << e.what() << "\n";
        return exit_config;
    }
    if (! trace.empty())
        cfg.trace_path = trace;

    return *solve ? cmd_solve(cfg, std::cout, std::cerr) : cmd_compare(cfg, std::cout, std::cerr);
}
