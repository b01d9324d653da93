#include <iostream>
#include <CLI11.hpp>
#include "arrtop/cli.hpp"

int main(int argc, char** argv)
{
    arrtop::cli::Options opts;
    std::size_t m = 0, max_dim = 0;
    std::string base;
    bool no_timing = false;

    CLI::App app{"Exact computations on real hyperplane arrangements, their chambers and IIA aggregation maps."};
    app.add_option("command", opts.command, "Subcommand")
        ->required()
        ->check(CLI::IsMember(arrtop::cli::subcommands()));
    app.add_option("input", opts.input, "Arrangement JSON file, or braid-N / boolean-N")->required();
    auto* m_opt = app.add_option("--m", m, "Number of voters");
    app.add_option("--complex", opts.complex, "Complex for complex/homology")->check(CLI::IsMember({"M", "B"}));
    auto* dim_opt = app.add_option("--max-dim", max_dim, "Highest homology degree");
    auto* base_opt = app.add_option("--base-chamber", base, "Base chamber as a sign string");
    app.add_option("--max-candidates", opts.max_candidates, "Budget for candidate profile checks");
    app.add_option("--max-simplices", opts.max_simplices, "Budget for simplices");
    app.add_flag("--no-timing", no_timing, "Omit timing from the report");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp& e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError& e)
    {
        app.exit(e);
        return arrtop::cli::kError;
    }
    if (*m_opt)
        opts.m = m;
    if (*dim_opt)
        opts.max_dim = max_dim;
    if (*base_opt)
        opts.base_chamber = base;
    opts.timing = !no_timing;

    const auto report = arrtop::cli::run(opts);
    std::cout << report.json.dump(2) << '\n';
    return report.exit_code;
}
