// movegraph: build, decompose and verify move graphs from the command line.

#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "movegraph/cli.hpp"

namespace {

using movegraph::cli::command;
using movegraph::cli::format;
using movegraph::cli::run_config;

void add_matrix_options(CLI::App* sub, run_config& config) {
    sub->add_option("--matrix", config.matrix_spec, "row-major entries, e.g. \"1,-1;1,1\"");
    sub->add_option("--preset", config.preset, "subadd | perm3");
    sub->add_option("--n", config.n, "modulus (>= 2)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Move graphs on Z_n^m: construction, cycle decomposition, structure checks"};
    app.require_subcommand(1);
    // Global options may also follow the subcommand name.
    app.fallthrough();

    run_config config;
    const std::map<std::string, format> formats = {
        {"json", format::json}, {"dot", format::dot}, {"csv", format::csv}, {"text", format::text}};
    app.add_option("--format", config.output_format, "json | dot | csv | text")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
        ->option_text("FORMAT");
    app.add_option("--output,-o", config.output_path, "write to this file instead of stdout");
    app.add_option("--budget", config.size_budget, "maximum vertex count (MOVEGRAPH_BUDGET overrides)");

    auto* build = app.add_subcommand("build", "emit the successor map of a move graph");
    add_matrix_options(build, config);
    auto* analyze = app.add_subcommand("analyze", "cycle spectrum and component count");
    add_matrix_options(analyze, config);

    auto* levels = app.add_subcommand("levels", "level partition and tree report of the sub-add graph mod 2^r");
    levels->add_option("--r", config.r, "exponent r (n = 2^r)");

    auto* predict = app.add_subcommand("predict", "predicted cycle spectrum of the sub-add graph mod an odd prime");
    predict->add_option("--p", config.p, "odd prime");

    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("--suite", config.suites, "suite name(s) or all")->delimiter(',');
    verify->add_option("--n-max", config.n_max, "largest modulus for general suites");
    verify->add_option("--p-max", config.p_max, "largest prime for the predictor suite");
    verify->add_option("--r-max", config.r_max, "largest r for the 2^r suites");

    auto* survey = app.add_subcommand("survey", "prediction table for all odd primes up to p-max");
    survey->add_option("--p-max", config.p_max, "largest prime");

    auto* oeis = app.add_subcommand("oeis", "weak component counts of the sub-add graph for n = 1..n-max");
    oeis->add_option("--n-max", config.n_max, "number of terms");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return movegraph::cli::exit_code::usage;
    }

    const std::pair<CLI::App*, command> table[] = {
        {build, command::build},   {analyze, command::analyze}, {levels, command::levels}, {predict, command::predict},
        {verify, command::verify}, {survey, command::survey},   {oeis, command::oeis},
    };
    for (const auto& [sub, cmd] : table) {
        if (sub->parsed()) config.cmd = cmd;
    }
    return movegraph::cli::run(config, std::cout, std::cerr);
}
