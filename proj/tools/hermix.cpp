#include <CLI11.hpp>

#include <cstdio>
#include <iostream>

#include "hermix/runner.hpp"

int main(int argc, char** argv) {
    CLI::App app{"hermix: heterogeneous mixture fitting via Hermite moment "
                 "matching and polynomial ideals"};
    app.require_subcommand(1);

    hermix::RunConfig config;

    auto* fit = app.add_subcommand("fit", "Fit a mixture to sample data");
    fit->add_option("--input", config.input_path, "sample file (one value per line)")
        ->required();
    fit->add_option("--families", config.families,
                    "component grammar, e.g. \"gaussian:mu=0,sigma2=1;exponential:theta=1\"")
        ->required();
    fit->add_option("--moments", config.moments,
                    "number of matched moments (default: unknown count)");
    fit->add_option("--seed", config.seed, "solver seed");
    fit->add_option("--output", config.output_path, "write the JSON report here");
    fit->add_option("--emit-cdf", config.emit_cdf_path,
                    "write x,empirical_cdf,fitted_cdf CSV here");
    fit->add_option("--real-tolerance", config.real_tolerance,
                    "imaginary-part tolerance for real solutions");

    auto* eda = app.add_subcommand("eda", "Scan family subsets for the best mix");
    eda->add_option("--input", config.input_path, "sample file")->required();
    eda->add_option("--pool", config.families, "candidate family pool grammar")
        ->required();
    eda->add_option("--subset-size", config.subset_size, "components per fit")
        ->required();
    eda->add_option("--moments", config.moments, "number of matched moments");
    eda->add_option("--seed", config.seed, "solver seed");
    eda->add_option("--output", config.output_path, "write the JSON report here");

    auto* gen = app.add_subcommand("gen", "Generate a synthetic mixture sample");
    gen->add_option("--families", config.families, "component grammar (all fixed)")
        ->required();
    gen->add_option("--weights", config.weights_text, "comma-separated weights")
        ->required();
    gen->add_option("--n", config.n, "number of draws")->required();
    gen->add_option("--seed", config.seed, "generator seed");
    gen->add_option("--output", config.output_path, "sample file to write")
        ->required();

    auto* roots = app.add_subcommand("roots", "Solve a polynomial system");
    roots->add_option("--poly", config.polys, "polynomial (repeatable)")->required();
    roots->add_option("--seed", config.seed, "separating-form seed");
    roots->add_option("--real-tolerance", config.real_tolerance,
                      "imaginary-part tolerance for real solutions");
    roots->add_option("--output", config.output_path, "write the JSON report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    hermix::RunResult result;
    if (app.got_subcommand(fit)) result = hermix::run_fit(config);
    else if (app.got_subcommand(eda)) result = hermix::run_eda(config);
    else if (app.got_subcommand(gen)) result = hermix::run_gen(config);
    else result = hermix::run_roots(config);

    if (!result.output.empty()) std::fputs(result.output.c_str(), stdout);
    return result.exit_code;
}
