#include <CLI11.hpp>
#include <functional>
#include <iostream>
#include <vector>

#include "commands.hpp"
#include "run_config.hpp"

namespace {

using qmom::cli::RunConfig;

struct OptionBinder {
    RunConfig& cli;
    std::vector<std::pair<CLI::Option*, std::function<void(RunConfig&)>>>& appliers;

    template <typename T>
    void bind(CLI::Option* opt, T RunConfig::*field) {
        appliers.emplace_back(opt, [this, field](RunConfig& dst) { dst.*field = cli.*field; });
    }

    void system_options(CLI::App* sub) {
        bind(sub->add_option("--stats", cli.stats, "fermion | boson"), &RunConfig::stats);
        bind(sub->add_option("--N1", cli.N1, "sp states, species 1"), &RunConfig::N1);
        bind(sub->add_option("--m1", cli.m1, "particles, species 1"), &RunConfig::m1);
        bind(sub->add_option("--N2", cli.N2, "sp states, species 2"), &RunConfig::N2);
        bind(sub->add_option("--m2", cli.m2, "particles, species 2"), &RunConfig::m2);
    }

    void interaction_options(CLI::App* sub) {
        bind(sub->add_option("--k", cli.k, "interaction body rank"), &RunConfig::k);
        bind(sub->add_option("--scheme", cli.scheme, "uniform | rscheme | table"),
             &RunConfig::scheme);
        bind(sub->add_option("--v2", cli.v2, "base variance v^2"), &RunConfig::v2);
        bind(sub->add_option("--R", cli.R, "rscheme ratio for mixed channels"),
             &RunConfig::R);
        bind(sub->add_option("--table", cli.table, "explicit variances i:j:v2[,...]"),
             &RunConfig::table);
        bind(sub->add_option("--y-policy", cli.y_policy,
                             "default | asymptotic-u | drop"),
             &RunConfig::y_policy);
    }

    void simulate_options(CLI::App* sub) {
        bind(sub->add_option("--members", cli.members, "ensemble members (>= 2)"),
             &RunConfig::members);
        auto* seed = sub->add_option("--seed", cli.seed, "master seed (required)");
        appliers.emplace_back(seed, [this](RunConfig& dst) {
            dst.seed = cli.seed;
            dst.seed_set = true;
        });
        bind(sub->add_option("--threads", cli.threads, "worker threads (0 = hardware)"),
             &RunConfig::threads);
        bind(sub->add_option("--dim-cap", cli.dim_cap,
                             "many-body dimension cap (0 = QMOM_DIM_CAP or default)"),
             &RunConfig::dim_cap);
    }

    void output_options(CLI::App* sub, bool with_format) {
        if (with_format)
            bind(sub->add_option("--format", cli.format, "text | json"), &RunConfig::format);
        bind(sub->add_option("--json-out", cli.json_out, "write JSON report here"),
             &RunConfig::json_out);
        bind(sub->add_option("--csv-out", cli.csv_out, "write CSV table here"),
             &RunConfig::csv_out);
        bind(sub->add_option("--histogram-out", cli.histogram_out,
                             "write histogram CSV here"),
             &RunConfig::histogram_out);
    }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"moments of two-species k-body embedded Gaussian unitary ensembles"};
    app.require_subcommand(0, 1);

    std::string config_path;
    app.add_option("--config", config_path, "sectioned key=value run configuration");

    RunConfig cli;
    std::vector<std::pair<CLI::Option*, std::function<void(RunConfig&)>>> appliers;
    OptionBinder binder{cli, appliers};

    auto* moments = app.add_subcommand("moments", "exact or asymptotic moment report");
    binder.bind(moments->add_option("--mode", cli.mode, "finite | asymptotic")
                    ->check(CLI::IsMember({"finite", "asymptotic"})),
                &RunConfig::mode);
    binder.system_options(moments);
    binder.interaction_options(moments);
    binder.output_options(moments, true);

    auto* sweep = app.add_subcommand("sweep", "k sweep, one CSV row per rank");
    binder.system_options(sweep);
    binder.interaction_options(sweep);
    binder.bind(sweep->add_option("--eval-mode", cli.eval_mode, "finite | asymptotic"),
                &RunConfig::eval_mode);
    binder.bind(sweep->add_option("--grid", cli.grid,
                                  "default-fermion | default-small-m1 | default-boson"),
                &RunConfig::grid);
    binder.output_options(sweep, false);

    auto* qtable = app.add_subcommand("qnormal-table", "q-normal density and q-Hermite table");
    binder.bind(qtable->add_option("--q", cli.q, "q parameter in [0,1]"), &RunConfig::q);
    binder.bind(qtable->add_option("--x-min", cli.x_min, "grid start"), &RunConfig::x_min);
    binder.bind(qtable->add_option("--x-max", cli.x_max, "grid end"), &RunConfig::x_max);
    binder.bind(qtable->add_option("--x-step", cli.x_step, "grid step"), &RunConfig::x_step);
    binder.output_options(qtable, false);

    auto* simulate = app.add_subcommand("simulate", "Monte Carlo ensemble moments");
    binder.system_options(simulate);
    binder.interaction_options(simulate);
    binder.simulate_options(simulate);
    binder.output_options(simulate, false);

    auto* compare = app.add_subcommand("compare", "theory vs Monte Carlo comparison");
    binder.system_options(compare);
    binder.interaction_options(compare);
    binder.simulate_options(compare);
    binder.output_options(compare, false);

    for (auto* sub : {moments, sweep, qtable, simulate, compare})
        sub->fallthrough(); // lets --config appear after the subcommand

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return qmom::cli::kExitValidation;
    }

    try {
        RunConfig effective;
        if (!config_path.empty()) effective = qmom::cli::load_config_file(config_path);
        for (auto& [opt, apply] : appliers)
            if (opt->count() > 0) apply(effective);

        if (moments->parsed()) {
            if (effective.mode != "finite" && effective.mode != "asymptotic")
                effective.mode = "finite";
        } else if (sweep->parsed())
            effective.mode = "sweep";
        else if (qtable->parsed())
            effective.mode = "qnormal-table";
        else if (simulate->parsed())
            effective.mode = "simulate";
        else if (compare->parsed())
            effective.mode = "compare";

        return qmom::cli::run(effective);
    } catch (const qmom::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return qmom::cli::kExitValidation;
    }
}
