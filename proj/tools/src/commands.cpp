#include "commands.hpp"

#include <fstream>
#include <iostream>
#include <vector>

#include "qmom/desk_grids.hpp"
#include "qmom/moments_asymptotic.hpp"
#include "qmom/qnormal.hpp"
#include "render.hpp"

namespace qmom::cli {

namespace {

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw ValidationError("failed while writing '" + path + "'");
}

void emit(const std::string& content, const std::string& path) {
    if (path.empty())
        std::cout << content;
    else
        write_file(path, content);
}

MomentReport evaluate(const SystemSpec& sys, const InteractionSpec& inter,
                      YTermPolicy policy, EvalMode mode) {
    return mode == EvalMode::Finite ? moment_report(sys, inter, policy)
                                    : asymptotic_report(sys, inter);
}

EvalMode parse_eval_mode(const std::string& name) {
    if (name == "finite") return EvalMode::Finite;
    if (name == "asymptotic") return EvalMode::Asymptotic;
    throw ValidationError("eval mode must be 'finite' or 'asymptotic', got '" + name + "'");
}

} // namespace

int cmd_moments(const RunConfig& config) {
    const SystemSpec sys = to_system(config);
    const InteractionSpec inter = to_interaction(config);
    const YTermPolicy policy = to_y_policy(config);
    const EvalMode mode = parse_eval_mode(config.mode);
    const MomentReport report = evaluate(sys, inter, policy, mode);
    if (config.format == "json")
        emit(render_report_json(report), config.json_out);
    else if (config.format == "text") {
        std::cout << render_report_text(report);
        if (!config.json_out.empty()) write_file(config.json_out, render_report_json(report));
    } else
        throw ValidationError("format must be 'text' or 'json', got '" + config.format + "'");
    return kExitOk;
}

int cmd_sweep(const RunConfig& config) {
    const EvalMode mode = parse_eval_mode(config.eval_mode);
    const YTermPolicy policy = to_y_policy(config);

    std::vector<SystemSpec> systems;
    if (config.grid.empty()) {
        systems.push_back(to_system(config));
    } else {
        const std::vector<DeskGridEntry>* grid = nullptr;
        SpeciesStatistics stats = SpeciesStatistics::Fermion;
        if (config.grid == "default-fermion") grid = &default_fermion_grids();
        else if (config.grid == "default-small-m1") grid = &default_small_m1_grids();
        else if (config.grid == "default-boson") {
            grid = &default_boson_grids();
            stats = SpeciesStatistics::Boson;
        } else
            throw ValidationError("grid must be default-fermion, default-small-m1 or "
                                  "default-boson, got '" + config.grid + "'");
        for (const auto& entry : *grid)
            systems.push_back({stats, entry.N1, entry.m1, entry.N2, entry.m2});
    }

    std::vector<SweepRow> rows;
    std::vector<std::string> failures;
    for (const auto& sys : systems) {
        const int kmax = std::min(sys.m1, sys.m2);
        if (kmax < 1)
            throw ValidationError("sweep: need min(m1,m2) >= 1");
        for (int k = 1; k <= kmax; ++k) {
            InteractionSpec inter = to_interaction(config);
            inter.k = k;
            try {
                rows.push_back(to_sweep_row(evaluate(sys, inter, policy, mode)));
            } catch (const std::exception& e) {
                failures.push_back("k=" + std::to_string(k) + ": " + e.what());
            }
        }
    }
    for (const auto& f : failures) std::cerr << "warning: sweep row skipped: " << f << "\n";
    if (rows.empty() && !failures.empty())
        throw NumericalError("sweep: every row failed; first error: " + failures.front());
    emit(render_sweep_csv(rows), config.csv_out);
    return kExitOk;
}

int cmd_qnormal_table(const RunConfig& config) {
    if (config.q < 0.0 || config.q > 1.0)
        throw ValidationError("qnormal-table: q must be given in [0,1]");
    if (!(config.x_step > 0.0) || config.x_max < config.x_min)
        throw ValidationError("qnormal-table: need x_step > 0 and x_max >= x_min");
    const QNormalDensity density(config.q);
    const SupportInterval sup = support(config.q);
    std::vector<QNormalTableRow> rows;
    const int steps = static_cast<int>((config.x_max - config.x_min) / config.x_step + 0.5);
    for (int s = 0; s <= steps; ++s) {
        const double x = config.x_min + s * config.x_step;
        if (sup.bounded && (x < sup.lower || x > sup.upper)) continue; // support-clipped
        rows.push_back({x, density(x), q_hermite(1, x, config.q), q_hermite(2, x, config.q),
                        q_hermite(3, x, config.q), q_hermite(4, x, config.q)});
    }
    emit(render_qnormal_csv(rows), config.csv_out);
    return kExitOk;
}

int cmd_simulate(const RunConfig& config) {
    const EnsembleConfig ens = to_ensemble(config);
    const EmpiricalMoments moments =
        ensemble_moments(ens, config.threads, resolve_dim_cap(config));
    emit(render_empirical_json(ens, moments), config.json_out);
    if (!config.histogram_out.empty())
        write_file(config.histogram_out, render_histogram_csv(moments.histogram));
    return kExitOk;
}

int cmd_compare(const RunConfig& config) {
    const EnsembleConfig ens = to_ensemble(config);
    const ComparisonReport report =
        compare_with_theory(ens, to_y_policy(config), config.threads,
                            resolve_dim_cap(config));
    emit(render_comparison_json(report), config.json_out);
    if (!config.histogram_out.empty())
        write_file(config.histogram_out,
                   render_histogram_csv(report.empirical.histogram));
    return kExitOk;
}

int run(const RunConfig& config) {
    try {
        if (config.mode == "finite" || config.mode == "asymptotic") return cmd_moments(config);
        if (config.mode == "sweep") return cmd_sweep(config);
        if (config.mode == "qnormal-table") return cmd_qnormal_table(config);
        if (config.mode == "simulate") return cmd_simulate(config);
        if (config.mode == "compare") return cmd_compare(config);
        throw ValidationError(config.mode.empty()
                                  ? "no mode given (subcommand or 'mode =' in the config)"
                                  : "unknown mode '" + config.mode + "'");
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const DegenerateEnsembleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const NumericalError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const ResourceCapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResourceCap;
    }
}

} // namespace qmom::cli
