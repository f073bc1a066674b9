#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "qmom/simulator.hpp"
#include "qmom/system.hpp"

namespace qmom::cli {

/// Flat, sectioned key-value run description. Every CLI flag has a config
/// twin; flags override file values. Unknown sections or keys are rejected.
struct RunConfig {
    // top level
    std::string mode; // finite | asymptotic | simulate | compare | sweep | qnormal-table

    // [system]
    std::string stats = "fermion";
    int N1 = 0;
    int m1 = 0;
    int N2 = 1;
    int m2 = 0;

    // [interaction]
    int k = 0;
    std::string scheme = "uniform"; // uniform | rscheme | table
    double v2 = 1.0;
    double R = 1.0;
    std::string table;              // "i:j:v2[,i:j:v2...]", canonicalized
    std::string y_policy = "default"; // default | asymptotic-u | drop

    // [sweep]
    std::string eval_mode = "finite"; // finite | asymptotic
    std::string grid;                 // "" | default-fermion | default-small-m1 | default-boson

    // [simulate]
    int members = 0;
    std::uint64_t seed = 0;
    bool seed_set = false;
    int threads = 0;
    std::uint64_t dim_cap = 0; // 0: QMOM_DIM_CAP env or built-in default

    // [qnormal]
    double q = -1.0;
    double x_min = -4.0;
    double x_max = 4.0;
    double x_step = 0.05;

    // [output]
    std::string format = "text"; // text | json
    std::string json_out;
    std::string csv_out;
    std::string histogram_out;

    bool operator==(const RunConfig&) const = default;
};

/// Parses the sectioned key=value text; throws ValidationError on unknown
/// sections/keys, duplicates, or malformed values.
RunConfig parse_config_text(const std::string& text);
RunConfig load_config_file(const std::string& path);

/// Canonical emission; parse_config_text(emit_config(c)) == c.
std::string emit_config(const RunConfig& config);

/// Shortest decimal form of x that round-trips to the same double.
std::string format_double(double x);

SpeciesStatistics parse_stats(const std::string& name);
SystemSpec to_system(const RunConfig& config);
InteractionSpec to_interaction(const RunConfig& config);
YTermPolicy to_y_policy(const RunConfig& config);
EnsembleConfig to_ensemble(const RunConfig& config);

/// Effective simulator dimension cap: explicit config value, else the
/// QMOM_DIM_CAP environment variable, else the built-in default.
std::size_t resolve_dim_cap(const RunConfig& config);

} // namespace qmom::cli
