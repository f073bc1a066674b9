#include "run_config.hpp"

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "qmom/errors.hpp"

namespace qmom::cli {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

int parse_int(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ValidationError("config: '" + key + "' expects an integer, got '" + value + "'");
    }
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        std::uint64_t v = std::stoull(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ValidationError("config: '" + key + "' expects an unsigned integer, got '" +
                              value + "'");
    }
}

double parse_real(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        double v = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ValidationError("config: '" + key + "' expects a number, got '" + value + "'");
    }
}

std::map<std::pair<int, int>, double> parse_table_entries(const std::string& text) {
    std::map<std::pair<int, int>, double> table;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        std::size_t c1 = item.find(':');
        std::size_t c2 = item.find(':', c1 == std::string::npos ? c1 : c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos)
            throw ValidationError("config: table entry '" + item + "' is not i:j:v2");
        int i = parse_int("table.i", trim(item.substr(0, c1)));
        int j = parse_int("table.j", trim(item.substr(c1 + 1, c2 - c1 - 1)));
        double v = parse_real("table.v2", trim(item.substr(c2 + 1)));
        if (!table.emplace(std::make_pair(i, j), v).second)
            throw ValidationError("config: duplicate table entry for (" + std::to_string(i) +
                                  "," + std::to_string(j) + ")");
    }
    return table;
}

std::string canonical_table(const std::string& text) {
    std::string out;
    for (const auto& [ij, v] : parse_table_entries(text)) {
        if (!out.empty()) out += ",";
        out += std::to_string(ij.first) + ":" + std::to_string(ij.second) + ":" +
               format_double(v);
    }
    return out;
}

} // namespace

std::string format_double(double x) {
    char buf[64];
    for (int precision = 1; precision <= 17; ++precision) {
        std::snprintf(buf, sizeof(buf), "%.*g", precision, x);
        if (std::strtod(buf, nullptr) == x) break;
    }
    return buf;
}

RunConfig parse_config_text(const std::string& text) {
    RunConfig cfg;
    std::set<std::string> seen;
    std::string section;
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = raw;
        std::size_t hash = line.find_first_of("#;");
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ValidationError("config line " + std::to_string(line_no) +
                                      ": malformed section header");
            section = trim(line.substr(1, line.size() - 2));
            static const std::set<std::string> known = {"system", "interaction", "sweep",
                                                        "simulate", "qnormal", "output"};
            if (!known.count(section))
                throw ValidationError("config: unknown section [" + section + "]");
            continue;
        }
        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ValidationError("config line " + std::to_string(line_no) +
                                  ": expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        std::string path = section.empty() ? key : section + "." + key;
        if (!seen.insert(path).second)
            throw ValidationError("config: duplicate key '" + path + "'");

        if (path == "mode") cfg.mode = value;
        else if (path == "system.stats") cfg.stats = value;
        else if (path == "system.N1") cfg.N1 = parse_int(path, value);
        else if (path == "system.m1") cfg.m1 = parse_int(path, value);
        else if (path == "system.N2") cfg.N2 = parse_int(path, value);
        else if (path == "system.m2") cfg.m2 = parse_int(path, value);
        else if (path == "interaction.k") cfg.k = parse_int(path, value);
        else if (path == "interaction.scheme") cfg.scheme = value;
        else if (path == "interaction.v2") cfg.v2 = parse_real(path, value);
        else if (path == "interaction.R") cfg.R = parse_real(path, value);
        else if (path == "interaction.table") cfg.table = canonical_table(value);
        else if (path == "interaction.y_policy") cfg.y_policy = value;
        else if (path == "sweep.eval_mode") cfg.eval_mode = value;
        else if (path == "sweep.grid") cfg.grid = value;
        else if (path == "simulate.members") cfg.members = parse_int(path, value);
        else if (path == "simulate.seed") { cfg.seed = parse_u64(path, value); cfg.seed_set = true; }
        else if (path == "simulate.threads") cfg.threads = parse_int(path, value);
        else if (path == "simulate.dim_cap") cfg.dim_cap = parse_u64(path, value);
        else if (path == "qnormal.q") cfg.q = parse_real(path, value);
        else if (path == "qnormal.x_min") cfg.x_min = parse_real(path, value);
        else if (path == "qnormal.x_max") cfg.x_max = parse_real(path, value);
        else if (path == "qnormal.x_step") cfg.x_step = parse_real(path, value);
        else if (path == "output.format") cfg.format = value;
        else if (path == "output.json_out") cfg.json_out = value;
        else if (path == "output.csv_out") cfg.csv_out = value;
        else if (path == "output.histogram_out") cfg.histogram_out = value;
        else throw ValidationError("config: unknown key '" + path + "'");
    }
    return cfg;
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("config: cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

std::string emit_config(const RunConfig& c) {
    std::ostringstream out;
    out << "mode = " << c.mode << "\n\n";
    out << "[system]\n";
    out << "stats = " << c.stats << "\n";
    out << "N1 = " << c.N1 << "\n";
    out << "m1 = " << c.m1 << "\n";
    out << "N2 = " << c.N2 << "\n";
    out << "m2 = " << c.m2 << "\n\n";
    out << "[interaction]\n";
    out << "k = " << c.k << "\n";
    out << "scheme = " << c.scheme << "\n";
    out << "v2 = " << format_double(c.v2) << "\n";
    out << "R = " << format_double(c.R) << "\n";
    if (!c.table.empty()) out << "table = " << c.table << "\n";
    out << "y_policy = " << c.y_policy << "\n\n";
    out << "[sweep]\n";
    out << "eval_mode = " << c.eval_mode << "\n";
    if (!c.grid.empty()) out << "grid = " << c.grid << "\n";
    out << "\n[simulate]\n";
    out << "members = " << c.members << "\n";
    if (c.seed_set) out << "seed = " << c.seed << "\n";
    out << "threads = " << c.threads << "\n";
    if (c.dim_cap != 0) out << "dim_cap = " << c.dim_cap << "\n";
    out << "\n[qnormal]\n";
    out << "q = " << format_double(c.q) << "\n";
    out << "x_min = " << format_double(c.x_min) << "\n";
    out << "x_max = " << format_double(c.x_max) << "\n";
    out << "x_step = " << format_double(c.x_step) << "\n\n";
    out << "[output]\n";
    out << "format = " << c.format << "\n";
    if (!c.json_out.empty()) out << "json_out = " << c.json_out << "\n";
    if (!c.csv_out.empty()) out << "csv_out = " << c.csv_out << "\n";
    if (!c.histogram_out.empty()) out << "histogram_out = " << c.histogram_out << "\n";
    return out.str();
}

SpeciesStatistics parse_stats(const std::string& name) {
    if (name == "fermion") return SpeciesStatistics::Fermion;
    if (name == "boson") return SpeciesStatistics::Boson;
    throw ValidationError("stats must be 'fermion' or 'boson', got '" + name + "'");
}

SystemSpec to_system(const RunConfig& c) {
    SystemSpec sys;
    sys.stats = parse_stats(c.stats);
    sys.N1 = c.N1;
    sys.m1 = c.m1;
    sys.N2 = c.N2;
    sys.m2 = c.m2;
    validate(sys);
    return sys;
}

InteractionSpec to_interaction(const RunConfig& c) {
    InteractionSpec inter;
    inter.k = c.k;
    inter.v2 = c.v2;
    inter.R = c.R;
    if (c.scheme == "uniform") inter.scheme = VarianceSchemeKind::Uniform;
    else if (c.scheme == "rscheme") inter.scheme = VarianceSchemeKind::RScheme;
    else if (c.scheme == "table") inter.scheme = VarianceSchemeKind::Table;
    else throw ValidationError("scheme must be uniform, rscheme or table, got '" +
                               c.scheme + "'");
    if (inter.scheme == VarianceSchemeKind::Table) {
        if (c.table.empty())
            throw ValidationError("scheme=table requires a table of (i,j) variances");
        inter.table = parse_table_entries(c.table);
    }
    return inter;
}

YTermPolicy to_y_policy(const RunConfig& c) {
    if (c.y_policy == "default") return default_y_policy(parse_stats(c.stats));
    if (c.y_policy == "asymptotic-u") return YTermPolicy::AsymptoticU;
    if (c.y_policy == "drop") return YTermPolicy::Drop;
    throw ValidationError("y_policy must be default, asymptotic-u or drop, got '" +
                          c.y_policy + "'");
}

EnsembleConfig to_ensemble(const RunConfig& c) {
    EnsembleConfig ens;
    ens.system = to_system(c);
    ens.interaction = to_interaction(c);
    if (c.members < 2) throw ValidationError("simulate: members must be >= 2");
    if (!c.seed_set) throw ValidationError("simulate: seed is required for reproducibility");
    ens.members = c.members;
    ens.master_seed = c.seed;
    return ens;
}

std::size_t resolve_dim_cap(const RunConfig& c) {
    if (c.dim_cap != 0) return static_cast<std::size_t>(c.dim_cap);
    if (const char* env = std::getenv("QMOM_DIM_CAP")) {
        try {
            return static_cast<std::size_t>(parse_u64("QMOM_DIM_CAP", env));
        } catch (const ValidationError&) {
            throw ValidationError("QMOM_DIM_CAP must be an unsigned integer, got '" +
                                  std::string(env) + "'");
        }
    }
    return kDefaultDimensionCap;
}

} // namespace qmom::cli
