#include "render.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "run_config.hpp"

namespace qmom::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string csv_num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

ordered_json system_json(const SystemSpec& sys) {
    return ordered_json{{"stats", to_string(sys.stats)},
                        {"N1", sys.N1},
                        {"m1", sys.m1},
                        {"N2", sys.N2},
                        {"m2", sys.m2}};
}

ordered_json interaction_json(const InteractionSpec& inter) {
    ordered_json j{{"k", inter.k}, {"scheme", to_string(inter.scheme)}};
    switch (inter.scheme) {
        case VarianceSchemeKind::Uniform:
            j["v2"] = inter.v2;
            break;
        case VarianceSchemeKind::RScheme:
            j["v2"] = inter.v2;
            j["R"] = inter.R;
            break;
        case VarianceSchemeKind::Table: {
            ordered_json entries = ordered_json::array();
            for (const auto& [ij, v] : inter.table)
                entries.push_back({{"i", ij.first}, {"j", ij.second}, {"v2", v}});
            j["table"] = entries;
            break;
        }
    }
    return j;
}

ordered_json breakdown_json(const TermBreakdown& breakdown) {
    ordered_json j;
    j["mu2_terms"] = ordered_json::array();
    for (const auto& t : breakdown.mu2_terms)
        j["mu2_terms"].push_back({{"i", t.i}, {"j", t.j}, {"value", t.value}});
    j["abab_terms"] = ordered_json::array();
    for (const auto& t : breakdown.abab_terms)
        j["abab_terms"].push_back(
            {{"i", t.i}, {"j", t.j}, {"p", t.p}, {"q", t.q}, {"value", t.value}});
    j["x_terms"] = ordered_json::array();
    for (const auto& t : breakdown.x_terms)
        j["x_terms"].push_back({{"i", t.i},
                                {"j", t.j},
                                {"p", t.p},
                                {"q", t.q},
                                {"r", t.r},
                                {"s", t.s},
                                {"value", t.value}});
    j["y_terms"] = ordered_json::array();
    for (const auto& t : breakdown.y_terms)
        j["y_terms"].push_back({{"i", t.i},
                                {"j", t.j},
                                {"p", t.p},
                                {"q", t.q},
                                {"r", t.r},
                                {"s", t.s},
                                {"value", t.value}});
    return j;
}

ordered_json report_json(const MomentReport& r) {
    ordered_json j;
    j["mode"] = to_string(r.mode);
    j["system"] = system_json(r.system);
    j["interaction"] = interaction_json(r.interaction);
    j["y_policy"] = to_string(r.y_policy);
    j["mu2"] = r.mu2;
    j["q"] = r.q;
    j["mu4"] = r.mu4;
    j["mu6_formula"] = r.mu6_formula;
    j["mu6_qnormal"] = r.mu6_qnormal;
    j["term_breakdown"] = breakdown_json(r.breakdown);
    return j;
}

ordered_json empirical_json(const EmpiricalMoments& e) {
    ordered_json j;
    j["members"] = e.members;
    j["failed_members"] = e.failed_members;
    j["mu2_hat"] = e.mu2_hat;
    j["mu2_stderr"] = e.mu2_stderr;
    j["mu4_hat"] = e.mu4_hat;
    j["mu4_stderr"] = e.mu4_stderr;
    j["mu6_hat"] = e.mu6_hat;
    j["mu6_stderr"] = e.mu6_stderr;
    j["q_hat"] = e.q_hat;
    j["q_stderr"] = e.q_stderr;
    j["mu6_reduced_hat"] = e.mu6_reduced_hat;
    j["mu6_reduced_stderr"] = e.mu6_reduced_stderr;
    j["odd_residuals"] = ordered_json{{"mu1_hat", e.mu1_hat},
                                      {"mu1_stderr", e.mu1_stderr},
                                      {"mu3_hat", e.mu3_hat},
                                      {"mu3_stderr", e.mu3_stderr},
                                      {"mu5_hat", e.mu5_hat},
                                      {"mu5_stderr", e.mu5_stderr}};
    j["histogram"] = ordered_json{{"bin_edges", e.histogram.edges},
                                  {"mass", e.histogram.mass}};
    return j;
}

} // namespace

SweepRow to_sweep_row(const MomentReport& r) {
    SweepRow row;
    row.stats = r.system.stats;
    row.N1 = r.system.N1;
    row.m1 = r.system.m1;
    row.N2 = r.system.N2;
    row.m2 = r.system.m2;
    row.k = r.interaction.k;
    row.mode = r.mode;
    row.scheme = r.interaction.scheme;
    row.R = r.interaction.scheme == VarianceSchemeKind::RScheme ? r.interaction.R : 1.0;
    row.mu2 = r.mu2;
    row.q = r.q;
    row.mu4 = r.mu4;
    row.mu6_formula = r.mu6_formula;
    row.mu6_qnormal = r.mu6_qnormal;
    row.rel_diff = std::abs(r.mu6_formula - r.mu6_qnormal) / r.mu6_qnormal;
    return row;
}

std::string render_sweep_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream out;
    out << kSweepCsvHeader << "\n";
    for (const auto& r : rows) {
        out << to_string(r.stats) << ',' << r.N1 << ',' << r.m1 << ',' << r.N2 << ','
            << r.m2 << ',' << r.k << ',' << to_string(r.mode) << ',' << to_string(r.scheme)
            << ',' << csv_num(r.R) << ',' << csv_num(r.mu2) << ',' << csv_num(r.q) << ','
            << csv_num(r.mu4) << ',' << csv_num(r.mu6_formula) << ','
            << csv_num(r.mu6_qnormal) << ',' << csv_num(r.rel_diff) << "\n";
    }
    return out.str();
}

std::string render_histogram_csv(const Histogram& histogram) {
    std::ostringstream out;
    out << "bin_lo,bin_hi,mass\n";
    for (std::size_t b = 0; b < histogram.mass.size(); ++b)
        out << csv_num(histogram.edges[b]) << ',' << csv_num(histogram.edges[b + 1]) << ','
            << csv_num(histogram.mass[b]) << "\n";
    return out.str();
}

std::string render_qnormal_csv(const std::vector<QNormalTableRow>& rows) {
    std::ostringstream out;
    out << "x,pdf,He1,He2,He3,He4\n";
    for (const auto& r : rows)
        out << csv_num(r.x) << ',' << csv_num(r.pdf) << ',' << csv_num(r.he1) << ','
            << csv_num(r.he2) << ',' << csv_num(r.he3) << ',' << csv_num(r.he4) << "\n";
    return out.str();
}

std::string render_report_json(const MomentReport& report) {
    return report_json(report).dump(2) + "\n";
}

std::string render_report_text(const MomentReport& r) {
    std::ostringstream out;
    out << "two-species " << to_string(r.system.stats) << " ensemble, "
        << to_string(r.mode) << " evaluation\n";
    out << "  system:       N1=" << r.system.N1 << " m1=" << r.system.m1
        << "  N2=" << r.system.N2 << " m2=" << r.system.m2 << "\n";
    out << "  interaction:  k=" << r.interaction.k << " scheme="
        << to_string(r.interaction.scheme);
    if (r.interaction.scheme == VarianceSchemeKind::RScheme)
        out << " R=" << format_double(r.interaction.R);
    out << " (y_policy=" << to_string(r.y_policy) << ")\n";
    out << "  mu2         = " << format_double(r.mu2) << "\n";
    out << "  q           = " << format_double(r.q) << "\n";
    out << "  mu4         = " << format_double(r.mu4) << "\n";
    out << "  mu6_formula = " << format_double(r.mu6_formula) << "\n";
    out << "  mu6_qnormal = " << format_double(r.mu6_qnormal) << "\n";
    out << "  rel_diff    = "
        << format_double(std::abs(r.mu6_formula - r.mu6_qnormal) / r.mu6_qnormal) << "\n";
    return out.str();
}

std::string render_empirical_json(const EnsembleConfig& config,
                                  const EmpiricalMoments& empirical) {
    ordered_json j;
    j["system"] = system_json(config.system);
    j["interaction"] = interaction_json(config.interaction);
    j["members"] = config.members;
    j["master_seed"] = config.master_seed;
    j["empirical"] = empirical_json(empirical);
    return j.dump(2) + "\n";
}

std::string render_comparison_json(const ComparisonReport& r) {
    ordered_json j;
    j["system"] = system_json(r.config.system);
    j["interaction"] = interaction_json(r.config.interaction);
    j["members"] = r.config.members;
    j["master_seed"] = r.config.master_seed;
    j["theory"] = report_json(r.theory);
    j["empirical"] = empirical_json(r.empirical);
    j["comparison"] = ordered_json{{"mu2_z", r.mu2_z},
                                   {"q_z", r.q_z},
                                   {"mu6_z", r.mu6_z},
                                   {"mu2_rel_gap", r.mu2_rel_gap},
                                   {"q_abs_gap", r.q_abs_gap},
                                   {"mu6_rel_gap", r.mu6_rel_gap},
                                   {"histogram_l1_vs_qnormal", r.histogram_l1}};
    return j.dump(2) + "\n";
}

} // namespace qmom::cli
