#pragma once

#include <string>
#include <vector>

#include "qmom/moments_finite.hpp"
#include "qmom/simulator.hpp"

namespace qmom::cli {

/// One line of figure-style sweep output; rel_diff compares the ensemble
/// sixth moment against the q-normal reference.
struct SweepRow {
    SpeciesStatistics stats;
    int N1, m1, N2, m2, k;
    EvalMode mode;
    VarianceSchemeKind scheme;
    double R;
    double mu2, q, mu4, mu6_formula, mu6_qnormal, rel_diff;
};

inline constexpr const char* kSweepCsvHeader =
    "stats,N1,m1,N2,m2,k,mode,scheme,R,mu2,q,mu4,mu6_formula,mu6_qnormal,rel_diff";

SweepRow to_sweep_row(const MomentReport& report);

std::string render_sweep_csv(const std::vector<SweepRow>& rows);
std::string render_histogram_csv(const Histogram& histogram);

struct QNormalTableRow {
    double x, pdf, he1, he2, he3, he4;
};
std::string render_qnormal_csv(const std::vector<QNormalTableRow>& rows);

std::string render_report_json(const MomentReport& report);
std::string render_report_text(const MomentReport& report);
std::string render_empirical_json(const EnsembleConfig& config,
                                  const EmpiricalMoments& empirical);
std::string render_comparison_json(const ComparisonReport& report);

} // namespace qmom::cli
