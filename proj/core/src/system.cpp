#include "qmom/system.hpp"

#include <string>

namespace qmom {

void validate(const SystemSpec& sys) {
    if (sys.N1 < 1 || sys.N2 < 1)
        throw ValidationError("system: N1 and N2 must be >= 1");
    if (sys.m1 < 0 || sys.m2 < 0)
        throw ValidationError("system: m1 and m2 must be >= 0");
    if (sys.m1 + sys.m2 < 1)
        throw ValidationError("system: need at least one particle (m1+m2 >= 1)");
    if (sys.stats == SpeciesStatistics::Fermion) {
        if (sys.m1 > sys.N1)
            throw ValidationError("system: fermion m1=" + std::to_string(sys.m1) +
                                  " exceeds N1=" + std::to_string(sys.N1));
        if (sys.m2 > sys.N2)
            throw ValidationError("system: fermion m2=" + std::to_string(sys.m2) +
                                  " exceeds N2=" + std::to_string(sys.N2));
    }
}

const char* to_string(VarianceSchemeKind kind) {
    switch (kind) {
        case VarianceSchemeKind::Uniform: return "uniform";
        case VarianceSchemeKind::RScheme: return "rscheme";
        case VarianceSchemeKind::Table: return "table";
    }
    return "?";
}

double InteractionSpec::variance(int i, int j) const {
    switch (scheme) {
        case VarianceSchemeKind::Uniform:
            return v2;
        case VarianceSchemeKind::RScheme:
            return (i > 0 && j > 0) ? R * v2 : v2;
        case VarianceSchemeKind::Table: {
            auto it = table.find({i, j});
            if (it == table.end())
                throw ValidationError("interaction: table has no entry for (i,j)=(" +
                                      std::to_string(i) + "," + std::to_string(j) + ")");
            return it->second;
        }
    }
    return 0.0;
}

BigRat InteractionSpec::variance_exact(int i, int j) const {
    // doubles are dyadic rationals; the conversion below is exact
    return BigRat(variance(i, j));
}

void validate(const SystemSpec& sys, const InteractionSpec& inter) {
    validate(sys);
    if (inter.k < 1)
        throw ValidationError("interaction: body rank k must be >= 1");
    if (inter.scheme == VarianceSchemeKind::RScheme && inter.R < 0.0)
        throw ValidationError("interaction: R must be >= 0");
    if (inter.scheme == VarianceSchemeKind::Table) {
        for (int i = 0; i <= inter.k; ++i) {
            auto it = inter.table.find({i, inter.k - i});
            if (it == inter.table.end())
                throw ValidationError("interaction: table must cover every (i,j) with i+j=k; "
                                      "missing (" + std::to_string(i) + "," +
                                      std::to_string(inter.k - i) + ")");
        }
        for (const auto& [ij, value] : inter.table)
            if (ij.first + ij.second != inter.k)
                throw ValidationError("interaction: table entry (" + std::to_string(ij.first) +
                                      "," + std::to_string(ij.second) + ") has i+j != k");
    }
    bool active = false;
    for (int i = 0; i <= inter.k; ++i) {
        int j = inter.k - i;
        double w = inter.variance(i, j);
        if (w < 0.0)
            throw ValidationError("interaction: variance v2(" + std::to_string(i) + "," +
                                  std::to_string(j) + ") is negative");
        if (w > 0.0 && i <= sys.m1 && j <= sys.m2) active = true;
    }
    if (inter.k > sys.m1 + sys.m2 || !active)
        throw DegenerateEnsembleError(
            "degenerate ensemble: no interaction channel (i<=m1, j<=m2, i+j=k) with "
            "positive variance for k=" + std::to_string(inter.k) + ", m1=" +
            std::to_string(sys.m1) + ", m2=" + std::to_string(sys.m2));
}

const char* to_string(YTermPolicy policy) {
    return policy == YTermPolicy::AsymptoticU ? "asymptotic-u" : "drop";
}

YTermPolicy default_y_policy(SpeciesStatistics stats) {
    return stats == SpeciesStatistics::Fermion ? YTermPolicy::AsymptoticU
                                               : YTermPolicy::Drop;
}

} // namespace qmom
