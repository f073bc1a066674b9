#pragma once

#include <map>
#include <utility>

#include "qmom/exact.hpp"

namespace qmom {

/// Two-species system: particle numbers (m1, m2) in (N1, N2) sp states.
struct SystemSpec {
    SpeciesStatistics stats = SpeciesStatistics::Fermion;
    int N1 = 1;
    int m1 = 0;
    int N2 = 1;
    int m2 = 0;
};

/// Throws ValidationError unless N1,N2 >= 1, m1,m2 >= 0, m1+m2 >= 1 and
/// (fermions) m1 <= N1, m2 <= N2.
void validate(const SystemSpec& sys);

enum class VarianceSchemeKind { Uniform, RScheme, Table };

const char* to_string(VarianceSchemeKind kind);

/// k-body interaction with one variance v2(i,j) per split i+j=k.
///   Uniform:  v2(i,j) = v2
///   RScheme:  v2(i,j) = R*v2 for i,j > 0 and v2 when i or j is 0
///   Table:    explicit map over all i+j=k
struct InteractionSpec {
    int k = 1;
    VarianceSchemeKind scheme = VarianceSchemeKind::Uniform;
    double v2 = 1.0;
    double R = 1.0;
    std::map<std::pair<int, int>, double> table;

    double variance(int i, int j) const;
    BigRat variance_exact(int i, int j) const; // exact binary value of the double
};

/// Joint validation: variances >= 0, k <= m1+m2, and at least one channel
/// (i <= m1, j <= m2) with positive variance. A system with no active channel
/// is flagged as a degenerate ensemble (DegenerateEnsembleError).
void validate(const SystemSpec& sys, const InteractionSpec& inter);

/// How the sixth-moment Y correlator is evaluated. The finite-N Y needs
/// SU(N) Racah coefficients with no known closed form, so it is either
/// replaced by its asymptotic binomial product or dropped.
enum class YTermPolicy { AsymptoticU, Drop };

const char* to_string(YTermPolicy policy);

/// AsymptoticU for fermions, Drop for bosons.
YTermPolicy default_y_policy(SpeciesStatistics stats);

} // namespace qmom
