#pragma once

#include <vector>

#include "qmom/system.hpp"

namespace qmom {

enum class EvalMode { Finite, Asymptotic };

const char* to_string(EvalMode mode);

/// Per-channel contributions, floated for reporting. Index tuples follow the
/// interaction splits: (i,j) with i+j=k for mu2, (i,j,p,q) for the fourth
/// moment correlator, and (i,j,p,q,r,s) for the sixth-moment terms.
struct TermBreakdown {
    struct Mu2Term {
        int i, j;
        double value; // contribution to mu2
    };
    struct PairTerm {
        int i, j, p, q;
        double value; // contribution to q = <ABAB>/mu2^2
    };
    struct TripleTerm {
        int i, j, p, q, r, s;
        double value; // contribution to mu6
    };
    std::vector<Mu2Term> mu2_terms;
    std::vector<PairTerm> abab_terms;
    std::vector<TripleTerm> x_terms;
    std::vector<TripleTerm> y_terms;
};

struct MomentReport {
    SystemSpec system;
    InteractionSpec interaction;
    YTermPolicy y_policy = YTermPolicy::AsymptoticU;
    EvalMode mode = EvalMode::Finite;
    double mu2 = 0.0;
    double q = 0.0;
    double mu4 = 0.0;         // 2 + q by definition
    double mu6_formula = 0.0; // ensemble formula
    double mu6_qnormal = 0.0; // 5 + 6q + 3q^2 + q^3
    TermBreakdown breakdown;
};

/// Second moment sum_{i+j=k} v2(i,j) Lambda^0(N1,m1,i) Lambda^0(N2,m2,j)
/// (bosonic Lambda_B in boson mode). Zero when no channel is active.
BigRat mu2_finite(const SystemSpec& sys, const InteractionSpec& inter);

/// Fourth-moment correlator <A(k1) B(k2) A(k1) B(k2)>^m for one species,
/// exact at finite N. Symmetric in (k1, k2).
BigRat z_correlator(SpeciesStatistics stats, int N, int m, int k1, int k2);

/// Sixth-moment correlator <A(k1) B(k2) A(k1) C(k3) B(k2) C(k3)>^m.
/// Symmetric in (k1, k3).
BigRat x_correlator(SpeciesStatistics stats, int N, int m, int k1, int k2, int k3);

/// Sixth-moment correlator <A(k1) B(k2) C(k3) A(k1) B(k2) C(k3)>^m. The exact
/// finite-N form needs unknown SU(N) Racah coefficients; per policy this is
/// either the asymptotic binomial product or zero. Never evaluated silently:
/// the policy is recorded in every report.
BigRat y_correlator(SpeciesStatistics stats, int N, int m, int k1, int k2, int k3,
                    YTermPolicy policy);

/// q parameter from the fourth moment, exact rational end-to-end.
/// Throws DegenerateEnsembleError when mu2 vanishes.
BigRat q_finite_exact(const SystemSpec& sys, const InteractionSpec& inter);
double q_finite(const SystemSpec& sys, const InteractionSpec& inter);

/// Reduced sixth moment 5 + 6q + (3 sum XX + sum YY)/mu2^3.
BigRat mu6_finite_exact(const SystemSpec& sys, const InteractionSpec& inter,
                        YTermPolicy policy);
double mu6_finite(const SystemSpec& sys, const InteractionSpec& inter,
                  YTermPolicy policy);

/// Full finite-N report with term breakdown; mu6_qnormal = mu6_of_q(q).
MomentReport moment_report(const SystemSpec& sys, const InteractionSpec& inter,
                           YTermPolicy policy);

} // namespace qmom
