#include "qmom/moments_finite.hpp"

#include <algorithm>

#include "qmom/moments_asymptotic.hpp"
#include "qmom/qnormal.hpp"

namespace qmom {

const char* to_string(EvalMode mode) {
    return mode == EvalMode::Finite ? "finite" : "asymptotic";
}

BigRat mu2_finite(const SystemSpec& sys, const InteractionSpec& inter) {
    validate(sys, inter);
    BigRat acc = 0;
    for (int i = 0; i <= inter.k; ++i) {
        int j = inter.k - i;
        // channels with i > m1 or j > m2 vanish through the Lambda binomials
        acc += inter.variance_exact(i, j) *
               BigRat(lambda(sys.stats, sys.N1, sys.m1, i, 0) *
                      lambda(sys.stats, sys.N2, sys.m2, j, 0));
    }
    return acc;
}

BigRat z_correlator(SpeciesStatistics stats, int N, int m, int k1, int k2) {
    BigInt num = 0;
    int bound = std::min(k1, m - k2);
    for (int nu = 0; nu <= bound; ++nu)
        num += lambda(stats, N, m, m - k1, nu) * lambda(stats, N, m, k2, nu) *
               dim_irrep(stats, N, nu);
    return BigRat(num, space_dimension(stats, N, m));
}

BigRat x_correlator(SpeciesStatistics stats, int N, int m, int k1, int k2, int k3) {
    BigInt num = 0;
    int bound = std::min({m - k1, k2, m - k3});
    for (int nu = 0; nu <= bound; ++nu)
        num += lambda(stats, N, m, k1, nu) * lambda(stats, N, m, m - k2, nu) *
               lambda(stats, N, m, k3, nu) * dim_irrep(stats, N, nu);
    return BigRat(num, space_dimension(stats, N, m));
}

BigRat y_correlator(SpeciesStatistics, int N, int m, int k1, int k2, int k3,
                    YTermPolicy policy) {
    if (policy == YTermPolicy::Drop) return 0;
    return BigRat(y_asym(N, m, k1, k2, k3));
}

namespace {

BigRat require_positive_mu2(const SystemSpec& sys, const InteractionSpec& inter) {
    BigRat m2 = mu2_finite(sys, inter);
    if (m2 <= 0)
        throw DegenerateEnsembleError("degenerate ensemble: mu2 = 0, q undefined");
    return m2;
}

} // namespace

BigRat q_finite_exact(const SystemSpec& sys, const InteractionSpec& inter) {
    BigRat m2 = require_positive_mu2(sys, inter);
    BigRat num = 0;
    for (int i = 0; i <= inter.k; ++i)
        for (int p = 0; p <= inter.k; ++p) {
            int j = inter.k - i, q = inter.k - p;
            num += inter.variance_exact(i, j) * inter.variance_exact(p, q) *
                   z_correlator(sys.stats, sys.N1, sys.m1, i, p) *
                   z_correlator(sys.stats, sys.N2, sys.m2, j, q);
        }
    return num / (m2 * m2);
}

double q_finite(const SystemSpec& sys, const InteractionSpec& inter) {
    return to_double(q_finite_exact(sys, inter));
}

BigRat mu6_finite_exact(const SystemSpec& sys, const InteractionSpec& inter,
                        YTermPolicy policy) {
    BigRat m2 = require_positive_mu2(sys, inter);
    BigRat q = q_finite_exact(sys, inter);
    BigRat sum_xx = 0, sum_yy = 0;
    for (int i = 0; i <= inter.k; ++i)
        for (int p = 0; p <= inter.k; ++p)
            for (int r = 0; r <= inter.k; ++r) {
                int j = inter.k - i, qq = inter.k - p, s = inter.k - r;
                BigRat w = inter.variance_exact(i, j) * inter.variance_exact(p, qq) *
                           inter.variance_exact(r, s);
                sum_xx += w * x_correlator(sys.stats, sys.N1, sys.m1, i, p, r) *
                          x_correlator(sys.stats, sys.N2, sys.m2, j, qq, s);
                if (policy != YTermPolicy::Drop)
                    sum_yy += w * y_correlator(sys.stats, sys.N1, sys.m1, i, p, r, policy) *
                              y_correlator(sys.stats, sys.N2, sys.m2, j, qq, s, policy);
            }
    BigRat m2cubed = m2 * m2 * m2;
    return 5 + 6 * q + (3 * sum_xx + sum_yy) / m2cubed;
}

double mu6_finite(const SystemSpec& sys, const InteractionSpec& inter,
                  YTermPolicy policy) {
    return to_double(mu6_finite_exact(sys, inter, policy));
}

MomentReport moment_report(const SystemSpec& sys, const InteractionSpec& inter,
                           YTermPolicy policy) {
    MomentReport report;
    report.system = sys;
    report.interaction = inter;
    report.y_policy = policy;
    report.mode = EvalMode::Finite;

    BigRat m2 = require_positive_mu2(sys, inter);
    BigRat m2sq = m2 * m2;
    BigRat m2cubed = m2sq * m2;
    report.mu2 = to_double(m2);

    BigRat q = 0;
    for (int i = 0; i <= inter.k; ++i)
        for (int p = 0; p <= inter.k; ++p) {
            int j = inter.k - i, qq = inter.k - p;
            BigRat term = inter.variance_exact(i, j) * inter.variance_exact(p, qq) *
                          z_correlator(sys.stats, sys.N1, sys.m1, i, p) *
                          z_correlator(sys.stats, sys.N2, sys.m2, j, qq) / m2sq;
            q += term;
            report.breakdown.abab_terms.push_back({i, j, p, qq, to_double(term)});
        }
    for (int i = 0; i <= inter.k; ++i) {
        int j = inter.k - i;
        BigRat term = inter.variance_exact(i, j) *
                      BigRat(lambda(sys.stats, sys.N1, sys.m1, i, 0) *
                             lambda(sys.stats, sys.N2, sys.m2, j, 0));
        report.breakdown.mu2_terms.push_back({i, j, to_double(term)});
    }

    BigRat mu6 = 5 + 6 * q;
    for (int i = 0; i <= inter.k; ++i)
        for (int p = 0; p <= inter.k; ++p)
            for (int r = 0; r <= inter.k; ++r) {
                int j = inter.k - i, qq = inter.k - p, s = inter.k - r;
                BigRat w = inter.variance_exact(i, j) * inter.variance_exact(p, qq) *
                           inter.variance_exact(r, s);
                BigRat xterm = 3 * w * x_correlator(sys.stats, sys.N1, sys.m1, i, p, r) *
                               x_correlator(sys.stats, sys.N2, sys.m2, j, qq, s) / m2cubed;
                mu6 += xterm;
                report.breakdown.x_terms.push_back({i, j, p, qq, r, s, to_double(xterm)});
                if (policy != YTermPolicy::Drop) {
                    BigRat yterm =
                        w * y_correlator(sys.stats, sys.N1, sys.m1, i, p, r, policy) *
                        y_correlator(sys.stats, sys.N2, sys.m2, j, qq, s, policy) / m2cubed;
                    mu6 += yterm;
                    report.breakdown.y_terms.push_back({i, j, p, qq, r, s, to_double(yterm)});
                }
            }

    report.q = to_double(q);
    report.mu4 = to_double(2 + q);
    report.mu6_formula = to_double(mu6);
    report.mu6_qnormal = mu6_of_q(report.q);
    return report;
}

} // namespace qmom
