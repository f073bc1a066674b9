#include "qmom/moments_asymptotic.hpp"

#include "qmom/qnormal.hpp"

namespace qmom {

namespace {

void require_fermion(const SystemSpec& sys) {
    if (sys.stats != SpeciesStatistics::Fermion)
        throw ValidationError("asymptotic formulas are defined for fermions only");
}

BigInt binom0(int n, int r) {
    if (n < r || n < 0 || r < 0) return 0;
    return binomial(n, r);
}

} // namespace

BigRat mu2_asym(const SystemSpec& sys, const InteractionSpec& inter) {
    require_fermion(sys);
    validate(sys, inter);
    BigRat acc = 0;
    for (int i = 0; i <= inter.k; ++i) {
        int j = inter.k - i;
        acc += inter.variance_exact(i, j) *
               BigRat(binom0(sys.m1, i) * binom0(sys.N1, i) * binom0(sys.m2, j) *
                      binom0(sys.N2, j));
    }
    return acc;
}

BigInt z_asym(int N, int m, int k1, int k2) {
    return binom0(m - k2, k1) * binom0(m, k2) * binom0(N, k1) * binom0(N, k2);
}

BigInt x_asym(int N, int m, int k1, int k2, int k3) {
    return binom0(m - k2, k1) * binom0(m - k2, k3) * binom0(m, k2) * binom0(N, k1) *
           binom0(N, k2) * binom0(N, k3);
}

BigInt y_asym(int N, int m, int k1, int k2, int k3) {
    return binom0(m - k2 - k3, k1) * binom0(m - k3, k2) * binom0(m, k3) *
           binom0(N, k1) * binom0(N, k2) * binom0(N, k3);
}

BigRat u_coeff_sq_asym(int m, int k1, int k2) {
    if (k1 < 0 || k2 < 0 || k1 + k2 > m)
        throw ValidationError("u_coeff_sq_asym: need k1, k2 >= 0 and k1+k2 <= m");
    return BigRat(binomial(m - k2, k1), binomial(m, k1));
}

namespace {

BigRat require_positive_mu2_asym(const SystemSpec& sys, const InteractionSpec& inter) {
    BigRat m2 = mu2_asym(sys, inter);
    if (m2 <= 0)
        throw DegenerateEnsembleError("degenerate ensemble: asymptotic mu2 = 0");
    return m2;
}

} // namespace

BigRat q_asym_exact(const SystemSpec& sys, const InteractionSpec& inter) {
    BigRat m2 = require_positive_mu2_asym(sys, inter);
    BigRat num = 0;
    for (int i = 0; i <= inter.k; ++i)
        for (int p = 0; p <= inter.k; ++p) {
            int j = inter.k - i, q = inter.k - p;
            num += inter.variance_exact(i, j) * inter.variance_exact(p, q) *
                   BigRat(z_asym(sys.N1, sys.m1, i, p) * z_asym(sys.N2, sys.m2, j, q));
        }
    return num / (m2 * m2);
}

double q_asym(const SystemSpec& sys, const InteractionSpec& inter) {
    return to_double(q_asym_exact(sys, inter));
}

BigRat mu6_asym_exact(const SystemSpec& sys, const InteractionSpec& inter) {
    BigRat m2 = require_positive_mu2_asym(sys, inter);
    BigRat q = q_asym_exact(sys, inter);
    BigRat sum_xx = 0, sum_yy = 0;
    for (int i = 0; i <= inter.k; ++i)
        for (int p = 0; p <= inter.k; ++p)
            for (int r = 0; r <= inter.k; ++r) {
                int j = inter.k - i, qq = inter.k - p, s = inter.k - r;
                BigRat w = inter.variance_exact(i, j) * inter.variance_exact(p, qq) *
                           inter.variance_exact(r, s);
                sum_xx += w * BigRat(x_asym(sys.N1, sys.m1, i, p, r) *
                                     x_asym(sys.N2, sys.m2, j, qq, s));
                sum_yy += w * BigRat(y_asym(sys.N1, sys.m1, i, p, r) *
                                     y_asym(sys.N2, sys.m2, j, qq, s));
            }
    BigRat m2cubed = m2 * m2 * m2;
    return 5 + 6 * q + (3 * sum_xx + sum_yy) / m2cubed;
}

double mu6_asym(const SystemSpec& sys, const InteractionSpec& inter) {
    return to_double(mu6_asym_exact(sys, inter));
}

AsymptoticReport asymptotic_report(const SystemSpec& sys, const InteractionSpec& inter) {
    AsymptoticReport report;
    report.system = sys;
    report.interaction = inter;
    report.y_policy = YTermPolicy::AsymptoticU;
    report.mode = EvalMode::Asymptotic;

    BigRat m2 = require_positive_mu2_asym(sys, inter);
    BigRat m2sq = m2 * m2;
    BigRat m2cubed = m2sq * m2;
    report.mu2 = to_double(m2);

    for (int i = 0; i <= inter.k; ++i) {
        int j = inter.k - i;
        BigRat term = inter.variance_exact(i, j) *
                      BigRat(binom0(sys.m1, i) * binom0(sys.N1, i) * binom0(sys.m2, j) *
                             binom0(sys.N2, j));
        report.breakdown.mu2_terms.push_back({i, j, to_double(term)});
    }

    BigRat q = 0;
    for (int i = 0; i <= inter.k; ++i)
        for (int p = 0; p <= inter.k; ++p) {
            int j = inter.k - i, qq = inter.k - p;
            BigRat term = inter.variance_exact(i, j) * inter.variance_exact(p, qq) *
                          BigRat(z_asym(sys.N1, sys.m1, i, p) *
                                 z_asym(sys.N2, sys.m2, j, qq)) /
                          m2sq;
            q += term;
            report.breakdown.abab_terms.push_back({i, j, p, qq, to_double(term)});
        }

    BigRat mu6 = 5 + 6 * q;
    for (int i = 0; i <= inter.k; ++i)
        for (int p = 0; p <= inter.k; ++p)
            for (int r = 0; r <= inter.k; ++r) {
                int j = inter.k - i, qq = inter.k - p, s = inter.k - r;
                BigRat w = inter.variance_exact(i, j) * inter.variance_exact(p, qq) *
                           inter.variance_exact(r, s);
                BigRat xterm = 3 * w *
                               BigRat(x_asym(sys.N1, sys.m1, i, p, r) *
                                      x_asym(sys.N2, sys.m2, j, qq, s)) /
                               m2cubed;
                BigRat yterm = w *
                               BigRat(y_asym(sys.N1, sys.m1, i, p, r) *
                                      y_asym(sys.N2, sys.m2, j, qq, s)) /
                               m2cubed;
                mu6 += xterm + yterm;
                report.breakdown.x_terms.push_back({i, j, p, qq, r, s, to_double(xterm)});
                report.breakdown.y_terms.push_back({i, j, p, qq, r, s, to_double(yterm)});
            }

    report.q = to_double(q);
    report.mu4 = to_double(2 + q);
    report.mu6_formula = to_double(mu6);
    report.mu6_qnormal = mu6_of_q(report.q);
    return report;
}

} // namespace qmom
