#pragma once

#include "qmom/moments_finite.hpp"
#include "qmom/system.hpp"

namespace qmom {

/// Dilute-limit (N -> infinity) moment pieces for the fermionic ensemble.
/// The formulas are pure binomial products evaluated exactly at the user's
/// finite (N, m) values, matching how the asymptotic panels are produced.
/// Boson asymptotics are not defined; all entry points below reject
/// SpeciesStatistics::Boson with a ValidationError.

/// sum_{i+j=k} v2(i,j) C(m1,i) C(N1,i) C(m2,j) C(N2,j)
BigRat mu2_asym(const SystemSpec& sys, const InteractionSpec& inter);

/// C(m-k2,k1) C(m,k2) C(N,k1) C(N,k2); zero when k1+k2 > m.
BigInt z_asym(int N, int m, int k1, int k2);

/// C(m-k2,k1) C(m-k2,k3) C(m,k2) C(N,k1) C(N,k2) C(N,k3).
BigInt x_asym(int N, int m, int k1, int k2, int k3);

/// C(m-k2-k3,k1) C(m-k3,k2) C(m,k3) C(N,k1) C(N,k2) C(N,k3);
/// zero when k1+k2+k3 > m.
BigInt y_asym(int N, int m, int k1, int k2, int k3);

/// |U(f_m k1 f_m k2; f_m k1+k2)|^2 = C(m-k2,k1) / C(m,k1).
/// Throws ValidationError when k1+k2 > m.
BigRat u_coeff_sq_asym(int m, int k1, int k2);

BigRat q_asym_exact(const SystemSpec& sys, const InteractionSpec& inter);
double q_asym(const SystemSpec& sys, const InteractionSpec& inter);

BigRat mu6_asym_exact(const SystemSpec& sys, const InteractionSpec& inter);
double mu6_asym(const SystemSpec& sys, const InteractionSpec& inter);

/// Same shape as the finite report, with mode = EvalMode::Asymptotic.
using AsymptoticReport = MomentReport;
AsymptoticReport asymptotic_report(const SystemSpec& sys, const InteractionSpec& inter);

} // namespace qmom
