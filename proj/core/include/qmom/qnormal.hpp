#pragma once

#include <functional>
#include <vector>

namespace qmom {

/// q-number [n]_q = 1 + q + ... + q^{n-1}; summed directly so q=1 is exact.
double q_number(int n, double q);

/// q-factorial [n]_q! = prod_{j=1..n} [j]_q, with [0]_q! = 1.
double q_factorial(int n, double q);

/// q-Hermite polynomial He_n(x|q) via the three-term recursion
/// x He_n = He_{n+1} + [n]_q He_{n-1}, He_0 = 1, He_{-1} = 0.
double q_hermite(int n, double x, double q);

/// Open support interval of the q-normal density, symmetric about 0.
/// q=1 is the unbounded (Gaussian) case.
struct SupportInterval {
    double lower = 0.0;
    double upper = 0.0;
    bool bounded = true;
};

SupportInterval support(double q);

/// Reduced moments of the q-normal density.
inline double mu4_of_q(double q) { return 2.0 + q; }
inline double mu6_of_q(double q) { return 5.0 + q * (6.0 + q * (3.0 + q)); }

/// q-normal density with per-q precomputation (power table and the
/// x-independent product prefactor). The infinite products are truncated at
/// the smallest K with q^{K+1} < 1e-16; within 1e-6 of q=1 the Gaussian
/// closed form is used instead.
class QNormalDensity {
  public:
    explicit QNormalDensity(double q); // throws ValidationError outside [0,1]

    double operator()(double x) const;
    double q() const { return q_; }

    /// Integral of f(x) * pdf(x) over the support, to absolute tolerance.
    /// Uses the substitution x = (2/sqrt(1-q)) sin(theta), which removes the
    /// endpoint singularity exactly; the Gaussian branch integrates over a
    /// truncated domain with tail mass below tolerance.
    double integrate(const std::function<double(double)>& f, double tolerance) const;

  private:
    double q_ = 0.0;
    bool gaussian_ = false;
    std::vector<double> qpow_;     // q^0 .. q^K
    double edge_ = 0.0;            // 2/sqrt(1-q)
    double log_prefactor_ = 0.0;   // ln[ sqrt(1-q) prod(1-q^{k+1}) / (2 pi) ]
    double log_theta_prefactor_ = 0.0; // ln[ prod(1-q^{k+1}) / (2 pi) ]

    // the products run over thousands of factors near q = 1; they are
    // accumulated with periodic renormalization into a log part
    double log_product(double one_minus_q_x2) const;
};

/// Value of the q-normal density f_qN(x|q); exactly 0 outside the support.
double qnormal_pdf(double x, double q);

/// Adaptive quadrature of f against the q-normal weight (see
/// QNormalDensity::integrate). Throws NumericalError if the error estimate
/// exceeds the requested tolerance.
double integrate_against_pdf(const std::function<double(double)>& f, double q,
                             double tolerance);

} // namespace qmom
