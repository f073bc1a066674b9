#include "qmom/qnormal.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>
#include <sstream>

#include "qmom/errors.hpp"

namespace qmom {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kGaussianCrossover = 1e-6; // switch to closed form for 1-q below this
constexpr double kProductCutoff = 1e-16;    // truncate products once q^{K+1} < this
constexpr double kGaussianHalfWidth = 9.0;  // tail mass ~2e-19, below any tolerance used

double gaussian_pdf(double x) {
    return std::exp(-0.5 * x * x) / std::sqrt(kTwoPi);
}

void check_q(double q) {
    if (!(q >= 0.0 && q <= 1.0))
        throw ValidationError("q-normal: q must lie in [0,1], got " + std::to_string(q));
}

} // namespace

double q_number(int n, double q) {
    if (n < 0) throw ValidationError("q_number: n must be >= 0");
    double acc = 0.0, p = 1.0;
    for (int t = 0; t < n; ++t) {
        acc += p;
        p *= q;
    }
    return acc;
}

double q_factorial(int n, double q) {
    if (n < 0) throw ValidationError("q_factorial: n must be >= 0");
    double acc = 1.0;
    for (int j = 1; j <= n; ++j) acc *= q_number(j, q);
    return acc;
}

double q_hermite(int n, double x, double q) {
    if (n < 0) throw ValidationError("q_hermite: n must be >= 0");
    double prev = 0.0, cur = 1.0; // He_{-1}, He_0
    for (int t = 0; t < n; ++t) {
        double next = x * cur - q_number(t, q) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

SupportInterval support(double q) {
    check_q(q);
    if (q >= 1.0) return {.lower = 0.0, .upper = 0.0, .bounded = false};
    double edge = 2.0 / std::sqrt(1.0 - q);
    return {.lower = -edge, .upper = edge, .bounded = true};
}

QNormalDensity::QNormalDensity(double q) : q_(q) {
    check_q(q);
    if (1.0 - q < kGaussianCrossover) {
        gaussian_ = true;
        return;
    }
    edge_ = 2.0 / std::sqrt(1.0 - q);
    qpow_.push_back(1.0);
    while (qpow_.back() * q >= kProductCutoff) qpow_.push_back(qpow_.back() * q);
    // ln prod (1 - q^{k+1}); the factors underflow to zero as a plain product
    // once the table has a few thousand terms
    double log_prod = 0.0;
    for (double p : qpow_) log_prod += std::log1p(-p * q);
    log_theta_prefactor_ = log_prod - std::log(kTwoPi);
    log_prefactor_ = 0.5 * std::log(1.0 - q) + log_theta_prefactor_;
}

double QNormalDensity::log_product(double one_minus_q_x2) const {
    // ln prod_k [(1+q^k)^2 - q^k * one_minus_q_x2]; every factor is positive
    // inside the support since (1+p)^2 - 4p = (1-p)^2 > 0
    double log_acc = 0.0;
    double acc = 1.0;
    for (double p : qpow_) {
        double onep = 1.0 + p;
        acc *= onep * onep - p * one_minus_q_x2;
        if (acc > 1e280 || acc < 1e-280) {
            log_acc += std::log(acc);
            acc = 1.0;
        }
    }
    return log_acc + std::log(acc);
}

double QNormalDensity::operator()(double x) const {
    if (gaussian_) return gaussian_pdf(x);
    if (q_ == 0.0) {
        if (std::abs(x) >= 2.0) return 0.0;
        return std::sqrt(4.0 - x * x) / kTwoPi; // semi-circle
    }
    if (std::abs(x) >= edge_) return 0.0;
    const double omq_x2 = (1.0 - q_) * x * x;
    return std::exp(log_prefactor_ + log_product(omq_x2) -
                    0.5 * std::log(4.0 - omq_x2));
}

double QNormalDensity::integrate(const std::function<double(double)>& f,
                                 double tolerance) const {
    if (tolerance <= 0.0) throw ValidationError("integrate: tolerance must be > 0");
    using boost::math::quadrature::gauss_kronrod;
    double error = 0.0;
    double value = 0.0;
    if (gaussian_) {
        auto integrand = [&](double x) { return f(x) * gaussian_pdf(x); };
        value = gauss_kronrod<double, 31>::integrate(
            integrand, -kGaussianHalfWidth, kGaussianHalfWidth, 12, tolerance, &error);
    } else {
        // x = edge * sin(theta); the 1/sqrt(4 - (1-q)x^2) factor cancels the
        // Jacobian, leaving a smooth integrand over (-pi/2, pi/2):
        //   (prod(1-q^{k+1})/2pi) * f(edge sin t) * prod_k[(1+q^k)^2 - 4 q^k sin^2 t]
        auto integrand = [&](double theta) {
            double s = std::sin(theta);
            double x = edge_ * s;
            double weight = std::exp(log_theta_prefactor_ + log_product(4.0 * s * s));
            return f(x) * weight;
        };
        constexpr double half_pi = std::numbers::pi / 2.0;
        value = gauss_kronrod<double, 31>::integrate(integrand, -half_pi, half_pi, 12,
                                                     tolerance, &error);
    }
    if (!(error <= tolerance) && !(std::abs(error) <= tolerance * std::abs(value))) {
        std::ostringstream msg;
        msg << "quadrature did not reach tolerance " << tolerance << " (error estimate "
            << error << ", value " << value << ", q = " << q_ << ")";
        throw NumericalError(msg.str());
    }
    return value;
}

double qnormal_pdf(double x, double q) { return QNormalDensity(q)(x); }

double integrate_against_pdf(const std::function<double(double)>& f, double q,
                             double tolerance) {
    return QNormalDensity(q).integrate(f, tolerance);
}

} // namespace qmom
