#include "qmom/exact.hpp"

namespace qmom {

const char* to_string(SpeciesStatistics stats) {
    return stats == SpeciesStatistics::Fermion ? "fermion" : "boson";
}

BigInt binomial(std::int64_t n, std::int64_t r) {
    if (n < 0 || r < 0) throw ValidationError("binomial: negative argument");
    if (r > n) return 0;
    if (r > n - r) r = n - r;
    BigInt acc = 1;
    for (std::int64_t t = 1; t <= r; ++t) {
        acc *= (n - r + t);
        acc /= t; // exact: C(n-r+t, t) is an integer at every step
    }
    return acc;
}

BigInt binomial_signed(std::int64_t n, std::int64_t r) {
    if (r < 0) throw ValidationError("binomial_signed: negative lower index");
    if (n >= 0) return binomial(n, r);
    // n(n-1)...(n-r+1)/r! = (-1)^r C(r-n-1, r)
    BigInt value = binomial(r - n - 1, r);
    return (r % 2 == 0) ? value : -value;
}

namespace {

// C(a, r) with the convention that any upper index below r (including
// negative a) or negative lower index gives zero. Used by the Lambda factors,
// which see r < 0 when channel loops run past the particle number.
BigInt binom_or_zero(std::int64_t a, std::int64_t r) {
    if (r < 0 || a < r) return 0;
    return binomial(a, r);
}

} // namespace

BigInt lambda_f(std::int64_t N, std::int64_t m, std::int64_t r, std::int64_t nu) {
    return binom_or_zero(m - nu, r) * binom_or_zero(N - m + r - nu, r);
}

BigInt dim_irrep_f(std::int64_t N, std::int64_t nu) {
    if (nu == 0) return 1;
    BigInt a = binomial(N, nu);
    BigInt b = binomial(N, nu - 1);
    return a * a - b * b;
}

BigInt lambda_b(std::int64_t N, std::int64_t m, std::int64_t r, std::int64_t nu) {
    return binom_or_zero(m - nu, r) * binom_or_zero(N + m + nu - 1, r);
}

BigInt dim_irrep_b(std::int64_t N, std::int64_t nu) {
    if (nu == 0) return 1;
    BigInt a = binomial(N + nu - 1, nu);
    BigInt b = binomial(N + nu - 2, nu - 1);
    return a * a - b * b;
}

BigInt lambda(SpeciesStatistics stats, std::int64_t N, std::int64_t m,
              std::int64_t r, std::int64_t nu) {
    return stats == SpeciesStatistics::Fermion ? lambda_f(N, m, r, nu)
                                               : lambda_b(N, m, r, nu);
}

BigInt dim_irrep(SpeciesStatistics stats, std::int64_t N, std::int64_t nu) {
    return stats == SpeciesStatistics::Fermion ? dim_irrep_f(N, nu)
                                               : dim_irrep_b(N, nu);
}

BigInt space_dimension(SpeciesStatistics stats, std::int64_t N, std::int64_t m) {
    if (N < 1 || m < 0) throw ValidationError("space_dimension: need N >= 1, m >= 0");
    if (stats == SpeciesStatistics::Fermion) {
        if (m > N)
            throw ValidationError("space_dimension: fermion particle number m=" +
                                  std::to_string(m) + " exceeds sp-state count N=" +
                                  std::to_string(N));
        return binomial(N, m);
    }
    return binomial(N + m - 1, m);
}

} // namespace qmom
