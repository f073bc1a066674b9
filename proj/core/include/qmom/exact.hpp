#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>

#include "qmom/errors.hpp"

namespace qmom {

/// Arbitrary-precision signed integer. All combinatorial quantities are exact.
using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always reduced with positive denominator.
/// Conversion to double is the only lossy step and happens at reporting
/// boundaries only.
using BigRat = boost::multiprecision::cpp_rational;

enum class SpeciesStatistics { Fermion, Boson };

const char* to_string(SpeciesStatistics stats);

inline double to_double(const BigRat& r) { return r.convert_to<double>(); }
inline double to_double(const BigInt& n) { return n.convert_to<double>(); }

/// C(n, r) for n >= 0; zero when r > n.
BigInt binomial(std::int64_t n, std::int64_t r);

/// Generalized binomial n(n-1)...(n-r+1)/r! for any integer n.
/// For n < 0 equals (-1)^r C(r-n-1, r); agrees with binomial() for n >= 0.
BigInt binomial_signed(std::int64_t n, std::int64_t r);

/// Lambda^nu(N, m, r) = C(m-nu, r) C(N-m+r-nu, r) for fermions.
/// Zero whenever either upper index is smaller than r (in particular for
/// nu > m), so over-extended nu sums are harmless.
BigInt lambda_f(std::int64_t N, std::int64_t m, std::int64_t r, std::int64_t nu);

/// d(N:nu) = C(N,nu)^2 - C(N,nu-1)^2, the fermionic irrep dimension.
BigInt dim_irrep_f(std::int64_t N, std::int64_t nu);

/// Bosonic Lambda_B^nu(N, m, r) = C(m-nu, r) C(N+m+nu-1, r).
BigInt lambda_b(std::int64_t N, std::int64_t m, std::int64_t r, std::int64_t nu);

/// d_B(N:nu) = C(N+nu-1,nu)^2 - C(N+nu-2,nu-1)^2, the bosonic irrep dimension.
BigInt dim_irrep_b(std::int64_t N, std::int64_t nu);

/// Statistics-dispatched Lambda and irrep dimension.
BigInt lambda(SpeciesStatistics stats, std::int64_t N, std::int64_t m,
              std::int64_t r, std::int64_t nu);
BigInt dim_irrep(SpeciesStatistics stats, std::int64_t N, std::int64_t nu);

/// Many-body space dimension: C(N,m) for fermions, C(N+m-1,m) for bosons.
/// Throws ValidationError for fermions with m > N.
BigInt space_dimension(SpeciesStatistics stats, std::int64_t N, std::int64_t m);

} // namespace qmom
