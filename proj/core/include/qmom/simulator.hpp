#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <memory>
#include <vector>

#include "qmom/basis.hpp"
#include "qmom/moments_finite.hpp"
#include "qmom/system.hpp"
#include "qmom/transition_ops.hpp"

namespace qmom {

struct EnsembleConfig {
    SystemSpec system;
    InteractionSpec interaction;
    int members = 2;
    std::uint64_t master_seed = 0;
};

/// Standardized eigenvalue histogram; edges has one more element than mass
/// and mass sums to 1 (eigenvalues beyond the range land in the edge bins).
struct Histogram {
    std::vector<double> edges;
    std::vector<double> mass;
};

inline constexpr double kHistogramLow = -8.0;
inline constexpr double kHistogramHigh = 8.0;
inline constexpr int kHistogramBins = 160;

/// Monte Carlo moment estimates. muP_hat are the raw ensemble-averaged
/// trace-normalized moments <H^p>; q_hat and mu6_reduced_hat are the derived
/// reduced quantities with jackknife standard errors.
struct EmpiricalMoments {
    int members = 0;
    int failed_members = 0;

    double mu1_hat = 0, mu1_stderr = 0;
    double mu2_hat = 0, mu2_stderr = 0;
    double mu3_hat = 0, mu3_stderr = 0;
    double mu4_hat = 0, mu4_stderr = 0;
    double mu5_hat = 0, mu5_stderr = 0;
    double mu6_hat = 0, mu6_stderr = 0;

    double q_hat = 0, q_stderr = 0;                       // mu4/mu2^2 - 2
    double mu6_reduced_hat = 0, mu6_reduced_stderr = 0;   // mu6/mu2^3

    Histogram histogram;
};

/// Theory-vs-simulation join: z-scores ((hat - theory)/stderr), relative or
/// absolute gaps, and the L1 distance between the standardized histogram and
/// the q-normal density at q_finite.
struct ComparisonReport {
    EnsembleConfig config;
    MomentReport theory;
    EmpiricalMoments empirical;
    double mu2_z = 0, q_z = 0, mu6_z = 0;
    double mu2_rel_gap = 0, q_abs_gap = 0, mu6_rel_gap = 0;
    double histogram_l1 = 0;
};

/// Samples one Hermitian GUE block with covariance
/// E[V_xy V_x'y'] = v2 delta_{xy'} delta_{yx'} (diagonal real, variance v2).
/// Entries are keyed by (master_seed, member, block, upper-triangle index).
Eigen::MatrixXcd sample_gue_block(std::uint64_t master_seed, std::uint64_t member,
                                  std::uint64_t block, std::size_t dim, double v2);

/// Explicit ensemble constructor: bases and transition operators are built
/// once, members are sampled on demand.
class EnsembleSimulator {
  public:
    explicit EnsembleSimulator(EnsembleConfig config,
                               std::size_t dim_cap = kDefaultDimensionCap);
    ~EnsembleSimulator();
    EnsembleSimulator(EnsembleSimulator&&) noexcept;
    EnsembleSimulator& operator=(EnsembleSimulator&&) noexcept;

    const EnsembleConfig& config() const;
    const ManyBodyBasis& basis1() const;
    const ManyBodyBasis& basis2() const;
    std::size_t dimension() const;

    /// H for one member over the (m1,m2) product basis
    /// (index = species1_index * dim2 + species2_index).
    Eigen::MatrixXcd sample_member(std::int64_t member_index) const;

    /// Eigensolves every member and accumulates moments; deterministic for a
    /// fixed config regardless of thread count (threads = 0 picks hardware).
    EmpiricalMoments ensemble_moments(int threads = 0) const;

  private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// One-shot conveniences over EnsembleSimulator.
Eigen::MatrixXcd sample_member(const EnsembleConfig& config, std::int64_t member_index,
                               std::size_t dim_cap = kDefaultDimensionCap);
EmpiricalMoments ensemble_moments(const EnsembleConfig& config, int threads = 0,
                                  std::size_t dim_cap = kDefaultDimensionCap);

ComparisonReport compare_with_theory(const EnsembleConfig& config, YTermPolicy policy,
                                     int threads = 0,
                                     std::size_t dim_cap = kDefaultDimensionCap);

/// L1 distance between a histogram and the q-normal density at the given q
/// (per-bin masses plus any q-normal mass outside the histogram range).
double histogram_l1_distance(const Histogram& histogram, double q);

} // namespace qmom
