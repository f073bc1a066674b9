#include "qmom/simulator.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <string>
#include <thread>

#include "qmom/qnormal.hpp"
#include "qmom/rng.hpp"

namespace qmom {

Eigen::MatrixXcd sample_gue_block(std::uint64_t master_seed, std::uint64_t member,
                                  std::uint64_t block, std::size_t dim, double v2) {
    Eigen::MatrixXcd v(dim, dim);
    const double off_scale = std::sqrt(v2 / 2.0);
    const double diag_scale = std::sqrt(v2);
    for (std::size_t x = 0; x < dim; ++x) {
        for (std::size_t y = x; y < dim; ++y) {
            const auto g = counter_gaussians(master_seed, member, block, x * dim + y);
            if (x == y) {
                v(x, x) = std::complex<double>(diag_scale * g.z0, 0.0);
            } else {
                const std::complex<double> z(off_scale * g.z0, off_scale * g.z1);
                v(x, y) = z;
                v(y, x) = std::conj(z);
            }
        }
    }
    return v;
}

namespace {

struct PairOps {
    std::uint32_t alpha;
    std::uint32_t beta;
    std::vector<TransitionOperatorSet::Entry> entries;
};

struct SpeciesOps {
    std::size_t rank_dim = 0;
    std::vector<PairOps> pairs; // non-empty operators only
};

SpeciesOps compact_ops(const ManyBodyBasis& basis, int t) {
    SpeciesOps out;
    TransitionOperatorSet set = transition_operators(basis, t);
    out.rank_dim = set.rank_dimension();
    for (std::size_t a = 0; a < out.rank_dim; ++a)
        for (std::size_t b = 0; b < out.rank_dim; ++b) {
            auto& entries = set.ops[a * out.rank_dim + b];
            if (entries.empty()) continue;
            out.pairs.push_back({static_cast<std::uint32_t>(a),
                                 static_cast<std::uint32_t>(b), std::move(entries)});
        }
    return out;
}

} // namespace

struct EnsembleSimulator::Impl {
    EnsembleConfig config;
    std::size_t dim_cap;
    ManyBodyBasis basis1;
    ManyBodyBasis basis2;
    // indexed by rank t = 0..k; empty SpeciesOps for inactive ranks (t > m)
    std::vector<SpeciesOps> ops1;
    std::vector<SpeciesOps> ops2;
};

EnsembleSimulator::EnsembleSimulator(EnsembleConfig config, std::size_t dim_cap)
    : impl_(std::make_unique<Impl>()) {
    validate(config.system, config.interaction);
    if (config.members < 2)
        throw ValidationError("ensemble: need members >= 2");
    impl_->config = config;
    impl_->dim_cap = dim_cap;
    const auto& sys = config.system;
    impl_->basis1 = enumerate_basis(sys.stats, sys.N1, sys.m1, dim_cap);
    impl_->basis2 = enumerate_basis(sys.stats, sys.N2, sys.m2, dim_cap);
    const std::size_t dim = impl_->basis1.dimension() * impl_->basis2.dimension();
    if (dim > dim_cap)
        throw ResourceCapError("ensemble: product space dimension " + std::to_string(dim) +
                               " exceeds the cap " + std::to_string(dim_cap));
    const int k = config.interaction.k;
    impl_->ops1.resize(k + 1);
    impl_->ops2.resize(k + 1);
    for (int t = 0; t <= k; ++t) {
        if (t <= sys.m1) impl_->ops1[t] = compact_ops(impl_->basis1, t);
        if (t <= sys.m2) impl_->ops2[t] = compact_ops(impl_->basis2, t);
    }
    for (int i = 0; i <= k; ++i) {
        const int j = k - i;
        if (i > sys.m1 || j > sys.m2) continue;
        const std::size_t block_dim = impl_->ops1[i].rank_dim * impl_->ops2[j].rank_dim;
        if (block_dim > dim_cap)
            throw ResourceCapError("ensemble: k-particle block (" + std::to_string(i) +
                                   "," + std::to_string(j) + ") dimension " +
                                   std::to_string(block_dim) + " exceeds the cap " +
                                   std::to_string(dim_cap));
    }
}

EnsembleSimulator::~EnsembleSimulator() = default;
EnsembleSimulator::EnsembleSimulator(EnsembleSimulator&&) noexcept = default;
EnsembleSimulator& EnsembleSimulator::operator=(EnsembleSimulator&&) noexcept = default;

const EnsembleConfig& EnsembleSimulator::config() const { return impl_->config; }
const ManyBodyBasis& EnsembleSimulator::basis1() const { return impl_->basis1; }
const ManyBodyBasis& EnsembleSimulator::basis2() const { return impl_->basis2; }

std::size_t EnsembleSimulator::dimension() const {
    return impl_->basis1.dimension() * impl_->basis2.dimension();
}

Eigen::MatrixXcd EnsembleSimulator::sample_member(std::int64_t member_index) const {
    const auto& cfg = impl_->config;
    const int k = cfg.interaction.k;
    const std::size_t d2 = impl_->basis2.dimension();
    const std::size_t dim = dimension();
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
    for (int i = 0; i <= k; ++i) {
        const int j = k - i;
        if (i > cfg.system.m1 || j > cfg.system.m2) continue;
        const double v2 = cfg.interaction.variance(i, j);
        if (v2 == 0.0) continue;
        const auto& sp1 = impl_->ops1[i];
        const auto& sp2 = impl_->ops2[j];
        const std::size_t vd2 = sp2.rank_dim;
        const Eigen::MatrixXcd v = sample_gue_block(
            cfg.master_seed, static_cast<std::uint64_t>(member_index),
            static_cast<std::uint64_t>(i), sp1.rank_dim * vd2, v2);
        for (const auto& p1 : sp1.pairs) {
            for (const auto& p2 : sp2.pairs) {
                const std::complex<double> amp =
                    v(p1.alpha * vd2 + p2.alpha, p1.beta * vd2 + p2.beta);
                for (const auto& e1 : p1.entries)
                    for (const auto& e2 : p2.entries)
                        h(e1.row * d2 + e2.row, e1.col * d2 + e2.col) +=
                            amp * (e1.value * e2.value);
            }
        }
    }
    return h;
}

namespace {

struct MemberResult {
    bool ok = false;
    std::array<double, 7> moments{}; // index p = 1..6
    std::vector<double> eigenvalues;
};

double mean_of(const std::vector<double>& xs) {
    double acc = 0.0;
    for (double x : xs) acc += x;
    return acc / static_cast<double>(xs.size());
}

double stderr_of(const std::vector<double>& xs, double mean) {
    const std::size_t n = xs.size();
    double acc = 0.0;
    for (double x : xs) acc += (x - mean) * (x - mean);
    return std::sqrt(acc / (static_cast<double>(n - 1) * static_cast<double>(n)));
}

} // namespace

EmpiricalMoments EnsembleSimulator::ensemble_moments(int threads) const {
    const int members = impl_->config.members;
    int worker_count = threads > 0 ? threads
                                   : static_cast<int>(std::thread::hardware_concurrency());
    worker_count = std::clamp(worker_count, 1, members);

    std::vector<MemberResult> results(members);
    std::atomic<int> next{0};
    auto work = [&]() {
        for (;;) {
            const int idx = next.fetch_add(1);
            if (idx >= members) return;
            Eigen::MatrixXcd h = sample_member(idx);
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h,
                                                                   Eigen::EigenvaluesOnly);
            MemberResult& r = results[idx];
            if (solver.info() != Eigen::Success) continue; // flagged by ok=false
            const auto& ev = solver.eigenvalues();
            r.eigenvalues.assign(ev.data(), ev.data() + ev.size());
            const double inv_dim = 1.0 / static_cast<double>(ev.size());
            for (double lambda : r.eigenvalues) {
                double p = 1.0;
                for (int mom = 1; mom <= 6; ++mom) {
                    p *= lambda;
                    r.moments[mom] += p;
                }
            }
            for (int mom = 1; mom <= 6; ++mom) r.moments[mom] *= inv_dim;
            r.ok = true;
        }
    };
    if (worker_count == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(worker_count);
        for (int t = 0; t < worker_count; ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    // fixed-order reduction over member index keeps the result thread-invariant
    std::vector<const MemberResult*> ok;
    ok.reserve(members);
    int failed = 0;
    for (const auto& r : results)
        if (r.ok)
            ok.push_back(&r);
        else
            ++failed;
    if (failed * 100 > members)
        throw NumericalError("ensemble: eigensolver failed for " + std::to_string(failed) +
                             " of " + std::to_string(members) + " members");
    const std::size_t M = ok.size();
    if (M < 2) throw NumericalError("ensemble: fewer than two usable members");

    EmpiricalMoments out;
    out.members = members;
    out.failed_members = failed;

    std::array<std::vector<double>, 7> per_member;
    for (int p = 1; p <= 6; ++p) {
        per_member[p].reserve(M);
        for (const auto* r : ok) per_member[p].push_back(r->moments[p]);
    }
    std::array<double, 7> mean{}, se{};
    for (int p = 1; p <= 6; ++p) {
        mean[p] = mean_of(per_member[p]);
        se[p] = stderr_of(per_member[p], mean[p]);
    }
    out.mu1_hat = mean[1]; out.mu1_stderr = se[1];
    out.mu2_hat = mean[2]; out.mu2_stderr = se[2];
    out.mu3_hat = mean[3]; out.mu3_stderr = se[3];
    out.mu4_hat = mean[4]; out.mu4_stderr = se[4];
    out.mu5_hat = mean[5]; out.mu5_stderr = se[5];
    out.mu6_hat = mean[6]; out.mu6_stderr = se[6];

    out.q_hat = mean[4] / (mean[2] * mean[2]) - 2.0;
    out.mu6_reduced_hat = mean[6] / (mean[2] * mean[2] * mean[2]);

    // jackknife standard errors for the reduced quantities
    double s2 = 0, s4 = 0, s6 = 0;
    for (const auto* r : ok) {
        s2 += r->moments[2];
        s4 += r->moments[4];
        s6 += r->moments[6];
    }
    std::vector<double> q_loo(M), m6_loo(M);
    for (std::size_t i = 0; i < M; ++i) {
        const double a2 = (s2 - ok[i]->moments[2]) / static_cast<double>(M - 1);
        const double a4 = (s4 - ok[i]->moments[4]) / static_cast<double>(M - 1);
        const double a6 = (s6 - ok[i]->moments[6]) / static_cast<double>(M - 1);
        q_loo[i] = a4 / (a2 * a2) - 2.0;
        m6_loo[i] = a6 / (a2 * a2 * a2);
    }
    auto jackknife_se = [M](const std::vector<double>& loo) {
        double bar = mean_of(loo);
        double acc = 0.0;
        for (double v : loo) acc += (v - bar) * (v - bar);
        return std::sqrt(acc * static_cast<double>(M - 1) / static_cast<double>(M));
    };
    out.q_stderr = jackknife_se(q_loo);
    out.mu6_reduced_stderr = jackknife_se(m6_loo);

    // standardized histogram: zero-mean shift, unit variance per the
    // ensemble-averaged mu2
    const double shift = mean[1];
    const double scale = 1.0 / std::sqrt(mean[2]);
    out.histogram.edges.resize(kHistogramBins + 1);
    const double width = (kHistogramHigh - kHistogramLow) / kHistogramBins;
    for (int b = 0; b <= kHistogramBins; ++b)
        out.histogram.edges[b] = kHistogramLow + b * width;
    std::vector<std::int64_t> counts(kHistogramBins, 0);
    std::int64_t total = 0;
    for (const auto* r : ok)
        for (double lambda : r->eigenvalues) {
            const double x = (lambda - shift) * scale;
            int bin = static_cast<int>(std::floor((x - kHistogramLow) / width));
            bin = std::clamp(bin, 0, kHistogramBins - 1);
            ++counts[bin];
            ++total;
        }
    out.histogram.mass.resize(kHistogramBins);
    for (int b = 0; b < kHistogramBins; ++b)
        out.histogram.mass[b] =
            static_cast<double>(counts[b]) / static_cast<double>(total);
    return out;
}

Eigen::MatrixXcd sample_member(const EnsembleConfig& config, std::int64_t member_index,
                               std::size_t dim_cap) {
    return EnsembleSimulator(config, dim_cap).sample_member(member_index);
}

EmpiricalMoments ensemble_moments(const EnsembleConfig& config, int threads,
                                  std::size_t dim_cap) {
    return EnsembleSimulator(config, dim_cap).ensemble_moments(threads);
}

double histogram_l1_distance(const Histogram& histogram, double q) {
    static constexpr double kNodes[5] = {-0.9061798459386640, -0.5384693101056831, 0.0,
                                         0.5384693101056831, 0.9061798459386640};
    static constexpr double kWeights[5] = {0.2369268850561891, 0.4786286704993665,
                                           0.5688888888888889, 0.4786286704993665,
                                           0.2369268850561891};
    const QNormalDensity density(q);
    double l1 = 0.0;
    double covered = 0.0;
    for (std::size_t b = 0; b + 1 < histogram.edges.size(); ++b) {
        const double lo = histogram.edges[b];
        const double hi = histogram.edges[b + 1];
        const double mid = 0.5 * (lo + hi);
        const double half = 0.5 * (hi - lo);
        double bin_mass = 0.0;
        for (int g = 0; g < 5; ++g)
            bin_mass += kWeights[g] * density(mid + half * kNodes[g]);
        bin_mass *= half;
        covered += bin_mass;
        l1 += std::abs(histogram.mass[b] - bin_mass);
    }
    return l1 + std::max(0.0, 1.0 - covered);
}

ComparisonReport compare_with_theory(const EnsembleConfig& config, YTermPolicy policy,
                                     int threads, std::size_t dim_cap) {
    ComparisonReport report;
    report.config = config;
    report.theory = moment_report(config.system, config.interaction, policy);
    EnsembleSimulator simulator(config, dim_cap);
    report.empirical = simulator.ensemble_moments(threads);

    const auto& th = report.theory;
    const auto& em = report.empirical;
    report.mu2_z = (em.mu2_hat - th.mu2) / em.mu2_stderr;
    report.q_z = (em.q_hat - th.q) / em.q_stderr;
    report.mu6_z = (em.mu6_reduced_hat - th.mu6_formula) / em.mu6_reduced_stderr;
    report.mu2_rel_gap = std::abs(em.mu2_hat - th.mu2) / std::abs(th.mu2);
    report.q_abs_gap = std::abs(em.q_hat - th.q);
    report.mu6_rel_gap = std::abs(em.mu6_reduced_hat - th.mu6_formula) /
                         std::abs(th.mu6_formula);
    report.histogram_l1 = histogram_l1_distance(em.histogram, th.q);
    return report;
}

} // namespace qmom
