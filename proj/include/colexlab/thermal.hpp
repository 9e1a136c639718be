#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <unordered_map>
#include <utility>
#include <vector>

#include "colexlab/css.hpp"

namespace colexlab {

/// Gibbs model over syndrome sectors: the Hamiltonian is minus the sum of
/// coupling-weighted generator terms of both types. A syndrome of one type
/// leaves the opposite-type terms satisfied.
struct ThermalModel {
    std::shared_ptr<const CssCode> code;
    double beta = 1.0;
    std::vector<double> t_x, t_z; // couplings per overcomplete generator

    double t_min() const;
    double t_max() const;
};

ThermalModel make_thermal_model(std::shared_ptr<const CssCode> code, double beta,
                                double coupling = 1.0);

double energy(const ThermalModel& m, const Syndrome& b);

struct EstimateReport {
    double estimate = 0.0;
    double stderr_ = 0.0;
    std::size_t samples = 0;
    std::size_t burn_in = 0;
    std::uint64_t seed = 0;
};

/// Exact P_crit by enumeration over the syndrome sector opposite to N.
/// Requires 2^g enumerable.
double gibbs_exact(const ThermalModel& m, const Pauli& N);

/// Single-qubit-flip Metropolis walk over error chains of one type; the
/// induced syndrome distribution is Gibbs because synd is onto with
/// sector-independent degeneracy.
class SyndromeSampler {
  public:
    SyndromeSampler(const ThermalModel& m, SyndromeType type, std::uint64_t seed);

    void step();
    void sweep(); // n proposals
    Syndrome current() const;
    const BitChain& error_chain() const { return err_; }
    double current_energy() const;

  private:
    const ThermalModel* m_;
    SyndromeType type_;
    const std::vector<double>* t_;
    std::vector<std::vector<std::size_t>> touch_; // qubit -> generator ids
    BitChain err_;
    BitChain exc_; // all overcomplete generators
    std::mt19937_64 rng_;
    std::uint64_t steps_ = 0;

    void audit() const;
};

struct SamplerParams {
    std::size_t samples = 10000;
    std::size_t burn_in_sweeps = 0; // 0 = default 100 * n
    std::size_t chains = 1;
    std::uint64_t seed = 0;
};

EstimateReport estimate_p_crit(const ThermalModel& m, const Pauli& N,
                               const SamplerParams& params);

/// {middle, outer} of the decay-rate bound chain: the Gibbs average of
/// 8 h_max Σ_σ (1 − S(N,σ,b)) and 16 h_max n P_crit. Exact enumeration.
std::pair<double, double> decay_bound(const ThermalModel& m, const Pauli& N,
                                      double h_max);

/// Overlap 1 − 2 P'_crit where P'_crit is the probability that a Gibbs
/// syndrome plus an independent depolarizing error flips the dressed
/// observable. Decoder failures count toward P'_crit.
EstimateReport depolarize_overlap(const ThermalModel& m, const Pauli& N, double p,
                                  const SamplerParams& params);

struct AnnealParams {
    std::size_t ramp_sweeps = 10000; // field 1 -> 0 linearly
    std::size_t replicas = 200;
    std::uint64_t seed = 0;
};

/// Zeeman-field anneal of the classical phase: Metropolis over X-error
/// chains with energy from the field term plus the Z-generator terms,
/// field ramped down; returns the fraction of replicas ending in the
/// trivial dressed-logical sector.
double anneal_init(int D, int d, int L, double beta, const AnnealParams& params);

} // namespace colexlab
