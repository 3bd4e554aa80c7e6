#pragma once

#include "cdj/mbqc.hpp"
#include "cdj/quantum.hpp"

#include <array>
#include <cstdint>

namespace cdj {

/// Phase-flip probabilities per degree of freedom, applied in the cluster
/// frame to the photon-A qubit of each pair (p_ei -> qubit 1, p_pol ->
/// qubit 2, p_rl -> qubit 3). The pair's interference visibility under a
/// flip probability p is V = 1 - 2p.
struct NoiseProfile {
    double p_ei = 0.0;
    double p_pol = 0.0;
    double p_rl = 0.0;

    void validate() const;
    bool is_zero() const;
    double visibility_ei() const { return 1.0 - 2.0 * p_ei; }
};

struct NoisyState {
    DensityMatrix rho;  // cluster frame
    NoiseProfile profile;
};

/// (1-p) rho + p Z rho Z on one qubit. Trace-preserving; the computational
/// diagonal is unchanged.
DensityMatrix dephase_channel(const DensityMatrix& rho, int qubit, double p);

NoisyState apply_profile(const StateVector& state, const NoiseProfile& profile);

/// Exact 2^n-outcome joint distribution via projector traces; reduces to
/// enumerate_distribution when the state is pure.
OutcomeDistribution noisy_distribution(const NoisyState& ns,
                                       const MeasurementPattern& pattern);

/// Monte Carlo realization of the channel: draws the Z flips from the
/// seeded stream, then samples the measurement branches from the same
/// stream. Converges to noisy_distribution.
OutcomeRecord sample_noisy(const StateVector& state,
                           const NoiseProfile& profile,
                           const MeasurementPattern& pattern,
                           std::uint64_t seed);

double total_variation(const std::array<double, 8>& a,
                       const std::array<double, 8>& b);
double total_variation(const OutcomeDistribution& a,
                       const OutcomeDistribution& b);

struct FitResult {
    NoiseProfile profile;
    double tv_distance = 0.0;
};

/// Grid search over (p_ei, p_pol, p_rl) in [0, 0.3]^3, step 0.005,
/// minimizing total variation between the model FF column and the
/// reference FF column; ties break toward the lexicographically smallest
/// profile.
FitResult fit_profile(const std::array<double, 8>& reference_ff,
                      FunctionKind kind);

}  // namespace cdj
