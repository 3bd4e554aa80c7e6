#pragma once

#include "cdj/graph_state.hpp"
#include "cdj/quantum.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace cdj {

/// Which of the two implemented boolean functions a pattern evaluates.
enum class FunctionKind { balanced, constant };

/// Single-qubit measurement basis. B(alpha) is the pair
/// (|0> +- e^{-i alpha}|1>)/sqrt(2) with outcome bit 0 for the + vector;
/// C is the computational pair {|0>, |1>}. Conjugated (laboratory-frame)
/// bases carry their explicit vectors.
struct MeasurementBasis {
    enum class Kind { b_angle, computational, custom };

    Kind kind = Kind::computational;
    double alpha = 0.0;
    Eigen::Vector2cd v0;
    Eigen::Vector2cd v1;
    std::string label;

    static MeasurementBasis computational();
    static MeasurementBasis custom(const Eigen::Vector2cd& v0,
                                   const Eigen::Vector2cd& v1,
                                   std::string label);
    /// Column matrix [v0 v1]; unitary for any orthonormal pair.
    Eigen::Matrix2cd unitary() const;
};

MeasurementBasis basis_b(double alpha);

enum class StepRole { oracle, readout };

struct PatternStep {
    int qubit = 0;
    MeasurementBasis basis;
    StepRole role = StepRole::readout;
};

/// Ordered measurement program over all six cluster qubits. The balanced
/// and constant factories build the two published configurations; free-form
/// step lists can be executed directly through the *_steps entry points.
struct MeasurementPattern {
    std::vector<PatternStep> steps;
    FunctionKind kind = FunctionKind::balanced;
    Frame frame = Frame::cluster;

    static MeasurementPattern balanced();
    static MeasurementPattern constant();
    /// Validates that the steps are a reordering of the published
    /// configuration for `kind` (cluster frame only).
    static MeasurementPattern from_steps(std::vector<PatternStep> steps,
                                         FunctionKind kind);
};

/// Conjugates the bases on qubits 4-6 by the frame rotation; executing the
/// result on the laboratory-frame state reproduces the cluster-frame
/// distribution.
MeasurementPattern to_laboratory(const MeasurementPattern& pattern);

/// One sampled run: outcome bits s_1..s_6 (indexed by qubit, not by
/// measurement order), the product of the branch probabilities taken, and
/// the feed-forward-corrected logical readout.
struct OutcomeRecord {
    std::array<int, 6> s{};
    double probability = 0.0;
    std::array<int, 3> logical_output{};
};

/// Joint outcome distribution keyed by the bit-string s_1..s_n.
using OutcomeDistribution = std::map<std::string, double>;

OutcomeRecord run_pattern(const StateVector& state,
                          const MeasurementPattern& pattern,
                          std::uint64_t seed);
OutcomeRecord run_pattern(const StateVector& state,
                          const MeasurementPattern& pattern,
                          std::mt19937_64& rng);

/// Exact joint probabilities of all 2^n outcomes of a step list covering
/// every qubit of `state` exactly once.
OutcomeDistribution enumerate_steps(const StateVector& state,
                                    const std::vector<PatternStep>& steps);
OutcomeDistribution enumerate_distribution(const StateVector& state,
                                           const MeasurementPattern& pattern);

/// Relabeling feed-forward: readout bits reinterpreted through XOR with the
/// oracle bits; no quantum correction is applied.
///   balanced: (s4^s1^s5, s6^s3^s5, s2^s5)
///   constant: (s4^s1^s2, s6^s2^s3, s5^s2)
std::array<int, 3> logical_output(const std::array<int, 6>& s,
                                  FunctionKind kind);

/// Conditions on the oracle outcomes being zero (s1=s3=s5=0 balanced,
/// s1=s2=s3=0 constant) and returns the renormalized distribution over the
/// raw readout triple; nullopt when the conditioning event has zero mass.
std::optional<std::map<std::string, double>> no_ff_filter(
    const OutcomeDistribution& dist, FunctionKind kind);

/// Distribution of logical_output over all outcomes, indexed 000..111.
std::array<double, 8> ff_distribution(const OutcomeDistribution& dist,
                                      FunctionKind kind);

/// Uniform double in [0,1) from the top 53 bits of the generator; fixed
/// mapping keeps sampled runs bit-reproducible.
double uniform_unit(std::mt19937_64& rng);

}  // namespace cdj
