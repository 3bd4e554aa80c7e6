#include "cdj/mbqc.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace cdj {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

std::string format_angle(double alpha) {
    if (alpha == 0.0) return "0";
    if (alpha == std::numbers::pi) return "pi";
    std::ostringstream os;
    os.precision(17);
    os << alpha;
    return os.str();
}

}  // namespace

MeasurementBasis basis_b(double alpha) {
    MeasurementBasis basis;
    basis.kind = MeasurementBasis::Kind::b_angle;
    basis.alpha = alpha;
    const double s = 1.0 / std::sqrt(2.0);
    const Complex phase = std::exp(Complex{0.0, -alpha});
    basis.v0 << s, s * phase;
    basis.v1 << s, -s * phase;
    basis.label = "B(" + format_angle(alpha) + ")";
    return basis;
}

MeasurementBasis MeasurementBasis::computational() {
    MeasurementBasis basis;
    basis.kind = Kind::computational;
    basis.v0 << 1.0, 0.0;
    basis.v1 << 0.0, 1.0;
    basis.label = "C";
    return basis;
}

MeasurementBasis MeasurementBasis::custom(const Eigen::Vector2cd& v0,
                                          const Eigen::Vector2cd& v1,
                                          std::string label) {
    MeasurementBasis basis;
    basis.kind = Kind::custom;
    basis.v0 = v0;
    basis.v1 = v1;
    basis.label = std::move(label);
    require(std::abs(basis.v0.norm() - 1.0) <= 1e-12 &&
                std::abs(basis.v1.norm() - 1.0) <= 1e-12 &&
                std::abs(basis.v0.dot(basis.v1)) <= 1e-12,
            "MeasurementBasis: vectors must be orthonormal");
    return basis;
}

Eigen::Matrix2cd MeasurementBasis::unitary() const {
    Eigen::Matrix2cd u;
    u.col(0) = v0;
    u.col(1) = v1;
    return u;
}

namespace {

std::vector<PatternStep> balanced_steps() {
    return {
        {1, basis_b(0.0), StepRole::oracle},
        {3, basis_b(0.0), StepRole::oracle},
        {5, basis_b(std::numbers::pi), StepRole::oracle},
        {4, MeasurementBasis::computational(), StepRole::readout},
        {6, MeasurementBasis::computational(), StepRole::readout},
        {2, MeasurementBasis::computational(), StepRole::readout},
    };
}

std::vector<PatternStep> constant_steps() {
    return {
        {1, basis_b(0.0), StepRole::oracle},
        {3, basis_b(0.0), StepRole::oracle},
        {2, MeasurementBasis::computational(), StepRole::oracle},
        {4, MeasurementBasis::computational(), StepRole::readout},
        {6, MeasurementBasis::computational(), StepRole::readout},
        {5, basis_b(std::numbers::pi), StepRole::readout},
    };
}

bool step_matches(const PatternStep& a, const PatternStep& b) {
    if (a.qubit != b.qubit || a.role != b.role) return false;
    if (a.basis.kind != b.basis.kind) return false;
    if (a.basis.kind == MeasurementBasis::Kind::b_angle &&
        std::abs(a.basis.alpha - b.basis.alpha) > 1e-12)
        return false;
    return true;
}

void validate_steps(const std::vector<PatternStep>& steps, FunctionKind kind) {
    require(steps.size() == 6, "MeasurementPattern: must have six steps");
    const auto reference =
        kind == FunctionKind::balanced ? balanced_steps() : constant_steps();
    for (const auto& ref : reference) {
        const auto it = std::find_if(steps.begin(), steps.end(), [&](const PatternStep& s) {
            return s.qubit == ref.qubit;
        });
        require(it != steps.end(), "MeasurementPattern: missing qubit");
        require(step_matches(*it, ref),
                "MeasurementPattern: step does not match the published configuration");
    }
}

}  // namespace

MeasurementPattern MeasurementPattern::balanced() {
    MeasurementPattern p;
    p.steps = balanced_steps();
    p.kind = FunctionKind::balanced;
    return p;
}

MeasurementPattern MeasurementPattern::constant() {
    MeasurementPattern p;
    p.steps = constant_steps();
    p.kind = FunctionKind::constant;
    return p;
}

MeasurementPattern MeasurementPattern::from_steps(std::vector<PatternStep> steps,
                                                  FunctionKind kind) {
    validate_steps(steps, kind);
    MeasurementPattern p;
    p.steps = std::move(steps);
    p.kind = kind;
    return p;
}

MeasurementPattern to_laboratory(const MeasurementPattern& pattern) {
    require(pattern.frame == Frame::cluster,
            "to_laboratory: pattern is already in the laboratory frame");
    MeasurementPattern lab = pattern;
    lab.frame = Frame::laboratory;
    for (auto& step : lab.steps) {
        if (step.qubit < 4) continue;
        const Eigen::Matrix2cd w = lab_rotation(step.qubit);
        step.basis = MeasurementBasis::custom(w * step.basis.v0, w * step.basis.v1,
                                              "lab(" + step.basis.label + ")");
    }
    return lab;
}

double uniform_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

namespace {

void check_cover(const std::vector<PatternStep>& steps, int n_qubits) {
    require(static_cast<int>(steps.size()) == n_qubits,
            "pattern must measure every qubit exactly once");
    std::vector<bool> seen(static_cast<std::size_t>(n_qubits), false);
    for (const auto& step : steps) {
        require(step.qubit >= 1 && step.qubit <= n_qubits, "step qubit out of range");
        require(!seen[static_cast<std::size_t>(step.qubit - 1)],
                "pattern measures a qubit twice");
        seen[static_cast<std::size_t>(step.qubit - 1)] = true;
    }
}

struct SampledRun {
    std::vector<int> s;  // by qubit index
    double probability = 1.0;
};

SampledRun run_steps(const StateVector& state, const std::vector<PatternStep>& steps,
                     std::mt19937_64& rng) {
    check_cover(steps, state.n_qubits);
    SampledRun run;
    run.s.assign(static_cast<std::size_t>(state.n_qubits), 0);
    StateVector current = state;
    for (const auto& step : steps) {
        const Projection branch0 = project(current, step.qubit, step.basis.v0);
        const double p0 = branch0.probability;
        const double p1 = 1.0 - p0;
        int outcome;
        if (p1 <= kZeroProbability) {
            outcome = 0;
        } else if (p0 <= kZeroProbability) {
            outcome = 1;
        } else {
            outcome = uniform_unit(rng) < p0 ? 0 : 1;
        }
        if (outcome == 0) {
            if (!branch0.post_state)
                throw std::runtime_error("run_pattern: degenerate branch probabilities");
            run.probability *= p0;
            current = *branch0.post_state;
        } else {
            const Projection branch1 = project(current, step.qubit, step.basis.v1);
            if (!branch1.post_state)
                throw std::runtime_error("run_pattern: degenerate branch probabilities");
            run.probability *= branch1.probability;
            current = *branch1.post_state;
        }
        run.s[static_cast<std::size_t>(step.qubit - 1)] = outcome;
    }
    return run;
}

}  // namespace

OutcomeRecord run_pattern(const StateVector& state, const MeasurementPattern& pattern,
                          std::mt19937_64& rng) {
    require(state.n_qubits == 6, "run_pattern: state must have six qubits");
    const SampledRun run = run_steps(state, pattern.steps, rng);
    OutcomeRecord record;
    for (int q = 0; q < 6; ++q) record.s[static_cast<std::size_t>(q)] = run.s[static_cast<std::size_t>(q)];
    record.probability = run.probability;
    record.logical_output = logical_output(record.s, pattern.kind);
    return record;
}

OutcomeRecord run_pattern(const StateVector& state, const MeasurementPattern& pattern,
                          std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return run_pattern(state, pattern, rng);
}

OutcomeDistribution enumerate_steps(const StateVector& state,
                                    const std::vector<PatternStep>& steps) {
    check_cover(steps, state.n_qubits);
    const int n = state.n_qubits;
    // Rotating each qubit by the basis adjoint turns every joint projector
    // probability into a squared amplitude.
    StateVector rotated = state;
    for (const auto& step : steps) {
        const Eigen::Matrix2cd u_dag = step.basis.unitary().adjoint();
        rotated = apply_gate(rotated, gates::single_qubit(u_dag, step.qubit));
    }
    OutcomeDistribution dist;
    for (std::size_t index = 0; index < state.dim(); ++index) {
        std::string key(static_cast<std::size_t>(n), '0');
        for (int q = 1; q <= n; ++q)
            key[static_cast<std::size_t>(q - 1)] = bit_of(index, n, q) ? '1' : '0';
        dist[key] = std::norm(rotated.amps[static_cast<std::int64_t>(index)]);
    }
    return dist;
}

OutcomeDistribution enumerate_distribution(const StateVector& state,
                                           const MeasurementPattern& pattern) {
    require(state.n_qubits == 6, "enumerate_distribution: state must have six qubits");
    return enumerate_steps(state, pattern.steps);
}

std::array<int, 3> logical_output(const std::array<int, 6>& s, FunctionKind kind) {
    const auto bit = [&](int q) { return s[static_cast<std::size_t>(q - 1)]; };
    if (kind == FunctionKind::balanced)
        return {bit(4) ^ bit(1) ^ bit(5), bit(6) ^ bit(3) ^ bit(5), bit(2) ^ bit(5)};
    return {bit(4) ^ bit(1) ^ bit(2), bit(6) ^ bit(2) ^ bit(3), bit(5) ^ bit(2)};
}

std::optional<std::map<std::string, double>> no_ff_filter(
    const OutcomeDistribution& dist, FunctionKind kind) {
    if (dist.empty()) throw std::invalid_argument("no_ff_filter: empty distribution");
    const std::array<int, 3> oracle_qubits =
        kind == FunctionKind::balanced ? std::array<int, 3>{1, 3, 5} : std::array<int, 3>{1, 2, 3};
    const std::array<int, 3> readout_qubits =
        kind == FunctionKind::balanced ? std::array<int, 3>{4, 6, 2} : std::array<int, 3>{4, 6, 5};

    std::map<std::string, double> conditional;
    double mass = 0.0;
    for (const auto& [key, prob] : dist) {
        if (key.size() != 6) throw std::invalid_argument("no_ff_filter: outcome keys must have six bits");
        bool keep = true;
        for (int q : oracle_qubits)
            if (key[static_cast<std::size_t>(q - 1)] != '0') keep = false;
        if (!keep) continue;
        std::string triple(3, '0');
        for (int i = 0; i < 3; ++i)
            triple[static_cast<std::size_t>(i)] =
                key[static_cast<std::size_t>(readout_qubits[static_cast<std::size_t>(i)] - 1)];
        conditional[triple] += prob;
        mass += prob;
    }
    if (mass <= kZeroProbability) return std::nullopt;
    for (auto& [key, prob] : conditional) prob /= mass;
    // Fill unseen triples so downstream tables always have eight rows.
    for (int v = 0; v < 8; ++v) {
        std::string triple = {static_cast<char>('0' + ((v >> 2) & 1)),
                              static_cast<char>('0' + ((v >> 1) & 1)),
                              static_cast<char>('0' + (v & 1))};
        conditional.emplace(triple, 0.0);
    }
    return conditional;
}

std::array<double, 8> ff_distribution(const OutcomeDistribution& dist, FunctionKind kind) {
    std::array<double, 8> out{};
    for (const auto& [key, prob] : dist) {
        if (key.size() != 6)
            throw std::invalid_argument("ff_distribution: outcome keys must have six bits");
        std::array<int, 6> s{};
        for (int i = 0; i < 6; ++i) s[static_cast<std::size_t>(i)] = key[static_cast<std::size_t>(i)] - '0';
        const auto logical = logical_output(s, kind);
        out[static_cast<std::size_t>(logical[0] * 4 + logical[1] * 2 + logical[2])] += prob;
    }
    return out;
}

}  // namespace cdj
