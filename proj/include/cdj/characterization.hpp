#pragma once

#include "cdj/graph_state.hpp"
#include "cdj/mbqc.hpp"
#include "cdj/quantum.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace cdj {

/// Stabilizer witness W = 3 - 2(P_even + P_odd) with
/// P_group = prod_{i in group} (g_i + 1)/2, generators split by vertex
/// parity. The subset products are expanded into signed Pauli strings once
/// at construction, so an evaluation is a fixed list of expectation calls.
struct WitnessSpec {
    std::vector<PauliString> odd_generators;
    std::vector<PauliString> even_generators;
    std::vector<PauliString> odd_terms;   // 2^|odd| subset products
    std::vector<PauliString> even_terms;  // 2^|even| subset products

    static WitnessSpec from_generators(std::vector<PauliString> odd,
                                       std::vector<PauliString> even);
    static WitnessSpec for_graph(const Graph& g);
    /// E-cluster witness; Frame::laboratory conjugates every generator by
    /// the frame rotation on qubits 4-6.
    static WitnessSpec e_cluster_spec(Frame frame = Frame::cluster);
};

double witness_expectation(const DensityMatrix& rho, const WitnessSpec& spec);
double witness_expectation(const StateVector& state, const WitnessSpec& spec);

/// F >= (1 - <W>)/2.
double fidelity_lower_bound(double witness_value);

/// Table-I-shaped report: eight rows |000>..|111>, a No-FF conditional
/// column (absent when the conditioning event has zero mass) and an FF
/// column over all outcomes.
struct OutputTable {
    struct Row {
        std::string label;  // "000".."111"
        std::optional<double> no_ff;
        double ff = 0.0;
        std::optional<double> no_ff_err;
        std::optional<double> ff_err;
    };

    FunctionKind kind = FunctionKind::balanced;
    int expected_row = 0;  // 111 for balanced, 001 for constant
    bool no_ff_available = false;
    std::array<Row, 8> rows;
};

OutputTable render_table(const OutcomeDistribution& dist, FunctionKind kind);

/// Aligned plain text, percentages to one decimal, expected row starred.
std::string format_table_text(const OutputTable& table);

}  // namespace cdj
