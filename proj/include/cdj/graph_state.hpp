#pragma once

#include "cdj/quantum.hpp"

#include <string>
#include <utility>
#include <vector>

namespace cdj {

/// Physical encoding of the six cluster qubits: two photons (A carries
/// qubits 1-3, B carries 4-6) and one degree of freedom per qubit pair.
enum class Dof { momentum_ei, polarization, momentum_rl };

struct QubitLabel {
    int index = 0;     // 1..6
    char photon = 'A';  // 'A' or 'B'
    Dof dof = Dof::momentum_ei;
};

/// Fixed label assignment: {1,4} E/I momentum, {2,5} polarization,
/// {3,6} r/l momentum; 1-3 photon A, 4-6 photon B.
QubitLabel qubit_label(int index);

/// Simple undirected graph over 1-based vertices; defines a graph state and
/// its stabilizer generators. Edges are stored normalized (a < b) and sorted.
struct Graph {
    int n_vertices = 0;
    std::vector<std::pair<int, int>> edges;

    Graph() = default;
    Graph(int n, std::vector<std::pair<int, int>> e);

    std::vector<int> neighbors(int vertex) const;
    bool has_edge(int a, int b) const;
};

enum class Frame { cluster, laboratory };

/// CZ over every edge applied to |+>^n. Edge order is irrelevant.
StateVector graph_state(const Graph& g);

/// Generators K_i = X_i prod_{j in N(i)} Z_j, one per vertex.
std::vector<PauliString> stabilizers(const Graph& g);

/// Three disjoint pairs {(1,4),(2,5),(3,6)}: the hyperentangled graph.
Graph he6_graph();
/// The pairs plus the photon-A links (1,2),(2,3).
Graph e_graph();

StateVector he6_cluster();
/// Explicit Bell-pair product (|00>+|11>)_14 (|00>-|11>)_25 (|01>+|10>)_36,
/// encoding E->0, I->1, H->0, V->1, r->0, l->1.
StateVector he6_lab();

StateVector e_cluster();
StateVector e_lab();

/// Single-qubit rotation taking the cluster frame to the laboratory frame:
/// identity on qubits 1-3, H on 4, Z*H on 5, X*H on 6.
Eigen::Matrix2cd lab_rotation(int qubit);

/// Applies H4 * Z5H5 * X6H6 (to == laboratory) or its inverse (to == cluster)
/// to a six-qubit state.
StateVector frame_transform(const StateVector& state, Frame to);

}  // namespace cdj
