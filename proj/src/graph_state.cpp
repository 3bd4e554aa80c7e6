#include "cdj/graph_state.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cdj {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

Eigen::Matrix2cd hadamard_matrix() {
    Eigen::Matrix2cd h;
    const double s = 1.0 / std::sqrt(2.0);
    h << s, s, s, -s;
    return h;
}

}  // namespace

QubitLabel qubit_label(int index) {
    require(index >= 1 && index <= 6, "qubit_label: index must be 1..6");
    QubitLabel label;
    label.index = index;
    label.photon = index <= 3 ? 'A' : 'B';
    switch ((index - 1) % 3) {
        case 0: label.dof = Dof::momentum_ei; break;
        case 1: label.dof = Dof::polarization; break;
        default: label.dof = Dof::momentum_rl; break;
    }
    return label;
}

Graph::Graph(int n, std::vector<std::pair<int, int>> e) : n_vertices(n), edges(std::move(e)) {
    require(n_vertices >= 1, "Graph: needs at least one vertex");
    for (auto& [a, b] : edges) {
        require(a != b, "Graph: self-loops are not allowed");
        require(a >= 1 && a <= n_vertices && b >= 1 && b <= n_vertices,
                "Graph: edge index out of range");
        if (a > b) std::swap(a, b);
    }
    std::sort(edges.begin(), edges.end());
    require(std::adjacent_find(edges.begin(), edges.end()) == edges.end(),
            "Graph: duplicate edge");
}

std::vector<int> Graph::neighbors(int vertex) const {
    require(vertex >= 1 && vertex <= n_vertices, "Graph: vertex out of range");
    std::vector<int> out;
    for (const auto& [a, b] : edges) {
        if (a == vertex) out.push_back(b);
        if (b == vertex) out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool Graph::has_edge(int a, int b) const {
    if (a > b) std::swap(a, b);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(a, b));
}

StateVector graph_state(const Graph& g) {
    const int n = g.n_vertices;
    const std::size_t dim = std::size_t{1} << n;
    const double amp = 1.0 / std::sqrt(static_cast<double>(dim));
    Vector amps = Vector::Constant(static_cast<std::int64_t>(dim), Complex{amp, 0.0});
    // CZ gates are diagonal, so edge order cannot matter: each edge flips
    // the sign of every index with both endpoint bits set.
    for (const auto& [a, b] : g.edges) {
        const std::size_t mask = (std::size_t{1} << bit_shift(n, a)) |
                                 (std::size_t{1} << bit_shift(n, b));
        for (std::size_t i = 0; i < dim; ++i)
            if ((i & mask) == mask) amps[static_cast<std::int64_t>(i)] = -amps[static_cast<std::int64_t>(i)];
    }
    return StateVector(n, std::move(amps));
}

std::vector<PauliString> stabilizers(const Graph& g) {
    std::vector<PauliString> out;
    out.reserve(static_cast<std::size_t>(g.n_vertices));
    for (int v = 1; v <= g.n_vertices; ++v) {
        std::string letters(static_cast<std::size_t>(g.n_vertices), 'I');
        letters[static_cast<std::size_t>(v - 1)] = 'X';
        for (int nb : g.neighbors(v)) letters[static_cast<std::size_t>(nb - 1)] = 'Z';
        out.emplace_back(std::move(letters), +1);
    }
    return out;
}

Graph he6_graph() { return Graph(6, {{1, 4}, {2, 5}, {3, 6}}); }

Graph e_graph() { return Graph(6, {{1, 4}, {2, 5}, {3, 6}, {1, 2}, {2, 3}}); }

StateVector he6_cluster() { return graph_state(he6_graph()); }

StateVector he6_lab() {
    // (|00>+|11>)_14 (x) (|00>-|11>)_25 (x) (|01>+|10>)_36, all over sqrt(2).
    const double c = 1.0 / std::sqrt(8.0);
    Vector amps = Vector::Zero(64);
    for (int b1 = 0; b1 < 2; ++b1)
        for (int b2 = 0; b2 < 2; ++b2)
            for (int b3 = 0; b3 < 2; ++b3) {
                const int b4 = b1;       // phi+ correlation
                const int b5 = b2;       // phi- correlation
                const int b6 = 1 - b3;   // psi+ anticorrelation
                const double s = (b2 == 1) ? -1.0 : 1.0;
                const std::size_t index =
                    (static_cast<std::size_t>(b1) << 5) | (static_cast<std::size_t>(b2) << 4) |
                    (static_cast<std::size_t>(b3) << 3) | (static_cast<std::size_t>(b4) << 2) |
                    (static_cast<std::size_t>(b5) << 1) | static_cast<std::size_t>(b6);
                amps[static_cast<std::int64_t>(index)] = Complex{s * c, 0.0};
            }
    return StateVector(6, std::move(amps));
}

namespace {

StateVector apply_photon_a_links(const StateVector& state) {
    StateVector out = apply_gate(state, gates::cz(1, 2));
    return apply_gate(out, gates::cz(2, 3));
}

}  // namespace

StateVector e_cluster() { return apply_photon_a_links(he6_cluster()); }

StateVector e_lab() { return apply_photon_a_links(he6_lab()); }

Eigen::Matrix2cd lab_rotation(int qubit) {
    require(qubit >= 1 && qubit <= 6, "lab_rotation: qubit must be 1..6");
    const Eigen::Matrix2cd h = hadamard_matrix();
    Eigen::Matrix2cd z;
    z << 1, 0, 0, -1;
    Eigen::Matrix2cd x;
    x << 0, 1, 1, 0;
    switch (qubit) {
        case 4: return h;
        case 5: return z * h;
        case 6: return x * h;
        default: return Eigen::Matrix2cd::Identity();
    }
}

StateVector frame_transform(const StateVector& state, Frame to) {
    require(state.n_qubits == 6, "frame_transform: state must have six qubits");
    StateVector out = state;
    for (int q = 4; q <= 6; ++q) {
        Eigen::Matrix2cd u = lab_rotation(q);
        if (to == Frame::cluster) u = u.adjoint().eval();
        out = apply_gate(out, gates::single_qubit(u, q));
    }
    return out;
}

}  // namespace cdj
