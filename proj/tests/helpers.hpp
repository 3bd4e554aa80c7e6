// Test-only utilities: random states and unitaries, dense kron-built
// observables, and an independent closed-form evaluator for the DJ output.
// These stay separate from the library so they can serve as oracles for it.
#pragma once

#include "cdj/dj.hpp"
#include "cdj/quantum.hpp"

#include <bit>
#include <cmath>
#include <random>
#include <vector>

namespace cdj::testing {

inline StateVector random_state(int n_qubits, std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Vector amps(std::int64_t{1} << n_qubits);
    for (std::int64_t i = 0; i < amps.size(); ++i)
        amps[i] = Complex{normal(rng), normal(rng)};
    StateVector state(n_qubits, std::move(amps));
    state.normalize();
    return state;
}

inline Matrix random_unitary(int dim, std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Matrix m(dim, dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) m(r, c) = Complex{normal(rng), normal(rng)};
    const Eigen::HouseholderQR<Matrix> qr(m);
    return qr.householderQ();
}

inline DensityMatrix random_density(int n_qubits, std::mt19937_64& rng, int max_terms = 4) {
    const int terms = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_terms));
    std::vector<double> weights(static_cast<std::size_t>(terms));
    double sum = 0.0;
    for (double& w : weights) {
        w = std::uniform_real_distribution<double>(0.01, 1.0)(rng);
        sum += w;
    }
    std::vector<std::pair<double, DensityMatrix>> mixture;
    mixture.reserve(weights.size());
    for (std::size_t i = 0; i < weights.size(); ++i) {
        double w = weights[i] / sum;
        // Make the weights sum to 1 exactly despite rounding.
        if (i + 1 == weights.size()) {
            w = 1.0;
            for (std::size_t j = 0; j + 1 < weights.size(); ++j) w -= mixture[j].first;
        }
        mixture.emplace_back(w, to_density(random_state(n_qubits, rng)));
    }
    return mix(mixture);
}

inline Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c)
            out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
    return out;
}

inline Matrix pauli_matrix(char letter) {
    Matrix m(2, 2);
    switch (letter) {
        case 'X': m << 0, 1, 1, 0; break;
        case 'Y': m << Complex{0, 0}, Complex{0, -1}, Complex{0, 1}, Complex{0, 0}; break;
        case 'Z': m << 1, 0, 0, -1; break;
        default: m = Matrix::Identity(2, 2); break;
    }
    return m;
}

inline Matrix dense_pauli(const PauliString& p) {
    Matrix out = Matrix::Identity(1, 1);
    for (char letter : p.letters) out = kron(out, pauli_matrix(letter));
    return static_cast<double>(p.sign) * out;
}

// (1/2^n) sum_{x,y} (-1)^{f(x) + x.y} |y>|1>, evaluated term by term.
inline StateVector dj_closed_form(const BooleanFunction& f) {
    const int n = f.n;
    const std::size_t inputs = std::size_t{1} << n;
    Vector amps = Vector::Zero(std::int64_t{1} << (n + 1));
    const double scale = 1.0 / static_cast<double>(inputs);
    for (std::size_t x = 0; x < inputs; ++x)
        for (std::size_t y = 0; y < inputs; ++y) {
            const int dot = std::popcount(x & y) & 1;
            const double sign = ((f.table[x] + dot) % 2 == 0) ? 1.0 : -1.0;
            amps[static_cast<std::int64_t>((y << 1) | 1u)] += sign * scale;
        }
    return StateVector(n + 1, std::move(amps));
}

}  // namespace cdj::testing
