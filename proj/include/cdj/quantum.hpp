#pragma once

#include <Eigen/Dense>

#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cdj {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

// Tolerances shared across the library. Algebraic identities (unitarity,
// norms, traces, Hermiticity) are held to kAlgebraTol; measurement branches
// below kZeroProbability are treated as unreachable; density-matrix
// eigenvalues may dip to kEigenvalueFloor from rounding in channel
// compositions.
inline constexpr double kAlgebraTol = 1e-10;
inline constexpr double kZeroProbability = 1e-12;
inline constexpr double kEigenvalueFloor = -1e-9;

/// Dense pure state over n labeled qubits. Qubit 1 is the most significant
/// bit of the amplitude index, so printed bit-strings read left-to-right as
/// (q1 q2 ... qn).
struct StateVector {
    int n_qubits = 0;
    Vector amps;

    StateVector() = default;
    StateVector(int n, Vector a);

    std::size_t dim() const { return static_cast<std::size_t>(amps.size()); }
    double norm() const { return amps.norm(); }
    StateVector& normalize();
};

/// Bit position (shift from the LSB) of 1-based `qubit` in an n-qubit index.
inline int bit_shift(int n_qubits, int qubit) { return n_qubits - qubit; }

inline int bit_of(std::size_t index, int n_qubits, int qubit) {
    return static_cast<int>((index >> bit_shift(n_qubits, qubit)) & 1u);
}

/// Computational basis ket |bits>, bits given MSB-first ("10" -> |10>).
StateVector basis_state(int n_qubits, const std::string& bits);

/// A k-qubit unitary bound to k distinct 1-based targets. The first target
/// is the most significant bit of the gate's local index.
struct GateOp {
    Matrix matrix;
    std::vector<int> targets;

    GateOp(Matrix m, std::vector<int> t);
    int arity() const { return static_cast<int>(targets.size()); }
};

namespace gates {
GateOp hadamard(int q);
GateOp pauli_x(int q);
GateOp pauli_z(int q);
GateOp cz(int a, int b);
GateOp cnot(int control, int target);
GateOp single_qubit(const Eigen::Matrix2cd& u, int q);
}  // namespace gates

/// Applies the unitary to the target qubits; norm is preserved.
StateVector apply_gate(const StateVector& state, const GateOp& gate);

/// Tensor product of I and the gate; row/column index nonzero iff the
/// non-target bits agree.
Matrix embed_gate(const GateOp& gate, int n_qubits);

/// Signed Pauli word, one letter of IXYZ per qubit (index 0 = qubit 1).
struct PauliString {
    std::string letters;
    int sign = +1;

    static PauliString identity(int n_qubits);
    PauliString() = default;
    PauliString(std::string l, int s = +1);

    int n_qubits() const { return static_cast<int>(letters.size()); }
    bool commutes_with(const PauliString& other) const;
    /// Pauli product; throws if the accumulated phase is not real (+-1).
    PauliString operator*(const PauliString& other) const;
    std::string str() const;
};

/// Mixed state as a dense 2^n x 2^n operator.
struct DensityMatrix {
    int n_qubits = 0;
    Matrix rho;

    DensityMatrix() = default;
    DensityMatrix(int n, Matrix m);

    std::size_t dim() const { return static_cast<std::size_t>(rho.rows()); }
    /// Full invariant check: Hermitian and unit trace within kAlgebraTol,
    /// eigenvalues above kEigenvalueFloor (symmetric eigen-solve).
    void validate() const;
};

double expectation(const StateVector& state, const PauliString& obs);
double expectation(const DensityMatrix& rho, const PauliString& obs);

/// Result of projecting one qubit onto a basis vector. `post_state` is the
/// renormalized projection and is absent when the branch probability is at
/// or below kZeroProbability (the branch must not be taken).
struct Projection {
    double probability = 0.0;
    std::optional<StateVector> post_state;
};

Projection project(const StateVector& state, int qubit,
                   const Eigen::Vector2cd& basis_vector);

DensityMatrix to_density(const StateVector& state);

/// Convex combination; weights must be nonnegative and sum to 1.
DensityMatrix mix(const std::vector<std::pair<double, DensityMatrix>>& terms);

DensityMatrix apply_gate(const DensityMatrix& rho, const GateOp& gate);

/// <target|rho|target>.
double fidelity_pure(const DensityMatrix& rho, const StateVector& target);

Complex inner_product(const StateVector& a, const StateVector& b);

/// True iff |<a|b>| >= 1 - tol.
bool equal_up_to_global_phase(const StateVector& a, const StateVector& b,
                              double tol);

}  // namespace cdj
