#include "cdj/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cdj {

namespace {

bool is_power_of_two_dim(std::size_t d, int n) {
    return n >= 1 && d == (std::size_t{1} << n);
}

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

StateVector::StateVector(int n, Vector a) : n_qubits(n), amps(std::move(a)) {
    require(is_power_of_two_dim(dim(), n_qubits),
            "StateVector: amplitude count must be 2^n_qubits");
}

StateVector& StateVector::normalize() {
    const double nrm = norm();
    require(nrm > kZeroProbability, "StateVector: cannot normalize zero vector");
    amps /= nrm;
    return *this;
}

StateVector basis_state(int n_qubits, const std::string& bits) {
    require(n_qubits >= 1, "basis_state: need at least one qubit");
    require(static_cast<int>(bits.size()) == n_qubits,
            "basis_state: bit-string length must equal n_qubits");
    std::size_t index = 0;
    for (char c : bits) {
        require(c == '0' || c == '1', "basis_state: bits must be 0 or 1");
        index = (index << 1) | static_cast<std::size_t>(c - '0');
    }
    Vector amps = Vector::Zero(std::int64_t{1} << n_qubits);
    amps[static_cast<std::int64_t>(index)] = Complex{1.0, 0.0};
    return StateVector(n_qubits, std::move(amps));
}

GateOp::GateOp(Matrix m, std::vector<int> t) : matrix(std::move(m)), targets(std::move(t)) {
    require(!targets.empty(), "GateOp: needs at least one target");
    const std::size_t d = std::size_t{1} << targets.size();
    require(matrix.rows() == static_cast<std::int64_t>(d) &&
                matrix.cols() == static_cast<std::int64_t>(d),
            "GateOp: matrix dimension must be 2^k for k targets");
    std::vector<int> sorted = targets;
    std::sort(sorted.begin(), sorted.end());
    require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
            "GateOp: duplicate target qubits");
    const Matrix gram = matrix.adjoint() * matrix;
    require((gram - Matrix::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff() <=
                kAlgebraTol,
            "GateOp: matrix is not unitary");
}

namespace gates {

GateOp hadamard(int q) {
    Eigen::Matrix2cd h;
    const double s = 1.0 / std::sqrt(2.0);
    h << s, s, s, -s;
    return GateOp(h, {q});
}

GateOp pauli_x(int q) {
    Eigen::Matrix2cd x;
    x << 0, 1, 1, 0;
    return GateOp(x, {q});
}

GateOp pauli_z(int q) {
    Eigen::Matrix2cd z;
    z << 1, 0, 0, -1;
    return GateOp(z, {q});
}

GateOp cz(int a, int b) {
    Matrix m = Matrix::Identity(4, 4);
    m(3, 3) = -1.0;
    return GateOp(std::move(m), {a, b});
}

GateOp cnot(int control, int target) {
    Matrix m = Matrix::Zero(4, 4);
    m(0, 0) = 1.0;
    m(1, 1) = 1.0;
    m(2, 3) = 1.0;
    m(3, 2) = 1.0;
    return GateOp(std::move(m), {control, target});
}

GateOp single_qubit(const Eigen::Matrix2cd& u, int q) { return GateOp(u, {q}); }

}  // namespace gates

StateVector apply_gate(const StateVector& state, const GateOp& gate) {
    const int n = state.n_qubits;
    const int k = gate.arity();
    for (int t : gate.targets)
        require(t >= 1 && t <= n, "apply_gate: target qubit out of range");

    // Per-target strides; target j supplies local bit (k-1-j).
    std::vector<std::size_t> stride(static_cast<std::size_t>(k));
    std::size_t target_mask = 0;
    for (int j = 0; j < k; ++j) {
        stride[static_cast<std::size_t>(j)] =
            std::size_t{1} << bit_shift(n, gate.targets[static_cast<std::size_t>(j)]);
        target_mask |= stride[static_cast<std::size_t>(j)];
    }
    const std::size_t local_dim = std::size_t{1} << k;
    std::vector<std::size_t> offset(local_dim, 0);
    for (std::size_t l = 0; l < local_dim; ++l)
        for (int j = 0; j < k; ++j)
            if ((l >> (k - 1 - j)) & 1u) offset[l] |= stride[static_cast<std::size_t>(j)];

    StateVector out = state;
    std::vector<Complex> scratch(local_dim);
    for (std::size_t base = 0; base < state.dim(); ++base) {
        if (base & target_mask) continue;
        for (std::size_t l = 0; l < local_dim; ++l)
            scratch[l] = state.amps[static_cast<std::int64_t>(base | offset[l])];
        for (std::size_t r = 0; r < local_dim; ++r) {
            Complex acc{0.0, 0.0};
            for (std::size_t c = 0; c < local_dim; ++c)
                acc += gate.matrix(static_cast<std::int64_t>(r), static_cast<std::int64_t>(c)) *
                       scratch[c];
            out.amps[static_cast<std::int64_t>(base | offset[r])] = acc;
        }
    }
    return out;
}

Matrix embed_gate(const GateOp& gate, int n_qubits) {
    const int k = gate.arity();
    for (int t : gate.targets)
        require(t >= 1 && t <= n_qubits, "embed_gate: target qubit out of range");
    const std::size_t dim = std::size_t{1} << n_qubits;
    std::vector<int> shifts(static_cast<std::size_t>(k));
    std::size_t target_mask = 0;
    for (int j = 0; j < k; ++j) {
        shifts[static_cast<std::size_t>(j)] =
            bit_shift(n_qubits, gate.targets[static_cast<std::size_t>(j)]);
        target_mask |= std::size_t{1} << shifts[static_cast<std::size_t>(j)];
    }
    auto local_of = [&](std::size_t idx) {
        std::size_t l = 0;
        for (int j = 0; j < k; ++j)
            l |= ((idx >> shifts[static_cast<std::size_t>(j)]) & 1u) << (k - 1 - j);
        return l;
    };
    Matrix full = Matrix::Zero(static_cast<std::int64_t>(dim), static_cast<std::int64_t>(dim));
    for (std::size_t col = 0; col < dim; ++col) {
        const std::size_t rest = col & ~target_mask;
        const std::size_t lc = local_of(col);
        for (std::size_t lr = 0; lr < (std::size_t{1} << k); ++lr) {
            std::size_t row = rest;
            for (int j = 0; j < k; ++j)
                row |= ((lr >> (k - 1 - j)) & 1u) << shifts[static_cast<std::size_t>(j)];
            full(static_cast<std::int64_t>(row), static_cast<std::int64_t>(col)) =
                gate.matrix(static_cast<std::int64_t>(lr), static_cast<std::int64_t>(lc));
        }
    }
    return full;
}

PauliString::PauliString(std::string l, int s) : letters(std::move(l)), sign(s) {
    require(sign == 1 || sign == -1, "PauliString: sign must be +-1");
    for (char c : letters)
        require(c == 'I' || c == 'X' || c == 'Y' || c == 'Z',
                "PauliString: letters must be one of IXYZ");
}

PauliString PauliString::identity(int n_qubits) {
    require(n_qubits >= 1, "PauliString: need at least one qubit");
    return PauliString(std::string(static_cast<std::size_t>(n_qubits), 'I'), +1);
}

bool PauliString::commutes_with(const PauliString& other) const {
    require(n_qubits() == other.n_qubits(), "PauliString: length mismatch");
    int anti = 0;
    for (int i = 0; i < n_qubits(); ++i) {
        const char a = letters[static_cast<std::size_t>(i)];
        const char b = other.letters[static_cast<std::size_t>(i)];
        if (a != 'I' && b != 'I' && a != b) ++anti;
    }
    return anti % 2 == 0;
}

PauliString PauliString::operator*(const PauliString& other) const {
    require(n_qubits() == other.n_qubits(), "PauliString: length mismatch");
    // Phase tracked as i^k; single-letter products follow XY = iZ and its
    // cyclic relatives.
    auto letter_product = [](char a, char b, int& quarter_turns) -> char {
        if (a == 'I') return b;
        if (b == 'I') return a;
        if (a == b) return 'I';
        static const std::string order = "XYZ";
        const int ia = static_cast<int>(order.find(a));
        const int ib = static_cast<int>(order.find(b));
        // (ia+1)%3 == ib means the cyclic (+i) direction.
        quarter_turns += ((ia + 1) % 3 == ib) ? 1 : 3;
        return order[static_cast<std::size_t>(3 - ia - ib)];
    };
    std::string out(letters.size(), 'I');
    int quarter_turns = 0;
    for (std::size_t i = 0; i < letters.size(); ++i)
        out[i] = letter_product(letters[i], other.letters[i], quarter_turns);
    int s = sign * other.sign;
    switch (quarter_turns % 4) {
        case 0: break;
        case 2: s = -s; break;
        default:
            throw std::invalid_argument("PauliString: product phase is imaginary");
    }
    return PauliString(std::move(out), s);
}

std::string PauliString::str() const {
    return (sign > 0 ? std::string("+") : std::string("-")) + letters;
}

DensityMatrix::DensityMatrix(int n, Matrix m) : n_qubits(n), rho(std::move(m)) {
    require(is_power_of_two_dim(dim(), n_qubits) &&
                rho.rows() == rho.cols(),
            "DensityMatrix: must be square with dimension 2^n_qubits");
}

void DensityMatrix::validate() const {
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > kAlgebraTol)
        throw std::invalid_argument("DensityMatrix: not Hermitian");
    if (std::abs(rho.trace() - Complex{1.0, 0.0}) > kAlgebraTol)
        throw std::invalid_argument("DensityMatrix: trace is not 1");
    Eigen::SelfAdjointEigenSolver<Matrix> solver(rho, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < kEigenvalueFloor)
        throw std::invalid_argument("DensityMatrix: negative eigenvalue");
}

namespace {

// P|i> = phase(i) |i ^ flip_mask>, accumulated per letter.
struct PauliAction {
    std::size_t flip_mask = 0;
    std::vector<Complex> phase;  // indexed by amplitude index
};

PauliAction pauli_action(const PauliString& p, int n_qubits) {
    const std::size_t dim = std::size_t{1} << n_qubits;
    PauliAction action;
    action.phase.assign(dim, Complex{static_cast<double>(p.sign), 0.0});
    for (int q = 1; q <= n_qubits; ++q) {
        const char letter = p.letters[static_cast<std::size_t>(q - 1)];
        if (letter == 'I') continue;
        const std::size_t bit = std::size_t{1} << bit_shift(n_qubits, q);
        if (letter == 'X' || letter == 'Y') action.flip_mask |= bit;
        if (letter == 'Z') {
            for (std::size_t i = 0; i < dim; ++i)
                if (i & bit) action.phase[i] = -action.phase[i];
        } else if (letter == 'Y') {
            for (std::size_t i = 0; i < dim; ++i)
                action.phase[i] *= (i & bit) ? Complex{0.0, -1.0} : Complex{0.0, 1.0};
        }
    }
    return action;
}

double checked_real(Complex value, const char* what) {
    if (std::abs(value.imag()) > kAlgebraTol)
        throw std::runtime_error(std::string(what) + ": value has imaginary part");
    return value.real();
}

}  // namespace

double expectation(const StateVector& state, const PauliString& obs) {
    require(obs.n_qubits() == state.n_qubits, "expectation: length mismatch");
    const auto action = pauli_action(obs, state.n_qubits);
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < state.dim(); ++i) {
        const std::size_t j = i ^ action.flip_mask;
        acc += std::conj(state.amps[static_cast<std::int64_t>(j)]) * action.phase[i] *
               state.amps[static_cast<std::int64_t>(i)];
    }
    return checked_real(acc, "expectation");
}

double expectation(const DensityMatrix& rho, const PauliString& obs) {
    require(obs.n_qubits() == rho.n_qubits, "expectation: length mismatch");
    const auto action = pauli_action(obs, rho.n_qubits);
    Complex acc{0.0, 0.0};
    // Tr(rho P) = sum_i phase(i) rho(i, i ^ flip_mask).
    for (std::size_t i = 0; i < rho.dim(); ++i)
        acc += action.phase[i] *
               rho.rho(static_cast<std::int64_t>(i), static_cast<std::int64_t>(i ^ action.flip_mask));
    return checked_real(acc, "expectation");
}

Projection project(const StateVector& state, int qubit,
                   const Eigen::Vector2cd& basis_vector) {
    require(qubit >= 1 && qubit <= state.n_qubits, "project: qubit out of range");
    require(std::abs(basis_vector.norm() - 1.0) <= kAlgebraTol,
            "project: basis vector must be normalized");

    const std::size_t bit = std::size_t{1} << bit_shift(state.n_qubits, qubit);
    Vector projected = Vector::Zero(static_cast<std::int64_t>(state.dim()));
    // (|v><v| (x) I) psi, written over the qubit's 0/1 planes.
    for (std::size_t i0 = 0; i0 < state.dim(); ++i0) {
        if (i0 & bit) continue;
        const std::size_t i1 = i0 | bit;
        const Complex overlap =
            std::conj(basis_vector[0]) * state.amps[static_cast<std::int64_t>(i0)] +
            std::conj(basis_vector[1]) * state.amps[static_cast<std::int64_t>(i1)];
        projected[static_cast<std::int64_t>(i0)] = overlap * basis_vector[0];
        projected[static_cast<std::int64_t>(i1)] = overlap * basis_vector[1];
    }
    Projection result;
    result.probability = projected.squaredNorm();
    if (result.probability > kZeroProbability) {
        projected /= std::sqrt(result.probability);
        result.post_state = StateVector(state.n_qubits, std::move(projected));
    }
    return result;
}

DensityMatrix to_density(const StateVector& state) {
    Matrix rho = state.amps * state.amps.adjoint();
    return DensityMatrix(state.n_qubits, std::move(rho));
}

DensityMatrix mix(const std::vector<std::pair<double, DensityMatrix>>& terms) {
    require(!terms.empty(), "mix: needs at least one term");
    double weight_sum = 0.0;
    for (const auto& [w, rho] : terms) {
        require(w >= 0.0, "mix: weights must be nonnegative");
        require(rho.n_qubits == terms.front().second.n_qubits,
                "mix: dimension mismatch");
        weight_sum += w;
    }
    require(std::abs(weight_sum - 1.0) <= kAlgebraTol, "mix: weights must sum to 1");
    Matrix acc = Matrix::Zero(terms.front().second.rho.rows(),
                              terms.front().second.rho.cols());
    for (const auto& [w, rho] : terms) acc += w * rho.rho;
    return DensityMatrix(terms.front().second.n_qubits, std::move(acc));
}

DensityMatrix apply_gate(const DensityMatrix& rho, const GateOp& gate) {
    const Matrix full = embed_gate(gate, rho.n_qubits);
    return DensityMatrix(rho.n_qubits, full * rho.rho * full.adjoint());
}

double fidelity_pure(const DensityMatrix& rho, const StateVector& target) {
    require(rho.dim() == target.dim(), "fidelity_pure: dimension mismatch");
    const Complex value = target.amps.adjoint() * rho.rho * target.amps;
    return checked_real(value, "fidelity_pure");
}

Complex inner_product(const StateVector& a, const StateVector& b) {
    require(a.dim() == b.dim(), "inner_product: dimension mismatch");
    return a.amps.adjoint() * b.amps;
}

bool equal_up_to_global_phase(const StateVector& a, const StateVector& b,
                              double tol) {
    return std::abs(inner_product(a, b)) >= 1.0 - tol;
}

}  // namespace cdj
