#include "cdj/dj.hpp"

#include <functional>
#include <stdexcept>

namespace cdj {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

constexpr int kMaxInputBits = 10;

StateVector run_circuit(const BooleanFunction& f,
                        const std::function<GateOp()>& oracle) {
    const int n = f.n;
    // |0>^n |1>, then the (H^n x H) U_f (H^n x H) sandwich.
    StateVector state = basis_state(n + 1, std::string(static_cast<std::size_t>(n), '0') + "1");
    for (int q = 1; q <= n + 1; ++q) state = apply_gate(state, gates::hadamard(q));
    state = apply_gate(state, oracle());
    for (int q = 1; q <= n + 1; ++q) state = apply_gate(state, gates::hadamard(q));
    return state;
}

}  // namespace

BooleanFunction::BooleanFunction(int n_bits, std::vector<int> t)
    : n(n_bits), table(std::move(t)) {
    require(n >= 1 && n <= kMaxInputBits, "BooleanFunction: n must be 1..10");
    require(table.size() == (std::size_t{1} << n),
            "BooleanFunction: table length must be 2^n");
    for (int v : table) require(v == 0 || v == 1, "BooleanFunction: table entries must be bits");
}

BooleanFunction BooleanFunction::from_bits(const std::string& bits) {
    int n = 0;
    while ((std::size_t{1} << n) < bits.size() && n <= kMaxInputBits) ++n;
    require((std::size_t{1} << n) == bits.size(), "BooleanFunction: length must be a power of two");
    std::vector<int> table;
    table.reserve(bits.size());
    for (char c : bits) {
        require(c == '0' || c == '1', "BooleanFunction: bits must be 0 or 1");
        table.push_back(c - '0');
    }
    return BooleanFunction(n, std::move(table));
}

std::string BooleanFunction::bits() const {
    std::string out;
    out.reserve(table.size());
    for (int v : table) out.push_back(static_cast<char>('0' + v));
    return out;
}

std::string to_string(FunctionClass c) {
    switch (c) {
        case FunctionClass::constant: return "constant";
        case FunctionClass::balanced: return "balanced";
        default: return "neither";
    }
}

FunctionClass classify(const BooleanFunction& f) {
    std::size_t ones = 0;
    for (int v : f.table) ones += static_cast<std::size_t>(v);
    if (ones == 0 || ones == f.table.size()) return FunctionClass::constant;
    if (ones * 2 == f.table.size()) return FunctionClass::balanced;
    return FunctionClass::neither;
}

BooleanFunction f_balanced() { return BooleanFunction::from_bits("0110"); }

BooleanFunction f_constant() { return BooleanFunction::from_bits("0000"); }

GateOp oracle_unitary(const BooleanFunction& f) {
    const int n = f.n;
    const std::size_t dim = std::size_t{1} << (n + 1);
    Matrix m = Matrix::Zero(static_cast<std::int64_t>(dim), static_cast<std::int64_t>(dim));
    for (std::size_t col = 0; col < dim; ++col) {
        const std::size_t x = col >> 1;
        const std::size_t y = col & 1u;
        const std::size_t row = (x << 1) | (y ^ static_cast<std::size_t>(f.table[x]));
        m(static_cast<std::int64_t>(row), static_cast<std::int64_t>(col)) = 1.0;
    }
    std::vector<int> targets(static_cast<std::size_t>(n + 1));
    for (int q = 0; q <= n; ++q) targets[static_cast<std::size_t>(q)] = q + 1;
    return GateOp(std::move(m), std::move(targets));
}

StateVector dj_run(const BooleanFunction& f) {
    return run_circuit(f, [&] { return oracle_unitary(f); });
}

DjDecision dj_decide(const BooleanFunction& f) {
    const FunctionClass cls = classify(f);
    require(cls != FunctionClass::neither,
            "dj_decide: function is neither constant nor balanced");
    int calls = 0;
    const StateVector final_state = run_circuit(f, [&] {
        ++calls;
        return oracle_unitary(f);
    });
    // Probability that the n input qubits read all-zeros (ancilla is free).
    double p_zero = 0.0;
    for (std::size_t y = 0; y < 2; ++y)
        p_zero += std::norm(final_state.amps[static_cast<std::int64_t>(y)]);
    DjDecision result;
    result.decision = p_zero > 0.5 ? FunctionClass::constant : FunctionClass::balanced;
    result.oracle_calls = calls;
    return result;
}

ClassicalDecision classical_decide(const BooleanFunction& f) {
    require(classify(f) != FunctionClass::neither,
            "classical_decide: function is neither constant nor balanced");
    const int limit = static_cast<int>(std::size_t{1} << (f.n - 1)) + 1;
    ClassicalDecision result;
    const int first = f.table[0];
    result.query_count = 1;
    for (int x = 1; x < limit; ++x) {
        ++result.query_count;
        if (f.table[static_cast<std::size_t>(x)] != first) {
            result.decision = FunctionClass::balanced;
            return result;
        }
    }
    result.decision = FunctionClass::constant;
    return result;
}

}  // namespace cdj
