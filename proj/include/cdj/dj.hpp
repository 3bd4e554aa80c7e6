#pragma once

#include "cdj/quantum.hpp"

#include <string>
#include <vector>

namespace cdj {

/// n-bit boolean function as a truth table; table[x] = f(x) with
/// x = 2^{n-1} x_{n-1} + ... + x_0 and logical qubit 1 holding the most
/// significant input bit.
struct BooleanFunction {
    int n = 0;
    std::vector<int> table;

    BooleanFunction() = default;
    BooleanFunction(int n_bits, std::vector<int> t);
    /// Parses "0110" -> n=2 table {0,1,1,0}; length must be a power of two.
    static BooleanFunction from_bits(const std::string& bits);
    std::string bits() const;
};

enum class FunctionClass { constant, balanced, neither };

std::string to_string(FunctionClass c);

FunctionClass classify(const BooleanFunction& f);

/// The two functions realized on the cluster: f_B = 0110, f_C = 0000.
BooleanFunction f_balanced();
BooleanFunction f_constant();

/// Permutation unitary U_f |x>|y> = |x>|y ^ f(x)> on n+1 qubits (input
/// register on qubits 1..n, ancilla on qubit n+1). Self-inverse.
GateOp oracle_unitary(const BooleanFunction& f);

/// Gate-model reference: (H^n x H) U_f (H^n x H) applied to |0..0>|1>.
StateVector dj_run(const BooleanFunction& f);

struct DjDecision {
    FunctionClass decision = FunctionClass::neither;
    int oracle_calls = 0;
};

/// Runs the circuit once and reads the input register: all-zeros means
/// constant. Requires classify(f) != neither.
DjDecision dj_decide(const BooleanFunction& f);

struct ClassicalDecision {
    FunctionClass decision = FunctionClass::neither;
    int query_count = 0;
};

/// Pointwise evaluation in ascending x, stopping at the first differing
/// pair or after 2^{n-1}+1 agreeing values.
ClassicalDecision classical_decide(const BooleanFunction& f);

}  // namespace cdj
