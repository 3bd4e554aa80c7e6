#include "cdj/characterization.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace cdj {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

// All 2^k subset products of a commuting generator set, identity included.
std::vector<PauliString> subset_products(const std::vector<PauliString>& generators,
                                         int n_qubits) {
    std::vector<PauliString> terms{PauliString::identity(n_qubits)};
    for (const auto& g : generators) {
        const std::size_t count = terms.size();
        for (std::size_t i = 0; i < count; ++i) terms.push_back(terms[i] * g);
    }
    return terms;
}

// Matches u P u^dag against a signed Pauli letter; exact for the Clifford
// rotations used by the laboratory frame.
PauliString conjugate_by_local(const PauliString& p,
                               const std::vector<Eigen::Matrix2cd>& rotations) {
    static const char kLetters[] = {'I', 'X', 'Y', 'Z'};
    const auto letter_matrix = [](char letter) {
        Eigen::Matrix2cd m;
        switch (letter) {
            case 'X': m << 0, 1, 1, 0; break;
            case 'Y': m << Complex{0, 0}, Complex{0, -1}, Complex{0, 1}, Complex{0, 0}; break;
            case 'Z': m << 1, 0, 0, -1; break;
            default: m = Eigen::Matrix2cd::Identity(); break;
        }
        return m;
    };
    std::string letters = p.letters;
    int sign = p.sign;
    for (std::size_t q = 0; q < letters.size(); ++q) {
        const Eigen::Matrix2cd& u = rotations[q];
        const Eigen::Matrix2cd conj = u * letter_matrix(letters[q]) * u.adjoint();
        bool matched = false;
        for (char candidate : kLetters) {
            const Eigen::Matrix2cd target = letter_matrix(candidate);
            if ((conj - target).cwiseAbs().maxCoeff() <= kAlgebraTol) {
                letters[q] = candidate;
                matched = true;
                break;
            }
            if ((conj + target).cwiseAbs().maxCoeff() <= kAlgebraTol) {
                letters[q] = candidate;
                sign = -sign;
                matched = true;
                break;
            }
        }
        require(matched, "WitnessSpec: rotation does not map Pauli to Pauli");
    }
    return PauliString(std::move(letters), sign);
}

}  // namespace

WitnessSpec WitnessSpec::from_generators(std::vector<PauliString> odd,
                                         std::vector<PauliString> even) {
    require(!odd.empty() && !even.empty(), "WitnessSpec: generator groups must be nonempty");
    const int n = odd.front().n_qubits();
    std::vector<PauliString> all;
    all.insert(all.end(), odd.begin(), odd.end());
    all.insert(all.end(), even.begin(), even.end());
    for (const auto& g : all)
        require(g.n_qubits() == n, "WitnessSpec: generator length mismatch");
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j)
            require(all[i].commutes_with(all[j]), "WitnessSpec: generators must commute");

    WitnessSpec spec;
    spec.odd_terms = subset_products(odd, n);
    spec.even_terms = subset_products(even, n);
    spec.odd_generators = std::move(odd);
    spec.even_generators = std::move(even);
    return spec;
}

WitnessSpec WitnessSpec::for_graph(const Graph& g) {
    const auto gens = stabilizers(g);
    std::vector<PauliString> odd;
    std::vector<PauliString> even;
    for (int v = 1; v <= g.n_vertices; ++v)
        (v % 2 == 1 ? odd : even).push_back(gens[static_cast<std::size_t>(v - 1)]);
    return from_generators(std::move(odd), std::move(even));
}

WitnessSpec WitnessSpec::e_cluster_spec(Frame frame) {
    if (frame == Frame::cluster) return for_graph(e_graph());
    std::vector<Eigen::Matrix2cd> rotations;
    rotations.reserve(6);
    for (int q = 1; q <= 6; ++q) rotations.push_back(lab_rotation(q));
    const auto gens = stabilizers(e_graph());
    std::vector<PauliString> odd;
    std::vector<PauliString> even;
    for (int v = 1; v <= 6; ++v) {
        PauliString conjugated = conjugate_by_local(gens[static_cast<std::size_t>(v - 1)], rotations);
        (v % 2 == 1 ? odd : even).push_back(std::move(conjugated));
    }
    return from_generators(std::move(odd), std::move(even));
}

namespace {

template <typename State>
double witness_value(const State& state, const WitnessSpec& spec) {
    double odd_sum = 0.0;
    for (const auto& term : spec.odd_terms) odd_sum += expectation(state, term);
    double even_sum = 0.0;
    for (const auto& term : spec.even_terms) even_sum += expectation(state, term);
    const double odd_projector = odd_sum / static_cast<double>(spec.odd_terms.size());
    const double even_projector = even_sum / static_cast<double>(spec.even_terms.size());
    return 3.0 - 2.0 * (even_projector + odd_projector);
}

}  // namespace

double witness_expectation(const DensityMatrix& rho, const WitnessSpec& spec) {
    return witness_value(rho, spec);
}

double witness_expectation(const StateVector& state, const WitnessSpec& spec) {
    return witness_value(state, spec);
}

double fidelity_lower_bound(double witness_value) { return 0.5 * (1.0 - witness_value); }

OutputTable render_table(const OutcomeDistribution& dist, FunctionKind kind) {
    require(!dist.empty(), "render_table: empty distribution");
    OutputTable table;
    table.kind = kind;
    table.expected_row = kind == FunctionKind::balanced ? 7 : 1;

    const auto ff = ff_distribution(dist, kind);
    const auto no_ff = no_ff_filter(dist, kind);
    table.no_ff_available = no_ff.has_value();

    double ff_sum = 0.0;
    double no_ff_sum = 0.0;
    for (int row = 0; row < 8; ++row) {
        std::string label = {static_cast<char>('0' + ((row >> 2) & 1)),
                             static_cast<char>('0' + ((row >> 1) & 1)),
                             static_cast<char>('0' + (row & 1))};
        auto& entry = table.rows[static_cast<std::size_t>(row)];
        entry.label = label;
        entry.ff = ff[static_cast<std::size_t>(row)];
        ff_sum += entry.ff;
        if (no_ff) {
            entry.no_ff = no_ff->at(label);
            no_ff_sum += *entry.no_ff;
        }
    }
    require(std::abs(ff_sum - 1.0) <= 0.01, "render_table: FF column must sum to 1");
    require(!table.no_ff_available || std::abs(no_ff_sum - 1.0) <= 0.01,
            "render_table: No-FF column must sum to 1");
    return table;
}

std::string format_table_text(const OutputTable& table) {
    std::ostringstream os;
    os << "output     No-FF(%)   FF(%)\n";
    char buf[64];
    for (int row = 0; row < 8; ++row) {
        const auto& entry = table.rows[static_cast<std::size_t>(row)];
        const char marker = row == table.expected_row ? '*' : ' ';
        std::string no_ff = "   n/a";
        if (entry.no_ff) {
            std::snprintf(buf, sizeof buf, "%6.1f", *entry.no_ff * 100.0);
            no_ff = buf;
        }
        std::snprintf(buf, sizeof buf, "%6.1f", entry.ff * 100.0);
        os << "|" << entry.label << ">" << marker << "    " << no_ff << "     " << buf << "\n";
    }
    os << "(* expected output)\n";
    return os.str();
}

}  // namespace cdj
