#include "cdj/serialize.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace cdj {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

double parse_angle(const std::string& text) {
    const std::string t = lower(trim(text));
    if (t == "pi") return std::numbers::pi;
    if (t == "-pi") return -std::numbers::pi;
    if (t == "pi/2") return std::numbers::pi / 2.0;
    if (t == "-pi/2") return -std::numbers::pi / 2.0;
    std::size_t consumed = 0;
    const double value = std::stod(t, &consumed);
    require(consumed == t.size(), "pattern: bad angle '" + text + "'");
    return value;
}

}  // namespace

Graph parse_edge_list(const std::string& text, int n_vertices) {
    std::vector<std::pair<int, int>> edges;
    int max_vertex = 0;
    for (const std::string& raw : split(text, ',')) {
        const std::string token = trim(raw);
        if (token.empty()) continue;
        const auto dash = token.find('-');
        require(dash != std::string::npos, "edge list: expected 'a-b' but got '" + token + "'");
        int a = 0;
        int b = 0;
        try {
            a = std::stoi(trim(token.substr(0, dash)));
            b = std::stoi(trim(token.substr(dash + 1)));
        } catch (const std::exception&) {
            throw std::invalid_argument("edge list: bad edge '" + token + "'");
        }
        edges.emplace_back(a, b);
        max_vertex = std::max({max_vertex, a, b});
    }
    require(!edges.empty(), "edge list: no edges given");
    return Graph(n_vertices > 0 ? n_vertices : max_vertex, std::move(edges));
}

std::string format_edge_list(const Graph& g) {
    std::ostringstream os;
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        if (i) os << ", ";
        os << g.edges[i].first << "-" << g.edges[i].second;
    }
    return os.str();
}

namespace {

PatternStep parse_pattern_step(const std::string& line) {
    PatternStep step;
    bool have_qubit = false;
    bool have_basis = false;
    bool have_role = false;
    std::istringstream is(line);
    std::string field;
    while (is >> field) {
        const auto eq = field.find('=');
        require(eq != std::string::npos, "pattern: expected key=value, got '" + field + "'");
        const std::string key = lower(field.substr(0, eq));
        const std::string value = field.substr(eq + 1);
        if (key == "qubit") {
            step.qubit = std::stoi(value);
            have_qubit = true;
        } else if (key == "basis") {
            if (lower(value) == "c") {
                step.basis = MeasurementBasis::computational();
            } else {
                require(value.size() >= 4 && (value[0] == 'B' || value[0] == 'b') &&
                            value[1] == '(' && value.back() == ')',
                        "pattern: bad basis '" + value + "'");
                step.basis = basis_b(parse_angle(value.substr(2, value.size() - 3)));
            }
            have_basis = true;
        } else if (key == "role") {
            const std::string role = lower(value);
            require(role == "oracle" || role == "readout",
                    "pattern: role must be oracle or readout");
            step.role = role == "oracle" ? StepRole::oracle : StepRole::readout;
            have_role = true;
        } else {
            throw std::invalid_argument("pattern: unknown key '" + key + "'");
        }
    }
    require(have_qubit && have_basis && have_role,
            "pattern: each step needs qubit, basis and role");
    return step;
}

}  // namespace

MeasurementPattern parse_pattern(std::istream& in) {
    std::optional<FunctionKind> kind;
    std::vector<PatternStep> steps;
    std::string line;
    while (std::getline(in, line)) {
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (lower(t).rfind("function=", 0) == 0) {
            kind = parse_function_kind(t.substr(9));
            continue;
        }
        steps.push_back(parse_pattern_step(t));
    }
    require(kind.has_value(), "pattern: missing function= line");
    return MeasurementPattern::from_steps(std::move(steps), *kind);
}

MeasurementPattern parse_pattern_file(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), "pattern: cannot open '" + path + "'");
    return parse_pattern(in);
}

std::string format_pattern(const MeasurementPattern& pattern) {
    require(pattern.frame == Frame::cluster,
            "format_pattern: only cluster-frame patterns are serialized");
    std::ostringstream os;
    os << "function=" << to_string(pattern.kind) << "\n";
    for (const auto& step : pattern.steps) {
        os << "qubit=" << step.qubit << " basis=" << step.basis.label << " role="
           << (step.role == StepRole::oracle ? "oracle" : "readout") << "\n";
    }
    return os.str();
}

NoiseProfile parse_noise_literal(const std::string& text) {
    NoiseProfile profile;
    for (const std::string& raw : split(text, ',')) {
        const std::string token = trim(raw);
        if (token.empty()) continue;
        const auto colon = token.find(':');
        require(colon != std::string::npos, "noise: expected key:value, got '" + token + "'");
        const std::string key = lower(trim(token.substr(0, colon)));
        double value = 0.0;
        try {
            value = std::stod(trim(token.substr(colon + 1)));
        } catch (const std::exception&) {
            throw std::invalid_argument("noise: bad value in '" + token + "'");
        }
        if (key == "pei") profile.p_ei = value;
        else if (key == "ppol") profile.p_pol = value;
        else if (key == "prl") profile.p_rl = value;
        else throw std::invalid_argument("noise: unknown key '" + key + "'");
    }
    profile.validate();
    return profile;
}

std::string format_noise_literal(const NoiseProfile& profile) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "pEI:%.3f,pPol:%.3f,pRl:%.3f", profile.p_ei,
                  profile.p_pol, profile.p_rl);
    return buf;
}

BooleanFunction parse_function_literal(const std::string& text) {
    const std::string t = lower(trim(text));
    if (t == "balanced") return f_balanced();
    if (t == "constant") return f_constant();
    std::string bits = trim(text);
    if (bits.rfind("f=", 0) == 0 || bits.rfind("F=", 0) == 0) bits = bits.substr(2);
    return BooleanFunction::from_bits(bits);
}

namespace {

int parse_row_label(const std::string& token) {
    std::string t = trim(token);
    if (!t.empty() && t.front() == '|') t = t.substr(1);
    if (!t.empty() && (t.back() == '>' || t.back() == ')')) t.pop_back();
    require(t.size() == 3, "reference table: bad row label '" + token + "'");
    int row = 0;
    for (char c : t) {
        require(c == '0' || c == '1', "reference table: bad row label '" + token + "'");
        row = row * 2 + (c - '0');
    }
    return row;
}

}  // namespace

ReferenceTable parse_reference_table(std::istream& in) {
    ReferenceTable table;
    std::array<bool, 8> seen{};
    std::string line;
    int rows = 0;
    while (std::getline(in, line)) {
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        std::istringstream is(t);
        std::string label;
        double no_ff = 0.0;
        double ff = 0.0;
        require(static_cast<bool>(is >> label >> no_ff >> ff),
                "reference table: expected 'label p_noff p_ff' but got '" + t + "'");
        const int row = parse_row_label(label);
        require(!seen[static_cast<std::size_t>(row)], "reference table: duplicate row");
        require(no_ff >= 0.0 && no_ff <= 1.0 && ff >= 0.0 && ff <= 1.0,
                "reference table: probabilities must lie in [0,1]");
        seen[static_cast<std::size_t>(row)] = true;
        table.no_ff[static_cast<std::size_t>(row)] = no_ff;
        table.ff[static_cast<std::size_t>(row)] = ff;
        ++rows;
    }
    require(rows == 8, "reference table: expected eight rows");
    double no_ff_sum = 0.0;
    double ff_sum = 0.0;
    for (int row = 0; row < 8; ++row) {
        no_ff_sum += table.no_ff[static_cast<std::size_t>(row)];
        ff_sum += table.ff[static_cast<std::size_t>(row)];
    }
    require(std::abs(no_ff_sum - 1.0) <= 0.02 && std::abs(ff_sum - 1.0) <= 0.02,
            "reference table: columns must sum to 1");
    return table;
}

ReferenceTable load_reference_table(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), "reference table: cannot open '" + path + "'");
    return parse_reference_table(in);
}

std::string to_string(FunctionKind kind) {
    return kind == FunctionKind::balanced ? "balanced" : "constant";
}

std::string to_string(Frame frame) {
    return frame == Frame::cluster ? "cluster" : "laboratory";
}

FunctionKind parse_function_kind(const std::string& text) {
    const std::string t = lower(trim(text));
    if (t == "balanced") return FunctionKind::balanced;
    if (t == "constant") return FunctionKind::constant;
    throw std::invalid_argument("expected 'balanced' or 'constant', got '" + text + "'");
}

Frame parse_frame(const std::string& text) {
    const std::string t = lower(trim(text));
    if (t == "cluster") return Frame::cluster;
    if (t == "laboratory" || t == "lab") return Frame::laboratory;
    throw std::invalid_argument("expected 'cluster' or 'laboratory', got '" + text + "'");
}

std::string run_report_text(const RunReport& report) {
    std::ostringstream os;
    os << "function: " << to_string(report.kind) << " (f=" << report.truth_table << ")\n";
    os << "frame: " << to_string(report.frame) << "\n";
    os << "noise: " << format_noise_literal(report.profile) << "\n";
    os << "mode: " << (report.exact ? "exact" : "sampled");
    if (report.shots) os << "   shots: " << *report.shots;
    if (report.seed) os << "   seed: " << *report.seed;
    os << "\n";
    os << "decision: " << to_string(report.decision)
       << "   oracle calls: " << report.oracle_calls << "\n";
    os << format_table_text(report.table);
    return os.str();
}

std::string run_report_jsonl(const RunReport& report) {
    using json = nlohmann::ordered_json;
    std::ostringstream os;
    json header;
    header["record"] = "header";
    header["function"] = to_string(report.kind);
    header["truth_table"] = report.truth_table;
    header["frame"] = to_string(report.frame);
    header["profile"] = {{"pEI", report.profile.p_ei},
                         {"pPol", report.profile.p_pol},
                         {"pRl", report.profile.p_rl}};
    header["mode"] = report.exact ? "exact" : "sampled";
    header["shots"] = report.shots ? json(*report.shots) : json(nullptr);
    header["seed"] = report.seed ? json(*report.seed) : json(nullptr);
    header["decision"] = to_string(report.decision);
    header["oracle_calls"] = report.oracle_calls;
    os << header.dump() << "\n";
    for (const auto& row : report.table.rows) {
        json record;
        record["record"] = "row";
        record["row_label"] = row.label;
        record["no_ff"] = row.no_ff ? json(*row.no_ff) : json(nullptr);
        record["ff"] = row.ff;
        os << record.dump() << "\n";
    }
    return os.str();
}

}  // namespace cdj
