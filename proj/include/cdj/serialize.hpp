#pragma once

#include "cdj/characterization.hpp"
#include "cdj/dj.hpp"
#include "cdj/graph_state.hpp"
#include "cdj/mbqc.hpp"
#include "cdj/noise.hpp"

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace cdj {

/// Edge list of the form "1-4, 2-5, 3-6, 1-2, 2-3". Vertex count defaults
/// to the largest index mentioned.
Graph parse_edge_list(const std::string& text, int n_vertices = 0);
std::string format_edge_list(const Graph& g);

/// Pattern file: a "function=balanced|constant" line followed by one
/// "qubit=<q> basis=B(<alpha>)|C role=oracle|readout" line per step.
/// Parsed patterns are validated against the published configurations.
MeasurementPattern parse_pattern(std::istream& in);
MeasurementPattern parse_pattern_file(const std::string& path);
std::string format_pattern(const MeasurementPattern& pattern);

/// Profile literal "pEI:0.15,pPol:0.04,pRl:0.01" (keys case-insensitive,
/// any order, missing keys default to 0).
NoiseProfile parse_noise_literal(const std::string& text);
std::string format_noise_literal(const NoiseProfile& profile);

/// Function literal: "balanced", "constant", "f=0110" or a bare bit-string.
BooleanFunction parse_function_literal(const std::string& text);

/// Reference table file: comment lines start with '#'; eight data lines
/// "label p_noff p_ff" with labels 000..111 (or |000>) in any order and
/// probabilities in [0,1]. Each column must sum to 1 within 0.02.
struct ReferenceTable {
    std::array<double, 8> no_ff{};
    std::array<double, 8> ff{};
};

ReferenceTable parse_reference_table(std::istream& in);
ReferenceTable load_reference_table(const std::string& path);

/// Everything cmd_run reports; serializable as aligned text or JSON lines.
struct RunReport {
    FunctionKind kind = FunctionKind::balanced;
    std::string truth_table;
    Frame frame = Frame::cluster;
    NoiseProfile profile;
    bool exact = false;
    std::optional<std::uint64_t> seed;
    std::optional<long> shots;
    FunctionClass decision = FunctionClass::neither;
    int oracle_calls = 0;
    OutputTable table;
};

std::string run_report_text(const RunReport& report);
/// One header record then eight row records; identical config and seed give
/// byte-identical output.
std::string run_report_jsonl(const RunReport& report);

std::string to_string(FunctionKind kind);
std::string to_string(Frame frame);
FunctionKind parse_function_kind(const std::string& text);
Frame parse_frame(const std::string& text);

}  // namespace cdj
