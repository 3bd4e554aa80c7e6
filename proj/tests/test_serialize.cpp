#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cdj/serialize.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

using namespace cdj;

TEST_CASE("edge list round trip") {
    const Graph g = parse_edge_list("1-4, 2-5, 3-6, 1-2, 2-3");
    CHECK(g.n_vertices == 6);
    CHECK(g.edges.size() == 5);
    CHECK(g.has_edge(2, 3));
    CHECK(format_edge_list(g) == "1-2, 1-4, 2-3, 2-5, 3-6");

    const Graph reparsed = parse_edge_list(format_edge_list(g));
    CHECK(reparsed.edges == g.edges);

    CHECK_THROWS_AS(parse_edge_list(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list("1:2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list("1-1"), std::invalid_argument);
}

TEST_CASE("pattern round trip") {
    for (const auto kind : {FunctionKind::balanced, FunctionKind::constant}) {
        const MeasurementPattern pattern = kind == FunctionKind::balanced
                                               ? MeasurementPattern::balanced()
                                               : MeasurementPattern::constant();
        const std::string text = format_pattern(pattern);
        CHECK(text.find("function=" + to_string(kind)) == 0);
        CHECK(text.find("qubit=1 basis=B(0) role=oracle") != std::string::npos);

        std::istringstream in(text);
        const MeasurementPattern reparsed = parse_pattern(in);
        CHECK(reparsed.kind == kind);
        REQUIRE(reparsed.steps.size() == 6);
        for (std::size_t i = 0; i < 6; ++i) {
            CHECK(reparsed.steps[i].qubit == pattern.steps[i].qubit);
            CHECK(reparsed.steps[i].role == pattern.steps[i].role);
            CHECK(reparsed.steps[i].basis.kind == pattern.steps[i].basis.kind);
            CHECK(std::abs(reparsed.steps[i].basis.alpha - pattern.steps[i].basis.alpha) <=
                  1e-12);
        }
    }
}

TEST_CASE("pattern parser rejects malformed and tampered input") {
    std::istringstream missing_kind("qubit=1 basis=B(0) role=oracle\n");
    CHECK_THROWS_AS(parse_pattern(missing_kind), std::invalid_argument);

    std::istringstream wrong_basis(
        "function=balanced\n"
        "qubit=1 basis=B(0.5) role=oracle\n"
        "qubit=3 basis=B(0) role=oracle\n"
        "qubit=5 basis=B(pi) role=oracle\n"
        "qubit=4 basis=C role=readout\n"
        "qubit=6 basis=C role=readout\n"
        "qubit=2 basis=C role=readout\n");
    CHECK_THROWS_AS(parse_pattern(wrong_basis), std::invalid_argument);

    std::istringstream bad_field("function=balanced\nqubit=1 basis=B(0) part=oracle\n");
    CHECK_THROWS_AS(parse_pattern(bad_field), std::invalid_argument);
}

TEST_CASE("noise literal round trip") {
    const NoiseProfile profile = parse_noise_literal("pEI:0.15,pPol:0.04,pRl:0.01");
    CHECK(profile.p_ei == doctest::Approx(0.15));
    CHECK(profile.p_pol == doctest::Approx(0.04));
    CHECK(profile.p_rl == doctest::Approx(0.01));

    CHECK(format_noise_literal(profile) == "pEI:0.150,pPol:0.040,pRl:0.010");
    const NoiseProfile reparsed = parse_noise_literal(format_noise_literal(profile));
    CHECK(reparsed.p_ei == doctest::Approx(profile.p_ei));

    CHECK(parse_noise_literal("pEI:0.2").p_pol == 0.0);
    CHECK_THROWS_AS(parse_noise_literal("pEI:0.8"), std::invalid_argument);
    CHECK_THROWS_AS(parse_noise_literal("bogus:0.1"), std::invalid_argument);
}

TEST_CASE("function literal parsing") {
    CHECK(parse_function_literal("balanced").bits() == "0110");
    CHECK(parse_function_literal("constant").bits() == "0000");
    CHECK(parse_function_literal("f=0110").bits() == "0110");
    CHECK(parse_function_literal("1111").bits() == "1111");
    CHECK(parse_function_literal("f=01").n == 1);
    CHECK_THROWS_AS(parse_function_literal("f=011"), std::invalid_argument);
    CHECK_THROWS_AS(parse_function_literal("gibberish"), std::invalid_argument);
}

TEST_CASE("reference table parsing") {
    std::istringstream good(
        "# comment\n"
        "000 0.008 0.009\n"
        "001 0.027 0.026\n"
        "010 0.014 0.014\n"
        "011 0.155 0.141\n"
        "100 0.013 0.010\n"
        "101 0.024 0.034\n"
        "110 0.004 0.014\n"
        "111 0.755 0.752\n");
    const ReferenceTable table = parse_reference_table(good);
    CHECK(table.ff[7] == doctest::Approx(0.752));
    CHECK(table.no_ff[3] == doctest::Approx(0.155));

    std::istringstream empty("");
    CHECK_THROWS_AS(parse_reference_table(empty), std::invalid_argument);

    std::istringstream short_table("000 0.5 0.5\n111 0.5 0.5\n");
    CHECK_THROWS_AS(parse_reference_table(short_table), std::invalid_argument);

    std::istringstream bad_sum(
        "000 0.5 0.5\n001 0.5 0.5\n010 0.5 0.5\n011 0.5 0.5\n"
        "100 0.5 0.5\n101 0.5 0.5\n110 0.5 0.5\n111 0.5 0.5\n");
    CHECK_THROWS_AS(parse_reference_table(bad_sum), std::invalid_argument);
}

TEST_CASE("run report text and jsonl encode the same probabilities") {
    RunReport report;
    report.kind = FunctionKind::balanced;
    report.truth_table = "0110";
    report.frame = Frame::cluster;
    report.profile = NoiseProfile{0.15, 0.0, 0.0};
    report.exact = true;
    report.decision = FunctionClass::balanced;
    report.oracle_calls = 1;
    OutcomeDistribution dist;
    // Ideal support shifted by a q1 flip with weight 0.15.
    dist["010101"] = 0.85;
    dist["110101"] = 0.15;
    report.table = render_table(dist, FunctionKind::balanced);

    const std::string text = run_report_text(report);
    CHECK(text.find("decision: balanced") != std::string::npos);
    CHECK(text.find("85.0") != std::string::npos);
    CHECK(text.find("15.0") != std::string::npos);

    const std::string jsonl = run_report_jsonl(report);
    std::istringstream lines(jsonl);
    std::string line;
    int rows = 0;
    double ff_111 = -1.0;
    double ff_011 = -1.0;
    while (std::getline(lines, line)) {
        if (line.find("\"record\":\"row\"") == std::string::npos) continue;
        ++rows;
        if (line.find("\"row_label\":\"111\"") != std::string::npos) {
            const auto pos = line.find("\"ff\":");
            ff_111 = std::stod(line.substr(pos + 5));
        }
        if (line.find("\"row_label\":\"011\"") != std::string::npos) {
            const auto pos = line.find("\"ff\":");
            ff_011 = std::stod(line.substr(pos + 5));
        }
    }
    CHECK(rows == 8);
    CHECK(ff_111 == doctest::Approx(0.85));
    CHECK(ff_011 == doctest::Approx(0.15));

    // Byte-identical for identical reports.
    CHECK(run_report_jsonl(report) == jsonl);
}

TEST_CASE("frame and kind parsing") {
    CHECK(parse_frame("laboratory") == Frame::laboratory);
    CHECK(parse_frame("cluster") == Frame::cluster);
    CHECK_THROWS_AS(parse_frame("rotating"), std::invalid_argument);
    CHECK(parse_function_kind("balanced") == FunctionKind::balanced);
    CHECK_THROWS_AS(parse_function_kind("linear"), std::invalid_argument);
}
