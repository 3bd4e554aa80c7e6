// cluster_dj: simulate the six-qubit one-way Deutsch-Jozsa experiment.
//
// Subcommands:
//   run          execute a measurement pattern (exact or sampled, optional noise)
//   verify       pattern/circuit equivalence and state-construction checks
//   fit          fit a dephasing profile to a reference output table
//   characterize witness, fidelity bound and stabilizer report
//
// Exit status: 0 success, 1 check failure, 2 usage error.

#include "cdj/characterization.hpp"
#include "cdj/dj.hpp"
#include "cdj/graph_state.hpp"
#include "cdj/mbqc.hpp"
#include "cdj/noise.hpp"
#include "cdj/quantum.hpp"
#include "cdj/serialize.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

namespace {

#ifndef CDJ_DATA_DIR
#define CDJ_DATA_DIR "data"
#endif

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

struct RunOptions {
    std::string function = "balanced";
    std::string noise;
    std::string frame = "cluster";
    std::string format = "text";
    std::string output;
    std::string pattern_path;
    std::string emit_pattern_path;
    long shots = 100000;
    std::uint64_t seed = 0;
    bool exact = false;
};

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out.good()) throw std::invalid_argument("cannot open output file '" + path + "'");
    out << content;
}

cdj::FunctionKind kind_for(const cdj::BooleanFunction& f) {
    if (f.bits() == cdj::f_balanced().bits()) return cdj::FunctionKind::balanced;
    if (f.bits() == cdj::f_constant().bits()) return cdj::FunctionKind::constant;
    throw std::invalid_argument(
        "no measurement pattern for f=" + f.bits() +
        "; the cluster implements f=0110 (balanced) and f=0000 (constant)");
}

int cmd_run(const RunOptions& opt) {
    const cdj::BooleanFunction f = cdj::parse_function_literal(opt.function);
    const cdj::FunctionKind kind = kind_for(f);
    const cdj::Frame frame = cdj::parse_frame(opt.frame);
    const cdj::NoiseProfile profile =
        opt.noise.empty() ? cdj::NoiseProfile{} : cdj::parse_noise_literal(opt.noise);

    cdj::MeasurementPattern pattern = opt.pattern_path.empty()
                                          ? (kind == cdj::FunctionKind::balanced
                                                 ? cdj::MeasurementPattern::balanced()
                                                 : cdj::MeasurementPattern::constant())
                                          : cdj::parse_pattern_file(opt.pattern_path);
    if (pattern.kind != kind)
        throw std::invalid_argument("pattern file function does not match --function");
    if (!opt.emit_pattern_path.empty())
        write_output(opt.emit_pattern_path, cdj::format_pattern(pattern));

    const cdj::StateVector cluster = cdj::e_cluster();
    cdj::StateVector prepared = cluster;
    if (frame == cdj::Frame::laboratory) {
        prepared = cdj::frame_transform(cluster, cdj::Frame::laboratory);
        pattern = cdj::to_laboratory(pattern);
    }

    cdj::OutcomeDistribution dist;
    if (opt.exact) {
        if (profile.is_zero()) {
            dist = cdj::enumerate_distribution(prepared, pattern);
        } else {
            cdj::NoisyState noisy = cdj::apply_profile(cluster, profile);
            if (frame == cdj::Frame::laboratory) {
                for (int q = 4; q <= 6; ++q)
                    noisy.rho = cdj::apply_gate(
                        noisy.rho, cdj::gates::single_qubit(cdj::lab_rotation(q), q));
            }
            dist = cdj::noisy_distribution(noisy, pattern);
        }
    } else {
        if (opt.shots < 1) throw std::invalid_argument("--shots must be >= 1");
        // Per-shot seeds are seed + shot index. The cluster-frame Z flips
        // commute with the frame rotation (it only touches qubits 4-6), so
        // the same channel sampler serves both frames.
        std::map<std::string, long> counts;
        for (long shot = 0; shot < opt.shots; ++shot) {
            const cdj::OutcomeRecord record = cdj::sample_noisy(
                prepared, profile, pattern, opt.seed + static_cast<std::uint64_t>(shot));
            std::string key(6, '0');
            for (int q = 0; q < 6; ++q) key[static_cast<std::size_t>(q)] = record.s[static_cast<std::size_t>(q)] ? '1' : '0';
            ++counts[key];
        }
        for (const auto& [key, count] : counts)
            dist[key] = static_cast<double>(count) / static_cast<double>(opt.shots);
    }

    cdj::RunReport report;
    report.kind = kind;
    report.truth_table = f.bits();
    report.frame = frame;
    report.profile = profile;
    report.exact = opt.exact;
    if (!opt.exact) {
        report.seed = opt.seed;
        report.shots = opt.shots;
    }
    report.table = cdj::render_table(dist, kind);
    const auto ff = cdj::ff_distribution(dist, kind);
    int argmax = 0;
    for (int row = 1; row < 8; ++row)
        if (ff[static_cast<std::size_t>(row)] > ff[static_cast<std::size_t>(argmax)]) argmax = row;
    report.decision = (argmax >> 1) == 0 ? cdj::FunctionClass::constant
                                         : cdj::FunctionClass::balanced;
    report.oracle_calls = cdj::dj_decide(f).oracle_calls;

    write_output(opt.output, opt.format == "jsonl" ? cdj::run_report_jsonl(report)
                                                   : cdj::run_report_text(report));
    return kExitOk;
}

struct CheckReporter {
    int failures = 0;

    void check(bool ok, const std::string& name) {
        std::cout << (ok ? "PASS" : "FAIL") << "  " << name << "\n";
        if (!ok) ++failures;
    }
};

int cmd_verify(bool corrupt_edges) {
    CheckReporter reporter;
    const cdj::Graph graph =
        corrupt_edges ? cdj::Graph(6, {{1, 4}, {2, 5}, {3, 6}, {1, 2}, {1, 3}})
                      : cdj::e_graph();
    const cdj::StateVector cluster = cdj::graph_state(graph);

    bool stabilizers_ok = true;
    for (const auto& gen : cdj::stabilizers(cdj::e_graph()))
        stabilizers_ok &= std::abs(cdj::expectation(cluster, gen) - 1.0) <= cdj::kAlgebraTol;
    reporter.check(stabilizers_ok, "E-cluster stabilizer expectations are all +1");

    bool he6_ok = true;
    for (const auto& gen : cdj::stabilizers(cdj::he6_graph()))
        he6_ok &= std::abs(cdj::expectation(cdj::he6_cluster(), gen) - 1.0) <= cdj::kAlgebraTol;
    reporter.check(he6_ok, "HE6 stabilizer expectations are all +1");

    reporter.check(cdj::equal_up_to_global_phase(cdj::he6_lab(),
                                                 cdj::frame_transform(cdj::he6_cluster(),
                                                                      cdj::Frame::laboratory),
                                                 cdj::kAlgebraTol),
                   "hyperentangled state: explicit product matches frame transform");
    reporter.check(cdj::equal_up_to_global_phase(cdj::e_lab(),
                                                 cdj::frame_transform(cdj::e_cluster(),
                                                                      cdj::Frame::laboratory),
                                                 cdj::kAlgebraTol),
                   "E cluster: laboratory expansion matches frame transform");

    for (const auto kind : {cdj::FunctionKind::balanced, cdj::FunctionKind::constant}) {
        const auto pattern = kind == cdj::FunctionKind::balanced
                                 ? cdj::MeasurementPattern::balanced()
                                 : cdj::MeasurementPattern::constant();
        const auto dist = cdj::enumerate_distribution(cluster, pattern);
        const auto ff = cdj::ff_distribution(dist, kind);
        const int target = kind == cdj::FunctionKind::balanced ? 7 : 1;
        reporter.check(std::abs(ff[static_cast<std::size_t>(target)] - 1.0) <= 1e-9,
                       "pattern (" + cdj::to_string(kind) + "): FF output is deterministic");

        int support = 0;
        for (const auto& [key, prob] : dist)
            if (prob > 1e-9) ++support;
        std::ostringstream name;
        name << "pattern (" << cdj::to_string(kind) << "): " << support
             << "/8 supported outcome branches";
        reporter.check(support == 8, name.str());

        // Gate-model cross-check: the MBQC target decodes to the DJ output.
        const cdj::BooleanFunction f =
            kind == cdj::FunctionKind::balanced ? cdj::f_balanced() : cdj::f_constant();
        const std::string expected_register =
            kind == cdj::FunctionKind::balanced ? "111" : "001";
        const cdj::StateVector dj_state = cdj::dj_run(f);
        const cdj::StateVector expected = cdj::basis_state(3, expected_register);
        reporter.check(cdj::equal_up_to_global_phase(dj_state, expected, cdj::kAlgebraTol),
                       "gate model (" + cdj::to_string(kind) + "): circuit output matches |" +
                           expected_register + ">");
    }

    std::cout << (reporter.failures == 0 ? "verify: all checks passed"
                                         : "verify: checks failed")
              << "\n";
    return reporter.failures == 0 ? kExitOk : kExitCheckFailure;
}

int cmd_fit(const std::string& balanced_path, const std::string& constant_path) {
    char buf[160];
    for (const auto kind : {cdj::FunctionKind::balanced, cdj::FunctionKind::constant}) {
        const std::string& path =
            kind == cdj::FunctionKind::balanced ? balanced_path : constant_path;
        if (path.empty()) continue;
        const cdj::ReferenceTable reference = cdj::load_reference_table(path);
        const cdj::FitResult fit = cdj::fit_profile(reference.ff, kind);

        std::cout << "function: " << cdj::to_string(kind) << "  (" << path << ")\n";
        std::cout << "fitted profile: " << cdj::format_noise_literal(fit.profile)
                  << "  (visibility E/I " << std::round(fit.profile.visibility_ei() * 1000) / 10.0
                  << "%)\n";
        std::cout << "note: pPol does not reach either pattern's output table"
                     " (qubit 2 is read computationally); the tie-break keeps it at 0\n";
        std::snprintf(buf, sizeof buf, "total variation (FF column): %.4f", fit.tv_distance);
        std::cout << buf << "\n";

        const auto pattern = kind == cdj::FunctionKind::balanced
                                 ? cdj::MeasurementPattern::balanced()
                                 : cdj::MeasurementPattern::constant();
        const auto dist =
            cdj::noisy_distribution(cdj::apply_profile(cdj::e_cluster(), fit.profile), pattern);
        const auto model_ff = cdj::ff_distribution(dist, kind);
        const auto model_no_ff = cdj::no_ff_filter(dist, kind);
        std::cout << "output     model No-FF(%)  ref No-FF(%)   model FF(%)  ref FF(%)\n";
        for (int row = 0; row < 8; ++row) {
            std::string label = {static_cast<char>('0' + ((row >> 2) & 1)),
                                 static_cast<char>('0' + ((row >> 1) & 1)),
                                 static_cast<char>('0' + (row & 1))};
            const double model_nf = model_no_ff ? model_no_ff->at(label) : 0.0;
            std::snprintf(buf, sizeof buf, "|%s>     %10.1f  %12.1f  %12.1f  %10.1f",
                          label.c_str(), model_nf * 100.0,
                          reference.no_ff[static_cast<std::size_t>(row)] * 100.0,
                          model_ff[static_cast<std::size_t>(row)] * 100.0,
                          reference.ff[static_cast<std::size_t>(row)] * 100.0);
            std::cout << buf << "\n";
        }
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_characterize(const std::string& noise, const std::string& frame_text,
                     const std::string& graph_text) {
    char buf[160];
    if (!graph_text.empty()) {
        // Custom graph: stabilizer report plus the generic parity-split witness.
        const cdj::Graph graph = cdj::parse_edge_list(graph_text);
        const cdj::StateVector state = cdj::graph_state(graph);
        std::cout << "graph: " << cdj::format_edge_list(graph) << "  (" << graph.n_vertices
                  << " vertices)\n";
        const auto gens = cdj::stabilizers(graph);
        for (std::size_t i = 0; i < gens.size(); ++i) {
            std::snprintf(buf, sizeof buf, "K%zu = %s   <K%zu> = %+.6f", i + 1,
                          gens[i].str().c_str(), i + 1, cdj::expectation(state, gens[i]));
            std::cout << buf << "\n";
        }
        const auto spec = cdj::WitnessSpec::for_graph(graph);
        const double w = cdj::witness_expectation(cdj::to_density(state), spec);
        std::snprintf(buf, sizeof buf, "<W> = %+.6f   fidelity bound F >= %.6f", w,
                      cdj::fidelity_lower_bound(w));
        std::cout << buf << "\n";
        return kExitOk;
    }

    const cdj::Frame frame = cdj::parse_frame(frame_text);
    const cdj::NoiseProfile profile =
        noise.empty() ? cdj::NoiseProfile{} : cdj::parse_noise_literal(noise);
    cdj::NoisyState noisy = cdj::apply_profile(cdj::e_cluster(), profile);
    if (frame == cdj::Frame::laboratory)
        for (int q = 4; q <= 6; ++q)
            noisy.rho =
                cdj::apply_gate(noisy.rho, cdj::gates::single_qubit(cdj::lab_rotation(q), q));

    const auto spec = cdj::WitnessSpec::e_cluster_spec(frame);
    std::cout << "state: E cluster, " << cdj::to_string(frame) << " frame, noise "
              << cdj::format_noise_literal(profile) << "\n";
    const auto& odd = spec.odd_generators;
    const auto& even = spec.even_generators;
    for (std::size_t i = 0; i < odd.size(); ++i) {
        std::snprintf(buf, sizeof buf, "g%zu = %s   <g%zu> = %+.6f", 2 * i + 1,
                      odd[i].str().c_str(), 2 * i + 1, cdj::expectation(noisy.rho, odd[i]));
        std::cout << buf << "\n";
    }
    for (std::size_t i = 0; i < even.size(); ++i) {
        std::snprintf(buf, sizeof buf, "g%zu = %s   <g%zu> = %+.6f", 2 * i + 2,
                      even[i].str().c_str(), 2 * i + 2, cdj::expectation(noisy.rho, even[i]));
        std::cout << buf << "\n";
    }
    const double w = cdj::witness_expectation(noisy.rho, spec);
    std::snprintf(buf, sizeof buf, "<W> = %+.6f   fidelity bound F >= %.6f", w,
                  cdj::fidelity_lower_bound(w));
    std::cout << buf << "\n";
    const double fidelity = cdj::fidelity_pure(
        noisy.rho, frame == cdj::Frame::laboratory
                       ? cdj::frame_transform(cdj::e_cluster(), cdj::Frame::laboratory)
                       : cdj::e_cluster());
    std::snprintf(buf, sizeof buf, "fidelity to ideal cluster: %.6f", fidelity);
    std::cout << buf << "\n";
    std::cout << "reference experimental values: <W> = -0.333 +- 0.002, F >= 0.667 +- 0.001\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"six-qubit one-way Deutsch-Jozsa simulator"};
    app.require_subcommand(1);

    RunOptions run_opt;
    CLI::App* run = app.add_subcommand("run", "execute a measurement pattern");
    run->add_option("--function", run_opt.function,
                    "balanced | constant | explicit table like f=0110");
    run->add_option("--noise", run_opt.noise, "dephasing profile, e.g. pEI:0.15,pPol:0,pRl:0");
    run->add_option("--frame", run_opt.frame, "cluster | laboratory");
    run->add_option("--shots", run_opt.shots, "number of sampled shots");
    run->add_option("--seed", run_opt.seed, "base RNG seed (per-shot seeds are seed+i)");
    run->add_flag("--exact", run_opt.exact, "exact enumeration instead of sampling");
    run->add_option("--format", run_opt.format, "text | jsonl")
        ->check(CLI::IsMember({"text", "jsonl"}));
    run->add_option("--output", run_opt.output, "write the report to a file");
    run->add_option("--pattern", run_opt.pattern_path, "load a measurement pattern file");
    run->add_option("--emit-pattern", run_opt.emit_pattern_path,
                    "write the pattern used to a file");

    bool corrupt_edges = false;
    CLI::App* verify = app.add_subcommand("verify", "equivalence and construction checks");
    verify->add_flag("--corrupt-edges", corrupt_edges,
                     "negative control: corrupt the edge set so checks fail");

    std::string balanced_path = std::string(CDJ_DATA_DIR) + "/reference_balanced.txt";
    std::string constant_path = std::string(CDJ_DATA_DIR) + "/reference_constant.txt";
    CLI::App* fit = app.add_subcommand("fit", "fit a dephasing profile to reference tables");
    fit->add_option("--balanced", balanced_path, "reference table for the balanced run");
    fit->add_option("--constant", constant_path, "reference table for the constant run");

    std::string characterize_noise;
    std::string characterize_frame = "cluster";
    std::string characterize_graph;
    CLI::App* characterize =
        app.add_subcommand("characterize", "witness, bound and stabilizer report");
    characterize->add_option("--noise", characterize_noise, "dephasing profile");
    characterize->add_option("--frame", characterize_frame, "cluster | laboratory");
    characterize->add_option("--graph", characterize_graph,
                             "edge list like \"1-4, 2-5, 3-6, 1-2, 2-3\"");

    try {
        app.parse(argc, argv);
        if (run->parsed()) return cmd_run(run_opt);
        if (verify->parsed()) return cmd_verify(corrupt_edges);
        if (fit->parsed()) return cmd_fit(balanced_path, constant_path);
        if (characterize->parsed())
            return cmd_characterize(characterize_noise, characterize_frame, characterize_graph);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailure;
    }
    return kExitUsage;
}
