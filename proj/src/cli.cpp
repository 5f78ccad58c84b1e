#include "spectra/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spectra/serialize.hpp"

namespace spectra {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitTheoremFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

long long env_or(long long fallback) {
    if (const char* env = std::getenv("SPECTRA_BUDGET")) {
        char* end = nullptr;
        long long value = std::strtoll(env, &end, 10);
        if (end != env && *end == '\0' && value > 0) return value;
    }
    return fallback;
}

void emit(std::ostream& out, const std::string& path,
          const std::string& content) {
    if (path.empty())
        out << content;
    else
        write_file(path, content);
}

struct CliState {
    std::ostream& out;
    std::ostream& err;
    int exit_code = kExitOk;
};

const std::map<std::string, TheoremId> kTheorems{
    {"T1", TheoremId::T1}, {"T2", TheoremId::T2}, {"T3", TheoremId::T3},
    {"T4", TheoremId::T4}, {"T5", TheoremId::T5}, {"T6", TheoremId::T6}};

int exit_code_for(const TheoremReport& report) {
    switch (report.status) {
    case TheoremReport::Status::Passed: return kExitOk;
    case TheoremReport::Status::BoundViolated:
    case TheoremReport::Status::Inapplicable: return kExitTheoremFail;
    case TheoremReport::Status::Error:
        return report.budget_exhausted ? kExitBudget : kExitTheoremFail;
    }
    return kExitTheoremFail;
}

void print_theorem_report(std::ostream& out, const TheoremReport& report,
                          bool json) {
    if (json) {
        out << theorem_report_json(report).dump(2) << "\n";
        return;
    }
    out << theorem_name(report.theorem) << ": ";
    switch (report.status) {
    case TheoremReport::Status::Passed:
        out << "pass (bound " << report.bound << ", guaranteed "
            << report.achieved << ", f_total " << report.f_total << ")";
        break;
    case TheoremReport::Status::BoundViolated:
        out << "FAIL (bound " << report.bound << ", guaranteed "
            << report.achieved << ")";
        break;
    case TheoremReport::Status::Inapplicable:
        out << "inapplicable (" << report.reason << ")";
        break;
    case TheoremReport::Status::Error:
        out << "error (" << report.reason << ")";
        break;
    }
    out << "\n";
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"interval and persistent-interval edge-coloring toolkit"};
    app.require_subcommand(1);

    std::string input, output, coloring_path, manifest, family, algorithm = "auto";
    std::string theorem, mode_flag, side_flag = "x";
    int gen_m = 0, gen_n = 0, gen_k = 0, remark = 0, remark_n = 2;
    long long seed = 0;
    std::optional<int> x0;
    std::optional<long long> budget_flag;
    bool json = false;

    auto* generate = app.add_subcommand("generate", "write a named graph");
    generate->add_option("--family", family, "petersen | complete-bipartite | biregular")
        ->required()
        ->check(CLI::IsMember({"petersen", "complete-bipartite", "biregular"}));
    generate->add_option("--m", gen_m, "first side size / biregular multiplier");
    generate->add_option("--n", gen_n, "second side size");
    generate->add_option("--k", gen_k, "biregular degree parameter");
    generate->add_option("--seed", seed, "pairing-model seed");
    generate->add_option("--output", output, "write the graph here");

    auto* color = app.add_subcommand("color", "produce a proper edge coloring");
    color->add_option("--input", input)->required();
    color->add_option("--algorithm", algorithm)
        ->check(CLI::IsMember({"auto", "bipartite", "vizing"}));
    color->add_option("--output", output);
    color->add_flag("--json", json);

    auto* analyze_cmd = app.add_subcommand("analyze", "vertex spectra of a coloring");
    analyze_cmd->add_option("--input", input)->required();
    analyze_cmd->add_option("--coloring", coloring_path)->required();
    analyze_cmd->add_option("--output", output);
    analyze_cmd->add_flag("--json", json);

    auto* construct = app.add_subcommand("construct", "run a theorem construction");
    construct->add_option("--theorem", theorem)
        ->required()
        ->check(CLI::IsMember({"T1", "T2", "T3", "T4", "T5", "T6"}));
    construct->add_option("--input", input)->required();
    construct->add_option("--side", side_flag)->check(CLI::IsMember({"x", "y"}));
    construct->add_option("--x0", x0, "vertex to extend (T4)");
    construct->add_option("--output", output, "write the witness coloring here");
    construct->add_option("--budget", budget_flag);
    construct->add_flag("--json", json);

    auto* brute = app.add_subcommand("brute-force", "exact eta by enumeration");
    brute->add_option("--mode", mode_flag)
        ->required()
        ->check(CLI::IsMember({"i", "pi"}));
    brute->add_option("--input", input)->required();
    brute->add_option("--budget", budget_flag);
    brute->add_option("--output", output, "write the witness coloring here");
    brute->add_flag("--json", json);

    auto* verify = app.add_subcommand("verify", "check theorem bounds and remarks");
    verify->add_option("--theorem", theorem)
        ->check(CLI::IsMember({"T1", "T2", "T3", "T4", "T5", "T6"}));
    verify->add_option("--remark", remark)->check(CLI::IsMember({1, 2}));
    verify->add_option("--n", remark_n, "K_{n+1,n} size for remark 1");
    verify->add_option("--input", input);
    verify->add_option("--manifest", manifest, "one graph path per line");
    verify->add_option("--budget", budget_flag);
    verify->add_flag("--json", json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help();
            return kExitOk;
        }
        err << e.what() << "\n";
        return kExitUsage;
    }

    const long long chi_budget = budget_flag.value_or(env_or(kDefaultChromaticBudget));
    const long long eta_budget = budget_flag.value_or(env_or(kDefaultEtaBudget));

    try {
        if (generate->parsed()) {
            Graph g = [&] {
                if (family == "petersen") return gen_petersen();
                if (family == "complete-bipartite") {
                    if (gen_m < 1 || gen_n < 1)
                        throw Error(Errc::PreconditionViolated,
                                    "complete-bipartite needs --m and --n");
                    return gen_complete_bipartite(gen_m, gen_n);
                }
                if (gen_k < 3 || gen_m < 1)
                    throw Error(Errc::PreconditionViolated,
                                "biregular needs --k >= 3 and --m >= 1");
                return gen_biregular(gen_k, gen_m, static_cast<std::uint64_t>(seed));
            }();
            emit(out, output, write_graph(g));
            return kExitOk;
        }

        if (color->parsed()) {
            Graph g = parse_graph(read_file(input));
            EdgeColoring c = [&] {
                if (algorithm == "vizing") return color_vizing(g);
                if (algorithm == "bipartite")
                    return color_bipartite_delta(g, bipartition(g));
                try {
                    return color_bipartite_delta(g, bipartition(g));
                } catch (const NotBipartiteError&) {
                    return color_vizing(g);
                }
            }();
            if (json) {
                Json j{{"t", c.t},
                       {"valid", validate_coloring(g, c).ok()},
                       {"coloring", write_coloring(c)}};
                emit(out, output, j.dump(2) + "\n");
            } else {
                emit(out, output, write_coloring(c));
            }
            return kExitOk;
        }

        if (analyze_cmd->parsed()) {
            Graph g = parse_graph(read_file(input));
            EdgeColoring c = parse_coloring(read_file(coloring_path), g.edge_count());
            ColoringValidation validation = validate_coloring(g, c);
            if (!validation.ok()) {
                err << "coloring is invalid: "
                    << validation_json(validation).dump(2) << "\n";
                return kExitUsage;
            }
            SpectrumReport report = analyze(g, c);
            if (json) {
                emit(out, output, spectrum_json(report).dump(2) + "\n");
            } else {
                std::ostringstream text;
                for (int v = 0; v < g.vertex_count(); ++v) {
                    const auto& s = report.per_vertex[static_cast<size_t>(v)];
                    text << "vertex " << v << ": {";
                    for (size_t i = 0; i < s.colors.size(); ++i)
                        text << (i ? "," : "") << s.colors[i];
                    text << "}" << (s.is_persistent_interval ? " persistent-interval"
                                    : s.is_interval          ? " interval"
                                                             : "")
                         << "\n";
                }
                text << "f_i = " << report.f_interval
                     << ", f_pi = " << report.f_persistent << "\n";
                emit(out, output, text.str());
            }
            return kExitOk;
        }

        if (construct->parsed() || (verify->parsed() && !theorem.empty())) {
            VerifyOptions options;
            options.chi_budget = chi_budget;
            options.persistent_y.fallback_budget = eta_budget;
            TheoremId id = kTheorems.at(theorem);

            if (verify->parsed() && !manifest.empty()) {
                Json reports = Json::array();
                bool any_fail = false, any_budget = false;
                std::istringstream lines(read_file(manifest));
                std::string line;
                while (std::getline(lines, line)) {
                    if (line.empty() || line[0] == '#') continue;
                    Graph g = parse_graph(read_file(line));
                    TheoremReport report = verify_theorem(id, g, options);
                    if (json)
                        reports.push_back(theorem_report_json(report));
                    else
                        print_theorem_report(out, report, false);
                    any_fail |= report.status == TheoremReport::Status::BoundViolated ||
                                (report.status == TheoremReport::Status::Error &&
                                 !report.budget_exhausted);
                    any_budget |= report.budget_exhausted;
                }
                if (json) out << reports.dump(2) << "\n";
                return any_budget ? kExitBudget : any_fail ? kExitTheoremFail : kExitOk;
            }

            if (input.empty())
                throw Error(Errc::IoError, "--input (or --manifest) is required");
            Graph g = parse_graph(read_file(input));

            if (construct->parsed() && id == TheoremId::T3) {
                // honor the explicit side choice instead of the max side
                Bipartition b = bipartition(g);
                TheoremReport report;
                report.theorem = id;
                try {
                    report.bound = bound_value(BoundId::C3, g, &b);
                    ConstructionResult r = thm3_interval_side(
                        g, b, side_flag == "x" ? Side::X : Side::Y);
                    SpectrumReport spectra = analyze(g, r.coloring);
                    report.f_total = spectra.f_interval;
                    report.achieved = static_cast<int>(r.guaranteed_set.size());
                    report.status = report.achieved >= report.bound
                                        ? TheoremReport::Status::Passed
                                        : TheoremReport::Status::BoundViolated;
                    report.witness = std::move(r);
                } catch (const Error& e) {
                    report.status = TheoremReport::Status::Inapplicable;
                    report.reason = std::string(errc_name(e.code())) + ": " + e.what();
                }
                print_theorem_report(out, report, json);
                if (!output.empty() && report.witness)
                    write_file(output, write_coloring(report.witness->coloring));
                return exit_code_for(report);
            }

            TheoremReport report = verify_theorem(id, g, options);
            print_theorem_report(out, report, json);
            if (!output.empty() && report.witness)
                write_file(output, write_coloring(report.witness->coloring));
            return exit_code_for(report);
        }

        if (brute->parsed()) {
            Graph g = parse_graph(read_file(input));
            SpectrumMode mode = mode_flag == "i" ? SpectrumMode::Interval
                                                 : SpectrumMode::PersistentInterval;
            EtaResult result = brute_force_eta(g, mode, eta_budget);
            if (json) {
                out << eta_json(result, mode).dump(2) << "\n";
            } else {
                out << (mode == SpectrumMode::Interval ? "eta_i" : "eta_pi")
                    << (result.exact ? " = " : " >= ") << result.eta << "\n";
            }
            if (!output.empty())
                write_file(output, write_coloring(result.witness));
            return result.exact ? kExitOk : kExitBudget;
        }

        if (verify->parsed() && remark == 1) {
            SharpnessReport report = verify_remark1(remark_n, eta_budget);
            if (json)
                out << sharpness_json(report).dump(2) << "\n";
            else
                out << "eta_pi(K_{" << remark_n + 1 << "," << remark_n << "})"
                    << (report.exact ? " = " : " >= ") << report.eta
                    << ", bound = " << report.bound
                    << (report.sharp ? " (sharp)" : "") << "\n";
            if (!report.exact) return kExitBudget;
            return report.sharp ? kExitOk : kExitTheoremFail;
        }

        if (verify->parsed() && remark == 2) {
            if (input.empty())
                throw Error(Errc::IoError, "--input is required");
            Graph g = parse_graph(read_file(input));
            DivisibilityReport report = verify_remark2(g, bipartition(g));
            if (json)
                out << divisibility_json(report).dump(2) << "\n";
            else
                out << "k = " << report.k << ": |X| % k "
                    << (report.x_divisible ? "== 0" : "!= 0") << ", |Y| % (k-1) "
                    << (report.y_divisible ? "== 0" : "!= 0")
                    << ", |V| % (2k-1) "
                    << (report.v_divisible ? "== 0" : "!= 0") << "\n";
            return report.ok() ? kExitOk : kExitTheoremFail;
        }

        err << "verify needs --theorem or --remark\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << errc_name(e.code()) << ": " << e.what() << "\n";
        if (e.code() == Errc::BudgetExhausted) return kExitBudget;
        return kExitUsage;
    }
}

} // namespace spectra
