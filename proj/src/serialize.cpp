#include "spectra/serialize.hpp"

#include <fstream>
#include <sstream>

namespace spectra {

const char* mode_name(SpectrumMode mode) {
    return mode == SpectrumMode::Interval ? "interval" : "persistent-interval";
}

Json spectrum_json(const SpectrumReport& report) {
    Json per_vertex = Json::array();
    for (size_t v = 0; v < report.per_vertex.size(); ++v) {
        const auto& s = report.per_vertex[v];
        per_vertex.push_back({{"vertex", v},
                              {"spectrum", s.colors},
                              {"interval", s.is_interval},
                              {"persistent_interval", s.is_persistent_interval}});
    }
    return Json{{"per_vertex", std::move(per_vertex)},
                {"f_i", report.f_interval},
                {"f_pi", report.f_persistent}};
}

Json validation_json(const ColoringValidation& validation) {
    Json clashes = Json::array();
    for (const auto& clash : validation.properness_violations)
        clashes.push_back({{"vertex", clash.vertex},
                           {"edge_a", clash.edge_a},
                           {"edge_b", clash.edge_b}});
    return Json{{"ok", validation.ok()},
                {"properness_violations", std::move(clashes)},
                {"unused_colors", validation.unused_colors},
                {"out_of_range_edges", validation.out_of_range_edges},
                {"t_within_edge_count", validation.t_within_edge_count}};
}

Json eta_json(const EtaResult& result, SpectrumMode mode) {
    return Json{{"mode", mode_name(mode)},
                {"eta", result.eta},
                {"exact", result.exact},
                {"nodes", result.nodes},
                {"witness", write_coloring(result.witness)}};
}

Json theorem_report_json(const TheoremReport& report) {
    const char* status = "error";
    switch (report.status) {
    case TheoremReport::Status::Passed: status = "passed"; break;
    case TheoremReport::Status::BoundViolated: status = "bound-violated"; break;
    case TheoremReport::Status::Inapplicable: status = "inapplicable"; break;
    case TheoremReport::Status::Error: status = "error"; break;
    }
    Json j{{"theorem", theorem_name(report.theorem)},
           {"status", status},
           {"bound", report.bound},
           {"achieved", report.achieved},
           {"f_total", report.f_total},
           {"passed", report.passed()}};
    if (!report.reason.empty()) j["reason"] = report.reason;
    if (report.witness) {
        j["mode"] = mode_name(report.witness->mode);
        j["t"] = report.witness->coloring.t;
        j["coloring"] = write_coloring(report.witness->coloring);
        j["guaranteed_set"] = report.witness->guaranteed_set;
        j["kempe_swaps"] = report.witness->swap_count;
    }
    return j;
}

Json divisibility_json(const DivisibilityReport& report) {
    return Json{{"k", report.k},
                {"x_divisible_by_k", report.x_divisible},
                {"y_divisible_by_k_minus_1", report.y_divisible},
                {"v_divisible_by_2k_minus_1", report.v_divisible},
                {"ok", report.ok()}};
}

Json sharpness_json(const SharpnessReport& report) {
    return Json{{"n", report.n},
                {"bound", report.bound},
                {"eta_pi", report.eta},
                {"exact", report.exact},
                {"sharp", report.sharp}};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::IoError, "cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(Errc::IoError, "cannot write " + path);
    out << content;
}

} // namespace spectra
