#pragma once

#include <string>

#include <json.hpp>

#include "spectra/bounds.hpp"
#include "spectra/spectrum.hpp"

namespace spectra {

using Json = nlohmann::ordered_json;

const char* mode_name(SpectrumMode mode);

Json spectrum_json(const SpectrumReport& report);
Json validation_json(const ColoringValidation& validation);
Json eta_json(const EtaResult& result, SpectrumMode mode);
Json theorem_report_json(const TheoremReport& report);
Json divisibility_json(const DivisibilityReport& report);
Json sharpness_json(const SharpnessReport& report);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace spectra
