#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "pythcubic/verify.hpp"

namespace pythcubic {

// Reports serialize as a flat array of per-instance rows,
//   {"claim": ..., "a": ..., "status": ..., "elapsed_ms": ..., "data": ...},
// which CSV flattens one row per line. Parsing the emitted JSON restores
// the report (elapsed times included, as emitted).
nlohmann::json reports_to_json(const std::vector<VerificationReport>& reports);
std::vector<VerificationReport> reports_from_json(const nlohmann::json& j);

std::string reports_to_csv(const std::vector<VerificationReport>& reports);
std::string reports_to_text(const std::vector<VerificationReport>& reports);

std::string render_reports(const std::vector<VerificationReport>& reports,
                           const std::string& format);  // "json" | "csv" | "text"

// Write-once: contents land under a temporary name and are renamed into
// place, so readers never observe a partial file.
void write_file_atomic(const std::string& path, const std::string& contents);

}  // namespace pythcubic
