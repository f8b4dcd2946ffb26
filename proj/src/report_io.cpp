#include "pythcubic/report_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pythcubic {

using nlohmann::json;

json reports_to_json(const std::vector<VerificationReport>& reports) {
  json rows = json::array();
  for (const VerificationReport& rep : reports) {
    for (const ClaimRow& r : rep.rows) {
      rows.push_back(json{{"claim", rep.claim},
                          {"a", r.a.get_str()},
                          {"status", to_string(r.status)},
                          {"elapsed_ms", r.elapsed_ms},
                          {"data", r.data}});
    }
  }
  return rows;
}

std::vector<VerificationReport> reports_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("report JSON must be an array of rows");
  std::vector<VerificationReport> out;
  for (const json& row : j) {
    const std::string claim = row.at("claim").get<std::string>();
    if (out.empty() || out.back().claim != claim) out.push_back({claim, {}});
    ClaimRow r;
    r.a = Int(row.at("a").get<std::string>());
    r.status = claim_status_from_string(row.at("status").get<std::string>());
    r.elapsed_ms = row.at("elapsed_ms").get<double>();
    r.data = row.at("data");
    out.back().rows.push_back(std::move(r));
  }
  return out;
}

namespace {

std::string csv_escape(const std::string& s) {
  std::string r = "\"";
  for (char c : s) {
    if (c == '"') r += '"';
    r += c;
  }
  r += '"';
  return r;
}

}  // namespace

std::string reports_to_csv(const std::vector<VerificationReport>& reports) {
  std::ostringstream os;
  os << "claim,a,status,elapsed_ms,data\n";
  for (const VerificationReport& rep : reports) {
    for (const ClaimRow& r : rep.rows) {
      os << rep.claim << ',' << r.a.get_str() << ',' << to_string(r.status) << ','
         << r.elapsed_ms << ',' << csv_escape(r.data.dump()) << '\n';
    }
  }
  return os.str();
}

std::string reports_to_text(const std::vector<VerificationReport>& reports) {
  std::ostringstream os;
  for (const VerificationReport& rep : reports) {
    size_t pass = 0, fail = 0, na = 0;
    for (const ClaimRow& r : rep.rows) {
      switch (r.status) {
        case ClaimStatus::kPass: ++pass; break;
        case ClaimStatus::kFail: ++fail; break;
        case ClaimStatus::kNotApplicable: ++na; break;
      }
    }
    os << rep.claim << ": " << (fail == 0 ? "PASS" : "FAIL") << " (" << pass << " pass, "
       << fail << " fail, " << na << " not applicable)\n";
    for (const ClaimRow& r : rep.rows) {
      os << "  a=" << r.a.get_str() << "  " << to_string(r.status) << "  ["
         << r.elapsed_ms << " ms]";
      if (r.status == ClaimStatus::kFail) os << "  " << r.data.dump();
      os << '\n';
    }
  }
  return os.str();
}

std::string render_reports(const std::vector<VerificationReport>& reports,
                           const std::string& format) {
  if (format == "json") return reports_to_json(reports).dump(2) + "\n";
  if (format == "csv") return reports_to_csv(reports);
  if (format == "text") return reports_to_text(reports);
  throw std::invalid_argument("unknown format: " + format);
}

void write_file_atomic(const std::string& path, const std::string& contents) {
  namespace fs = std::filesystem;
  fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open for writing: " + tmp.string());
    out << contents;
    if (!out.flush()) throw std::runtime_error("write failed: " + tmp.string());
  }
  fs::rename(tmp, target);
}

}  // namespace pythcubic
