// Command-line front end: query Pythagoras lengths, enumerate squares below
// an element, and run the claim verification suite with JSON/CSV/text
// reports.
//
// Exit codes: 0 success, 1 usage or parse error, 2 domain error,
// 3 verification failure.

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pythcubic/element.hpp"
#include "pythcubic/embedding.hpp"
#include "pythcubic/report_io.hpp"
#include "pythcubic/sos.hpp"
#include "pythcubic/verify.hpp"

namespace {

using namespace pythcubic;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;
constexpr int kExitVerifyFail = 3;

Coords parse_coords(const std::string& s) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  if (parts.size() != 3) throw CLI::ValidationError("--elem", "expected x,y,z");
  try {
    return {Int(parts[0]), Int(parts[1]), Int(parts[2])};
  } catch (const std::invalid_argument&) {
    throw CLI::ValidationError("--elem", "coordinates must be integers");
  }
}

std::pair<long, long> parse_range(const std::string& s) {
  auto dots = s.find("..");
  if (dots == std::string::npos)
    throw CLI::ValidationError("--range", "expected LO..HI");
  try {
    long lo = std::stol(s.substr(0, dots));
    long hi = std::stol(s.substr(dots + 2));
    return {lo, hi};
  } catch (const std::exception&) {
    throw CLI::ValidationError("--range", "expected LO..HI with integer bounds");
  }
}

// Single-row report for the query commands, same shape as verify rows.
json command_row(const std::string& claim, const Int& a, const std::string& status,
                 double elapsed_ms, json data) {
  return json{{"claim", claim},
              {"a", a.get_str()},
              {"status", status},
              {"elapsed_ms", elapsed_ms},
              {"data", std::move(data)}};
}

// Render a single command row as json/csv, or fall back to the supplied
// human-readable text.
void emit(const json& row, const std::string& human, const std::string& format,
          const std::string& out_path) {
  std::string text;
  if (format == "json") {
    text = json::array({row}).dump(2) + "\n";
  } else if (format == "csv") {
    std::string data = row.at("data").dump();
    std::string escaped = "\"";
    for (char c : data) {
      if (c == '"') escaped += '"';
      escaped += c;
    }
    escaped += '"';
    text = "claim,a,status,elapsed_ms,data\n" + row.at("claim").get<std::string>() + "," +
           row.at("a").get<std::string>() + "," + row.at("status").get<std::string>() +
           "," + std::to_string(row.at("elapsed_ms").get<double>()) + "," + escaped +
           "\n";
  } else {
    text = human;
  }
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_file_atomic(out_path, text);
  }
}

struct CommonOpts {
  long a = 3;
  std::string elem;
  std::string format = "text";
  std::string out;
  long exp_box = 10;
  std::string width = "1/1048576";
};

int run_length(const CommonOpts& opts, int max_m) {
  auto field = Field::make(opts.a);
  Elem target(field, parse_coords(opts.elem));
  auto t0 = std::chrono::steady_clock::now();

  std::optional<LengthResult> res;
  try {
    res = pythagoras_length(target, max_m);
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  }
  double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
          .count();

  json data{{"element", json_elem(target)}, {"max_m", max_m}};
  std::string human;
  if (res) {
    data["length"] = res->length;
    json parts = json::array();
    human = "length = " + std::to_string(res->length) + "\n";
    for (const SquareCandidate& p : res->witness.parts) {
      parts.push_back(json{{"root", json_elem(p.root)}, {"square", json_elem(p.square)}});
      human += "  (" + p.root.to_string() + ")^2 = " + p.square.to_string() + "\n";
    }
    data["witness"] = parts;
  } else {
    human = "no representation within max_m = " + std::to_string(max_m) + "\n";
  }
  emit(command_row("length", field->a(), res ? "pass" : "no-representation", ms, data),
       human, opts.format, opts.out);
  return kExitOk;
}

int run_squares(const CommonOpts& opts, const std::string& method) {
  auto field = Field::make(opts.a);
  Elem target(field, parse_coords(opts.elem));
  auto t0 = std::chrono::steady_clock::now();

  std::vector<SquareCandidate> brute, structured;
  try {
    if (method == "brute" || method == "both") brute = squares_below_bruteforce(target);
    if (method == "structured" || method == "both")
      structured = squares_below_structured(target, opts.exp_box);
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  }
  double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
          .count();

  const std::vector<SquareCandidate>& primary = (method == "structured") ? structured : brute;
  json list = json::array();
  for (const SquareCandidate& c : primary)
    list.push_back(json{{"root", json_elem(c.root)}, {"square", json_elem(c.square)}});

  json data{{"element", json_elem(target)}, {"method", method}, {"squares", list},
            {"count", primary.size()}};

  // Conjugate enclosures of the target at the requested width, for reference.
  Rat width(opts.width);
  width.canonicalize();
  if (sign_of(width) <= 0) throw CLI::ValidationError("--width", "must be positive");
  EmbeddingIntervals ivs = field->base_intervals();
  ivs.refine_to(width);
  json enclosures = json::array();
  for (int i = 0; i < 3; ++i) {
    RatInterval iv = embed_interval(target.coords(), ivs.iv[i]);
    enclosures.push_back(json::array({iv.lo.get_str(), iv.hi.get_str()}));
  }
  data["conjugate_enclosures"] = enclosures;

  bool ok = true;
  if (method == "both") {
    ok = brute.size() == structured.size() &&
         std::equal(brute.begin(), brute.end(), structured.begin());
    data["enumerations_agree"] = ok;
  }

  std::string human = std::to_string(primary.size()) + " nonzero squares\n";
  for (const SquareCandidate& c : primary)
    human += "  " + c.square.to_string() + "   (root " + c.root.to_string() + ")\n";
  if (method == "both")
    human += std::string("enumerations agree: ") + (ok ? "yes" : "NO") + "\n";

  emit(command_row("squares", field->a(), ok ? "pass" : "fail", ms, data), human,
       opts.format, opts.out);
  return ok ? kExitOk : kExitVerifyFail;
}

int run_verify(const std::string& claim, const std::string& range,
               const CommonOpts& opts) {
  VerifyOptions vopts;
  vopts.unit_box = opts.exp_box;

  std::vector<const ClaimSpec*> specs;
  if (claim == "all") {
    for (const ClaimSpec& c : claim_catalog()) specs.push_back(&c);
  } else if (const ClaimSpec* c = find_claim(claim)) {
    specs.push_back(c);
  } else {
    std::cerr << "unknown claim: " << claim << "\n";
    return kExitUsage;
  }

  std::vector<VerificationReport> reports;
  for (const ClaimSpec* c : specs) {
    long lo = c->default_lo, hi = c->default_hi;
    if (!range.empty() && c->ranged) {
      auto [rlo, rhi] = parse_range(range);
      lo = rlo;
      hi = rhi;
    }
    reports.push_back(c->run(lo, hi, vopts));
  }

  std::string rendered = render_reports(reports, opts.format);
  if (opts.out.empty()) {
    std::cout << rendered;
  } else {
    write_file_atomic(opts.out, rendered);
  }

  bool all_pass = true;
  for (const VerificationReport& rep : reports) {
    for (const ClaimRow& r : rep.rows) {
      if (r.status == ClaimStatus::kFail) {
        all_pass = false;
        std::cerr << "FAIL " << rep.claim << " a=" << r.a.get_str() << ": "
                  << r.data.dump() << "\n";
      }
    }
  }
  return all_pass ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact arithmetic in the simplest cubic orders Z[rho]: square "
               "enumeration, minimal sum-of-squares decompositions, and claim "
               "verification"};
  app.require_subcommand(1);

  CommonOpts opts;
  int max_m = 7;
  std::string method = "both";
  std::string claim;
  std::string range;

  auto add_common = [&](CLI::App* sub, bool with_elem) {
    sub->add_option("--a", opts.a, "Field parameter a (>= -1)")
        ->check(CLI::Range(-1L, 1000000L));
    if (with_elem)
      sub->add_option("--elem", opts.elem, "Element coordinates x,y,z in basis 1,rho,rho^2")
          ->required();
    sub->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--out", opts.out, "Write output to this file (atomically)");
    sub->add_option("--exp-box", opts.exp_box, "Unit exponent bound for searches")
        ->check(CLI::Range(1L, 64L));
    sub->add_option("--width", opts.width, "Interval refinement width (rational, e.g. 1/1048576)");
  };

  CLI::App* length = app.add_subcommand("length", "Minimal number of squares summing to an element");
  add_common(length, true);
  length->add_option("--max", max_m, "Largest decomposition size to search")
      ->check(CLI::Range(0, 1000));

  CLI::App* squares = app.add_subcommand("squares", "All nonzero squares totally below an element");
  add_common(squares, true);
  squares->add_option("--method", method, "Enumeration method")
      ->check(CLI::IsMember({"brute", "structured", "both"}));

  CLI::App* verify = app.add_subcommand("verify", "Run a verification claim over a range of a");
  add_common(verify, false);
  verify->add_option("claim", claim, "Claim id (lemma-2.2 ... theorem-1.1, table-1, table-2, or all)")
      ->required();
  verify->add_option("--range", range, "Range LO..HI of a values");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (length->parsed()) return run_length(opts, max_m);
    if (squares->parsed()) return run_squares(opts, method);
    if (verify->parsed()) return run_verify(claim, range, opts);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFail;
  }
  return kExitUsage;
}
