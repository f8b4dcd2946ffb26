#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pythcubic/report_io.hpp"
#include "pythcubic/verify.hpp"

using namespace pythcubic;

TEST_CASE("witness coordinates") {
  auto f = Field::make(3);
  CHECK(lower_bound_witness(f) == Elem(f, 20, 7, -1));
  auto f15 = Field::make(15);
  CHECK(lower_bound_witness(f15) == Elem(f15, 248, 211, -13));
  CHECK(witness_remainder(f15) == Elem(f15, 7, 0, 1));
}

TEST_CASE("norm monotonicity claim over its opening range") {
  auto rep = verify_norm_monotonicity(3, 10);
  CHECK(rep.claim == "lemma-2.2");
  CHECK(rep.rows.size() == 8);
  CHECK(rep.all_pass());
  for (const ClaimRow& r : rep.rows) CHECK(r.status == ClaimStatus::kPass);
}

TEST_CASE("unit claims on a short range") {
  CHECK(verify_units_near_one(7, 9).all_pass());
  CHECK(verify_unit_growth(7, 9).all_pass());
  auto rep = verify_units_below_witness(7, 9);
  CHECK(rep.all_pass());
  for (const ClaimRow& r : rep.rows) {
    CHECK(r.data.at("units") == nlohmann::json::parse("[[0,0],[2,0]]"));
  }
}

TEST_CASE("below-hypothesis rows are recorded but not asserted") {
  auto rep = verify_small_norm_squares(10, 12);
  CHECK(rep.rows.size() == 3);
  for (const ClaimRow& r : rep.rows) {
    CHECK(r.status == ClaimStatus::kNotApplicable);
    CHECK(r.data.contains("observed"));
  }
  CHECK(rep.all_pass());  // not-applicable does not fail the claim

  auto units_rep = verify_units_near_one(5, 6);
  for (const ClaimRow& r : units_rep.rows) CHECK(r.status == ClaimStatus::kNotApplicable);
}

TEST_CASE("structure claims at the bottom of their range") {
  CHECK(verify_small_norm_squares(15, 17).all_pass());
  CHECK(verify_indecomposable_squares(15, 17).all_pass());
  CHECK(verify_decomposable_sums(15, 17).all_pass());
  CHECK(verify_signature_table(15, 17).all_pass());
}

TEST_CASE("main theorem claim on a short range") {
  auto rep = verify_six_square_minimum(3, 6);
  CHECK(rep.all_pass());
  for (const ClaimRow& r : rep.rows) {
    CHECK(r.data.at("identity") == true);
    CHECK(r.data.at("five_squares_fail") == true);
    CHECK(r.data.at("six_squares_found") == true);
    long a = std::stol(r.a.get_str());
    size_t expect = a == 3 ? 10 : (a == 4 ? 9 : 8);
    CHECK(r.data.at("census_size").get<size_t>() == expect);
    if (a >= 5) CHECK(r.data.contains("remainder"));
  }
}

TEST_CASE("small-a length table") {
  auto rep = verify_small_a_lengths();
  CHECK(rep.claim == "table-2");
  REQUIRE(rep.rows.size() == 4);
  CHECK(rep.all_pass());
  int bounds[4] = {4, 5, 5, 5};
  for (size_t i = 0; i < 4; ++i) {
    CHECK(rep.rows[i].data.at("length").get<int>() >= bounds[i]);
  }
}

TEST_CASE("claim catalog") {
  CHECK(claim_catalog().size() == 10);
  CHECK(find_claim("lemma-2.2") != nullptr);
  CHECK(find_claim("theorem-1.1") != nullptr);
  CHECK(find_claim("lemma-9.9") == nullptr);
  CHECK(find_claim("table-2")->ranged == false);
}

TEST_CASE("reports round-trip through JSON") {
  std::vector<VerificationReport> reps;
  reps.push_back(verify_norm_monotonicity(3, 5));
  reps.push_back(verify_small_a_lengths());
  nlohmann::json j = reports_to_json(reps);
  auto back = reports_from_json(j);
  REQUIRE(back.size() == reps.size());
  CHECK(back[0] == reps[0]);
  CHECK(back[1] == reps[1]);
  // ... and the re-serialization is byte-identical
  CHECK(reports_to_json(back).dump() == j.dump());
}

TEST_CASE("CSV and text renderings") {
  std::vector<VerificationReport> reps = {verify_norm_monotonicity(3, 4)};
  std::string csv = reports_to_csv(reps);
  CHECK(csv.rfind("claim,a,status,elapsed_ms,data\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);  // header + 2 rows
  std::string text = reports_to_text(reps);
  CHECK(text.find("lemma-2.2: PASS") != std::string::npos);
  CHECK_THROWS_AS(render_reports(reps, "yaml"), std::invalid_argument);
}

TEST_CASE("rerunning a claim reproduces status and details") {
  auto first = verify_units_below_witness(7, 8);
  auto second = verify_units_below_witness(7, 8);
  CHECK(first == second);  // elapsed excluded from equality
}

TEST_CASE("parallel runs agree with sequential runs") {
  setenv("PYTHCUBIC_THREADS", "1", 1);
  auto sequential = verify_norm_monotonicity(3, 12);
  setenv("PYTHCUBIC_THREADS", "4", 1);
  auto parallel = verify_norm_monotonicity(3, 12);
  unsetenv("PYTHCUBIC_THREADS");
  CHECK(sequential == parallel);
  for (size_t i = 0; i < parallel.rows.size(); ++i)
    CHECK(parallel.rows[i].a == Int(3 + static_cast<long>(i)));
}
