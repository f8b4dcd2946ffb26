#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "pythcubic/element.hpp"

namespace pythcubic {

// The distinguished element a^2+a+8 + (a^2-a+1) rho + (2-a) rho^2. It is a
// sum of six squares (1+1+1+4+rho^2+((a+1)+a rho-rho^2)^2) and, for a >= 3,
// of no fewer.
Elem lower_bound_witness(const FieldPtr& f);

// 7 + rho^2: what remains of the witness after removing its one large
// square; the pivot of the final counting step.
Elem witness_remainder(const FieldPtr& f);

enum class ClaimStatus { kPass, kFail, kNotApplicable };

std::string to_string(ClaimStatus s);
ClaimStatus claim_status_from_string(const std::string& s);

// One verified instance. `data` carries the computed sets and witnesses in
// enough detail to re-check the claim without rerunning the search.
struct ClaimRow {
  Int a;
  ClaimStatus status = ClaimStatus::kFail;
  double elapsed_ms = 0.0;
  nlohmann::json data;

  bool operator==(const ClaimRow& o) const {
    return a == o.a && status == o.status && data == o.data;
  }
};

struct VerificationReport {
  std::string claim;
  std::vector<ClaimRow> rows;

  bool all_pass() const;

  bool operator==(const VerificationReport& o) const {
    return claim == o.claim && rows == o.rows;
  }
};

struct VerifyOptions {
  long unit_box = 10;  // exponent bound for unit searches
};

// Claim catalog. Each verifier records instances outside its hypothesis
// range descriptively (status not-applicable) instead of asserting them.
//
//  norm-monotonicity       lemma-2.2   a >= 3
//  units-near-one          lemma-2.3   a >= 7
//  unit-growth             lemma-2.4   a >= 7
//  units-below-witness     lemma-3.1   a >= 7
//  small-norm-squares      lemma-3.2   a >= 15
//  indecomposable-squares  lemma-3.3   a >= 15
//  decomposable-sums       lemma-3.4   a >= 15
//  signature-table         table-1     a >= 15
//  small-a-lengths         table-2     fixed rows a = -1..2
//  six-square-minimum      theorem-1.1 a >= 3
VerificationReport verify_norm_monotonicity(long lo, long hi, const VerifyOptions& = {});
VerificationReport verify_units_near_one(long lo, long hi, const VerifyOptions& = {});
VerificationReport verify_unit_growth(long lo, long hi, const VerifyOptions& = {});
VerificationReport verify_units_below_witness(long lo, long hi, const VerifyOptions& = {});
VerificationReport verify_small_norm_squares(long lo, long hi, const VerifyOptions& = {});
VerificationReport verify_indecomposable_squares(long lo, long hi,
                                                 const VerifyOptions& = {});
VerificationReport verify_decomposable_sums(long lo, long hi, const VerifyOptions& = {});
VerificationReport verify_signature_table(long lo, long hi, const VerifyOptions& = {});
VerificationReport verify_small_a_lengths(const VerifyOptions& = {});
VerificationReport verify_six_square_minimum(long lo, long hi, const VerifyOptions& = {});

struct ClaimSpec {
  std::string id;          // CLI token, e.g. "lemma-2.2"
  long default_lo;
  long default_hi;
  bool ranged;             // false: fixed instances, range flags ignored
  VerificationReport (*run)(long lo, long hi, const VerifyOptions&);
};

// All claims in catalog order; ids: lemma-2.2, lemma-2.3, lemma-2.4,
// lemma-3.1, lemma-3.2, lemma-3.3, lemma-3.4, table-1, table-2,
// theorem-1.1.
const std::vector<ClaimSpec>& claim_catalog();
const ClaimSpec* find_claim(const std::string& id);

// JSON helpers shared by reports and the CLI: coordinates serialize as
// decimal strings so arbitrary-size integers survive the round trip.
nlohmann::json json_elem(const Elem& e);
nlohmann::json json_elems(const std::vector<Elem>& es);

}  // namespace pythcubic
