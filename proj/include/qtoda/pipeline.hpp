#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qtoda/json_io.hpp"

namespace qtoda {

struct PipelineOptions {
  char type = 'A';
  int rank = 1;
  int order = 3;              // e^t truncation for the flat-section stage
  std::string fault_inject;   // empty = none; see apply_fault below
  bool timings = false;       // timings make reports non-reproducible; opt-in
  std::optional<Rational> h_value;  // evaluate residuals at a rational h
};

struct StageReport {
  std::string name;
  bool pass = false;
  std::vector<CheckResult> checks;
  long long millis = -1;  // -1 when timings are off
};

struct PipelineReport {
  char type = 'A';
  int rank = 0;
  int order = 0;
  std::string fault_inject;
  bool pass = false;
  std::vector<StageReport> stages;

  Json to_json() const;
};

// Known --fault-inject keys (testing only):
//   classical-b    drop all quantum terms from the B_i (fails hypothesis (v))
//   spurious-q     add a q_1 term to B_1 (fails (v) / commutation)
//   wrong-q        add a q_2-only term to B_1 (fails the divisor structure)
//   drop-fk-term   delete the leading term of F_1 (fails the relation check)
//   perturb-omega  add lambda_1 to the last Omega_k (fails [D_k, H] = 0)
extern const std::vector<std::string> kFaultKeys;

// Throws std::invalid_argument unless key is empty or one of kFaultKeys.
void validate_fault_key(const std::string& key);

// Mutates the named object; throws std::invalid_argument on unknown keys
// or keys inapplicable at this rank.
void apply_fault_B(const std::string& key, std::vector<QMatrix>& B,
                   const SchubertBasis& basis);
void apply_fault_F(const std::string& key, std::vector<SparsePoly>& F);
void apply_fault_Omega(const std::string& key, std::vector<NOElement>& Omega);

// Runs every stage in dependency order; stage failures are recorded in the
// report rather than thrown. Throws UnsupportedType for unsupported input.
PipelineReport run_pipeline(const PipelineOptions& opts);

}  // namespace qtoda
