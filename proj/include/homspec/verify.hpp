#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "homspec/rational.hpp"

namespace homspec::verify {

struct CriterionResult {
  std::string id;
  std::string name;
  bool pass = false;
  std::vector<std::string> details;
  double seconds = 0.0;
};

struct Options {
  std::uint64_t seed = 20250808;
  int threads = 1;
  int pairs = 100;            // equal-volume pairs per rank in the uniqueness sweep
  int n_max = 10;             // upper rank for the Einstein instability sweep
  int n_override = 0;         // restrict a sweep to one rank when > 0
  Rational oracle_cutoff = Rational(3, 2);
};

CriterionResult diii_lambda1_exactness(const Options& opt);   // C1
CriterionResult diii_lambda2_regimes(const Options& opt);     // C2
CriterionResult symmetric_anchors(const Options& opt);        // C3
CriterionResult nu_instability(const Options& opt);           // C4
CriterionResult aii_lambda1_exactness(const Options& opt);    // C5
CriterionResult cross_oracle(const Options& opt);             // C6
CriterionResult diii_uniqueness(const Options& opt);          // C7.1
CriterionResult aii_uniqueness(const Options& opt);           // C7.2
CriterionResult property_suites(const Options& opt);          // C8

/// Selectors understood by the CLI: diii-lambda1, diii-lambda2, diii-einstein,
/// aii-lambda1, aii-oracle, diii-uniqueness, aii-uniqueness, all.
bool selector_known(const std::string& selector);
std::vector<CriterionResult> run(const std::string& selector, const Options& opt);

}  // namespace homspec::verify
