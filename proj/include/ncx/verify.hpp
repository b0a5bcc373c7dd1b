#pragma once

// Named verification suites driven by the command-line front end.  Each item
// re-checks one established identity or dictionary statement on concrete
// instances — randomized modules, a standard simplicial/cochain instance set,
// or a chosen algebra — and reports PASS/FAIL with a counterexample
// description on failure.  Identical options (including the seed) produce
// identical reports.

#include <optional>
#include <string>
#include <vector>

#include "ncx/rings.hpp"

namespace ncx {

struct VerifyOptions {
  QContext ctx;
  int D = 0;            // degree window for instance-based items; 0 = N + 2
  int trials = 50;      // randomized items
  unsigned long long seed = 0;
  std::string preset = "dual_numbers";  // algebra for cochain/tensor items
};

struct VerifyResult {
  std::string item;
  bool pass = false;
  std::string detail;   // summary on PASS, counterexample dump on FAIL
};

// Suites: "core" = {lemma1, lemma2, lemma5, prop2, kapranov};
// "simplicial" = {lemma8, cor3, cor4, thm1, lemma9, thm2, thm3, thm4};
// "qdga" = {qdga-leibniz, qdga-trivial}; "all" = the concatenation.
// Throws Error on unknown suite names.
std::vector<std::string> suite_items(const std::string& suite);

// Runs one named item; unknown names throw Error.  Verification failures are
// captured in the result, but assumption violations (a context outside the
// invertibility hypotheses) and malformed options propagate as exceptions.
VerifyResult run_verify_item(const std::string& item, const VerifyOptions& opt);

std::vector<VerifyResult> run_suite(const std::string& suite, const VerifyOptions& opt);

// Validates a stored graded complex: nilpotency of the differential (with a
// witness basis vector and its nonzero N-fold image on failure) and a
// homology-table summary on success.
VerifyResult verify_instance_json(const std::string& path);

}  // namespace ncx
