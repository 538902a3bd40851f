#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sforge/equivalence.hpp"
#include "sforge/mutation.hpp"

namespace sforge {

struct VerifyOptions {
  int vertex = 0;  // 0-based
  int max_period = 12;
  int max_addq_length = 8;
  long long iso_budget = 200000;
  bool assume_symmetric = false;
};

// Everything the driver established about one vertex, plus the canonical
// plaintext. The text never contains wall-clock data, so identical inputs
// render identical bytes and cache hits can be compared with memcmp.
struct VerificationReport {
  std::string algebra_id;  // hash of the canonical input file
  int vertex = 0;          // 0-based, printed 1-based
  std::optional<int> period;
  std::string hypothesis;
  std::vector<std::vector<int>> terms;  // add-Q resolution terms, Q_0 = P_i
  int steps = 0;
  std::vector<bool> tilting;  // one entry per mutation step
  bool phi_established = false;
  std::string phi_note;
  EquivalenceVerdict iso;  // outcome of the bounded substitution search
  VerdictKind verdict = VerdictKind::Inconclusive;
  std::string note;      // why the pipeline stopped early, when it did
  std::string rendered;  // canonical report text
};

// Period detection, add-Q data (off the projective resolution when its
// interior avoids P_i, by direct search otherwise), step-by-step mutation
// with tilting checks, quotient certificate, bounded isomorphism search.
VerificationReport run_verification(const AlgebraPresentation& pres,
                                    const VerifyOptions& opt);

// Result cache under SFORGE_CACHE_DIR; both are no-ops when the variable is
// unset or empty. Stored values are the rendered bytes of a computation.
std::optional<std::string> cache_lookup(const std::string& key);
void cache_store(const std::string& key, const std::string& text);

}  // namespace sforge
