#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trace_turan/hypergraph.hpp"
#include "trace_turan/trace.hpp"

namespace trace_turan {

// Per-instance checks of the structural inequalities that every
// K_{2,t}-trace-free hypergraph satisfies. A violation therefore means H
// contains a trace, and each one is paired with a certificate when one can
// be found.
//
// Lemma ids:
//   "3.1"  d_{H\A}(x,y) <= 3t-3 (<= 2 when t = 2)
//   "3.3"  d_{C_delta}(x,y) <= (1+4 eps)t - 1, delta >= 14
//   "5.1"  edges at y meeting N1(x) twice < k + 25kt, inside C_delta
//   "5.2"  sum_u |V_u| <= ((1+4 eps)t - 1) n, inside C_delta
//   "6.1"  |N1(x) & N1(y)| <= 7, inside B = H\A, t = 2
//   "6.2"  |V_u & V_w| <= 7 for each B-edge {v,u,w}, t = 2
//   "6.3"  |V_u| >= d_B(u) - 16, t = 2
//   "6.4"  sum_u |V_u| <= n + 14 d_B(v), t = 2

enum class CheckStatus { kPass, kVacuous, kViolated };

std::string to_string(CheckStatus s);

struct LemmaViolation {
  std::string lemma;
  std::vector<Vertex> witness;
  double observed = 0.0;
  double bound = 0.0;
  std::optional<TraceCertificate> certificate;
  /// Set when no certificate could be produced for this violation.
  bool certificate_search_exhausted = false;
};

struct CheckOutcome {
  std::string lemma;
  CheckStatus status = CheckStatus::kVacuous;
  /// Number of (pair / vertex / edge) instances the inequality was tested on.
  long long instances = 0;
  std::vector<LemmaViolation> violations;
};

struct LemmaReport {
  std::vector<CheckOutcome> checks;

  std::vector<LemmaViolation> violations() const;
};

/// Runs every check. delta >= 2 (the C_delta checks are vacuous below 14);
/// t >= 2. Throws std::invalid_argument otherwise.
LemmaReport run_lemma_checks(const Hypergraph3& h, int t, int delta, std::uint64_t seed = 0x5eed);

/// The violations of run_lemma_checks, flattened.
std::vector<LemmaViolation> check_lemma_invariants(const Hypergraph3& h, int t, int delta,
                                                   std::uint64_t seed = 0x5eed);

/// One JSON object (no newline) per check.
std::string to_json_line(const CheckOutcome& outcome);

}  // namespace trace_turan
