#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hulls/code.hpp"
#include "hulls/constructions.hpp"

namespace hulls {

/// Parameters [[n, k, d; c]]_q of an entanglement-assisted quantum code,
/// together with provenance for the classical source code.
struct EaqeccParams {
  int n = 0;
  int k = 0;  // logical dimension; 0 is legal (degenerate) and kept flagged
  int d = 1;  // exact when d_exact, otherwise a recorded lower bound / claim
  int c = 0;  // pre-shared maximally entangled pairs
  std::uint32_t q = 0;
  bool d_exact = true;
  bool mds = false;  // classical MDS source, d <= (n+2)/2, and the
                     // entanglement Singleton bound met with equality
  std::string source_theorem;
  std::string classical_recipe;
};

/// Verdicts for the three Singleton-type bounds on an [[n, k, d; c]]_q code:
///   (1) k <= c + max(0, n - 2d + 2)
///   (0) k <= n - d + 1
///   (2) k (3d - 3 - n) <= (n - d + 1)(c + 2d - 2 - n), applicable only when
///       2d >= n + 2 (which keeps the factor 3d - 3 - n positive).
/// All comparisons are exact integer arithmetic.
struct BoundsReport {
  bool b1_holds = false;
  bool b1_equal = false;
  bool b0_holds = false;
  bool b0_equal = false;
  bool b2_applies = false;
  bool b2_holds = true;  // vacuously true when inapplicable
  bool b2_equal = false;
  bool mds_candidate = false;  // b1_equal with 2d <= n + 2

  bool all_hold() const { return b1_holds && b0_holds && b2_holds; }
};

BoundsReport check_bounds(const EaqeccParams& p);

/// What is known about a classical code's minimum distance.
struct DistanceInfo {
  int d = 1;
  bool exact = false;
  DistanceClass cls = DistanceClass::kUnknown;
};

/// Resolves the distance through column-subset classification; MDS / AMDS
/// pin it exactly. Inconclusive classes fall back to codeword enumeration
/// when the message space is small, else to the certified lower bound.
DistanceInfo resolve_distance(const LinearCode& code,
                              std::uint64_t budget = kDefaultSubsetBudget);

/// The two quantum codes obtained from one classical [n, k] code over
/// GF(q^2) with Hermitian hull ell:
///   [[n, k - ell, d; n - k - ell]]_q        (from the code itself)
///   [[n, n - k - ell, d'; k - ell]]_q       (from its Hermitian dual)
/// The entanglement count of the first record is independently recomputed
/// as rank(P P^dagger) over the dual generator P; a disagreement with
/// n - k - ell throws.
struct Derivation {
  EaqeccParams primal;
  EaqeccParams dual;
  int hull = 0;
  int c_cross = 0;  // rank(P P^dagger), equal to primal.c on return
};

Derivation derive(const LinearCode& code, const DistanceInfo& d_primal,
                  const DistanceInfo& d_dual, const std::string& source = {},
                  const std::string& recipe = {});

/// Convenience overload that resolves both distances itself.
Derivation derive(const LinearCode& code,
                  std::uint64_t budget = kDefaultSubsetBudget);

/// The four quantum-code production sweeps. Q0 runs the twisted factory over
/// every admissible Hermitian point family; Q1 sweeps the length-(n + 2)
/// extensions; Q2 sweeps lengths n and n + 1 over the roots-of-unity family;
/// Q3 does the same over the coset-union families.
enum class QTheorem { kQ0, kQ1, kQ2, kQ3 };

const char* q_theorem_name(QTheorem thm);

struct SweepOptions {
  std::optional<int> n;  // restrict to one classical base length
  int max_n = 30;        // enumeration cap when n is not pinned
  std::uint64_t subset_budget = kDefaultSubsetBudget;
  // Ceiling on (subsets x k^3) spent certifying a dual distance before
  // falling back to the recorded claim with d_exact = false.
  std::uint64_t dual_distance_ops = 200'000'000;
};

/// One emitted record plus the measured facts of the classical code behind
/// it. Records never get silently dropped: a bound violation or a failed
/// cross-check shows up as verified = false.
struct SweepRow {
  EaqeccParams params;
  BoundsReport bounds;
  int item = 1;                // theorem item (lengths n / n + 1), 1-based
  bool dual_record = false;    // second record of the derivation pair
  int classical_n = 0;
  int classical_k = 0;
  int hull = 0;                // measured Hermitian hull = ell
  DistanceClass classical_class = DistanceClass::kUnknown;
  bool verified = false;
};

struct SweepTable {
  QTheorem theorem = QTheorem::kQ0;
  std::uint32_t q = 0;
  std::vector<SweepRow> rows;
  int skipped = 0;  // in-range combinations with no reachable construction
};

SweepTable sweep_family(QTheorem thm, std::uint32_t q,
                        const SweepOptions& opts = {});

}  // namespace hulls
