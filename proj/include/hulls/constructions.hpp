#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hulls/code.hpp"
#include "hulls/field.hpp"
#include "hulls/grs.hpp"
#include "hulls/matrix.hpp"

namespace hulls {

// Families of evaluation points used by the hull-targeted factories.  The
// first three have vanishing coordinate sum; the last one deliberately has
// s(alpha) != 0 so that eta = -2/s(alpha) is defined.
enum class FamilyKind {
  kRootsOfUnityPlusZero,  // {x : x^n = x}; needs (n-1) | (order-1)
  kAffineGrid,            // {a_i*beta + a_j}; n = t*q, beta outside GF(q)
  kCosetUnion,            // U_N with t shifted cosets inside V_N, plus zero
  kSubfieldNonzeroSum,    // n elements of GF(q)\{0,1} with nonzero sum
};

struct FamilyParams {
  int n = 0;  // kRootsOfUnityPlusZero / kSubfieldNonzeroSum
  int t = 0;  // kAffineGrid / kCosetUnion
  int N = 0;  // kCosetUnion
};

struct EvalFamily {
  FamilyKind kind = FamilyKind::kRootsOfUnityPlusZero;
  FamilyParams params;
  EvalVector ev;
  Felt beta;                     // grid direction (grid family only)
  std::vector<Felt> coset_reps;  // coset shifts (coset family only)
};

// Realizes the family, validates its divisibility/size conditions, and sorts
// the points canonically (ascending discrete log, zero last).  The coordinate
// sum is verified to vanish -- except for kSubfieldNonzeroSum, where a greedy
// swap enforces s(alpha) != 0.
EvalFamily build_eval_family(const FieldPtr& f, FamilyKind kind,
                             const FamilyParams& params);

// Componentwise roots of the canonical weights: v_i^2 = u_i (Euclidean) or
// v_i^{q+1} = u_i (Hermitian).  Throws if some u_i is outside the required
// image, which means the family violates the theorem preconditions.
std::vector<Felt> solve_multipliers(const EvalVector& ev, Form form);

struct TgrsOptions {
  // Override for the free-eta branch (q even).  Ignored slots throw: the
  // odd-characteristic branch pins eta = -2/s(alpha) and the Hermitian branch
  // requires eta^q = -eta, so overrides must satisfy those constraints.
  std::optional<std::uint32_t> eta_log;
  // Draw the scaling unit from the subfield GF(q)^* instead of GF(q^2)^*.
  bool subfield_scaling = false;
};

struct HullCode {
  LinearCode code;
  Form form = Form::kEuclidean;
  int k = 0;
  int r = 0;
  int expected_hull = 0;  // equals the verified hull dimension
  Felt eta;
  Felt scale;                     // unit on the first r coordinates (1 if r=0)
  std::vector<Felt> multipliers;  // the scaled v'
};

// Twisted-code factory with a prescribed hull dimension.  The theorem branch
// is selected by (family kind, form):
//   * kRootsOfUnityPlusZero + Euclidean, char 2: hull k-r, k <= n/2;
//   * kSubfieldNonzeroSum + Euclidean, q odd:    hull k-r-1 when n = 2k+1,
//     hull k-r when k <= n/2 - 1 (code lives in GF(q^2));
//   * any Hermitian family + Hermitian:          hull k-r, k <= n/(q+1).
// The returned expected hull has been checked against both hull computations;
// a mismatch throws.
HullCode build_hull_tgrs(const EvalFamily& fam, int k, int r, Form form,
                         const TgrsOptions& opts = {});

// Dimension bookkeeping for the extension pipeline over GF(q^2).
struct KLimits {
  int k = 0;      // floor((n+q-1)/(q+1)), top of the self-orthogonal range
  int k0 = 0;     // smallest positive k0 with (n-1) | k0(q+1)
  int i_min = 0;  // min(floor((n-q)/2) - k, q-1)
  int K = 0;      // k + i_min + 1
  bool div_k = false;   // (n-1) | k(q+1)
  bool div_K1 = false;  // (n-1) | (K-1)(q+1)
  bool div_K2 = false;  // (n-1) | (K-2)(q+1)
};

// Pure integer arithmetic; requires n odd, n >= q+2 and a nonnegative i_min.
KLimits k_limits(int n, int q);

// Hermitian self-products of the first K rows of the weighted Vandermonde
// generator: delta_j = sum_i v_i^{q+1} alpha_i^{j(q+1)}.
struct DeltaProfile {
  std::vector<Felt> deltas;
  std::vector<int> support;  // ascending j with delta_j != 0

  int size() const { return static_cast<int>(support.size()); }
  // #{j in support : j < kprime}, the prefix support size.
  int count_below(int kprime) const;
};

// Computes the profile and asserts the rows are pairwise orthogonal and that
// the closed-form sums match the Gram diagonal of the realized generator.
DeltaProfile delta_profile(const EvalVector& ev, const std::vector<Felt>& v,
                           int K);

// Deterministic lambda selection for the two extension slots.  "Free" picks
// the smallest unit outside the cancellation class, keeping the slot's Gram
// entry nonzero; "boundary" cancels one cancellable slot (raising the hull by
// one); "boundary both" cancels both.
enum class LambdaPolicy { kFree, kBoundary, kBoundaryBoth };

struct RLExtension {
  LinearCode code;  // [n+2, base_k + i]
  int base_k = 0;
  int i = 0;
  Felt lambda1;          // column n, row k'-2
  Felt lambda2;          // column n+1, row k'-1
  DeltaProfile profile;  // first k' deltas
  int predicted_hull = 0;
  int measured_hull = 0;  // always equal to predicted_hull on return
};

// Appends two columns to the dimension-(base_k + i) weighted Vandermonde
// generator: lambda1 in row k'-2 of the first, lambda2 in row k'-1 of the
// second (the remaining extension entries are zero).  Requires 1 <= i <=
// i_min + 1 and nonzero lambdas; the slot-level hull prediction is verified.
RLExtension rl_extend(const EvalFamily& fam, const std::vector<Felt>& v,
                      int i, Felt lambda1, Felt lambda2);
RLExtension rl_extend(const EvalFamily& fam, const std::vector<Felt>& v,
                      int i, LambdaPolicy policy);

// Drops both extension columns: a length-n MDS code whose Hermitian hull is
// k' - #Delta_{k'}.
LinearCode rl_puncture_both(const RLExtension& ext);

// Drops the extension column whose Gram slot vanished, keeping the other:
// a length-(n+1) code.  When the extension was built with non-cancelling
// lambdas its hull is k' - #Delta_{k'}.  Throws when both slots vanish, in
// which case no length-(n+1) puncturing attains that hull.
LinearCode rl_puncture_zero_slot(const RLExtension& ext);

enum class RlLength { kN, kNPlus1, kNPlus2 };

struct FlexOptions {
  bool subfield_scaling = false;
  bool verify_distance = true;
  std::uint64_t subset_budget = kDefaultSubsetBudget;
};

struct FlexibleCode {
  LinearCode code;
  RlLength length = RlLength::kN;
  int kprime = 0;
  int hull = 0;       // requested and verified Hermitian hull j
  int base_hull = 0;  // hull of the unscaled standardized code
  int scaled_rows = 0;  // r = base_hull - hull pivot columns scaled
  Felt scale;
  Felt lambda1;  // extension entries in use (zero when the column is absent)
  Felt lambda2;
  DistanceClass d_class = DistanceClass::kUnknown;
  int distance = 0;  // exact distance implied by d_class
};

// Arbitrary-hull construction: builds the length n / n+1 / n+2 variant of
// dimension k', standardizes it so the zero-self-product rows carry identity
// pivots, and scales r = base_hull - j of those pivot columns by a unit a
// with a^{q+1} != 1.  The result is MDS (lengths n, n+1) or AMDS (length
// n+2) with Hermitian hull exactly j; both facts are verified.
FlexibleCode rl_flexible(const EvalFamily& fam, const std::vector<Felt>& v,
                         int kprime, int j, RlLength length,
                         const FlexOptions& opts = {});

}  // namespace hulls
