#pragma once

#include <optional>
#include <vector>

#include "hulls/code.hpp"
#include "hulls/field.hpp"
#include "hulls/matrix.hpp"

namespace hulls {

/// Distinct evaluation points together with the derived data every
/// generalized Reed-Solomon construction here needs: the point sum s and the
/// Lagrange coefficients u_i = prod_{j != i} (alpha_i - alpha_j)^{-1}.
struct EvalVector {
    FieldPtr field;
    std::vector<Felt> points;
    Felt s;
    std::vector<Felt> u;

    int length() const { return static_cast<int>(points.size()); }
};

EvalVector make_eval_vector(FieldPtr field, std::vector<Felt> points);

/// Single twist at the top of the message space: codewords evaluate
/// f = sum_{i < k} a_i x^i + eta * a_{k-1} x^k.
struct TwistParams {
    int k = 0;
    Felt eta;
};

/// k x n generator with rows v_i alpha_i^j, j = 0..k-1.
Mat grs_generator(const EvalVector& ev, const std::vector<Felt>& v, int k);

/// Twisted variant: rows j = 0..k-2 as above, final row
/// v_i (alpha_i^{k-1} + eta alpha_i^k). eta = 0 reproduces grs_generator.
Mat tgrs_generator(const EvalVector& ev, const std::vector<Felt>& v, const TwistParams& tw);

struct TgrsDual {
    /// Which closed form built the parity matrix: 1 for the generic shape,
    /// 2 when the point sum vanishes, 3 when 1 + s*eta = 0 (the dual is then
    /// not a twisted code of the same shape; only the parity matrix applies).
    int case_id = 0;
    Mat parity;                        // (n-k) x n with generator * parity^T = 0
    std::vector<Felt> multipliers;     // u_i / v_i
    std::optional<TwistParams> twist;  // dual twist, cases 1 and 2 only
};

TgrsDual tgrs_dual_identify(const EvalVector& ev, const std::vector<Felt>& v,
                            const TwistParams& tw);
Mat tgrs_parity(const EvalVector& ev, const std::vector<Felt>& v, const TwistParams& tw);

/// Table over element encodings: entry e is nonzero iff the element encoded
/// by e is a sum of exactly k distinct points of ev.
std::vector<char> subset_sums(const EvalVector& ev, int k);

/// kMds iff -1/eta is not a sum of k distinct evaluation points; these
/// single-twist codes are AMDS otherwise.
DistanceClass classify_tgrs(const EvalVector& ev, const TwistParams& tw);

enum class EtaConstraint { kNone, kAntiHermitian };

/// Smallest-exponent twist coefficient (theta^0, theta^1, ...) satisfying the
/// constraint and making the dimension-k twisted code MDS on these points.
std::optional<Felt> pick_eta(const EvalVector& ev, int k, EtaConstraint constraint);

}  // namespace hulls
