#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hulls/matrix.hpp"

namespace hulls {

enum class DistanceClass { kMds, kAmds, kOther, kUnknown };

/// Certified facts about the minimum distance, produced by column-subset rank
/// tests. `witness` is the first (lexicographic) column subset violating the
/// rank condition of the stage that failed.
struct DistanceReport {
    DistanceClass cls = DistanceClass::kUnknown;
    int d_lower = 1;
    int d_upper = 0;
    bool exact = false;
    std::optional<std::vector<int>> witness;
    std::uint64_t subsets_checked = 0;
};

constexpr std::uint64_t kDefaultSubsetBudget = 10'000'000;

/// A linear [n, k] code represented by a full-row-rank generator matrix.
/// k = 0 (zero code) appears as the dual of the full space.
class LinearCode {
  public:
    explicit LinearCode(Mat gen);

    int length() const { return gen_.cols(); }
    int dimension() const { return gen_.rows(); }
    const Mat& generator() const { return gen_; }
    const FieldPtr& field() const { return gen_.field(); }

    /// Euclidean or Hermitian dual. The Hermitian dual is the Euclidean null
    /// space of the entrywise-conjugated generator.
    LinearCode dual(Form form) const;

    /// Hull dimension, computed two independent ways (k - rank of the Gram
    /// matrix, and the dimension of rowspace(C) meet rowspace(dual)); throws
    /// if they ever disagree.
    int hull_dim(Form form) const;

    /// MDS / AMDS / other classification by exhaustive column-subset rank
    /// tests, with certified distance bounds. Exceeding the subset budget
    /// yields kUnknown with whatever was certified so far.
    DistanceReport distance_class(std::uint64_t budget = kDefaultSubsetBudget) const;

    /// Exact minimum weight by codeword enumeration, one representative per
    /// projective message. Requires q^k within budget.
    int min_weight_bruteforce(std::uint64_t budget = 1'000'000) const;

    /// Drop the given coordinates. Throws if the row rank collapses.
    LinearCode puncture(const std::vector<int>& positions) const;

    /// Coordinate-wise scaling by a vector of units (the code v * C).
    LinearCode scale(const std::vector<Felt>& v) const;

  private:
    Mat gen_;
};

}  // namespace hulls
