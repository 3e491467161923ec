#pragma once

#include <vector>

#include "hulls/field.hpp"

namespace hulls {

/// Dense matrix over a shared Field, row-major. Shapes with zero rows are
/// legal (empty bases); zero columns are not.
class Mat {
  public:
    Mat(FieldPtr field, int rows, int cols);

    static Mat identity(const FieldPtr& field, int n);
    static Mat from_rows(FieldPtr field, const std::vector<std::vector<Felt>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FieldPtr& field() const { return field_; }

    Felt operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    Felt& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

    Mat transpose() const;
    /// Entry-wise Frobenius x -> x^q.
    Mat conj_entries(std::uint32_t q) const;
    /// Conjugate transpose for the Hermitian form.
    Mat conj_transpose(std::uint32_t q) const;
    Mat mul(const Mat& rhs) const;
    /// This matrix with `below` appended as extra rows.
    Mat stacked(const Mat& below) const;
    Mat select_columns(const std::vector<int>& idx) const;
    Mat select_rows(const std::vector<int>& idx) const;
    /// Columns scaled per entry of v (size cols).
    Mat scale_columns(const std::vector<Felt>& v) const;

    bool is_zero_matrix() const;
    bool operator==(const Mat& rhs) const;

  private:
    FieldPtr field_;
    int rows_;
    int cols_;
    std::vector<Felt> data_;
};

struct RrefResult {
    Mat reduced;
    int rank = 0;
    std::vector<int> pivots;  // pivot column per nonzero row
};

/// Reduced row echelon form with deterministic pivoting (leftmost column,
/// first nonzero row).
RrefResult rref(const Mat& a);

int rank_of(const Mat& a);

/// Basis of the right kernel {x : A x^T = 0}, one vector per row;
/// (cols - rank) rows total.
Mat null_space(const Mat& a);

/// G G^T (Euclidean) or G G^dagger (Hermitian).
Mat gram(const Mat& g, Form form);
int gram_rank(const Mat& g, Form form);

/// Basis of rowspace(a) intersected with rowspace(b), via the left kernel of
/// the stacked matrix. Dimension equals rank a + rank b - rank [a; b]; the
/// two computations are cross-checked.
Mat row_space_intersection(const Mat& a, const Mat& b);

bool same_row_space(const Mat& a, const Mat& b);

}  // namespace hulls
