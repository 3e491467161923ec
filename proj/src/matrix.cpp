#include "hulls/matrix.hpp"

#include <stdexcept>

namespace hulls {

namespace {

std::size_t checked_extent(int rows, int cols) {
    if (rows < 0 || cols < 1) throw std::invalid_argument("bad matrix shape");
    return static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
}

}  // namespace

Mat::Mat(FieldPtr field, int rows, int cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(checked_extent(rows, cols)) {
    if (!field_) throw std::invalid_argument("matrix needs a field");
}

Mat Mat::identity(const FieldPtr& field, int n) {
    Mat out(field, n, n);
    for (int i = 0; i < n; ++i) out(i, i) = field->one();
    return out;
}

Mat Mat::from_rows(FieldPtr field, const std::vector<std::vector<Felt>>& rows) {
    if (rows.empty()) throw std::invalid_argument("from_rows needs at least one row");
    Mat out(std::move(field), static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < out.rows(); ++i) {
        if (static_cast<int>(rows[i].size()) != out.cols()) {
            throw std::invalid_argument("ragged rows");
        }
        for (int j = 0; j < out.cols(); ++j) out(i, j) = rows[i][j];
    }
    return out;
}

Mat Mat::transpose() const {
    if (rows_ == 0) throw std::invalid_argument("cannot transpose an empty basis");
    Mat t(field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
}

Mat Mat::conj_entries(std::uint32_t q) const {
    Mat out(field_, rows_, cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) out(i, j) = field_->conj((*this)(i, j), q);
    }
    return out;
}

Mat Mat::conj_transpose(std::uint32_t q) const {
    return conj_entries(q).transpose();
}

Mat Mat::mul(const Mat& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Mat out(field_, rows_, rhs.cols_);
    const Field& f = *field_;
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            const Felt a = (*this)(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < rhs.cols_; ++j) {
                out(i, j) = f.add(out(i, j), f.mul(a, rhs(k, j)));
            }
        }
    }
    return out;
}

Mat Mat::stacked(const Mat& below) const {
    if (below.cols_ != cols_) throw std::invalid_argument("stack width mismatch");
    Mat out(field_, rows_ + below.rows_, cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
    }
    for (int i = 0; i < below.rows_; ++i) {
        for (int j = 0; j < cols_; ++j) out(rows_ + i, j) = below(i, j);
    }
    return out;
}

Mat Mat::select_columns(const std::vector<int>& idx) const {
    Mat out(field_, rows_, static_cast<int>(idx.size()));
    for (std::size_t j = 0; j < idx.size(); ++j) {
        if (idx[j] < 0 || idx[j] >= cols_) throw std::invalid_argument("column index out of range");
        for (int i = 0; i < rows_; ++i) out(i, static_cast<int>(j)) = (*this)(i, idx[j]);
    }
    return out;
}

Mat Mat::select_rows(const std::vector<int>& idx) const {
    Mat out(field_, static_cast<int>(idx.size()), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (idx[i] < 0 || idx[i] >= rows_) throw std::invalid_argument("row index out of range");
        for (int j = 0; j < cols_; ++j) out(static_cast<int>(i), j) = (*this)(idx[i], j);
    }
    return out;
}

Mat Mat::scale_columns(const std::vector<Felt>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("scale vector length mismatch");
    Mat out(field_, rows_, cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) out(i, j) = field_->mul((*this)(i, j), v[j]);
    }
    return out;
}

bool Mat::is_zero_matrix() const {
    for (const Felt& x : data_) {
        if (!x.is_zero()) return false;
    }
    return true;
}

bool Mat::operator==(const Mat& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && field_->order() == rhs.field_->order() &&
           data_ == rhs.data_;
}

RrefResult rref(const Mat& a) {
    RrefResult res{a, 0, {}};
    Mat& m = res.reduced;
    const Field& f = *a.field();
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int pivot = -1;
        for (int i = row; i < m.rows(); ++i) {
            if (!m(i, col).is_zero()) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != row) {
            for (int j = 0; j < m.cols(); ++j) std::swap(m(row, j), m(pivot, j));
        }
        const Felt inv = f.inv(m(row, col));
        for (int j = col; j < m.cols(); ++j) m(row, j) = f.mul(m(row, j), inv);
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            const Felt c = m(i, col);
            for (int j = col; j < m.cols(); ++j) {
                m(i, j) = f.sub(m(i, j), f.mul(c, m(row, j)));
            }
        }
        res.pivots.push_back(col);
        ++row;
    }
    res.rank = row;
    return res;
}

int rank_of(const Mat& a) {
    if (a.rows() == 0) return 0;
    return rref(a).rank;
}

Mat null_space(const Mat& a) {
    const Field& f = *a.field();
    if (a.rows() == 0) return Mat::identity(a.field(), a.cols());
    const RrefResult r = rref(a);
    std::vector<int> free_cols;
    {
        std::vector<char> is_pivot(a.cols(), 0);
        for (int c : r.pivots) is_pivot[c] = 1;
        for (int c = 0; c < a.cols(); ++c) {
            if (!is_pivot[c]) free_cols.push_back(c);
        }
    }
    Mat out(a.field(), static_cast<int>(free_cols.size()), a.cols());
    for (std::size_t i = 0; i < free_cols.size(); ++i) {
        const int fc = free_cols[i];
        out(static_cast<int>(i), fc) = f.one();
        for (int pr = 0; pr < r.rank; ++pr) {
            out(static_cast<int>(i), r.pivots[pr]) = f.neg(r.reduced(pr, fc));
        }
    }
    return out;
}

Mat gram(const Mat& g, Form form) {
    if (form == Form::kEuclidean) return g.mul(g.transpose());
    return g.mul(g.conj_transpose(g.field()->subfield_order()));
}

int gram_rank(const Mat& g, Form form) {
    if (g.rows() == 0) return 0;
    return rank_of(gram(g, form));
}

Mat row_space_intersection(const Mat& a, const Mat& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("intersection width mismatch");
    const Field& f = *a.field();
    if (a.rows() == 0 || b.rows() == 0) return Mat(a.field(), 0, a.cols());

    const Mat stack = a.stacked(b);
    // z with z . [a; b] = 0, split z = (x | y): x a = -y b lies in both rowspaces.
    const Mat left_kernel = null_space(stack.transpose());
    Mat cand(a.field(), left_kernel.rows(), a.cols());
    for (int i = 0; i < left_kernel.rows(); ++i) {
        for (int r = 0; r < a.rows(); ++r) {
            const Felt c = left_kernel(i, r);
            if (c.is_zero()) continue;
            for (int j = 0; j < a.cols(); ++j) {
                cand(i, j) = f.add(cand(i, j), f.mul(c, a(r, j)));
            }
        }
    }
    RrefResult rc = rref(cand);
    std::vector<int> keep(rc.rank);
    for (int i = 0; i < rc.rank; ++i) keep[i] = i;
    Mat basis = rc.rank == 0 ? Mat(a.field(), 0, a.cols()) : rc.reduced.select_rows(keep);

    const int expected = rank_of(a) + rank_of(b) - rank_of(stack);
    if (expected != basis.rows()) {
        throw std::logic_error("row space intersection dimension cross-check failed");
    }
    return basis;
}

bool same_row_space(const Mat& a, const Mat& b) {
    if (a.cols() != b.cols()) return false;
    const int ra = rank_of(a);
    const int rb = rank_of(b);
    if (ra != rb) return false;
    return rank_of(a.stacked(b)) == ra;
}

}  // namespace hulls
