#include "hulls/code.hpp"

#include <algorithm>
#include <stdexcept>

namespace hulls {
namespace {

std::uint64_t binomial_capped(int n, int k, std::uint64_t cap) {
    if (k < 0 || k > n) return 0;
    std::uint64_t out = 1;
    for (int i = 1; i <= k; ++i) {
        out = out * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
        if (out > cap) return cap + 1;
    }
    return out;
}

bool next_combination(std::vector<int>& c, int n) {
    const int k = static_cast<int>(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[i] < n - k + i) {
            ++c[i];
            for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

// Rank of the submatrix formed by the given columns, by in-place elimination
// on a scratch copy. Avoids Mat overhead inside the subset loops.
int subset_rank(const Mat& g, const std::vector<int>& cols) {
    const Field& f = *g.field();
    const int r = g.rows();
    const int c = static_cast<int>(cols.size());
    std::vector<Felt> s(static_cast<std::size_t>(r) * c);
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < c; ++j) s[static_cast<std::size_t>(i) * c + j] = g(i, cols[j]);
    }
    auto at = [&](int i, int j) -> Felt& { return s[static_cast<std::size_t>(i) * c + j]; };
    int rank = 0;
    for (int col = 0; col < c && rank < r; ++col) {
        int pivot = -1;
        for (int i = rank; i < r; ++i) {
            if (!at(i, col).is_zero()) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != rank) {
            for (int j = col; j < c; ++j) std::swap(at(pivot, j), at(rank, j));
        }
        const Felt inv = f.inv(at(rank, col));
        for (int i = rank + 1; i < r; ++i) {
            if (at(i, col).is_zero()) continue;
            const Felt factor = f.mul(at(i, col), inv);
            for (int j = col; j < c; ++j) {
                at(i, j) = f.sub(at(i, j), f.mul(factor, at(rank, j)));
            }
        }
        ++rank;
    }
    return rank;
}

}  // namespace

LinearCode::LinearCode(Mat gen) : gen_(std::move(gen)) {
    if (gen_.rows() > gen_.cols()) throw std::invalid_argument("more generator rows than length");
    if (gen_.rows() > 0 && rank_of(gen_) != gen_.rows()) {
        throw std::invalid_argument("generator matrix does not have full row rank");
    }
}

LinearCode LinearCode::dual(Form form) const {
    if (form == Form::kHermitian) {
        const std::uint32_t q = field()->subfield_order();
        if (gen_.rows() == 0) return LinearCode(Mat::identity(field(), length()));
        return LinearCode(null_space(gen_.conj_entries(q)));
    }
    return LinearCode(null_space(gen_));
}

int LinearCode::hull_dim(Form form) const {
    if (dimension() == 0) return 0;
    const int via_gram = dimension() - gram_rank(gen_, form);
    const Mat meet = row_space_intersection(gen_, dual(form).generator());
    if (via_gram != meet.rows()) {
        throw std::logic_error("hull dimension methods disagree (Gram rank vs intersection)");
    }
    return via_gram;
}

DistanceReport LinearCode::distance_class(std::uint64_t budget) const {
    const int n = length();
    const int k = dimension();
    if (k == 0) throw std::invalid_argument("distance of the zero code is undefined");

    DistanceReport rep;
    rep.d_upper = n - k + 1;  // Singleton

    if (binomial_capped(n, k, budget) > budget) {
        rep.cls = DistanceClass::kUnknown;
        return rep;
    }

    // Stage 1: MDS iff every k-column submatrix is invertible.
    std::vector<int> comb(k);
    for (int i = 0; i < k; ++i) comb[i] = i;
    std::optional<std::vector<int>> bad_k;
    do {
        ++rep.subsets_checked;
        if (subset_rank(gen_, comb) < k) {
            bad_k = comb;
            break;
        }
    } while (next_combination(comb, n));

    if (!bad_k) {
        rep.cls = DistanceClass::kMds;
        rep.d_lower = rep.d_upper = n - k + 1;
        rep.exact = true;
        return rep;
    }
    rep.witness = bad_k;
    rep.d_upper = n - k;

    if (k == n || binomial_capped(n, k + 1, budget) > budget - rep.subsets_checked) {
        rep.cls = DistanceClass::kUnknown;
        return rep;
    }

    // Stage 2: AMDS iff no nonzero codeword vanishes on k+1 positions.
    std::vector<int> comb2(k + 1);
    for (int i = 0; i <= k; ++i) comb2[i] = i;
    do {
        ++rep.subsets_checked;
        if (subset_rank(gen_, comb2) < k) {
            rep.witness = comb2;
            rep.cls = DistanceClass::kOther;
            rep.d_upper = n - k - 1;
            return rep;
        }
    } while (next_combination(comb2, n));

    rep.cls = DistanceClass::kAmds;
    rep.d_lower = rep.d_upper = n - k;
    rep.exact = true;
    return rep;
}

int LinearCode::min_weight_bruteforce(std::uint64_t budget) const {
    const int n = length();
    const int k = dimension();
    if (k == 0) throw std::invalid_argument("minimum weight of the zero code is undefined");
    const Field& f = *field();
    const std::uint64_t q = f.order();

    std::uint64_t total = 1;
    for (int i = 0; i < k; ++i) {
        total *= q;
        if (total > budget) throw std::domain_error("message space exceeds the enumeration budget");
    }

    std::vector<Felt> elems(q);
    for (std::uint32_t e = 0; e < q; ++e) elems[e] = f.from_encoding(e);

    int best = n + 1;
    std::vector<Felt> word(n);
    // One representative per projective point: first nonzero coordinate is 1.
    for (int lead = 0; lead < k; ++lead) {
        const int tail = k - lead - 1;
        std::vector<std::uint32_t> odo(tail, 0);
        while (true) {
            std::fill(word.begin(), word.end(), Felt{});
            for (int j = 0; j < n; ++j) word[j] = gen_(lead, j);
            for (int t = 0; t < tail; ++t) {
                const Felt c = elems[odo[t]];
                if (c.is_zero()) continue;
                for (int j = 0; j < n; ++j) {
                    word[j] = f.add(word[j], f.mul(c, gen_(lead + 1 + t, j)));
                }
            }
            int w = 0;
            for (const Felt& x : word) w += x.is_zero() ? 0 : 1;
            if (w > 0 && w < best) best = w;

            int pos = tail - 1;
            while (pos >= 0 && odo[pos] + 1 == q) odo[pos--] = 0;
            if (pos < 0) break;
            ++odo[pos];
        }
    }
    return best;
}

LinearCode LinearCode::puncture(const std::vector<int>& positions) const {
    std::vector<char> drop(length(), 0);
    for (int p : positions) {
        if (p < 0 || p >= length()) throw std::invalid_argument("puncture position out of range");
        drop[p] = 1;
    }
    std::vector<int> keep;
    for (int j = 0; j < length(); ++j) {
        if (!drop[j]) keep.push_back(j);
    }
    if (keep.empty()) throw std::invalid_argument("puncturing away every coordinate");
    return LinearCode(gen_.select_columns(keep));  // ctor re-checks the rank
}

LinearCode LinearCode::scale(const std::vector<Felt>& v) const {
    if (static_cast<int>(v.size()) != length()) {
        throw std::invalid_argument("scaling vector length mismatch");
    }
    for (const Felt& x : v) {
        if (x.is_zero()) throw std::invalid_argument("scaling vector must consist of units");
    }
    return LinearCode(gen_.scale_columns(v));
}

}  // namespace hulls
