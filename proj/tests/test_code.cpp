#include <cstdint>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "hulls/code.hpp"
#include "hulls/field.hpp"
#include "hulls/grs.hpp"
#include "hulls/matrix.hpp"

using namespace hulls;

namespace {

// [7,4] binary Hamming code, systematic form G = [I | A].
LinearCode hamming74() {
    const FieldPtr f = Field::make(2, 1);
    const Felt o = f->one();
    const Felt z = Field::zero();
    return LinearCode(Mat::from_rows(f, {{o, z, z, z, o, o, z},
                                         {z, o, z, z, o, z, o},
                                         {z, z, o, z, z, o, o},
                                         {z, z, z, o, o, o, o}}));
}

// Conventional GRS code over GF(7): points 0..5, unit multipliers.
LinearCode grs_6_3() {
    const FieldPtr f = Field::make(7, 1);
    std::vector<Felt> pts;
    for (int i = 0; i < 6; ++i) pts.push_back(f->from_integer(i));
    const EvalVector ev = make_eval_vector(f, pts);
    const std::vector<Felt> v(6, f->one());
    return LinearCode(grs_generator(ev, v, 3));
}

Mat random_full_rank(const FieldPtr& f, int k, int n, std::uint64_t seed) {
    std::uint64_t state = seed;
    auto next = [&state]() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<std::uint32_t>(state >> 33);
    };
    while (true) {
        Mat m(f, k, n);
        for (int i = 0; i < k; ++i) {
            for (int j = 0; j < n; ++j) {
                const std::uint32_t r = next() % f->order();
                m(i, j) = r == 0 ? Field::zero() : Felt{r - 1};
            }
        }
        if (rank_of(m) == k) return m;
    }
}

}  // namespace

TEST_CASE("constructor insists on a full-row-rank generator no wider than the length") {
    const FieldPtr f = Field::make(7, 1);
    const Felt o = f->one();
    const Felt z = Field::zero();
    CHECK_THROWS_AS(LinearCode(Mat::from_rows(f, {{o, z}, {o, z}})), std::invalid_argument);
    CHECK_THROWS_AS(LinearCode(Mat::from_rows(f, {{o}, {o}})), std::invalid_argument);
    CHECK_THROWS_AS(LinearCode(Mat::from_rows(f, {{o, o}, {z, o}, {o, z}})),
                    std::invalid_argument);

    const LinearCode zero_code{Mat(f, 0, 5)};
    CHECK(zero_code.dimension() == 0);
    CHECK(zero_code.length() == 5);
}

TEST_CASE("duality: generators annihilate parity checks and dimensions add up") {
    const LinearCode c = grs_6_3();
    const FieldPtr f = c.field();
    const LinearCode d = c.dual(Form::kEuclidean);
    CHECK(d.length() == 6);
    CHECK(d.dimension() == 3);
    CHECK(c.generator().mul(d.generator().transpose()).is_zero_matrix());
    CHECK(same_row_space(c.dual(Form::kEuclidean).dual(Form::kEuclidean).generator(),
                         c.generator()));

    // The dual of the zero code is the full space; dualizing back is empty.
    const LinearCode zero_code{Mat(f, 0, 5)};
    const LinearCode full = zero_code.dual(Form::kEuclidean);
    CHECK(full.dimension() == 5);
    CHECK(full.dual(Form::kEuclidean).dimension() == 0);

    const FieldPtr f9 = Field::make(3, 2);
    const LinearCode zero9{Mat(f9, 0, 4)};
    CHECK(zero9.dual(Form::kHermitian).generator() == Mat::identity(f9, 4));

    const Mat g9 = random_full_rank(f9, 2, 5, 12345);
    const LinearCode c9(g9);
    const LinearCode d9 = c9.dual(Form::kHermitian);
    CHECK(d9.dimension() == 3);
    CHECK(c9.generator().mul(d9.generator().conj_transpose(3)).is_zero_matrix());
    CHECK(same_row_space(d9.dual(Form::kHermitian).generator(), c9.generator()));
}

TEST_CASE("hull dimensions for hand-checked codes") {
    const FieldPtr f2 = Field::make(2, 1);
    const Felt o = f2->one();
    const Felt z = Field::zero();
    // [1 1] over GF(2) is self-orthogonal: hull = 1.
    CHECK(LinearCode(Mat::from_rows(f2, {{o, o}})).hull_dim(Form::kEuclidean) == 1);
    // [1 0] meets its dual trivially.
    CHECK(LinearCode(Mat::from_rows(f2, {{o, z}})).hull_dim(Form::kEuclidean) == 0);

    const LinearCode zero_code{Mat(f2, 0, 3)};
    CHECK(zero_code.hull_dim(Form::kEuclidean) == 0);

    // hull(C) = hull(dual C) for both forms.
    const FieldPtr f9 = Field::make(3, 2);
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL, 4ULL}) {
        const LinearCode c(random_full_rank(f9, 3, 6, seed));
        for (Form form : {Form::kEuclidean, Form::kHermitian}) {
            CHECK(c.hull_dim(form) == c.dual(form).hull_dim(form));
        }
    }
}

TEST_CASE("distance classification: MDS codes") {
    const LinearCode c = grs_6_3();
    const DistanceReport rep = c.distance_class();
    CHECK(rep.cls == DistanceClass::kMds);
    CHECK(rep.exact);
    CHECK(rep.d_lower == 4);
    CHECK(rep.d_upper == 4);
    CHECK_FALSE(rep.witness.has_value());
    CHECK(rep.subsets_checked == 20);  // C(6,3)
    CHECK(c.min_weight_bruteforce() == 4);

    // The identity code has distance 1 and is (trivially) MDS.
    const FieldPtr f = Field::make(5, 1);
    const LinearCode id_code{Mat::identity(f, 4)};
    const DistanceReport idr = id_code.distance_class();
    CHECK(idr.cls == DistanceClass::kMds);
    CHECK(idr.d_lower == 1);
    CHECK(idr.exact);
}

TEST_CASE("distance classification: AMDS codes and budget boundaries") {
    const LinearCode ham = hamming74();
    const DistanceReport rep = ham.distance_class();
    CHECK(rep.cls == DistanceClass::kAmds);
    CHECK(rep.exact);
    CHECK(rep.d_lower == 3);
    CHECK(rep.d_upper == 3);
    REQUIRE(rep.witness.has_value());
    CHECK(*rep.witness == std::vector<int>{0, 1, 3, 4});
    CHECK(ham.min_weight_bruteforce() == 3);

    // The budget is checked against the worst case C(7,4) = 35 before stage 1
    // starts; at exactly 35 the first singular subset appears after 5 checks
    // and stage 2 (21 more) still fits.
    const DistanceReport tight = ham.distance_class(34);
    CHECK(tight.cls == DistanceClass::kUnknown);
    CHECK(tight.subsets_checked == 0);
    CHECK(tight.d_lower == 1);
    CHECK(tight.d_upper == 4);
    CHECK_FALSE(tight.exact);

    const DistanceReport enough = ham.distance_class(35);
    CHECK(enough.cls == DistanceClass::kAmds);
    CHECK(enough.exact);
    CHECK(enough.subsets_checked == 26);
}

TEST_CASE("distance classification: far-from-MDS and unknown outcomes") {
    const FieldPtr f = Field::make(2, 1);
    const Felt o = f->one();
    const Felt z = Field::zero();
    const LinearCode c(Mat::from_rows(f, {{o, z, z, z}, {z, o, z, z}}));
    const DistanceReport rep = c.distance_class();
    CHECK(rep.cls == DistanceClass::kOther);
    CHECK(rep.d_upper == 1);
    REQUIRE(rep.witness.has_value());
    // The reported witness is the first rank-deficient (k+1)-subset.
    CHECK(*rep.witness == std::vector<int>{0, 2, 3});
    CHECK(c.min_weight_bruteforce() == 1);

    // Budget too small to even start stage 1.
    const LinearCode ham = hamming74();
    const DistanceReport none = ham.distance_class(1);
    CHECK(none.cls == DistanceClass::kUnknown);
    CHECK(none.subsets_checked == 0);
    CHECK(none.d_lower == 1);
    CHECK(none.d_upper == 4);  // Singleton
    CHECK_FALSE(none.witness.has_value());
}

TEST_CASE("distance classification: stage-2 budget gate") {
    // Columns e1, e2, e3, (1,1,1) x3: the first singular 3-subset is the 8th
    // ({0,3,4}), so a budget of 20..22 passes the upfront gate (C(6,3) = 20)
    // but cannot afford stage 2 (C(6,4) = 15 more).
    const FieldPtr f = Field::make(2, 1);
    const Felt o = f->one();
    const Felt z = Field::zero();
    const LinearCode c(Mat::from_rows(f, {{o, z, z, o, o, o},
                                          {z, o, z, o, o, o},
                                          {z, z, o, o, o, o}}));
    const DistanceReport gated = c.distance_class(20);
    CHECK(gated.cls == DistanceClass::kUnknown);
    CHECK(gated.subsets_checked == 8);
    REQUIRE(gated.witness.has_value());
    CHECK(*gated.witness == std::vector<int>{0, 3, 4});
    CHECK(gated.d_upper == 3);
    CHECK(gated.d_lower == 1);

    const DistanceReport full = c.distance_class(23);
    CHECK(full.cls == DistanceClass::kOther);
    CHECK(full.d_upper == 2);
    REQUIRE(full.witness.has_value());
    CHECK(*full.witness == std::vector<int>{0, 3, 4, 5});
    CHECK(c.min_weight_bruteforce() == 2);
}

TEST_CASE("degenerate dimensions are rejected") {
    const FieldPtr f = Field::make(2, 1);
    const LinearCode zero_code{Mat(f, 0, 3)};
    CHECK_THROWS_AS(zero_code.distance_class(), std::invalid_argument);
    CHECK_THROWS_AS(zero_code.min_weight_bruteforce(), std::invalid_argument);

    // Message space too big for the enumeration budget.
    const FieldPtr f13 = Field::make(13, 2);
    const LinearCode big(random_full_rank(f13, 4, 8, 99));
    CHECK_THROWS_AS(big.min_weight_bruteforce(100), std::domain_error);
}

TEST_CASE("puncturing drops coordinates and re-validates rank") {
    const LinearCode c = grs_6_3();
    const LinearCode p = c.puncture({0, 5});
    CHECK(p.length() == 4);
    CHECK(p.dimension() == 3);
    // Puncturing an MDS code on few enough coordinates stays MDS.
    CHECK(p.distance_class().cls == DistanceClass::kMds);

    CHECK_THROWS_AS(c.puncture({6}), std::invalid_argument);
    CHECK_THROWS_AS(c.puncture({-1}), std::invalid_argument);
    CHECK_THROWS_AS(c.puncture({0, 1, 2, 3, 4, 5}), std::invalid_argument);

    // Dropping enough columns to kill full row rank must throw.
    CHECK_THROWS_AS(c.puncture({0, 1, 2, 3}), std::invalid_argument);
}

TEST_CASE("coordinate scaling by units") {
    const LinearCode c = grs_6_3();
    const FieldPtr f = c.field();
    std::vector<Felt> v;
    std::vector<Felt> vinv;
    for (int i = 0; i < 6; ++i) {
        const Felt x = f->from_integer(i + 1);
        v.push_back(x);
        vinv.push_back(f->inv(x));
    }
    const LinearCode scaled = c.scale(v);
    CHECK(scaled.scale(vinv).generator() == c.generator());
    // Scaling is weight-preserving, so the classification is unchanged.
    CHECK(scaled.distance_class().cls == DistanceClass::kMds);

    std::vector<Felt> bad = v;
    bad[2] = Field::zero();
    CHECK_THROWS_AS(c.scale(bad), std::invalid_argument);
    CHECK_THROWS_AS(c.scale({f->one()}), std::invalid_argument);
}
