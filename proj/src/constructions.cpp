#include "hulls/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace hulls {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

// Smallest unit outside the cancellation class of an extension slot whose
// generator row has Hermitian self-product delta: the slot's Gram entry
// delta + lambda^{q+1} stays nonzero.
Felt free_lambda(const FieldPtr& f, Felt delta) {
    if (delta.is_zero()) return f->one();
    Felt least = f->norm_root(f->neg(delta));
    return least.log == 0 ? f->theta() : f->one();
}

// Smallest member of the cancellation class: lambda^{q+1} = -delta.
Felt boundary_lambda(const FieldPtr& f, Felt delta) {
    if (delta.is_zero())
        throw std::invalid_argument("slot self-product is zero: no cancelling lambda exists");
    return f->norm_root(f->neg(delta));
}

std::vector<Felt> subfield_units_ascending(const FieldPtr& f) {
    std::uint32_t q = f->subfield_order();
    std::vector<Felt> out;
    out.reserve(q - 1);
    for (std::uint32_t j = 0; j < q - 1; ++j) out.push_back(Felt{j * (q + 1)});
    return out;
}

}  // namespace

EvalFamily build_eval_family(const FieldPtr& f, FamilyKind kind, const FamilyParams& params) {
    EvalFamily fam;
    fam.kind = kind;
    fam.params = params;
    std::vector<Felt> pts;

    switch (kind) {
        case FamilyKind::kRootsOfUnityPlusZero: {
            const int n = params.n;
            require(n >= 3, "roots family needs n >= 3");
            require(n <= static_cast<int>(f->order()), "roots family needs n <= field order");
            require(f->group_order() % static_cast<std::uint32_t>(n - 1) == 0,
                    "roots family needs (n-1) | (order-1)");
            const std::uint32_t step = f->group_order() / static_cast<std::uint32_t>(n - 1);
            for (int j = 0; j < n - 1; ++j)
                pts.push_back(Felt{static_cast<std::uint32_t>(j) * step});
            pts.push_back(Field::zero());
            break;
        }
        case FamilyKind::kAffineGrid: {
            require(f->is_quadratic(), "affine grid needs a quadratic extension");
            const std::uint32_t q = f->subfield_order();
            const int t = params.t;
            require(t >= 1 && t <= static_cast<int>(q) - 1, "affine grid needs 1 <= t <= q-1");
            fam.beta = f->theta();  // theta generates GF(q^2)^*, so it is outside GF(q)
            const std::vector<Felt> row_units = subfield_units_ascending(f);
            for (int i = 0; i < t; ++i) {
                const Felt shifted = f->mul(row_units[static_cast<std::size_t>(i)], fam.beta);
                for (std::uint32_t j = 0; j + 1 < q; ++j)
                    pts.push_back(f->add(shifted, row_units[j]));
                pts.push_back(shifted);  // column element zero
            }
            break;
        }
        case FamilyKind::kCosetUnion: {
            require(f->is_quadratic(), "coset union needs a quadratic extension");
            const std::uint32_t q = f->subfield_order();
            const int N = params.N;
            const int t = params.t;
            require(N >= 2, "coset union needs N >= 2");
            require(f->group_order() % static_cast<std::uint32_t>(N) == 0,
                    "coset union needs N | (q^2 - 1)");
            const std::uint32_t n1 = std::gcd(static_cast<std::uint32_t>(N), q + 1);
            const std::uint32_t n2 = static_cast<std::uint32_t>(N) / n1;
            require((q - 1) % n2 == 0, "coset union needs N/gcd(N, q+1) | (q-1)");
            const int cosets = static_cast<int>((q - 1) / n2);  // index of U_N inside V_N
            require(t >= 1 && t <= cosets - 2, "coset union needs 1 <= t <= (q-1)/n2 - 2");
            const std::uint32_t root_step = f->group_order() / static_cast<std::uint32_t>(N);
            const std::uint32_t rep_step = (q + 1) / n1;
            for (int c = 0; c <= t; ++c) {
                const Felt rep = f->element(static_cast<std::uint64_t>(c) * rep_step);
                if (c > 0) fam.coset_reps.push_back(rep);
                for (int s = 0; s < N; ++s)
                    pts.push_back(f->mul(rep, Felt{static_cast<std::uint32_t>(s) * root_step}));
            }
            pts.push_back(Field::zero());
            break;
        }
        case FamilyKind::kSubfieldNonzeroSum: {
            require(f->is_quadratic(), "nonzero-sum family lives in a quadratic extension");
            require(f->characteristic() != 2, "nonzero-sum family needs odd characteristic");
            const std::uint32_t q = f->subfield_order();
            const int n = params.n;
            require(n >= 2 && n <= static_cast<int>(q) - 2,
                    "nonzero-sum family needs 2 <= n <= q-2");
            // Pool GF(q) \ {0, 1} in ascending log order; take the n smallest
            // and, if their sum vanishes, swap the largest for the next one.
            std::vector<Felt> pool;
            for (std::uint32_t j = 1; j + 1 < q; ++j) pool.push_back(Felt{j * (q + 1)});
            pts.assign(pool.begin(), pool.begin() + n);
            Felt sum = Field::zero();
            for (Felt x : pts) sum = f->add(sum, x);
            if (sum.is_zero()) pts.back() = pool[static_cast<std::size_t>(n)];
            break;
        }
    }

    std::sort(pts.begin(), pts.end());
    fam.ev = make_eval_vector(f, std::move(pts));

    if (kind == FamilyKind::kSubfieldNonzeroSum) {
        if (fam.ev.s.is_zero())
            throw std::logic_error("nonzero-sum family still sums to zero after the swap");
    } else if (!fam.ev.s.is_zero()) {
        throw std::logic_error("family point sum is nonzero; construction invariant broken");
    }
    return fam;
}

std::vector<Felt> solve_multipliers(const EvalVector& ev, Form form) {
    const FieldPtr& f = ev.field;
    std::vector<Felt> v;
    v.reserve(ev.u.size());
    if (form == Form::kHermitian) {
        const std::uint32_t q = f->subfield_order();
        for (Felt u : ev.u) {
            if (u.is_zero() || !f->in_subfield(u, q))
                throw std::domain_error(
                    "canonical weight lies outside GF(q)^*; the points are not a Hermitian "
                    "family");
            v.push_back(f->norm_root(u));
        }
    } else {
        for (Felt u : ev.u) v.push_back(f->sqrt(u));
    }
    return v;
}

HullCode build_hull_tgrs(const EvalFamily& fam, int k, int r, Form form, const TgrsOptions& opts) {
    const EvalVector& ev = fam.ev;
    const FieldPtr& f = ev.field;
    const int n = ev.length();
    require(k >= 1, "dimension k must be positive");

    Felt eta;
    int expected = 0;
    if (form == Form::kEuclidean && fam.kind == FamilyKind::kRootsOfUnityPlusZero) {
        require(f->characteristic() == 2, "the Euclidean roots construction needs q even");
        require(k <= n / 2, "need k <= n/2");
        require(r >= 0 && r <= k - 1, "need 0 <= r <= k-1");
        eta = opts.eta_log ? f->element(*opts.eta_log) : f->one();
        expected = k - r;
    } else if (form == Form::kEuclidean && fam.kind == FamilyKind::kSubfieldNonzeroSum) {
        require(!opts.eta_log.has_value(),
                "eta is pinned to -2/s(alpha) for the nonzero-sum construction");
        require(r >= 0 && r <= k - 1, "need 0 <= r <= k-1");
        if (n == 2 * k + 1) {
            expected = k - r - 1;
        } else if (k <= n / 2 - 1) {
            expected = k - r;
        } else {
            throw std::invalid_argument("need n = 2k+1 or k <= n/2 - 1");
        }
        eta = f->div(f->from_integer(-2), ev.s);
    } else if (form == Form::kHermitian && fam.kind != FamilyKind::kSubfieldNonzeroSum) {
        const std::uint32_t q = f->subfield_order();
        require(k <= n / static_cast<int>(q + 1), "need k <= n/(q+1)");
        eta = opts.eta_log ? f->element(*opts.eta_log) : f->find_eta();
        if (f->conj(eta, q) != f->neg(eta))
            throw std::invalid_argument("eta must satisfy eta^q = -eta");
        // Self-product of the twist row x^{k-1} + eta x^k under the canonical
        // weights. It vanishes except when k(q+1) lands on the divisibility
        // boundary of the point set; there the unscaled hull is k - 1 and
        // scaling r coordinates reaches k - 1 - r instead of k - r.
        Felt twist_delta = Field::zero();
        for (int t = 0; t < n; ++t) {
            const Felt x = ev.points[static_cast<std::size_t>(t)];
            Felt fx = f->mul(eta, x);
            fx = f->add(fx, f->one());
            if (k >= 2) fx = f->mul(fx, f->pow(x, k - 1));
            const Felt norm = f->mul(fx, f->conj(fx, q));
            twist_delta = f->add(twist_delta, f->mul(ev.u[static_cast<std::size_t>(t)], norm));
        }
        if (twist_delta.is_zero()) {
            require(r >= 0 && r <= k, "need 0 <= r <= k");
            expected = k - r;
        } else {
            require(r >= 0 && r <= k - 1, "need 0 <= r <= k-1 when the twist row self-product is nonzero");
            expected = k - 1 - r;
        }
    } else {
        throw std::invalid_argument("family kind and form do not select any construction");
    }

    std::vector<Felt> v = solve_multipliers(ev, form);
    Felt a = f->one();
    if (r > 0) {
        a = f->scaling_unit(form, opts.subfield_scaling);
        std::vector<int> scaled(static_cast<std::size_t>(r));
        std::iota(scaled.begin(), scaled.end(), 0);
        if (r == k) {
            // Dropping the hull all the way to zero needs the scaled columns
            // to form an invertible k x k minor; the first k columns fail
            // exactly when the first k points sum to -1/eta, so scale the
            // leading pivot set of the generator instead (identical to the
            // first k columns whenever that minor is invertible).
            scaled = rref(tgrs_generator(ev, v, TwistParams{k, eta})).pivots;
        }
        for (int i : scaled) v[static_cast<std::size_t>(i)] = f->mul(a, v[static_cast<std::size_t>(i)]);
    }

    LinearCode code(tgrs_generator(ev, v, TwistParams{k, eta}));
    const int measured = code.hull_dim(form);
    if (measured != expected)
        throw std::logic_error("constructed hull is " + std::to_string(measured) +
                               " but the theorem predicts " + std::to_string(expected));
    return HullCode{std::move(code), form, k, r, expected, eta, a, std::move(v)};
}

KLimits k_limits(int n, int q) {
    require(q >= 2, "subfield order must be at least 2");
    require(n % 2 == 1, "n must be odd");
    require(n >= 3, "n must be at least 3");
    KLimits lim;
    lim.k = (n + q - 1) / (q + 1);
    require(lim.k >= 1, "no positive dimension fits the self-orthogonal range");
    lim.k0 = (n - 1) / std::gcd(n - 1, q + 1);
    lim.i_min = std::min((n - q) / 2 - lim.k, q - 1);
    require(lim.i_min >= 0, "extension window is empty: floor((n-q)/2) < k");
    lim.K = lim.k + lim.i_min + 1;
    const auto divides = [&](int mult) {
        return (static_cast<long long>(mult) * (q + 1)) % (n - 1) == 0;
    };
    lim.div_k = divides(lim.k);
    lim.div_K1 = divides(lim.K - 1);
    lim.div_K2 = divides(lim.K - 2);
    return lim;
}

int DeltaProfile::count_below(int kprime) const {
    int c = 0;
    for (int j : support)
        if (j < kprime) ++c;
    return c;
}

DeltaProfile delta_profile(const EvalVector& ev, const std::vector<Felt>& v, int K) {
    const FieldPtr& f = ev.field;
    require(f->is_quadratic(), "delta profiles are a Hermitian notion");
    const int n = ev.length();
    require(K >= 1 && K <= n, "need 1 <= K <= n");
    require(static_cast<int>(v.size()) == n, "multiplier count differs from point count");
    const std::uint32_t q = f->subfield_order();

    const Mat g = grs_generator(ev, v, K);
    const Mat gr = gram(g, Form::kHermitian);
    for (int i = 0; i < K; ++i)
        for (int j = 0; j < K; ++j)
            if (i != j && !gr(i, j).is_zero())
                throw std::logic_error(
                    "generator rows are not pairwise orthogonal: K exceeds the profile range");

    DeltaProfile prof;
    prof.deltas.reserve(static_cast<std::size_t>(K));
    for (int j = 0; j < K; ++j) {
        Felt sum = Field::zero();
        for (int i = 0; i < n; ++i) {
            if (ev.points[static_cast<std::size_t>(i)].is_zero() && j > 0) continue;
            Felt term = f->pow(v[static_cast<std::size_t>(i)], q + 1);
            if (j > 0)
                term = f->mul(term, f->pow(ev.points[static_cast<std::size_t>(i)],
                                           static_cast<std::int64_t>(j) * (q + 1)));
            sum = f->add(sum, term);
        }
        if (sum != gr(j, j))
            throw std::logic_error("delta closed form disagrees with the Gram diagonal");
        prof.deltas.push_back(sum);
        if (!sum.is_zero()) prof.support.push_back(j);
    }
    return prof;
}

RLExtension rl_extend(const EvalFamily& fam, const std::vector<Felt>& v, int i, Felt lambda1,
                      Felt lambda2) {
    const EvalVector& ev = fam.ev;
    const FieldPtr& f = ev.field;
    require(f->is_quadratic(), "the extension pipeline is Hermitian");
    const std::uint32_t q = f->subfield_order();
    const int n = ev.length();
    const KLimits lim = k_limits(n, static_cast<int>(q));
    require(i >= 1 && i <= lim.i_min + 1, "need 1 <= i <= i_min + 1");
    require(!lambda1.is_zero() && !lambda2.is_zero(), "lambda entries must be nonzero");
    const int kp = lim.k + i;

    DeltaProfile prof = delta_profile(ev, v, kp);
    const Mat left = grs_generator(ev, v, kp);
    Mat g(f, kp, n + 2);
    for (int row = 0; row < kp; ++row)
        for (int col = 0; col < n; ++col) g(row, col) = left(row, col);
    g(kp - 2, n) = lambda1;
    g(kp - 1, n + 1) = lambda2;

    const Felt slot1 = f->add(prof.deltas[static_cast<std::size_t>(kp - 2)], f->pow(lambda1, q + 1));
    const Felt slot2 = f->add(prof.deltas[static_cast<std::size_t>(kp - 1)], f->pow(lambda2, q + 1));
    const int rank = prof.count_below(kp - 2) + (slot1.is_zero() ? 0 : 1) + (slot2.is_zero() ? 0 : 1);
    const int predicted = kp - rank;

    LinearCode code{std::move(g)};
    const int measured = code.hull_dim(Form::kHermitian);
    if (measured != predicted)
        throw std::logic_error("extension hull is " + std::to_string(measured) +
                               " but the slot calculus predicts " + std::to_string(predicted));
    return RLExtension{std::move(code), lim.k,    i,         lambda1,
                       lambda2,         std::move(prof), predicted, measured};
}

RLExtension rl_extend(const EvalFamily& fam, const std::vector<Felt>& v, int i,
                      LambdaPolicy policy) {
    const EvalVector& ev = fam.ev;
    const FieldPtr& f = ev.field;
    require(f->is_quadratic(), "the extension pipeline is Hermitian");
    const KLimits lim = k_limits(ev.length(), static_cast<int>(f->subfield_order()));
    require(i >= 1 && i <= lim.i_min + 1, "need 1 <= i <= i_min + 1");
    const int kp = lim.k + i;
    const DeltaProfile prof = delta_profile(ev, v, kp);
    const Felt d1 = prof.deltas[static_cast<std::size_t>(kp - 2)];
    const Felt d2 = prof.deltas[static_cast<std::size_t>(kp - 1)];

    Felt l1, l2;
    switch (policy) {
        case LambdaPolicy::kFree:
            l1 = free_lambda(f, d1);
            l2 = free_lambda(f, d2);
            break;
        case LambdaPolicy::kBoundary:
            if (!d1.is_zero()) {
                l1 = boundary_lambda(f, d1);
                l2 = free_lambda(f, d2);
            } else if (!d2.is_zero()) {
                l1 = free_lambda(f, d1);
                l2 = boundary_lambda(f, d2);
            } else {
                throw std::invalid_argument("no cancellable slot: both slot self-products vanish");
            }
            break;
        case LambdaPolicy::kBoundaryBoth:
            l1 = boundary_lambda(f, d1);
            l2 = boundary_lambda(f, d2);
            break;
    }
    return rl_extend(fam, v, i, l1, l2);
}

LinearCode rl_puncture_both(const RLExtension& ext) {
    const int n = ext.code.length() - 2;
    return ext.code.puncture({n, n + 1});
}

LinearCode rl_puncture_zero_slot(const RLExtension& ext) {
    const int kp = ext.base_k + ext.i;
    const int n = ext.code.length() - 2;
    const Felt d1 = ext.profile.deltas[static_cast<std::size_t>(kp - 2)];
    const Felt d2 = ext.profile.deltas[static_cast<std::size_t>(kp - 1)];
    if (d1.is_zero() && d2.is_zero())
        throw std::domain_error(
            "both extension slots vanish; no length-(n+1) puncture reaches hull k' - #Delta");
    const int drop = d1.is_zero() ? n : n + 1;
    return ext.code.puncture({drop});
}

namespace {

// Permutes zero-self-product rows first, puts identity pivots on them, clears
// those pivot columns from the remaining rows (all Gram-preserving), then
// scales the first `r` pivot columns by `a`.
Mat standardize_and_scale(const Mat& g, const std::vector<Felt>& diag, int r, Felt a) {
    const FieldPtr& f = g.field();
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(g.rows()));
    for (int i = 0; i < g.rows(); ++i)
        if (diag[static_cast<std::size_t>(i)].is_zero()) order.push_back(i);
    const int h = static_cast<int>(order.size());
    for (int i = 0; i < g.rows(); ++i)
        if (!diag[static_cast<std::size_t>(i)].is_zero()) order.push_back(i);

    Mat m = g.select_rows(order);
    if (r == 0) return m;

    std::vector<int> hull_rows(static_cast<std::size_t>(h));
    std::iota(hull_rows.begin(), hull_rows.end(), 0);
    const RrefResult rr = rref(m.select_rows(hull_rows));
    if (rr.rank != h) throw std::logic_error("zero-self-product rows lost rank while reducing");
    for (int row = 0; row < h; ++row)
        for (int col = 0; col < m.cols(); ++col) m(row, col) = rr.reduced(row, col);
    for (int row = h; row < m.rows(); ++row) {
        for (int t = 0; t < h; ++t) {
            const Felt coef = m(row, rr.pivots[static_cast<std::size_t>(t)]);
            if (coef.is_zero()) continue;
            for (int col = 0; col < m.cols(); ++col)
                m(row, col) = f->sub(m(row, col), f->mul(coef, m(t, col)));
        }
    }

    std::vector<Felt> units(static_cast<std::size_t>(m.cols()), f->one());
    for (int t = 0; t < r; ++t) units[static_cast<std::size_t>(rr.pivots[static_cast<std::size_t>(t)])] = a;
    return m.scale_columns(units);
}

}  // namespace

FlexibleCode rl_flexible(const EvalFamily& fam, const std::vector<Felt>& v, int kprime, int j,
                         RlLength length, const FlexOptions& opts) {
    const EvalVector& ev = fam.ev;
    const FieldPtr& f = ev.field;
    require(f->is_quadratic(), "the extension pipeline is Hermitian");
    const std::uint32_t q = f->subfield_order();
    const int n = ev.length();
    const KLimits lim = k_limits(n, static_cast<int>(q));
    require(kprime >= 1 && kprime <= lim.K, "need 1 <= k' <= K");
    if (length != RlLength::kN) require(kprime >= 2, "extended lengths need k' >= 2");
    require(j >= 0, "hull target must be nonnegative");

    const DeltaProfile prof = delta_profile(ev, v, kprime);
    const int extra = length == RlLength::kN ? 0 : (length == RlLength::kNPlus1 ? 1 : 2);
    const Mat left = grs_generator(ev, v, kprime);
    Mat g(f, kprime, n + extra);
    for (int row = 0; row < kprime; ++row)
        for (int col = 0; col < n; ++col) g(row, col) = left(row, col);

    // Extension slots: (row, column) pairs carrying a lambda entry.
    std::vector<std::pair<int, int>> slots;
    if (length == RlLength::kNPlus2) {
        slots = {{kprime - 2, n}, {kprime - 1, n + 1}};
    } else if (length == RlLength::kNPlus1) {
        // A column on the last row keeps every k'-column minor invertible, so
        // it is the default. When the last row is self-orthogonal the entry
        // breaks that row and costs one hull dimension; hull targets beyond
        // its reach fall back to the row-(k'-2) column, whose minimum
        // distance drops by one whenever some (k'-1)-subset of the points
        // sums to zero.
        int zero_rows = 0;
        for (const Felt& d : prof.deltas)
            if (d.is_zero()) ++zero_rows;
        const auto capacity = [&](int row) {
            const bool hot = !prof.deltas[static_cast<std::size_t>(row)].is_zero();
            return hot ? zero_rows + 1 : zero_rows - 1;
        };
        const bool fall_back =
            j > capacity(kprime - 1) && capacity(kprime - 2) > capacity(kprime - 1);
        slots = {{fall_back ? kprime - 2 : kprime - 1, n}};
    }

    std::vector<Felt> diag = prof.deltas;
    std::vector<Felt> lambdas(slots.size());
    for (std::size_t s = 0; s < slots.size(); ++s) {
        const Felt d = prof.deltas[static_cast<std::size_t>(slots[s].first)];
        lambdas[s] = free_lambda(f, d);
        diag[static_cast<std::size_t>(slots[s].first)] = f->add(d, f->pow(lambdas[s], q + 1));
    }
    int hull_capacity = 0;
    for (const Felt& d : diag)
        if (d.is_zero()) ++hull_capacity;

    // Cancelling a slot whose self-product is nonzero raises the hull by one;
    // spend cancellations only when the target exceeds the free-lambda hull.
    for (std::size_t s = 0; s < slots.size() && j > hull_capacity; ++s) {
        const Felt d = prof.deltas[static_cast<std::size_t>(slots[s].first)];
        if (d.is_zero()) continue;
        lambdas[s] = boundary_lambda(f, d);
        diag[static_cast<std::size_t>(slots[s].first)] = Field::zero();
        ++hull_capacity;
    }
    if (j > hull_capacity)
        throw std::invalid_argument("hull target " + std::to_string(j) +
                                    " exceeds the reachable maximum " +
                                    std::to_string(hull_capacity) + " at this length");
    for (std::size_t s = 0; s < slots.size(); ++s)
        g(slots[s].first, slots[s].second) = lambdas[s];

    const int r = hull_capacity - j;
    Felt a = f->one();
    if (r > 0) a = f->scaling_unit(Form::kHermitian, opts.subfield_scaling);
    LinearCode code{standardize_and_scale(g, diag, r, a)};

    const int measured = code.hull_dim(Form::kHermitian);
    if (measured != j)
        throw std::logic_error("flexible hull is " + std::to_string(measured) +
                               " but the target was " + std::to_string(j));

    // Exact distance of the extended code. A minimum-weight word either
    // avoids the appended columns (a polynomial with the slot coefficients
    // zero) or pays one appended entry per nonzero slot coefficient; working
    // through the cases, every length beats Singleton minus two, and the
    // borderline weight is reached exactly when a polynomial of degree k'-1
    // with k'-1 distinct roots can zero the x^{k'-2} coefficient, i.e. when
    // some (k'-1)-subset of the points sums to zero.
    DistanceClass expect_cls = DistanceClass::kMds;
    int distance = n - kprime + 1;
    if (length != RlLength::kN) {
        const bool last_row_slot = slots.size() == 1 && slots[0].first == kprime - 1;
        bool zero_sum = false;
        if (!last_row_slot)
            zero_sum = subset_sums(ev, kprime - 1)[f->encoding(Field::zero())] != 0;
        if (last_row_slot || !zero_sum) {
            expect_cls = DistanceClass::kMds;
            distance = n + extra - kprime + 1;
        } else {
            expect_cls = DistanceClass::kAmds;
            distance = n + extra - kprime;
        }
    }
    if (opts.verify_distance) {
        const DistanceReport rep = code.distance_class(opts.subset_budget);
        if (rep.cls != expect_cls)
            throw std::logic_error("distance classification does not match the construction");
    }

    FlexibleCode out{std::move(code),
                     length,
                     kprime,
                     j,
                     hull_capacity,
                     r,
                     a,
                     Field::zero(),
                     Field::zero(),
                     expect_cls,
                     distance};
    for (std::size_t s = 0; s < slots.size(); ++s)
        (slots[s].second == n ? out.lambda1 : out.lambda2) = lambdas[s];
    return out;
}

}  // namespace hulls
