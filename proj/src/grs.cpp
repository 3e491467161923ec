#include "hulls/grs.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace hulls {
namespace {

void check_multipliers(const EvalVector& ev, const std::vector<Felt>& v) {
    if (static_cast<int>(v.size()) != ev.length()) {
        throw std::invalid_argument("multiplier vector length mismatch");
    }
    for (const Felt& x : v) {
        if (x.is_zero()) throw std::invalid_argument("column multipliers must be nonzero");
    }
}

void check_twist_dim(const EvalVector& ev, int k) {
    if (k < 1 || k > ev.length() - 1) {
        throw std::invalid_argument("twisted dimension must satisfy 1 <= k <= n-1");
    }
}

}  // namespace

EvalVector make_eval_vector(FieldPtr field, std::vector<Felt> points) {
    if (points.size() < 2) throw std::invalid_argument("need at least two evaluation points");
    if (points.size() > field->order()) {
        throw std::invalid_argument("more evaluation points than field elements");
    }
    std::set<std::uint32_t> seen;
    for (const Felt& a : points) {
        if (!seen.insert(a.log).second) {
            throw std::invalid_argument("evaluation points must be distinct");
        }
    }

    EvalVector ev;
    ev.field = std::move(field);
    ev.points = std::move(points);
    const Field& f = *ev.field;

    Felt s = Field::zero();
    for (const Felt& a : ev.points) s = f.add(s, a);
    ev.s = s;

    const int n = ev.length();
    ev.u.resize(n);
    for (int i = 0; i < n; ++i) {
        Felt prod = f.one();
        for (int j = 0; j < n; ++j) {
            if (j != i) prod = f.mul(prod, f.sub(ev.points[i], ev.points[j]));
        }
        ev.u[i] = f.inv(prod);
    }
    return ev;
}

Mat grs_generator(const EvalVector& ev, const std::vector<Felt>& v, int k) {
    check_multipliers(ev, v);
    const int n = ev.length();
    if (k < 1 || k > n) throw std::invalid_argument("dimension must satisfy 1 <= k <= n");
    const Field& f = *ev.field;
    Mat g(ev.field, k, n);
    for (int i = 0; i < n; ++i) {
        Felt p = v[i];
        for (int j = 0; j < k; ++j) {
            g(j, i) = p;
            p = f.mul(p, ev.points[i]);
        }
    }
    return g;
}

Mat tgrs_generator(const EvalVector& ev, const std::vector<Felt>& v, const TwistParams& tw) {
    check_multipliers(ev, v);
    check_twist_dim(ev, tw.k);
    const Field& f = *ev.field;
    const int n = ev.length();
    Mat g(ev.field, tw.k, n);
    for (int i = 0; i < n; ++i) {
        const Felt a = ev.points[i];
        Felt p = v[i];
        for (int j = 0; j + 1 < tw.k; ++j) {
            g(j, i) = p;
            p = f.mul(p, a);
        }
        // p = v_i a^{k-1}; the top row evaluates x^{k-1} + eta x^k.
        g(tw.k - 1, i) = f.add(p, f.mul(tw.eta, f.mul(p, a)));
    }
    return g;
}

TgrsDual tgrs_dual_identify(const EvalVector& ev, const std::vector<Felt>& v,
                            const TwistParams& tw) {
    check_multipliers(ev, v);
    check_twist_dim(ev, tw.k);
    if (tw.eta.is_zero()) throw std::invalid_argument("twist coefficient must be nonzero");
    const Field& f = *ev.field;
    const int n = ev.length();
    const int kd = n - tw.k;

    std::vector<Felt> w(n);
    for (int i = 0; i < n; ++i) w[i] = f.div(ev.u[i], v[i]);

    // 1 + s*eta = 0 collapses the closed form; the dual then skips the power
    // kd-1 and uses alpha^kd instead.
    const bool degenerate = !ev.s.is_zero() && f.mul(ev.s, tw.eta) == f.neg(f.one());
    Felt c = Field::zero();
    if (!degenerate) {
        c = f.div(tw.eta, f.add(f.one(), f.mul(ev.s, tw.eta)));
    }

    Mat h(ev.field, kd, n);
    for (int i = 0; i < n; ++i) {
        const Felt a = ev.points[i];
        Felt p = w[i];
        for (int j = 0; j + 1 < kd; ++j) {
            h(j, i) = p;
            p = f.mul(p, a);
        }
        // p = w_i a^{kd-1}.
        if (degenerate) {
            h(kd - 1, i) = f.mul(p, a);
        } else {
            h(kd - 1, i) = f.sub(p, f.mul(c, f.mul(p, a)));
        }
    }

    TgrsDual out{degenerate ? 3 : (ev.s.is_zero() ? 2 : 1), std::move(h), std::move(w),
                 std::nullopt};
    if (!degenerate) out.twist = TwistParams{kd, f.neg(c)};
    return out;
}

Mat tgrs_parity(const EvalVector& ev, const std::vector<Felt>& v, const TwistParams& tw) {
    return tgrs_dual_identify(ev, v, tw).parity;
}

std::vector<char> subset_sums(const EvalVector& ev, int k) {
    const Field& f = *ev.field;
    const int n = ev.length();
    if (k < 0 || k > n) throw std::invalid_argument("subset size out of range");
    const std::uint32_t q = f.order();

    // 0/1-knapsack over encodings; processing j downward uses each point once.
    std::vector<std::vector<char>> dp(static_cast<std::size_t>(k) + 1,
                                      std::vector<char>(q, 0));
    dp[0][f.encoding(Field::zero())] = 1;
    int processed = 0;
    for (const Felt& a : ev.points) {
        const std::uint32_t ae = f.encoding(a);
        ++processed;
        for (int j = std::min(processed, k); j >= 1; --j) {
            const std::vector<char>& prev = dp[j - 1];
            std::vector<char>& cur = dp[j];
            for (std::uint32_t e = 0; e < q; ++e) {
                if (prev[e]) cur[f.add_encoded(e, ae)] = 1;
            }
        }
    }
    return dp[k];
}

DistanceClass classify_tgrs(const EvalVector& ev, const TwistParams& tw) {
    check_twist_dim(ev, tw.k);
    if (tw.eta.is_zero()) throw std::invalid_argument("twist coefficient must be nonzero");
    const Field& f = *ev.field;
    const std::vector<char> sums = subset_sums(ev, tw.k);
    const Felt target = f.neg(f.inv(tw.eta));
    return sums[f.encoding(target)] ? DistanceClass::kAmds : DistanceClass::kMds;
}

std::optional<Felt> pick_eta(const EvalVector& ev, int k, EtaConstraint constraint) {
    check_twist_dim(ev, k);
    const Field& f = *ev.field;
    const std::vector<char> sums = subset_sums(ev, k);
    const std::uint32_t q =
        constraint == EtaConstraint::kAntiHermitian ? f.subfield_order() : 0;
    for (std::uint32_t e = 0; e < f.group_order(); ++e) {
        const Felt eta = f.element(e);
        if (constraint == EtaConstraint::kAntiHermitian && f.conj(eta, q) != f.neg(eta)) {
            continue;
        }
        if (!sums[f.encoding(f.neg(f.inv(eta)))]) return eta;
    }
    return std::nullopt;
}

}  // namespace hulls
