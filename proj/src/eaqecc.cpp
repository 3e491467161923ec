#include "hulls/eaqecc.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "hulls/grs.hpp"

namespace hulls {
namespace {

std::uint64_t binom_capped(int n, int k, std::uint64_t cap) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t out = 1;
    for (int i = 1; i <= k; ++i) {
        out = out * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
        if (out > cap) return cap + 1;
    }
    return out;
}

// Can distance_class settle this [len, dim] code within the budgets? The
// subset count covers both stages when stage 2 may be needed; each subset
// costs about dim^3 eliminations.
bool class_check_affordable(int len, int dim, bool need_stage2, const SweepOptions& opts) {
    if (dim <= 0 || dim > len) return false;
    const std::uint64_t c1 = binom_capped(len, dim, opts.subset_budget);
    const std::uint64_t c2 = need_stage2 ? binom_capped(len, dim + 1, opts.subset_budget) : 0;
    if (c1 + c2 > opts.subset_budget) return false;
    const std::uint64_t cube =
        static_cast<std::uint64_t>(dim) * static_cast<std::uint64_t>(dim) * static_cast<std::uint64_t>(dim);
    return (c1 + c2) <= opts.dual_distance_ops / std::max<std::uint64_t>(cube, 1);
}

const char* family_tag(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::kRootsOfUnityPlusZero: return "roots";
        case FamilyKind::kAffineGrid: return "grid";
        case FamilyKind::kCosetUnion: return "coset";
        case FamilyKind::kSubfieldNonzeroSum: return "subfield";
    }
    return "?";
}

std::string family_label(const EvalFamily& fam) {
    std::string out = family_tag(fam.kind);
    switch (fam.kind) {
        case FamilyKind::kRootsOfUnityPlusZero:
        case FamilyKind::kSubfieldNonzeroSum:
            out += "(n=" + std::to_string(fam.params.n) + ")";
            break;
        case FamilyKind::kAffineGrid:
            out += "(t=" + std::to_string(fam.params.t) + ")";
            break;
        case FamilyKind::kCosetUnion:
            out += "(N=" + std::to_string(fam.params.N) + ",t=" + std::to_string(fam.params.t) + ")";
            break;
    }
    return out;
}

const char* length_tag(RlLength len) {
    switch (len) {
        case RlLength::kN: return "n";
        case RlLength::kNPlus1: return "n+1";
        case RlLength::kNPlus2: return "n+2";
    }
    return "?";
}

void push_pair(SweepTable& table, const Derivation& der, int item, int classical_n,
               int classical_k, const DistanceInfo& dp, const DistanceInfo& dd, bool claim_ok) {
    SweepRow a;
    a.params = der.primal;
    a.bounds = check_bounds(der.primal);
    a.item = item;
    a.dual_record = false;
    a.classical_n = classical_n;
    a.classical_k = classical_k;
    a.hull = der.hull;
    a.classical_class = dp.cls;
    a.verified = claim_ok && a.bounds.all_hold();
    table.rows.push_back(std::move(a));

    SweepRow b;
    b.params = der.dual;
    b.bounds = check_bounds(der.dual);
    b.item = item;
    b.dual_record = true;
    b.classical_n = classical_n;
    b.classical_k = classical_n - classical_k;
    b.hull = der.hull;
    b.classical_class = dd.cls;
    b.verified = claim_ok && b.bounds.all_hold();
    table.rows.push_back(std::move(b));
}

// One point family under the twisted factory: dimensions 1..floor(n/(q+1)),
// hulls 0..k-1. The unscaled hull is k away from the divisibility boundary
// and k - 1 on it, so the coordinate count r realizing hull ell shifts by
// one between the two regimes.
void sweep_q0_instance(SweepTable& table, const FieldPtr& f, FamilyKind kind,
                       const FamilyParams& params, const SweepOptions& opts) {
    EvalFamily fam = build_eval_family(f, kind, params);
    const std::uint32_t q = f->subfield_order();
    const int n = fam.ev.length();
    const int kmax = n / static_cast<int>(q + 1);
    for (int k = 1; k <= kmax; ++k) {
        const HullCode base = build_hull_tgrs(fam, k, 0, Form::kHermitian);
        const bool boundary = base.expected_hull == k - 1;
        DistanceInfo dp;
        dp.cls = classify_tgrs(fam.ev, TwistParams{k, base.eta});
        dp.d = dp.cls == DistanceClass::kMds ? n - k + 1 : n - k;
        dp.exact = true;
        // The dual's distance: measured when the subset scan is affordable,
        // otherwise kept as the stated lower bound d' >= k. Coordinate
        // scaling is a monomial equivalence, so both distances are shared
        // across every r.
        DistanceInfo dd{k, false, DistanceClass::kUnknown};
        if (class_check_affordable(n, n - k, true, opts)) {
            dd = resolve_distance(base.code.dual(Form::kHermitian), opts.subset_budget);
        }
        const bool claim_ok = dd.cls != DistanceClass::kOther;
        for (int ell = 0; ell <= k - 1; ++ell) {
            const int r = (boundary ? k - 1 : k) - ell;
            const HullCode hc = build_hull_tgrs(fam, k, r, Form::kHermitian);
            const std::string recipe = "tgrs[" + family_label(fam) + ",k=" + std::to_string(k) +
                                       ",r=" + std::to_string(r) + "]";
            const Derivation der = derive(hc.code, dp, dd, q_theorem_name(table.theorem), recipe);
            push_pair(table, der, 1, n, k, dp, dd, claim_ok);
        }
    }
}

// The extension pipeline over one family: lengths n / n+1 / n+2 as the
// theorem dictates, dimensions up to K, hulls up to k' - #Delta_K.
void sweep_rl_instance(SweepTable& table, const EvalFamily& fam, const SweepOptions& opts) {
    const EvalVector& ev = fam.ev;
    const FieldPtr& f = ev.field;
    const std::uint32_t q = f->subfield_order();
    const int n = ev.length();
    const KLimits lim = k_limits(n, static_cast<int>(q));
    const std::vector<Felt> v = solve_multipliers(ev, Form::kHermitian);
    const DeltaProfile prof = delta_profile(ev, v, lim.K);
    const int sharp = prof.size();

    struct Variant {
        RlLength len;
        int item;
    };
    const std::vector<Variant> variants =
        table.theorem == QTheorem::kQ1
            ? std::vector<Variant>{{RlLength::kNPlus2, 1}}
            : std::vector<Variant>{{RlLength::kN, 1}, {RlLength::kNPlus1, 2}};

    FlexOptions fopts;
    fopts.verify_distance = false;
    fopts.subset_budget = opts.subset_budget;

    for (const Variant& var : variants) {
        const int len_n = n + (var.len == RlLength::kN ? 0 : var.len == RlLength::kNPlus1 ? 1 : 2);
        const int klo = std::max(var.len == RlLength::kN ? 1 : 2, sharp);
        for (int kp = klo; kp <= lim.K; ++kp) {
            const DistanceClass claim =
                var.len == RlLength::kNPlus2 ? DistanceClass::kAmds : DistanceClass::kMds;
            const int claim_d = var.len == RlLength::kN ? n - kp + 1 : n + 2 - kp;
            // Distances depend only on the slot layout, not on the scaled
            // hull target (coordinate scaling is a monomial equivalence), so
            // the enumeration cross-check and the dual resolution run once
            // per distinct construction class within this dimension.
            std::optional<DistanceClass> cross_checked;
            std::optional<DistanceInfo> dd_off_claim;
            for (int ell = 0; ell <= kp - sharp; ++ell) {
                std::optional<FlexibleCode> fc;
                try {
                    fc.emplace(rl_flexible(fam, v, kp, ell, var.len, fopts));
                } catch (const std::invalid_argument&) {
                    ++table.skipped;  // hull target unreachable at this length
                    continue;
                }
                const DistanceInfo dp{fc->distance, true, fc->d_class};
                if (var.len != RlLength::kN && cross_checked != fc->d_class &&
                    class_check_affordable(len_n, kp, fc->d_class == DistanceClass::kAmds,
                                           opts)) {
                    const DistanceReport rep = fc->code.distance_class(opts.subset_budget);
                    if (rep.cls != fc->d_class || (rep.exact && rep.d_lower != fc->distance))
                        throw std::logic_error(
                            "measured distance disagrees with the slot analysis");
                    cross_checked = fc->d_class;
                }
                bool claim_ok = fc->d_class == claim && fc->distance == claim_d;
                DistanceInfo dd;
                if (fc->d_class == DistanceClass::kMds) {
                    // Hermitian dual of an MDS code is MDS.
                    dd = {kp + 1, true, DistanceClass::kMds};
                } else {
                    if (!dd_off_claim) {
                        DistanceInfo resolved{kp, false, DistanceClass::kUnknown};
                        if (class_check_affordable(len_n, len_n - kp, true, opts))
                            resolved = resolve_distance(fc->code.dual(Form::kHermitian),
                                                        opts.subset_budget);
                        dd_off_claim = resolved;
                    }
                    dd = *dd_off_claim;
                    claim_ok = claim_ok && dd.cls != DistanceClass::kOther;
                }
                const std::string recipe = "rl[" + family_label(fam) + ",len=" +
                                           length_tag(var.len) + ",k'=" + std::to_string(kp) +
                                           ",j=" + std::to_string(ell) + "]";
                const Derivation der =
                    derive(fc->code, dp, dd, q_theorem_name(table.theorem), recipe);
                push_pair(table, der, var.item, len_n, kp, dp, dd, claim_ok);
            }
        }
    }
}

}  // namespace

BoundsReport check_bounds(const EaqeccParams& p) {
    BoundsReport r;
    const long long n = p.n, k = p.k, d = p.d, c = p.c;
    const long long rhs1 = c + std::max<long long>(0, n - 2 * d + 2);
    r.b1_holds = k <= rhs1;
    r.b1_equal = k == rhs1;
    const long long rhs0 = n - d + 1;
    r.b0_holds = k <= rhs0;
    r.b0_equal = k == rhs0;
    r.b2_applies = 2 * d >= n + 2;
    if (r.b2_applies) {
        const long long lhs = k * (3 * d - 3 - n);
        const long long rhs = (n - d + 1) * (c + 2 * d - 2 - n);
        r.b2_holds = lhs <= rhs;
        r.b2_equal = lhs == rhs;
    }
    r.mds_candidate = r.b1_equal && 2 * d <= n + 2;
    return r;
}

DistanceInfo resolve_distance(const LinearCode& code, std::uint64_t budget) {
    const DistanceReport rep = code.distance_class(budget);
    DistanceInfo info;
    info.cls = rep.cls;
    if (rep.exact) {
        info.d = rep.d_lower;
        info.exact = true;
        return info;
    }
    try {
        info.d = code.min_weight_bruteforce();
        info.exact = true;
    } catch (const std::exception&) {
        info.d = std::max(1, rep.d_lower);
        info.exact = false;
    }
    return info;
}

Derivation derive(const LinearCode& code, const DistanceInfo& d_primal,
                  const DistanceInfo& d_dual, const std::string& source,
                  const std::string& recipe) {
    const FieldPtr& f = code.field();
    if (!f->is_quadratic()) {
        throw std::invalid_argument("quantum derivation needs a code over GF(q^2)");
    }
    const std::uint32_t q = f->subfield_order();
    const int n = code.length();
    const int k = code.dimension();
    const int ell = code.hull_dim(Form::kHermitian);
    const LinearCode dual = code.dual(Form::kHermitian);
    const int c_cross = gram_rank(dual.generator(), Form::kHermitian);
    if (c_cross != n - k - ell) {
        throw std::logic_error("rank(P P^dagger) disagrees with n - k - hull");
    }

    Derivation out;
    out.hull = ell;
    out.c_cross = c_cross;

    out.primal.n = n;
    out.primal.k = k - ell;
    out.primal.d = d_primal.d;
    out.primal.c = n - k - ell;
    out.primal.q = q;
    out.primal.d_exact = d_primal.exact;
    out.primal.source_theorem = source;
    out.primal.classical_recipe = recipe;
    out.primal.mds =
        d_primal.cls == DistanceClass::kMds && check_bounds(out.primal).mds_candidate;

    out.dual.n = n;
    out.dual.k = n - k - ell;
    out.dual.d = d_dual.d;
    out.dual.c = k - ell;
    out.dual.q = q;
    out.dual.d_exact = d_dual.exact;
    out.dual.source_theorem = source;
    out.dual.classical_recipe = recipe + "#dual";
    out.dual.mds = d_dual.cls == DistanceClass::kMds && check_bounds(out.dual).mds_candidate;
    return out;
}

Derivation derive(const LinearCode& code, std::uint64_t budget) {
    if (!code.field()->is_quadratic()) {
        throw std::invalid_argument("quantum derivation needs a code over GF(q^2)");
    }
    const DistanceInfo dp = resolve_distance(code, budget);
    const DistanceInfo dd = resolve_distance(code.dual(Form::kHermitian), budget);
    return derive(code, dp, dd);
}

const char* q_theorem_name(QTheorem thm) {
    switch (thm) {
        case QTheorem::kQ0: return "Q0";
        case QTheorem::kQ1: return "Q1";
        case QTheorem::kQ2: return "Q2";
        case QTheorem::kQ3: return "Q3";
    }
    return "?";
}

SweepTable sweep_family(QTheorem thm, std::uint32_t q, const SweepOptions& opts) {
    SweepTable table;
    table.theorem = thm;
    table.q = q;
    const FieldPtr f = field_for_order(static_cast<std::uint64_t>(q) * q);
    const std::uint64_t group = static_cast<std::uint64_t>(q) * q - 1;

    const int cap = opts.n ? *opts.n : opts.max_n;
    const auto wanted = [&](int n) {
        return n >= 3 && n <= cap && (!opts.n || n == *opts.n);
    };

    if (thm == QTheorem::kQ0) {
        for (int n = static_cast<int>(q) + 1; n <= cap; ++n) {
            if (group % static_cast<std::uint32_t>(n - 1) != 0 || !wanted(n)) continue;
            sweep_q0_instance(table, f, FamilyKind::kRootsOfUnityPlusZero,
                              FamilyParams{n, 0, 0}, opts);
        }
        for (int t = 2; t <= static_cast<int>(q) - 1; ++t) {
            const int n = t * static_cast<int>(q);
            if (!wanted(n)) continue;
            // The grid weights carry a factor (beta^q - beta)^{t-1}, which
            // lands in GF(q)^* only for odd t or characteristic two; other
            // grids admit no Hermitian multipliers.
            if (f->characteristic() != 2 && t % 2 == 0) continue;
            sweep_q0_instance(table, f, FamilyKind::kAffineGrid, FamilyParams{0, t, 0}, opts);
        }
    }

    if (thm == QTheorem::kQ0 || thm == QTheorem::kQ3) {
        for (int N = 2; static_cast<std::uint64_t>(N) <= group; ++N) {
            if (group % static_cast<std::uint32_t>(N) != 0) continue;
            const int n1 = std::gcd<int>(N, static_cast<int>(q) + 1);
            const int n2 = N / n1;
            if ((static_cast<int>(q) - 1) % n2 != 0) continue;
            const int tmax = (static_cast<int>(q) - 1) / n2 - 2;
            for (int t = 1; t <= tmax; ++t) {
                const int n = (t + 1) * N + 1;
                if (!wanted(n) || n / static_cast<int>(q + 1) < 1) continue;
                if (thm == QTheorem::kQ0) {
                    sweep_q0_instance(table, f, FamilyKind::kCosetUnion, FamilyParams{0, t, N},
                                      opts);
                    continue;
                }
                // Q3 preconditions: odd length and one of the two
                // divisibility alternatives on k, k + 1.
                if (n % 2 == 0) continue;
                KLimits lim;
                try {
                    lim = k_limits(n, static_cast<int>(q));
                } catch (const std::exception&) {
                    continue;
                }
                const long long step = static_cast<long long>(q) + 1;
                const bool div_k1 = (static_cast<long long>(lim.k + 1) * step) % (n - 1) == 0;
                if (!lim.div_k && !div_k1) continue;
                const EvalFamily fam =
                    build_eval_family(f, FamilyKind::kCosetUnion, FamilyParams{0, t, N});
                sweep_rl_instance(table, fam, opts);
            }
        }
    }

    if (thm == QTheorem::kQ1 || thm == QTheorem::kQ2) {
        for (int n = 3; n <= cap; n += 2) {
            if (group % static_cast<std::uint32_t>(n - 1) != 0 || !wanted(n)) continue;
            KLimits lim;
            try {
                lim = k_limits(n, static_cast<int>(q));
            } catch (const std::exception&) {
                continue;
            }
            if (!lim.div_k) continue;
            const EvalFamily fam =
                build_eval_family(f, FamilyKind::kRootsOfUnityPlusZero, FamilyParams{n, 0, 0});
            sweep_rl_instance(table, fam, opts);
        }
    }

    return table;
}

}  // namespace hulls
