#include "hulls/field.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hulls {
namespace {

// Polynomial helpers over Z_p used only while building a field. Coefficients
// ascending, normalized so the leading coefficient is nonzero.

using Poly = std::vector<int>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& mod, int p) {
    trim(a);
    const int dm = static_cast<int>(mod.size()) - 1;
    while (static_cast<int>(a.size()) - 1 >= dm) {
        const int shift = static_cast<int>(a.size()) - 1 - dm;
        // mod is monic, so the factor is just the leading coefficient.
        const int c = a.back();
        for (int i = 0; i <= dm; ++i) {
            a[i + shift] = ((a[i + shift] - c * mod[i]) % p + p) % p;
        }
        trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& mod, int p) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] = (out[i + j] + a[i] * b[j]) % p;
        }
    }
    return poly_mod(std::move(out), mod, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& mod, int p) {
    Poly result{1};
    base = poly_mod(std::move(base), mod, p);
    while (e > 0) {
        if (e & 1) result = poly_mulmod(result, base, mod, p);
        base = poly_mulmod(base, base, mod, p);
        e >>= 1;
    }
    return result;
}

Poly poly_gcd(Poly a, Poly b, int p) {
    auto inv_mod_p = [p](int x) {
        int r = 1;
        for (int e = p - 2; e > 0; e >>= 1) {
            // tiny p, plain square-and-multiply
            if (e & 1) r = r * x % p;
            x = x * x % p;
        }
        return r;
    };
    trim(a);
    trim(b);
    while (!b.empty()) {
        // reduce a mod b (b made monic first)
        const int lead_inv = inv_mod_p(b.back());
        Poly bm = b;
        for (int& c : bm) c = c * lead_inv % p;
        Poly r = a;
        trim(r);
        while (r.size() >= bm.size() && !r.empty()) {
            const int c = r.back();
            const int shift = static_cast<int>(r.size() - bm.size());
            for (std::size_t i = 0; i < bm.size(); ++i) {
                r[i + shift] = ((r[i + shift] - c * bm[i]) % p + p) % p;
            }
            trim(r);
        }
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

std::vector<int> prime_factors(std::uint64_t n) {
    std::vector<int> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(static_cast<int>(d));
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(static_cast<int>(n));
    return out;
}

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

// f monic of degree m >= 1 over Z_p. Frobenius criterion: f is irreducible
// iff x^(p^m) = x mod f and gcd(x^(p^(m/l)) - x, f) = 1 for each prime l | m.
bool is_irreducible(const Poly& f, int p) {
    const int m = static_cast<int>(f.size()) - 1;
    const Poly x{0, 1};
    auto pw = [&](int i) {
        std::uint64_t e = 1;
        for (int j = 0; j < i; ++j) e *= static_cast<std::uint64_t>(p);
        return poly_powmod(x, e, f, p);
    };
    Poly xqm = pw(m);
    if (xqm != poly_mod(x, f, p)) return false;
    for (int l : prime_factors(static_cast<std::uint64_t>(m))) {
        Poly diff = pw(m / l);
        // diff - x
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = ((diff[1] - 1) % p + p) % p;
        trim(diff);
        Poly g = poly_gcd(f, diff, p);
        if (g.size() > 1) return false;
    }
    return true;
}

Poly decode(std::uint32_t enc, int p, int m) {
    Poly out(m, 0);
    for (int i = 0; i < m; ++i) {
        out[i] = static_cast<int>(enc % static_cast<std::uint32_t>(p));
        enc /= static_cast<std::uint32_t>(p);
    }
    trim(out);
    return out;
}

std::uint32_t encode(const Poly& a, int p) {
    std::uint32_t out = 0;
    for (std::size_t i = a.size(); i-- > 0;) {
        out = out * static_cast<std::uint32_t>(p) + static_cast<std::uint32_t>(a[i]);
    }
    return out;
}

}  // namespace

std::shared_ptr<const Field> Field::make(int p, int m) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
    if (m < 1) throw std::invalid_argument("field degree must be at least 1");

    std::uint64_t q = 1;
    for (int i = 0; i < m; ++i) {
        q *= static_cast<std::uint64_t>(p);
        if (q > kMaxOrder) throw std::invalid_argument("field order exceeds 2^20 cap");
    }

    // Lexicographically smallest monic irreducible modulus: scan the lower
    // coefficients as a base-p number. Degree 1 starts at x itself.
    Poly modulus;
    if (m == 1) {
        modulus = {0, 1};
    } else {
        std::uint32_t limit = 1;
        for (int i = 0; i < m; ++i) limit *= static_cast<std::uint32_t>(p);
        for (std::uint32_t low = 0; low < limit; ++low) {
            Poly f = decode(low, p, m);
            f.resize(m + 1, 0);
            f[m] = 1;
            if (is_irreducible(f, p)) {
                modulus = std::move(f);
                break;
            }
        }
        if (modulus.empty()) throw std::logic_error("no irreducible modulus found");
    }

    // Smallest-encoding generator of the multiplicative group.
    const std::uint32_t group = static_cast<std::uint32_t>(q) - 1;
    std::uint32_t theta_enc = 1;  // correct for GF(2), whose group is trivial
    if (group > 1) {
        const auto factors = prime_factors(group);
        auto pow_enc = [&](std::uint32_t base, std::uint32_t e) {
            Poly b = decode(base, p, m);
            Poly r = poly_powmod(b, e, modulus, p);
            return encode(r, p);
        };
        theta_enc = 0;
        for (std::uint32_t g = 2; g < q; ++g) {
            bool ok = true;
            for (int l : factors) {
                if (pow_enc(g, group / static_cast<std::uint32_t>(l)) == 1) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                theta_enc = g;
                break;
            }
        }
        if (theta_enc == 0) throw std::logic_error("no generator found");
    }
    return make_with(p, m, modulus, theta_enc);
}

std::shared_ptr<const Field> Field::make_with(int p, int m, std::vector<int> modulus,
                                              std::uint32_t theta_encoding) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
    if (m < 1) throw std::invalid_argument("field degree must be at least 1");
    std::uint64_t q = 1;
    for (int i = 0; i < m; ++i) {
        q *= static_cast<std::uint64_t>(p);
        if (q > kMaxOrder) throw std::invalid_argument("field order exceeds 2^20 cap");
    }
    if (static_cast<int>(modulus.size()) != m + 1 || modulus[m] != 1) {
        throw std::invalid_argument("modulus must be monic of degree m");
    }
    for (int c : modulus) {
        if (c < 0 || c >= p) throw std::invalid_argument("modulus coefficients out of range");
    }
    if (m > 1 && !is_irreducible(modulus, p)) {
        throw std::invalid_argument("modulus is reducible");
    }
    if (theta_encoding == 0 || theta_encoding >= q) {
        throw std::invalid_argument("generator encoding out of range");
    }

    auto f = std::shared_ptr<Field>(new Field());
    f->p_ = p;
    f->m_ = m;
    f->q_ = static_cast<std::uint32_t>(q);
    f->modulus_ = std::move(modulus);

    const std::uint32_t group = f->q_ - 1;
    f->exp_.assign(group == 0 ? 1 : group, 0);
    f->log_.assign(f->q_, 0);
    Poly theta = decode(theta_encoding, p, m);
    Poly cur{1};
    for (std::uint32_t e = 0; e < std::max<std::uint32_t>(group, 1); ++e) {
        const std::uint32_t enc = encode(cur, p);
        if (e < group && enc == 1 && e > 0) {
            throw std::invalid_argument("generator does not have full order");
        }
        f->exp_[e] = enc;
        f->log_[enc] = e;
        cur = poly_mulmod(cur, theta, f->modulus_, p);
    }
    if (encode(cur, p) != 1) throw std::invalid_argument("generator does not have full order");
    return f;
}

std::uint32_t Field::subfield_order() const {
    if (!is_quadratic()) throw std::domain_error("field is not a quadratic extension");
    std::uint32_t s = 1;
    for (int i = 0; i < m_ / 2; ++i) s *= static_cast<std::uint32_t>(p_);
    return s;
}

Felt Field::from_encoding(std::uint32_t enc) const {
    if (enc >= q_) throw std::invalid_argument("encoding out of range");
    if (enc == 0) return zero();
    return Felt{log_[enc]};
}

std::uint32_t Field::encoding(Felt x) const {
    if (x.is_zero()) return 0;
    if (x.log >= group_order() && !(group_order() == 1 && x.log == 0)) {
        throw std::invalid_argument("element log out of range");
    }
    return exp_[x.log];
}

Felt Field::from_integer(std::int64_t v) const {
    std::int64_t r = v % p_;
    if (r < 0) r += p_;
    return from_encoding(static_cast<std::uint32_t>(r));
}

Felt Field::add(Felt a, Felt b) const {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const std::uint32_t enc = add_encoded(exp_[a.log], exp_[b.log]);
    if (enc == 0) return zero();
    return Felt{log_[enc]};
}

Felt Field::neg(Felt a) const {
    if (p_ == 2 || a.is_zero()) return a;
    return Felt{(a.log + group_order() / 2) % group_order()};
}

Felt Field::mul(Felt a, Felt b) const {
    if (a.is_zero() || b.is_zero()) return zero();
    return Felt{(a.log + b.log) % group_order()};
}

Felt Field::inv(Felt a) const {
    if (a.is_zero()) throw std::domain_error("division by zero");
    return Felt{(group_order() - a.log) % group_order()};
}

Felt Field::pow(Felt a, std::int64_t e) const {
    if (a.is_zero()) {
        if (e == 0) return one();
        if (e < 0) throw std::domain_error("negative power of zero");
        return zero();
    }
    const std::int64_t go = static_cast<std::int64_t>(group_order());
    std::int64_t r = (static_cast<std::int64_t>(a.log) % go) * (e % go) % go;
    if (r < 0) r += go;
    return Felt{static_cast<std::uint32_t>(r)};
}

Felt Field::conj(Felt x, std::uint32_t q) const {
    if (static_cast<std::uint64_t>(q) * q != q_) {
        throw std::invalid_argument("conjugation subfield order must square to the field order");
    }
    if (x.is_zero()) return x;
    return Felt{static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(x.log) * q) % group_order())};
}

bool Field::in_subfield(Felt x, std::uint32_t q) const {
    if (q < 2 || (q_ - 1) % (q - 1) != 0) {
        throw std::invalid_argument("not a subfield order");
    }
    if (x.is_zero()) return true;
    return x.log % ((q_ - 1) / (q - 1)) == 0;
}

Felt Field::norm_root(Felt x) const {
    const std::uint32_t q = subfield_order();
    if (x.is_zero()) throw std::domain_error("norm root of zero");
    if (x.log % (q + 1) != 0) {
        throw std::domain_error("norm root requires an element of the base subfield");
    }
    return Felt{x.log / (q + 1)};
}

Felt Field::sqrt(Felt x) const {
    if (x.is_zero()) return x;
    const std::uint32_t go = group_order();
    if (p_ == 2) {
        // squaring is a bijection; q - 1 is odd
        if (x.log % 2 == 0) return Felt{x.log / 2};
        return Felt{(x.log + go) / 2 % go};
    }
    if (x.log % 2 != 0) throw std::domain_error("element is not a square");
    const std::uint32_t r1 = x.log / 2;
    const std::uint32_t r2 = (r1 + go / 2) % go;
    return Felt{std::min(r1, r2)};
}

Felt Field::find_eta() const {
    const std::uint32_t q = subfield_order();
    for (std::uint32_t e = 0; e < group_order(); ++e) {
        const Felt eta{e};
        if (conj(eta, q) == neg(eta)) return eta;
    }
    throw std::logic_error("no anti-Hermitian unit found");
}

Felt Field::scaling_unit(Form form, bool subfield_only) const {
    if (form == Form::kEuclidean) {
        for (std::uint32_t e = 0; e < group_order(); ++e) {
            if (2 * e % group_order() != 0) return Felt{e};
        }
        throw std::domain_error("no unit with a^2 != 1 in this field");
    }
    const std::uint32_t q = subfield_order();
    const std::uint32_t step = subfield_only ? q + 1 : 1;
    for (std::uint32_t e = 0; e < group_order(); e += step) {
        if (static_cast<std::uint64_t>(e) * (q + 1) % group_order() != 0) return Felt{e};
    }
    throw std::domain_error("no unit with a^(q+1) != 1 available");
}

std::uint32_t Field::add_encoded(std::uint32_t a, std::uint32_t b) const {
    if (p_ == 2) return a ^ b;
    std::uint32_t out = 0;
    std::uint32_t shift = 1;
    const std::uint32_t up = static_cast<std::uint32_t>(p_);
    for (int i = 0; i < m_; ++i) {
        std::uint32_t s = a % up + b % up;
        if (s >= up) s -= up;
        out += s * shift;
        a /= up;
        b /= up;
        shift *= up;
    }
    return out;
}

std::string Field::to_string(Felt x) const {
    if (x.is_zero()) return "0";
    if (m_ == 1) return std::to_string(encoding(x));
    if (x.log == 0) return "1";
    return "t^" + std::to_string(x.log);
}

FieldPtr field_for_order(std::uint64_t q) {
    if (q < 2 || q > Field::kMaxOrder) {
        throw std::invalid_argument("field order out of range: " + std::to_string(q));
    }
    std::uint64_t p = 2;
    while (p * p <= q && q % p != 0) ++p;
    if (q % p != 0) p = q;
    int m = 0;
    std::uint64_t rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++m;
    }
    if (rest != 1) {
        throw std::invalid_argument("field order is not a prime power: " + std::to_string(q));
    }
    return Field::make(static_cast<int>(p), m);
}

}  // namespace hulls
