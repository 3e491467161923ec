#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace hulls {

/// Which bilinear form a computation uses. The Hermitian pairing
/// <x,y> = sum_i x_i y_i^q needs the field to be a quadratic extension
/// GF(q^2) of GF(q); the Euclidean pairing works in any field.
enum class Form { kEuclidean, kHermitian };

/// One field element in discrete-log form: theta^log, or zero. The zero
/// sentinel compares greater than every exponent, so plain sorting yields
/// "ascending discrete log, zero last", the point order used throughout.
struct Felt {
    static constexpr std::uint32_t kZeroLog = 0xffffffffu;

    std::uint32_t log = kZeroLog;

    [[nodiscard]] constexpr bool is_zero() const { return log == kZeroLog; }

    friend constexpr bool operator==(Felt a, Felt b) { return a.log == b.log; }
    friend constexpr bool operator!=(Felt a, Felt b) { return a.log != b.log; }
    friend constexpr bool operator<(Felt a, Felt b) { return a.log < b.log; }
};

/// Exact arithmetic in GF(p^m), p^m <= 2^20, backed by exp/log tables over a
/// deterministic primitive element theta. Construction picks the
/// lexicographically smallest monic irreducible modulus (coefficients read as
/// a base-p number, high degree most significant) and the smallest-encoding
/// generator, so two fields with the same (p, m) are identical. Instances are
/// immutable and every operation is pure; sharing across threads is safe.
///
/// Elements are encoded as integers in [0, p^m): the base-p digits are the
/// coefficients of the polynomial representative, constant term least
/// significant. The exp/log tables translate between encodings and discrete
/// logs; Felt stores only the log.
class Field {
  public:
    static constexpr std::uint32_t kMaxOrder = 1u << 20;

    static std::shared_ptr<const Field> make(int p, int m);

    /// Same field but with an explicit modulus and generator, both validated.
    /// Used when loading serialized fields.
    static std::shared_ptr<const Field> make_with(int p, int m, std::vector<int> modulus,
                                                  std::uint32_t theta_encoding);

    int characteristic() const { return p_; }
    int degree() const { return m_; }
    std::uint32_t order() const { return q_; }
    /// Order of the multiplicative group, q - 1.
    std::uint32_t group_order() const { return q_ - 1; }
    /// Monic modulus, ascending coefficients, size m + 1. For m = 1 this is x.
    const std::vector<int>& modulus() const { return modulus_; }
    std::uint32_t theta_encoding() const { return exp_[theta().log]; }

    bool is_quadratic() const { return m_ % 2 == 0; }
    /// p^(m/2); throws unless the field is a quadratic extension.
    std::uint32_t subfield_order() const;

    static constexpr Felt zero() { return {}; }
    Felt one() const { return Felt{0}; }
    Felt theta() const { return Felt{1 % group_order()}; }
    /// theta^e (e reduced mod q - 1).
    Felt element(std::uint64_t e) const { return Felt{static_cast<std::uint32_t>(e % group_order())}; }
    Felt from_encoding(std::uint32_t enc) const;
    std::uint32_t encoding(Felt x) const;
    /// Image of an integer under Z -> GF(p) -> GF(p^m).
    Felt from_integer(std::int64_t v) const;

    Felt add(Felt a, Felt b) const;
    Felt sub(Felt a, Felt b) const { return add(a, neg(b)); }
    Felt neg(Felt a) const;
    Felt mul(Felt a, Felt b) const;
    Felt inv(Felt a) const;
    Felt div(Felt a, Felt b) const { return mul(a, inv(b)); }
    Felt pow(Felt a, std::int64_t e) const;

    /// Frobenius x -> x^q for the stated subfield order q, which must satisfy
    /// q^2 = order(). Fixes exactly the q elements of GF(q).
    Felt conj(Felt x, std::uint32_t q) const;
    /// True when x lies in the subfield of the given order.
    bool in_subfield(Felt x, std::uint32_t q) const;
    /// The (q+1)-st root y = theta^(log x / (q+1)) with y^(q+1) = x; requires a
    /// quadratic extension and x in GF(q)^*.
    Felt norm_root(Felt x) const;
    /// Square root; deterministic (smaller exponent of the two roots in odd
    /// characteristic). Throws on non-squares.
    Felt sqrt(Felt x) const;
    /// Smallest-exponent eta != 0 with eta^q = -eta (quadratic extension only).
    /// In characteristic 2 this is 1.
    Felt find_eta() const;
    /// Smallest-exponent unit whose scaling changes self-orthogonality:
    /// Euclidean wants a^2 != 1, Hermitian wants a^(q+1) != 1. With
    /// subfield_only the Hermitian search is restricted to GF(q)^*.
    /// Throws when no such element exists (e.g. GF(2), GF(3) Euclidean).
    Felt scaling_unit(Form form, bool subfield_only = false) const;

    /// Addition on raw encodings (digit-wise mod p). Hot path for subset-sum
    /// tables which index by encoding.
    std::uint32_t add_encoded(std::uint32_t a, std::uint32_t b) const;

    /// Human-readable form: "0", "1", or "t^e"; prime-field elements print as
    /// their integer encoding.
    std::string to_string(Felt x) const;

  private:
    Field() = default;

    int p_ = 0;
    int m_ = 0;
    std::uint32_t q_ = 0;
    std::vector<int> modulus_;
    std::vector<std::uint32_t> exp_;  // size q-1, exp_[e] = encoding of theta^e
    std::vector<std::uint32_t> log_;  // size q, inverse of exp_ (log_[0] unused)
};

using FieldPtr = std::shared_ptr<const Field>;

/// GF(q) for a prime power q = p^m: factors q and delegates to Field::make.
/// Throws when q is not a prime power or exceeds the order cap.
FieldPtr field_for_order(std::uint64_t q);

}  // namespace hulls
