#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "gcq/errors.hpp"
#include "gcq/opcount.hpp"

namespace gcq {

/// Canonical integer encoding of a field element: base-p digits are the
/// polynomial-basis coordinates, least significant digit = constant term.
using Elem = std::uint32_t;

/// GF(p^e) with a deterministic modulus: the smallest monic irreducible of
/// degree e under the integer encoding sum(c_i * p^i). For e = 1 that rule
/// degenerates to x (encoding p), which arithmetic never touches. Immutable
/// after construction; safe to share across threads.
///
/// Elements are plain integer encodings in [0, q); all arithmetic routes
/// through the owning Field. For q <= 256 the operations are table lookups.
class Field {
public:
    /// Builds GF(q). Throws not_prime_power unless q = p^e with p prime,
    /// overflow when q > 2^16.
    static Field make(std::uint32_t q);

    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t e() const noexcept { return e_; }
    std::uint32_t q() const noexcept { return q_; }

    /// Modulus coefficients c_0..c_e over GF(p), c_e = 1.
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
    /// Integer encoding sum(c_i * p^i) of the modulus.
    std::uint64_t modulus_encoding() const noexcept;

    bool operator==(const Field& other) const noexcept { return q_ == other.q_; }
    bool operator!=(const Field& other) const noexcept { return q_ != other.q_; }

    Elem add(Elem a, Elem b) const {
        detail::count_addition();
        if (tables_) return tables_->add[a * q_ + b];
        return add_generic(a, b);
    }

    Elem neg(Elem a) const {
        detail::count_addition();
        if (tables_) return tables_->neg[a];
        return neg_generic(a);
    }

    Elem sub(Elem a, Elem b) const {
        detail::count_addition();
        if (tables_) return tables_->add[a * q_ + tables_->neg[b]];
        return add_generic(a, neg_generic(b));
    }

    Elem mul(Elem a, Elem b) const {
        detail::count_scalar_mul();
        if (tables_) return tables_->mul[a * q_ + b];
        return mul_generic(a, b);
    }

    /// Multiple by a prime-subfield constant c in [0, p). This is the only
    /// kind of multiplication the recursive algorithms perform.
    Elem scalar_mul(std::uint32_t c, Elem a) const {
        detail::count_scalar_mul();
        if (tables_) return tables_->mul[c * q_ + a];
        return scalar_generic(c, a);
    }

    /// a^{-1} via exponentiation to q-2. Throws zero_inverse on a = 0.
    Elem inv(Elem a) const;

    /// a^k by square and multiply (k >= 0; a^0 = 1).
    Elem pow(Elem a, std::uint64_t k) const;

    /// Polynomial-basis coordinates (e base-p digits, constant term first).
    std::vector<std::uint32_t> coords(Elem a) const;
    Elem from_coords(const std::vector<std::uint32_t>& digits) const;

    bool valid(Elem a) const noexcept { return a < q_; }

private:
    Field() = default;

    Elem add_generic(Elem a, Elem b) const noexcept;
    Elem neg_generic(Elem a) const noexcept;
    Elem scalar_generic(std::uint32_t c, Elem a) const noexcept;
    Elem mul_generic(Elem a, Elem b) const noexcept;

    struct Tables {
        std::vector<std::uint16_t> add;  // q*q
        std::vector<std::uint16_t> mul;  // q*q
        std::vector<std::uint16_t> neg;  // q
        std::vector<std::uint16_t> inv;  // q, entry 0 unused
    };

    std::uint32_t p_ = 0;
    std::uint32_t e_ = 0;
    std::uint32_t q_ = 0;
    std::vector<std::uint32_t> modulus_;
    std::shared_ptr<const Tables> tables_;
};

/// C(i, k) mod p for prime p, via Lucas' theorem on the base-p digits.
/// Returns 0 when k > i.
std::uint32_t binomial_mod_p(std::uint64_t i, std::uint64_t k, std::uint32_t p);

} // namespace gcq
