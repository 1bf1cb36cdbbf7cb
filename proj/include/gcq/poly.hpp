#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "gcq/field.hpp"

namespace gcq {

/// Dense polynomial over GF(q). Coefficient i is the coefficient of x^i.
/// Always normalized: no trailing zeros, so the zero polynomial has an empty
/// coefficient vector and its degree is nullopt rather than an integer.
class DensePoly {
public:
    explicit DensePoly(Field field) : field_(std::move(field)) {}
    DensePoly(Field field, std::vector<Elem> coeffs);

    static DensePoly zero(const Field& field) { return DensePoly(field); }
    static DensePoly constant(const Field& field, Elem c);
    /// x^n - 1, built directly from its two terms.
    static DensePoly x_pow_minus_one(const Field& field, std::size_t n);

    const Field& field() const noexcept { return field_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    std::optional<std::size_t> degree() const noexcept {
        if (coeffs_.empty()) return std::nullopt;
        return coeffs_.size() - 1;
    }
    std::span<const Elem> coeffs() const noexcept { return coeffs_; }
    Elem coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }
    bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }

    bool operator==(const DensePoly& other) const noexcept {
        return field_ == other.field_ && coeffs_ == other.coeffs_;
    }

private:
    Field field_;
    std::vector<Elem> coeffs_;
};

DensePoly poly_add(const DensePoly& f, const DensePoly& g);
DensePoly poly_sub(const DensePoly& f, const DensePoly& g);
DensePoly poly_neg(const DensePoly& f);
DensePoly poly_scalar(Elem c, const DensePoly& f);
/// f * x^k.
DensePoly poly_shift(const DensePoly& f, std::size_t k);
/// Horner evaluation f(a).
Elem poly_eval(const DensePoly& f, Elem a);
/// Exact schoolbook product.
DensePoly poly_mul(const DensePoly& f, const DensePoly& g);
/// f = q*g + r with deg r < deg g. Oracle-side only; the recursive
/// algorithms never divide.
std::pair<DensePoly, DensePoly> poly_divmod(const DensePoly& f, const DensePoly& g);
/// Monic gcd via Euclid; gcd(f, 0) = monic(f).
DensePoly poly_gcd(const DensePoly& f, const DensePoly& g);
/// f scaled monic (f != 0).
DensePoly poly_monic(const DensePoly& f);

inline DensePoly operator+(const DensePoly& f, const DensePoly& g) { return poly_add(f, g); }
inline DensePoly operator-(const DensePoly& f, const DensePoly& g) { return poly_sub(f, g); }
inline DensePoly operator*(const DensePoly& f, const DensePoly& g) { return poly_mul(f, g); }

} // namespace gcq
