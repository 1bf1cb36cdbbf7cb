#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gcq/poly.hpp"

namespace gcq {

/// A sequence of period N = q^n given by its initial block s_0..s_{N-1}.
class PeriodicSequence {
public:
    /// Validates that the block length is q^n for some n >= 0 (bad_period
    /// otherwise) and that every entry encodes a field element (bad_element).
    PeriodicSequence(Field field, std::vector<Elem> block);

    const Field& field() const noexcept { return field_; }
    const std::vector<Elem>& block() const noexcept { return block_; }
    std::size_t period() const noexcept { return block_.size(); }
    std::size_t exponent() const noexcept { return n_; }
    bool is_zero() const noexcept;

    /// s_0 + s_1 x + ... + s_{N-1} x^{N-1}.
    DensePoly block_poly() const { return DensePoly(field_, block_); }

private:
    Field field_;
    std::vector<Elem> block_;
    std::size_t n_;
};

/// The (x-1)^{N'}-adic digits of a polynomial of degree < q*N'.
///
/// Writing f = sum_i x^{iN'} c_i with chunk polynomials c_i of degree < N',
/// and y = (x-1)^{N'} = x^{N'} - 1 (N' a power of the characteristic), the
/// substitution x^{iN'} = (y+1)^i = sum_k C(i,k) y^k turns f into
///
///     f = sum_k y^k d_k,   d_k = sum_{i>=k} C(i,k) c_i  (deg d_k < N').
///
/// The digits are unique, d_0 is the plain fold (the chunk sum), and the
/// multiplicity of (x-1) in f is kstar*N' plus the multiplicity in d_kstar,
/// where kstar indexes the first nonzero digit. That last step is what the
/// recursive algorithms consume.
struct DigitDecomposition {
    std::size_t half_size = 0;            ///< N'
    std::vector<DensePoly> digits;        ///< d_0..d_{q-1}
    std::optional<std::size_t> kstar;     ///< first k with d_k != 0; nullopt when f = 0
};

/// Splits f into q chunk polynomials: c_i holds the coefficients of f in the
/// degree window [i*N', (i+1)*N'), shifted down to degree < N'. Requires
/// deg f < q*N' (window_too_small otherwise).
std::vector<DensePoly> chunk(const DensePoly& f, std::size_t half_size);

/// d_0 = c_0 + ... + c_{q-1}.
DensePoly plain_fold(const std::vector<DensePoly>& chunks);

/// d_k = sum_{i>=k} C(i,k) c_i with C(i,k) taken mod the characteristic.
DensePoly digit(const std::vector<DensePoly>& chunks, std::size_t k);

/// All q digits of f at window N' plus the first-nonzero index.
/// half_size must be a power of the characteristic.
DigitDecomposition decompose(const DensePoly& f, std::size_t half_size);

/// sum_k (x-1)^{k*N'} d_k; inverse of decompose.
DensePoly reconstruct(const DigitDecomposition& d);

} // namespace gcq
