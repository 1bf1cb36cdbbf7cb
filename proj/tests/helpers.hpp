#pragma once

#include <cstddef>
#include <vector>

#include "gcq/field.hpp"
#include "gcq/poly.hpp"
#include "gcq/rng.hpp"

namespace gcq::testing {

inline std::vector<Elem> random_block(SplitMix64& rng, const Field& field, std::size_t len) {
    std::vector<Elem> b(len);
    for (auto& e : b) e = static_cast<Elem>(rng.below(field.q()));
    return b;
}

/// Uniform coefficients up to max_deg inclusive; may come out zero or of
/// lower degree (trailing zeros trim).
inline DensePoly random_poly(SplitMix64& rng, const Field& field, std::size_t max_deg) {
    return DensePoly(field, random_block(rng, field, max_deg + 1));
}

inline DensePoly random_nonzero_poly(SplitMix64& rng, const Field& field, std::size_t max_deg) {
    while (true) {
        DensePoly f = random_poly(rng, field, max_deg);
        if (!f.is_zero()) return f;
    }
}

/// (x-1)^k by literal repeated multiplication; deliberately avoids the
/// Frobenius-based shortcut so tests using it stay independent of it.
inline DensePoly x_minus_one_pow(const Field& field, std::size_t k) {
    const DensePoly x_minus_1(field, {field.neg(1), 1});
    DensePoly acc = DensePoly::constant(field, 1);
    for (std::size_t i = 0; i < k; ++i) acc = acc * x_minus_1;
    return acc;
}

} // namespace gcq::testing
