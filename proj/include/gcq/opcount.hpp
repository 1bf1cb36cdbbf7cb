#pragma once

#include <cstdint>

namespace gcq {

/// Tallies of the arithmetic primitives executed on the current thread.
/// The recursive algorithms must finish with zero polynomial divisions and
/// zero field inversions; the oracle routines are free to use both.
struct OpCounters {
    std::uint64_t additions = 0;
    std::uint64_t scalar_multiplications = 0;
    std::uint64_t polynomial_divisions = 0;
    std::uint64_t field_inversions = 0;
};

namespace detail {
inline thread_local OpCounters tls_op_counters{};
}

/// Running totals for the current thread.
inline const OpCounters& op_counters() noexcept { return detail::tls_op_counters; }

/// Counters accumulated since `mark` (a copy of an earlier op_counters()).
inline OpCounters op_counters_since(const OpCounters& mark) noexcept {
    const OpCounters& now = detail::tls_op_counters;
    return OpCounters{
        now.additions - mark.additions,
        now.scalar_multiplications - mark.scalar_multiplications,
        now.polynomial_divisions - mark.polynomial_divisions,
        now.field_inversions - mark.field_inversions,
    };
}

namespace detail {
inline void count_addition(std::uint64_t n = 1) noexcept { tls_op_counters.additions += n; }
inline void count_scalar_mul(std::uint64_t n = 1) noexcept { tls_op_counters.scalar_multiplications += n; }
inline void count_poly_division() noexcept { ++tls_op_counters.polynomial_divisions; }
inline void count_field_inversion() noexcept { ++tls_op_counters.field_inversions; }
} // namespace detail

} // namespace gcq
