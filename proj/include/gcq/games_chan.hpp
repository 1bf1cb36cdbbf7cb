#pragma once

#include <cstddef>
#include <vector>

#include "gcq/fold.hpp"
#include "gcq/opcount.hpp"

namespace gcq {

/// One folding step of the recursion: the period at that level, the first
/// nonzero digit index chosen, and the amount added to the running result.
struct TraceLevel {
    std::size_t period = 0;        ///< N at this level
    std::size_t kstar = 0;
    std::size_t contribution = 0;  ///< (q-1-kstar)*N' for MP, kstar*N' for pi
};

/// The levels walked by a run plus the base-case value; the result always
/// equals base_value + sum of contributions, and the level count never
/// exceeds log_q of the initial period.
struct RecursionTrace {
    std::vector<TraceLevel> levels;
    std::size_t base_value = 0;

    std::size_t total() const noexcept {
        std::size_t t = base_value;
        for (const auto& lv : levels) t += lv.contribution;
        return t;
    }
};

struct MinPeriodOptions {
    /// Return N immediately when the block sums to a nonzero element.
    /// Changes constants, never results.
    bool use_shortcut = true;
};

struct MinPeriodResult {
    std::size_t value = 0;
    RecursionTrace trace;
    OpCounters ops;  ///< field work performed by this call (thread-local delta)
};

struct MultiplicityResult {
    std::size_t value = 0;
    RecursionTrace trace;
    OpCounters ops;
};

/// Degree of the minimal polynomial of s (the linear complexity), computed
/// division-free in at most log_q N folding levels. Equals
/// N - deg gcd(block_poly, x^N - 1) but never forms that gcd: each level
/// folds the block to its first nonzero (x-1)^{N'}-adic digit d_kstar and
/// adds (q-1-kstar)*N'.
MinPeriodResult min_period(const PeriodicSequence& s, MinPeriodOptions options = {});

/// Multiplicity of (x-1) in f != 0 (zero_polynomial otherwise), division-free.
/// Each level takes N as the smallest power of q exceeding deg f, folds to
/// the first nonzero digit and adds kstar*N/q.
MultiplicityResult multiplicity(const DensePoly& f);

/// The published recurrence taken at face value: when the plain fold s* is
/// zero it recurses into the first q-1 chunks at period N' and returns their
/// maximum. Correct for q = 2 (where it reduces to the classic halving
/// algorithm) but provably wrong against the gcd ground truth for q > 2;
/// kept for demonstration and for the discrepancy regression suite.
std::size_t paper_literal_min_period(const PeriodicSequence& s);

} // namespace gcq
