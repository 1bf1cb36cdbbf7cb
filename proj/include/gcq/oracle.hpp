#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gcq/fold.hpp"
#include "gcq/games_chan.hpp"

namespace gcq {

/// Slow, independent ground truth. Everything here is allowed to divide and
/// invert; none of it is called by the recursive algorithms.

/// N - deg gcd(block_poly, x^N - 1); 0 for the zero sequence.
std::size_t mp_oracle(const PeriodicSequence& s);

/// (x^N - 1) / gcd(block_poly, x^N - 1), the monic minimal polynomial of s.
/// Throws zero_sequence on the zero sequence.
DensePoly minimal_polynomial(const PeriodicSequence& s);

/// Multiplicity of (x-1) in f by repeated exact division.
std::size_t multiplicity_oracle(const DensePoly& f);

/// g * (x-1)^m with g seed-random, g(1) != 0, deg(g) + m <= degree_bound;
/// the multiplicity of the result is m by construction.
DensePoly planted_instance(const Field& field, std::size_t m, std::size_t degree_bound,
                           std::uint64_t seed);

enum class SearchMode { exhaustive, random };
enum class AlgorithmKind { corrected, paper_literal };

struct Mismatch {
    std::vector<Elem> block;
    std::size_t expected = 0;  ///< oracle value
    std::size_t got = 0;       ///< algorithm value
};

struct VerificationReport {
    std::uint32_t q = 0;
    std::size_t n = 0;
    std::size_t period = 0;
    SearchMode mode = SearchMode::exhaustive;
    AlgorithmKind algorithm = AlgorithmKind::corrected;
    std::uint64_t seed = 0;     ///< meaningful for random mode only
    std::size_t cases = 0;
    std::vector<Mismatch> mismatches;
    double elapsed_seconds = 0.0;

    bool passed() const noexcept { return mismatches.empty(); }
};

/// Runs the chosen algorithm against mp_oracle over every block of period
/// q^n (exhaustive: lexicographic over element encodings, throws
/// budget_exceeded when there are more than `budget` blocks) or over `count`
/// seeded random blocks. Collects every mismatch.
VerificationReport discrepancy_search(const Field& field, std::size_t n, SearchMode mode,
                                      AlgorithmKind algorithm, std::size_t budget,
                                      std::uint64_t seed, std::size_t count);

std::string to_string(SearchMode mode);
std::string to_string(AlgorithmKind algorithm);

} // namespace gcq
