// Acceptance gate: every shipped claim, one PASS/FAIL line each, nonzero
// exit when anything fails. Tolerances are pinned here as named constants.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "gcq/binary.hpp"
#include "gcq/field.hpp"
#include "gcq/fold.hpp"
#include "gcq/games_chan.hpp"
#include "gcq/oracle.hpp"
#include "gcq/poly.hpp"
#include "gcq/rng.hpp"

using namespace gcq;

namespace {

// ---- pinned tolerances -----------------------------------------------------
constexpr double kExhaustiveSecondsLimit = 10.0;  // criteria 1 and 2
constexpr double kBinaryAbsoluteLimit = 2.0;      // criterion 7: N = 2^24 wall time
constexpr double kBinaryScaleLimit = 32.0;        // criterion 7: 2^24 vs 2^20 ratio
constexpr std::size_t kBinaryRingBytes = std::size_t{16} << 20;  // criterion 7 input ring
constexpr std::size_t kRandomCases = 10000;       // criteria 3, 5, 10
constexpr std::size_t kPlantedCases = 1000;       // criterion 4
constexpr std::size_t kPlantedMaxMult = 200;      // criterion 4
constexpr std::size_t kPairCases = 1000;          // criterion 11
constexpr std::uint64_t kSeed = 42;               // every seeded sweep below
// -----------------------------------------------------------------------------

int failures = 0;

void report(int index, bool pass, const std::string& detail) {
    std::printf("[%2d/11] %s %s\n", index, pass ? "PASS" : "FAIL", detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

/// Enumerates every block of length N over GF(q); returns mismatch count.
std::size_t exhaustive_mismatches(const Field& F, std::size_t N, std::size_t& cases) {
    std::vector<Elem> block(N, 0);
    std::size_t bad = 0;
    while (true) {
        const PeriodicSequence s(F, block);
        if (min_period(s).value != mp_oracle(s)) ++bad;
        ++cases;
        std::size_t i = N;
        while (i > 0 && block[i - 1] + 1 == F.q()) block[--i] = 0;
        if (i == 0) return bad;
        ++block[i - 1];
    }
}

void criterion_1() {
    const auto t0 = std::chrono::steady_clock::now();
    const Field F = Field::make(2);
    std::size_t cases = 0, bad = 0;
    for (std::size_t N : {1u, 2u, 4u, 8u, 16u}) bad += exhaustive_mismatches(F, N, cases);
    const double s = seconds_since(t0);
    report(1, bad == 0 && s < kExhaustiveSecondsLimit,
           "exhaustive q=2, N in {1,2,4,8,16}: " + std::to_string(cases) + " blocks, " +
               std::to_string(bad) + " mismatches, " + std::to_string(s) + " s (limit " +
               std::to_string(kExhaustiveSecondsLimit) + ")");
}

void criterion_2() {
    const auto t0 = std::chrono::steady_clock::now();
    const Field F = Field::make(3);
    std::size_t cases = 0, bad = 0;
    for (std::size_t N : {3u, 9u}) bad += exhaustive_mismatches(F, N, cases);
    const double s = seconds_since(t0);
    report(2, bad == 0 && s < kExhaustiveSecondsLimit,
           "exhaustive q=3, N in {3,9}: " + std::to_string(cases) + " blocks, " +
               std::to_string(bad) + " mismatches, " + std::to_string(s) + " s (limit " +
               std::to_string(kExhaustiveSecondsLimit) + ")");
}

void criterion_3() {
    std::size_t bad = 0, cases = 0;
    for (std::uint32_t q : {4u, 5u, 9u}) {
        const Field F = Field::make(q);
        for (std::size_t N : {std::size_t{q} * q, std::size_t{q} * q * q}) {
            SplitMix64 rng(kSeed + q + N);
            std::vector<Elem> block(N);
            for (std::size_t t = 0; t < kRandomCases; ++t) {
                for (auto& e : block) e = static_cast<Elem>(rng.below(q));
                const PeriodicSequence s(F, block);
                if (min_period(s).value != mp_oracle(s)) ++bad;
                ++cases;
            }
        }
    }
    report(3, bad == 0,
           "random q in {4,5,9} at N=q^2 and q^3: " + std::to_string(cases) + " blocks, " +
               std::to_string(bad) + " mismatches");
}

void criterion_4() {
    std::size_t bad = 0, cases = 0;
    for (std::uint32_t q : {2u, 3u, 4u, 9u}) {
        const Field F = Field::make(q);
        SplitMix64 rng(kSeed * 1000 + q);
        for (std::size_t t = 0; t < kPlantedCases; ++t) {
            const std::size_t m = rng.below(kPlantedMaxMult + 1);
            const std::size_t bound = m + rng.below(kPlantedMaxMult + 1);
            const DensePoly f = planted_instance(F, m, bound, rng.next());
            if (multiplicity(f).value != m) ++bad;
            ++cases;
        }
    }
    report(4, bad == 0,
           "planted g*(x-1)^m, m <= " + std::to_string(kPlantedMaxMult) + ", q in {2,3,4,9}: " +
               std::to_string(cases) + " instances, " + std::to_string(bad) + " misses");
}

void criterion_5() {
    const Field F = Field::make(2);
    SplitMix64 rng(kSeed + 5);
    std::size_t bad = 0, cases = 0;
    for (std::size_t t = 0; t < kRandomCases; ++t) {
        const std::size_t n = rng.below(17);  // N up to 2^16
        const std::size_t N = std::size_t{1} << n;
        std::vector<Elem> block(N);
        for (auto& e : block) e = static_cast<Elem>(rng.below(2));
        const auto packed = pack_bits(block);
        const PeriodicSequence s(F, block);
        if (min_period_binary(packed, N) != min_period(s).value) ++bad;
        if (std::any_of(block.begin(), block.end(), [](Elem e) { return e != 0; }))
            if (multiplicity_binary(packed, N) != multiplicity(DensePoly(F, block)).value)
                ++bad;
        ++cases;
    }
    report(5, bad == 0,
           "bit-packed equivalence up to N=2^16: " + std::to_string(cases) + " blocks, " +
               std::to_string(bad) + " mismatches");
}

void criterion_6() {
    std::uint64_t divisions = 0, inversions = 0;
    std::size_t runs = 0;
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 9u, 16u, 257u}) {
        const Field F = Field::make(q);
        SplitMix64 rng(kSeed + q * 7);
        for (int t = 0; t < 50; ++t) {
            std::size_t N = q;
            while (N * q <= 2048) N *= q;
            std::vector<Elem> block(N);
            for (auto& e : block) e = static_cast<Elem>(rng.below(q));
            const auto r = min_period(PeriodicSequence(F, block));
            divisions += r.ops.polynomial_divisions;
            inversions += r.ops.field_inversions;
            std::vector<Elem> coeffs(64);
            for (auto& e : coeffs) e = static_cast<Elem>(rng.below(q));
            const DensePoly f(F, coeffs);
            if (!f.is_zero()) {
                const auto m = multiplicity(f);
                divisions += m.ops.polynomial_divisions;
                inversions += m.ops.field_inversions;
            }
            ++runs;
        }
    }
    report(6, divisions == 0 && inversions == 0,
           "division-free instrumentation over " + std::to_string(runs) + " runs: " +
               std::to_string(divisions) + " polynomial divisions, " +
               std::to_string(inversions) + " field inversions");
}

/// Amortized per-call wall time, measured over a ring of distinct random
/// blocks whose combined footprint (kBinaryRingBytes) far exceeds a typical
/// L2 cache. Re-timing one hot block would compare L2 residency at 2^20
/// against L3 traffic at 2^24 and report the cache hierarchy, not the
/// algorithm; with both sizes streaming fresh blocks the ratio measures
/// scaling. Best of several batches, each long enough to swamp timer noise.
double best_binary_seconds(std::size_t nbits, std::size_t batches) {
    SplitMix64 rng(kSeed + nbits);
    const std::size_t block_bytes = nbits / 8;
    const std::size_t nblocks = std::max<std::size_t>(1, kBinaryRingBytes / block_bytes);
    std::vector<std::vector<std::uint64_t>> ring(nblocks);
    for (auto& block : ring) {
        block.resize(nbits / 64);
        for (auto& w : block) w = rng.next();
    }
    const std::size_t iters =
        std::max<std::size_t>(nblocks, (std::size_t{1} << 25) / block_bytes);
    double best = -1;
    for (std::size_t b = 0; b < batches; ++b) {
        volatile std::size_t sink = 0;
        const auto t0 = std::chrono::steady_clock::now();
        for (std::size_t i = 0; i < iters; ++i)
            sink = sink + min_period_binary(ring[i % nblocks], nbits);
        const double s = seconds_since(t0) / static_cast<double>(iters);
        (void)sink;
        if (best < 0 || s < best) best = s;
    }
    return best;
}

void criterion_7() {
    const double t20 = best_binary_seconds(std::size_t{1} << 20, 5);
    const double t24 = best_binary_seconds(std::size_t{1} << 24, 5);
    const bool pass = t24 < kBinaryAbsoluteLimit && t24 <= kBinaryScaleLimit * t20;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "binary wall time: 2^20 -> %.6f s, 2^24 -> %.6f s (ratio %.1f, limits <%g s "
                  "and <=%gx)",
                  t20, t24, t24 / t20, kBinaryAbsoluteLimit, kBinaryScaleLimit);
    report(7, pass, buf);
}

void criterion_8() {
    std::size_t bad = 0, cases = 0;
    MinPeriodOptions no_shortcut;
    no_shortcut.use_shortcut = false;
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 9u}) {
        const Field F = Field::make(q);
        SplitMix64 rng(kSeed + q * 3);
        for (int t = 0; t < 200; ++t) {
            const std::size_t n = rng.below(q == 2 ? 7 : 4);
            std::size_t N = 1;
            for (std::size_t i = 0; i < n; ++i) N *= q;
            std::vector<Elem> block(N);
            for (auto& e : block) e = static_cast<Elem>(rng.below(q));
            const PeriodicSequence s(F, block);
            const bool zero = s.is_zero();
            if (min_period(s).trace.levels.size() > n) ++bad;
            const auto full = min_period(s, no_shortcut);
            // no early exit possible: nonzero input, shortcut disabled
            if (!zero && full.trace.levels.size() != n) ++bad;
            if (zero && !full.trace.levels.empty()) ++bad;
            ++cases;
        }
    }
    report(8, bad == 0,
           "recursion depth <= n, = n without early exits: " + std::to_string(cases) +
               " traces, " + std::to_string(bad) + " violations");
}

void criterion_9() {
    const Field F3 = Field::make(3);
    const PeriodicSequence witness(F3, {1, 2, 0});
    const bool mismatch_kept =
        paper_literal_min_period(witness) == 1 && mp_oracle(witness) == 2;

    const Field F2 = Field::make(2);
    std::size_t q2_bad = 0, q2_cases = 0;
    for (std::size_t n = 0; n <= 3; ++n) {  // every block with 2^N <= 256
        const auto rep = discrepancy_search(F2, n, SearchMode::exhaustive,
                                            AlgorithmKind::paper_literal, 1u << 20, kSeed, 0);
        q2_bad += rep.mismatches.size();
        q2_cases += rep.cases;
    }
    report(9, mismatch_kept && q2_bad == 0,
           "published recurrence: (1,2,0)/GF(3) stays 1 vs oracle 2 (" +
               std::string(mismatch_kept ? "yes" : "NO") + "); q=2 sweep " +
               std::to_string(q2_cases) + " blocks, " + std::to_string(q2_bad) +
               " mismatches");
}

void criterion_10() {
    std::size_t bad = 0, cases = 0;
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 9u}) {
        const Field F = Field::make(q);
        SplitMix64 rng(kSeed + q * 11);
        const std::size_t jmax = (F.p() == 2) ? (q == 2 ? 3 : 4) : (q == 3 ? 3 : 2);
        for (std::size_t t = 0; t < kRandomCases; ++t) {
            std::size_t half = 1;
            for (std::size_t j = rng.below(jmax + 1); j > 0; --j) half *= F.p();
            std::vector<Elem> coeffs(q * half);
            for (auto& e : coeffs) e = static_cast<Elem>(rng.below(q));
            const DensePoly f(F, coeffs);

            if (reconstruct(decompose(f, half)) != f) ++bad;

            const auto cs = chunk(f, half);
            DensePoly rhs = poly_shift(plain_fold(cs), (q - 1) * half);
            for (std::size_t i = 0; i + 1 < q; ++i)
                rhs = rhs + poly_shift(cs[i], i * half) - poly_shift(cs[i], (q - 1) * half);
            if (rhs != f) ++bad;
            ++cases;
        }
    }
    report(10, bad == 0,
           "reconstruction and folding identities: " + std::to_string(cases) +
               " polynomials, " + std::to_string(bad) + " failures");
}

void criterion_11() {
    std::size_t bad = 0, distinct_pairs = 0, equal_pairs = 0;
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 9u}) {
        const Field F = Field::make(q);
        SplitMix64 rng(kSeed + q * 17);
        std::size_t produced = 0;
        while (produced < kPairCases) {
            std::size_t Na = 1, Nb = 1;
            for (std::size_t i = rng.below(3); i > 0; --i) Na *= q;
            for (std::size_t i = rng.below(3); i > 0; --i) Nb *= q;
            std::vector<Elem> a(Na), b(Nb);
            for (auto& e : a) e = static_cast<Elem>(rng.below(q));
            for (auto& e : b) e = static_cast<Elem>(rng.below(q));
            const std::size_t mpa = min_period(PeriodicSequence(F, a)).value;
            const std::size_t mpb = min_period(PeriodicSequence(F, b)).value;
            const std::size_t N = std::max(Na, Nb);
            std::vector<Elem> sum(N);
            for (std::size_t i = 0; i < N; ++i) sum[i] = F.add(a[i % Na], b[i % Nb]);
            const std::size_t mps = min_period(PeriodicSequence(F, sum)).value;
            if (mpa != mpb) {
                if (mps != std::max(mpa, mpb)) ++bad;
                ++distinct_pairs;
                ++produced;  // the quota counts distinct-MP pairs
            } else {
                if (mps > mpa) ++bad;
                ++equal_pairs;
            }
        }
    }
    report(11, bad == 0,
           "sum rule: " + std::to_string(distinct_pairs) + " distinct-MP pairs (= max) and " +
               std::to_string(equal_pairs) + " equal-MP pairs (<=), " + std::to_string(bad) +
               " violations");
}

} // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    if (failures == 0)
        std::printf("acceptance: all 11 criteria passed\n");
    else
        std::printf("acceptance: %d criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
