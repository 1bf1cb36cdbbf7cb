#include "gcq/oracle.hpp"

#include <chrono>
#include <utility>

#include "gcq/errors.hpp"
#include "gcq/rng.hpp"

namespace gcq {

std::size_t mp_oracle(const PeriodicSequence& s) {
    if (s.is_zero()) return 0;
    const std::size_t N = s.period();
    const DensePoly g = poly_gcd(s.block_poly(), DensePoly::x_pow_minus_one(s.field(), N));
    return N - *g.degree();
}

DensePoly minimal_polynomial(const PeriodicSequence& s) {
    if (s.is_zero()) throw zero_sequence("minimal polynomial of the zero sequence");
    const DensePoly xn1 = DensePoly::x_pow_minus_one(s.field(), s.period());
    const DensePoly g = poly_gcd(s.block_poly(), xn1);
    auto [quot, rem] = poly_divmod(xn1, g);
    return quot;  // divides exactly, and the quotient of monics is monic
}

std::size_t multiplicity_oracle(const DensePoly& f) {
    if (f.is_zero()) throw zero_polynomial("multiplicity of the zero polynomial");
    const Field& F = f.field();
    const DensePoly x_minus_1(F, {F.neg(1), 1});
    std::size_t m = 0;
    DensePoly g = f;
    while (true) {
        auto [quot, rem] = poly_divmod(g, x_minus_1);
        if (!rem.is_zero()) return m;
        ++m;
        g = std::move(quot);
    }
}

DensePoly planted_instance(const Field& field, std::size_t m, std::size_t degree_bound,
                           std::uint64_t seed) {
    if (degree_bound < m)
        throw bound_too_small("degree bound " + std::to_string(degree_bound) +
                              " cannot hold multiplicity " + std::to_string(m));
    SplitMix64 rng(seed);
    const std::size_t gdeg = rng.below(degree_bound - m + 1);
    std::vector<Elem> gc(gdeg + 1);
    DensePoly g = DensePoly::zero(field);
    while (true) {
        for (std::size_t i = 0; i < gdeg; ++i)
            gc[i] = static_cast<Elem>(rng.below(field.q()));
        gc[gdeg] = static_cast<Elem>(1 + rng.below(field.q() - 1));
        g = DensePoly(field, gc);
        if (poly_eval(g, 1) != 0) break;  // resample until (x-1) does not divide g
    }
    const DensePoly x_minus_1(field, {field.neg(1), 1});
    for (std::size_t i = 0; i < m; ++i) g = g * x_minus_1;
    return g;
}

std::string to_string(SearchMode mode) {
    return mode == SearchMode::exhaustive ? "exhaustive" : "random";
}

std::string to_string(AlgorithmKind algorithm) {
    return algorithm == AlgorithmKind::corrected ? "corrected" : "paper-literal";
}

namespace {

std::size_t run_algorithm(const PeriodicSequence& s, AlgorithmKind algorithm) {
    if (algorithm == AlgorithmKind::paper_literal) return paper_literal_min_period(s);
    return min_period(s).value;
}

/// Writes the v-th block in lexicographic order (s_0 is the most significant
/// base-q digit of v) into `block`.
void nth_block(std::uint64_t v, std::uint32_t q, std::vector<Elem>& block) {
    for (std::size_t i = block.size(); i-- > 0;) {
        block[i] = static_cast<Elem>(v % q);
        v /= q;
    }
}

} // namespace

VerificationReport discrepancy_search(const Field& field, std::size_t n, SearchMode mode,
                                      AlgorithmKind algorithm, std::size_t budget,
                                      std::uint64_t seed, std::size_t count) {
    const auto start = std::chrono::steady_clock::now();

    VerificationReport report;
    report.q = field.q();
    report.n = n;
    report.mode = mode;
    report.algorithm = algorithm;
    report.seed = seed;

    std::size_t period = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (period > (std::size_t{1} << 48) / field.q())
            throw overflow("period q^n does not fit the search");
        period *= field.q();
    }
    report.period = period;

    std::vector<Elem> block(period);
    auto check = [&](const std::vector<Elem>& b) {
        const PeriodicSequence s(field, b);
        const std::size_t expected = mp_oracle(s);
        const std::size_t got = run_algorithm(s, algorithm);
        ++report.cases;
        if (expected != got) report.mismatches.push_back({b, expected, got});
    };

    if (mode == SearchMode::exhaustive) {
        // q^period blocks in total; refuse rather than run forever.
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < period; ++i) {
            if (total > budget / field.q() + 1) {
                total = budget + 1;
                break;
            }
            total *= field.q();
        }
        if (total > budget)
            throw budget_exceeded("exhaustive search over q^" + std::to_string(period) +
                                  " blocks exceeds the budget of " + std::to_string(budget));
        for (std::uint64_t v = 0; v < total; ++v) {
            nth_block(v, field.q(), block);
            check(block);
        }
    } else {
        SplitMix64 rng(seed);
        for (std::size_t c = 0; c < count; ++c) {
            for (auto& e : block) e = static_cast<Elem>(rng.below(field.q()));
            check(block);
        }
    }

    report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

} // namespace gcq
