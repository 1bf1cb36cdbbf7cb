#include "gcq/games_chan.hpp"

#include <algorithm>

namespace gcq {

namespace {

bool all_zero(std::span<const Elem> v) {
    return std::all_of(v.begin(), v.end(), [](Elem s) { return s == 0; });
}

Elem block_sum(const Field& F, std::span<const Elem> v) {
    Elem acc = 0;
    for (Elem s : v) acc = F.add(acc, s);
    return acc;
}

// Writes the first nonzero digit of buf (length q*half) into out (length
// half, zero-filled here) and returns its index; nullopt when buf is zero.
// Digits are produced in increasing k, so the work stops at kstar.
std::optional<std::size_t> leading_digit(const Field& F, std::span<const Elem> buf,
                                         std::size_t half, std::vector<Elem>& out) {
    const std::size_t q = F.q();
    const std::uint32_t p = F.p();
    out.assign(half, 0);
    for (std::size_t k = 0; k < q; ++k) {
        if (k > 0) std::fill(out.begin(), out.end(), 0);
        bool nonzero = false;
        for (std::size_t i = k; i < q; ++i) {
            const std::uint32_t b = binomial_mod_p(i, k, p);
            if (b == 0) continue;
            const Elem* win = buf.data() + i * half;
            if (b == 1) {
                for (std::size_t j = 0; j < half; ++j) out[j] = F.add(out[j], win[j]);
            } else {
                for (std::size_t j = 0; j < half; ++j)
                    out[j] = F.add(out[j], F.scalar_mul(b, win[j]));
            }
        }
        for (std::size_t j = 0; j < half; ++j) {
            if (out[j] != 0) { nonzero = true; break; }
        }
        if (nonzero) return k;
    }
    return std::nullopt;
}

} // namespace

MinPeriodResult min_period(const PeriodicSequence& s, MinPeriodOptions options) {
    const OpCounters mark = op_counters();
    const Field& F = s.field();
    const std::size_t q = F.q();

    MinPeriodResult res;
    std::vector<Elem> buf = s.block();
    std::vector<Elem> next;
    std::size_t len = buf.size();

    for (;;) {
        if (all_zero(buf)) {
            res.trace.base_value = 0;
            break;
        }
        if (len == 1) {
            res.trace.base_value = 1;
            break;
        }
        if (options.use_shortcut && block_sum(F, buf) != 0) {
            res.trace.base_value = len;
            break;
        }
        const std::size_t half = len / q;
        auto kstar = leading_digit(F, buf, half, next);
        // buf is nonzero here, so a nonzero digit exists
        const std::size_t contribution = (q - 1 - *kstar) * half;
        res.trace.levels.push_back({len, *kstar, contribution});
        buf.assign(next.begin(), next.end());
        len = half;
    }

    res.value = res.trace.total();
    res.ops = op_counters_since(mark);
    return res;
}

MultiplicityResult multiplicity(const DensePoly& f) {
    if (f.is_zero())
        throw zero_polynomial("multiplicity of the zero polynomial");
    const OpCounters mark = op_counters();
    const Field& F = f.field();
    const std::size_t q = F.q();

    MultiplicityResult res;
    std::vector<Elem> buf(f.coeffs().begin(), f.coeffs().end());
    std::vector<Elem> next;

    for (;;) {
        // buf is nonzero and trailing-zero-free on entry
        const std::size_t deg = buf.size() - 1;
        if (deg == 0) {
            res.trace.base_value = 0;
            break;
        }
        std::size_t period = 1;
        while (period <= deg) period *= q; // smallest power of q > deg
        const std::size_t half = period / q;
        buf.resize(q * half, 0);
        auto kstar = leading_digit(F, buf, half, next);
        res.trace.levels.push_back({period, *kstar, *kstar * half});
        buf.assign(next.begin(), next.end());
        while (!buf.empty() && buf.back() == 0) buf.pop_back();
    }

    res.value = res.trace.total();
    res.ops = op_counters_since(mark);
    return res;
}

namespace {

std::size_t literal_rec(const Field& F, std::span<const Elem> block) {
    if (all_zero(block)) return 0;
    if (block_sum(F, block) != 0) return block.size();
    // a nonzero block of length 1 always has a nonzero sum
    const std::size_t q = F.q();
    const std::size_t half = block.size() / q;
    std::vector<Elem> sigma(block.first(half).begin(), block.first(half).end());
    for (std::size_t i = 1; i < q; ++i) {
        const Elem* win = block.data() + i * half;
        for (std::size_t j = 0; j < half; ++j) sigma[j] = F.add(sigma[j], win[j]);
    }
    if (all_zero(sigma)) {
        std::size_t best = 0;
        for (std::size_t i = 0; i + 1 < q; ++i)
            best = std::max(best, literal_rec(F, block.subspan(i * half, half)));
        return best;
    }
    return literal_rec(F, sigma) + (q - 1) * half;
}

} // namespace

std::size_t paper_literal_min_period(const PeriodicSequence& s) {
    return literal_rec(s.field(), s.block());
}

} // namespace gcq
