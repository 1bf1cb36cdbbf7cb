#include "gcq/binary.hpp"

#include <algorithm>
#include <bit>

#include "gcq/errors.hpp"

namespace gcq {

namespace {

constexpr std::size_t kWordBits = 64;

std::uint64_t low_mask(std::size_t bits) {
    return bits >= kWordBits ? ~0ULL : ((1ULL << bits) - 1);
}

/// Fold scratch, reused across calls on the same thread: sweeps and benches
/// call these routines at the same handful of sizes over and over, and a
/// fresh multi-megabyte vector per call costs more in page faults than the
/// fold itself. Grows monotonically; nothing here is reentrant, so one
/// buffer per thread is safe.
std::vector<std::uint64_t>& scratch(std::size_t words_needed) {
    thread_local std::vector<std::uint64_t> buf;
    if (buf.size() < words_needed) buf.resize(words_needed, 0);
    return buf;
}

/// Word i of the block, tolerating a short span (missing words read as zero)
/// and masking stray bits beyond nbits in the final word.
std::uint64_t padded_word(std::span<const std::uint64_t> words, std::size_t i,
                          std::size_t nbits) {
    std::uint64_t w = i < words.size() ? words[i] : 0;
    if (nbits < (i + 1) * kWordBits)
        w &= nbits <= i * kWordBits ? 0 : low_mask(nbits - i * kWordBits);
    return w;
}

/// Highest set bit among the first nwords of buf, or -1 when all are zero.
std::ptrdiff_t top_bit(const std::vector<std::uint64_t>& buf, std::size_t nwords) {
    for (std::size_t w = nwords; w-- > 0;) {
        if (buf[w] != 0)
            return static_cast<std::ptrdiff_t>(w * kWordBits +
                                               (kWordBits - 1 - std::countl_zero(buf[w])));
    }
    return -1;
}

/// One folding level on 2*w words: XOR the halves into dst while testing
/// equality in the same pass (one read of each input word instead of two).
/// Returns true when the halves differ. When they are equal the XOR just
/// wrote zeros, so the digit — the half itself — is recovered from the high
/// half, which is never overwritten; this also makes src == dst safe.
bool fold_level(const std::uint64_t* src, std::uint64_t* dst, std::size_t w) {
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < w; ++j) {
        const std::uint64_t x = src[j] ^ src[w + j];
        acc |= x;
        dst[j] = x;
    }
    if (acc != 0) return true;
    std::copy(src + w, src + 2 * w, dst);
    return false;
}

/// The in-word tail of either recursion: fold a block of len <= 64 bits held
/// in a single word, returning the contributions it adds.
std::size_t fold_in_word(std::uint64_t w, std::size_t len, bool multiplicity_mode) {
    std::size_t acc = 0;
    for (std::size_t half = len / 2; half >= 1; half /= 2) {
        const std::uint64_t mask = low_mask(half);
        const std::uint64_t lo = w & mask;
        const std::uint64_t hi = (w >> half) & mask;
        if (lo == hi) {
            w = lo;
            if (multiplicity_mode) acc += half;
        } else {
            w = lo ^ hi;
            if (!multiplicity_mode) acc += half;
        }
    }
    if (!multiplicity_mode) acc += w & 1;
    return acc;
}

} // namespace

std::vector<std::uint64_t> pack_bits(std::span<const Elem> block) {
    std::vector<std::uint64_t> words((block.size() + kWordBits - 1) / kWordBits, 0);
    for (std::size_t i = 0; i < block.size(); ++i) {
        if (block[i] & 1) words[i / kWordBits] |= 1ULL << (i % kWordBits);
    }
    return words;
}

std::size_t min_period_binary(std::span<const std::uint64_t> words, std::size_t nbits) {
    if (nbits == 0 || (nbits & (nbits - 1)) != 0)
        throw bad_period("bit length " + std::to_string(nbits) + " is not a power of 2");

    if (nbits <= kWordBits)
        return fold_in_word(padded_word(words, 0, nbits), nbits, false);

    // Two or more words: fold the first level straight from the input so the
    // scratch never exceeds half the block.
    const std::size_t nwords = nbits / kWordBits;  // nbits is a multiple of 64 here
    std::size_t mp = 0;
    std::size_t half = nbits / 2;
    std::size_t hw = half / kWordBits;
    std::vector<std::uint64_t>& buf = scratch(hw);
    if (words.size() >= nwords) {
        if (fold_level(words.data(), buf.data(), hw)) mp += half;
    } else {
        bool equal = true;
        for (std::size_t j = 0; j < hw && equal; ++j)
            equal = padded_word(words, j, nbits) == padded_word(words, hw + j, nbits);
        for (std::size_t j = 0; j < hw; ++j) {
            const std::uint64_t lo = padded_word(words, j, nbits);
            buf[j] = equal ? lo : lo ^ padded_word(words, hw + j, nbits);
        }
        if (!equal) mp += half;
    }

    for (std::size_t len = half; len > kWordBits; len /= 2) {
        const std::size_t h = len / 2;
        if (fold_level(buf.data(), buf.data(), h / kWordBits)) mp += h;
    }
    return mp + fold_in_word(buf[0], kWordBits, false);
}

std::size_t multiplicity_binary(std::span<const std::uint64_t> words, std::size_t nbits) {
    const std::size_t need = (nbits + kWordBits - 1) / kWordBits;
    std::vector<std::uint64_t>& buf = scratch(std::max<std::size_t>(need, 1));
    for (std::size_t i = 0; i < need; ++i) buf[i] = padded_word(words, i, nbits);

    std::ptrdiff_t deg = top_bit(buf, need);
    if (deg < 0) throw zero_polynomial("multiplicity of the zero polynomial");

    // The first folding period can reach past the input window (smallest
    // power of two above the degree); make sure that region exists and is
    // zero before the word-level compare looks at it.
    {
        std::size_t period = 1;
        while (period <= static_cast<std::size_t>(deg)) period *= 2;
        const std::size_t pw = (period + kWordBits - 1) / kWordBits;
        if (pw > need) {
            scratch(pw);  // same vector object; the reference stays valid
            std::fill(buf.begin() + static_cast<std::ptrdiff_t>(need),
                      buf.begin() + static_cast<std::ptrdiff_t>(pw), 0);
        }
    }

    std::size_t pi = 0;
    while (deg > 0) {
        std::size_t period = 1;
        while (period <= static_cast<std::size_t>(deg)) period *= 2;
        const std::size_t half = period / 2;
        if (half >= kWordBits) {
            const std::size_t hw = half / kWordBits;
            if (!fold_level(buf.data(), buf.data(), hw))
                pi += half;  // plain fold vanished: the next digit is the chunk itself
            deg = top_bit(buf, hw);
        } else {
            const std::uint64_t mask = low_mask(half);
            const std::uint64_t lo = buf[0] & mask;
            const std::uint64_t hi = (buf[0] >> half) & mask;
            if (lo == hi) {
                pi += half;
                buf[0] = lo;
            } else {
                buf[0] = lo ^ hi;
            }
            deg = buf[0] == 0 ? -1 : top_bit(buf, 1);
        }
    }
    return pi;
}

} // namespace gcq
