#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gcq/field.hpp"

namespace gcq {

/// Bit-packed GF(2) fast paths. A block of N bits is stored little-endian:
/// bit i of word i/64 is s_i. Both routines fold with word-wide compares and
/// XORs into a per-thread scratch buffer that is reused across calls (the
/// input span is never modified); levels narrower than a word run masked
/// inside a single word.

/// Packs a 0/1 element block.
std::vector<std::uint64_t> pack_bits(std::span<const Elem> block);

/// Minimal period of the N-bit block (N a power of two, bad_period
/// otherwise). Matches min_period over GF(2) bit for bit.
std::size_t min_period_binary(std::span<const std::uint64_t> words, std::size_t nbits);

/// Multiplicity of (x-1) in the polynomial whose coefficient i is bit i.
/// The window nbits only bounds the coefficients; the degree comes from the
/// highest set bit. Throws zero_polynomial when no bit is set.
std::size_t multiplicity_binary(std::span<const std::uint64_t> words, std::size_t nbits);

} // namespace gcq
