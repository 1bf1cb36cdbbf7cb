#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "gcq/fold.hpp"
#include "gcq/poly.hpp"

namespace gcq {

enum class Command { mp, mult, verify, bench, field_info };

/// Everything the front-end collects from argv. `run` below is the whole
/// program; the argv-to-RunConfig mapping lives in the executable so this
/// layer stays trivially testable.
struct RunConfig {
    Command command = Command::mp;
    std::uint32_t q = 0;
    std::optional<std::string> inline_input;  ///< --in "1,2,0"
    std::optional<std::string> input_path;    ///< --file block.txt
    bool json = false;
    bool paper_literal = false;  ///< mp only: run the published recurrence verbatim
    bool no_shortcut = false;    ///< mp only: disable the block-sum early exit
    std::uint64_t seed = 42;
    std::size_t count = 1000;    ///< verify (random mode / planted cases) and bench repeats
    std::size_t n = 1;           ///< verify/bench: period exponent, N = q^n
    std::string mode = "exhaustive";       ///< verify: exhaustive | random
    std::string algorithm = "corrected";   ///< verify: corrected | paper-literal
};

/// Comma/whitespace-separated element encodings, or (q = 2 only) "0x…" hex
/// unpacked in little-endian bit order: bit i of the value is s_i.
/// Throws bad_element, bad_period, empty_input.
PeriodicSequence parse_sequence_input(const std::string& text, const Field& field);

/// Same grammar, read as coefficients c_0, c_1, … with no length constraint.
DensePoly parse_poly_input(const std::string& text, const Field& field);

/// Executes the configured command. `in` backs stdin-sourced input; results
/// go to `out`, diagnostics and timings to `err` (timings are kept off `out`
/// so identical inputs and seeds give byte-identical stdout).
/// Returns 0 on success, 1 on usage/input errors, 2 when verification found
/// mismatches.
int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace gcq
