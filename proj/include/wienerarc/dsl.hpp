#pragma once

#include <string>
#include <string_view>

#include "wienerarc/measure.hpp"

namespace wienerarc {

// Parses the measure-description language:
//
//   spec  := "lebesgue" | "cantor" | "dirac" "(" num ")"
//          | "atoms" "(" num ":" num ("," num ":" num)* ")"
//          | "density" "(" num ("," num)* ")"
//          | "mix" "(" num ":" spec ("," num ":" spec)* ")"
//          | "conv" "(" spec "," spec ")" | "conj" "(" spec ")"
//   num   := decimal literal | integer "/" positive-integer
//
// Whitespace-insensitive, ASCII only, input at most 64 KiB, nesting at most
// 32 levels. Throws ParseError with the byte offset of the offending token;
// the returned spec satisfies every MeasureSpec invariant.
MeasureSpec parse_measure(std::string_view text);

// Canonical text for a spec; parse(unparse(s)) is structurally identical to
// s (numbers are printed with 17 significant digits).
std::string unparse_measure(const MeasureSpec& spec);

// Parses a standalone number in the DSL's `num` syntax. Fractions are
// evaluated in extended precision and rounded once. Used for CLI number
// flags, so "--x 1/3" works.
double parse_number(std::string_view text);

}  // namespace wienerarc
