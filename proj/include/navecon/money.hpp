#pragma once

#include <string>

// Currency values are plain doubles everywhere in the library; rounding
// happens only when a number is turned into text for display. CSV output uses
// the shortest representation that parses back to the identical double.

namespace navecon {

// Round to `decimals` places with ties going to the even neighbor.
double round_half_even(double value, int decimals);

// Fixed-decimal dollar formatting with thousands separators: 11589 -> "11,589"
// (decimals = 0), 31.3967 -> "31.40" (decimals = 2).
std::string format_usd(double value, int decimals);

// Display rule for generic artifacts: two decimals at or above one dollar,
// three below.
std::string format_usd_auto(double value);

// Shortest decimal string that round-trips to exactly the same double.
std::string format_shortest(double value);

// Strict double parse of a whole token; throws ValidationError on trailing
// garbage or empty input.
double parse_double_strict(const std::string& text);

}  // namespace navecon
