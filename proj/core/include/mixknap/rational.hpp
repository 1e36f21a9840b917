#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace mixknap {

/// Exact rational scalar. All certification paths use this type; floating
/// views are derived on demand and never fed back into exact code.
using Rat = mpq_class;

using RatVector = std::vector<Rat>;

/// Parses "num/den", integers ("-3"), and decimal/scientific literals
/// ("0.25", "2.5e-3") exactly. Throws mixknap::Error on malformed input.
Rat parse_rational(std::string_view text);

/// "num/den", or just "num" when the denominator is 1.
std::string to_string(const Rat& value);

/// floor(value) as an exact integer rational.
Rat floor_rat(const Rat& value);

/// True iff value has denominator 1.
bool is_integral(const Rat& value);

/// value must be integral and fit in a long.
long to_long(const Rat& value);

double to_double(const Rat& value);

}  // namespace mixknap
