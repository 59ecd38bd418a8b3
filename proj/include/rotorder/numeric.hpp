#pragma once

#include <gmpxx.h>

#include <optional>

#include "rotorder/poly.hpp"

namespace rotorder {

/// Working precision for numeric enclosures, from ROTORDER_PRECISION_BITS
/// (default 128, clamped to [64, 1 << 20]). Only a performance knob: every
/// enclosure is validated exactly and retried wider on failure.
unsigned default_precision_bits();

/// Exact rational enclosure of cos(t·π), via directed rounding at the given
/// precision. Requires that t·π stays away from multiples of π by more than
/// the enclosure width (true for every reduced non-degenerate angle at the
/// precisions used here).
IntervalQ cos_pi_enclosure(const mpq_class& t, unsigned bits);

/// Exact rational enclosure of acos(x)/π for x in [-1, 1] given an exact
/// rational enclosure of x.
IntervalQ acos_over_pi_enclosure(const IntervalQ& x, unsigned bits);

/// Exact rational enclosure of sqrt(x), x >= 0 rational.
IntervalQ sqrt_enclosure(const mpq_class& x, unsigned bits);

/// Continued-fraction rationality probe: the best convergent p/q of the
/// midpoint with q <= den_cap, accepted only when it lies within tolerance.
/// Returns nothing when no small-denominator rational approximates that well.
std::optional<mpq_class> rational_probe(const IntervalQ& enclosure, const mpz_class& den_cap,
                                        const mpq_class& tolerance);

}  // namespace rotorder
