#pragma once

#include <gmpxx.h>

#include "rotorder/poly.hpp"

namespace rotorder {

/// Chebyshev polynomial of the first kind, T_k(cos t) = cos(k t).
/// Integer coefficients; leading coefficient 2^(k-1) for k >= 1.
PolyZ chebyshev_T(unsigned k);

/// Minimal polynomial of cos(2π/n): monic, degree 1 for n in {1,2} and
/// totient(n)/2 otherwise. Built by the divide-down recurrence: the Chebyshev
/// difference identity divided exactly by every proper-divisor family member.
PolyQ psi(unsigned n);

/// Same polynomial via the Moebius-inverted product formulas (odd n, the
/// 2^m·odd cases for m = 1 and m > 1). Cross-check path only; n >= 3.
PolyQ psi_via_moebius(unsigned n);

/// True iff some coefficient of psi(n) is not an integer (exactly the
/// n outside {1, 2, 4}).
bool has_nonint_coefficient(unsigned n);

/// Power-of-two part of the free term of psi(n), predicted by the divisor
/// case analysis (odd prime / odd composite / even), as an exact rational.
/// For odd n this equals |psi(n)(0)| exactly; for even n the remaining factor
/// is an odd rational. Rejects n in {1, 2, 4}.
mpq_class psi_free_term_two_power(unsigned n);

/// Minimal polynomial of 2cos(π/n): monic with integer coefficients,
/// equal to 2^deg · psi(2n)(x/2).
PolyZ eta(unsigned n);

/// Minimal polynomial of 2cos(2π/n) for any n >= 1: monic, integer
/// coefficients; eta(n) == double_cos_minpoly(2n). The odd-n members cover
/// the doubled cosines that the eta family misses (even-numerator angles).
PolyZ double_cos_minpoly(unsigned n);

/// Cyclotomic polynomial, monic convention x^n - 1 = prod over divisors.
PolyZ cyclotomic(unsigned n);

}  // namespace rotorder
