#pragma once

#include <gmpxx.h>

#include <optional>

#include "rotorder/angle.hpp"
#include "rotorder/matrix.hpp"
#include "rotorder/poly.hpp"

namespace rotorder {

/// A real algebraic number: a primitive squarefree integer annihilator with
/// positive leading coefficient, plus a rational interval containing exactly
/// one of its real roots (never at an endpoint). The annihilator need not be
/// minimal; callers that need minimality resolve it through the membership
/// test in the decision layer.
class AlgebraicReal {
public:
    /// Wraps an already-normalized annihilator and isolating interval.
    /// Precondition (checked in debug builds): ann primitive squarefree with
    /// positive leading coefficient; the interval isolates exactly one root
    /// and its endpoints are not roots.
    AlgebraicReal(PolyZ ann, IntervalQ iv);

    static AlgebraicReal rational(const mpq_class& r);

    /// Normalizes f to its squarefree primitive part and validates that the
    /// interval isolates exactly one root; throws std::invalid_argument
    /// otherwise.
    static AlgebraicReal from_isolated(const PolyQ& f, const IntervalQ& iv);

    const PolyZ& annihilator() const { return ann_; }
    const IntervalQ& interval() const { return iv_; }
    long degree() const { return ann_.degree(); }

    /// The value when the annihilator is linear.
    std::optional<mpq_class> rational_value() const;

    /// Same number, interval width at most w.
    AlgebraicReal refined(const mpq_class& w) const;
    /// Double approximation (midpoint at width 2^-64).
    double approx() const;
    /// Rational midpoint at the given width.
    mpq_class approx_rational(const mpq_class& w) const;

private:
    PolyZ ann_;
    IntervalQ iv_;
};

// Exact predicates.
bool is_zero(const AlgebraicReal& a);
int sign(const AlgebraicReal& a);
bool equals_rational(const AlgebraicReal& a, const mpq_class& r);
bool alg_equal(const AlgebraicReal& a, const AlgebraicReal& b);

// Arithmetic. Sums and products go through Kronecker combinations of
// companion matrices; rational operands take the degree-preserving
// shift/scale substitutions instead.
AlgebraicReal alg_neg(const AlgebraicReal& a);
AlgebraicReal alg_add(const AlgebraicReal& a, const AlgebraicReal& b);
AlgebraicReal alg_sub(const AlgebraicReal& a, const AlgebraicReal& b);
AlgebraicReal alg_mul(const AlgebraicReal& a, const AlgebraicReal& b);
/// Degree-preserving square via the even/odd coefficient split of the
/// annihilator.
AlgebraicReal alg_square(const AlgebraicReal& a);
AlgebraicReal shift_by_rational(const mpq_class& q, const AlgebraicReal& a);
AlgebraicReal scale_by_rational(const mpq_class& q, const AlgebraicReal& a);

/// Positive square root of a nonnegative rational.
AlgebraicReal sqrt_of_rational(const mpq_class& r);

/// cos of a rational multiple of π: the matching root of the cosine
/// minimal-polynomial family, pinned by a validated numeric enclosure.
AlgebraicReal cos_of(const RationalAngle& angle);
/// sin θ = cos(π/2 − θ).
AlgebraicReal sin_of(const RationalAngle& angle);

/// cos of the composed rotation angle for half-angles h1, h2 and axis cosine
/// ρ = dot / sqrt(norm2_product): 2(cos h1 cos h2 − sin h1 sin h2 ρ)² − 1.
/// Evaluated inside the real cyclotomic field Q(cos(2π/M)), M = lcm(4, 2q1,
/// 2q2), adjoined with ρ when irrational; every cosine is a Chebyshev
/// polynomial in the generator, so the annihilator degree never exceeds
/// totient(M) — no Kronecker blow-up across the nested products.
AlgebraicReal compose_rotation_cosine(const RationalAngle& h1, const RationalAngle& h2,
                                      const mpz_class& axis_dot,
                                      const mpz_class& axis_norm2_product);

/// Family index m such that cos((p/q)π) is a root of psi(m):
/// m = 2q / gcd(p mod 2q, 2q), with m = 1 when the reduced numerator is 0.
mpz_class psi_index(const RationalAngle& angle);

}  // namespace rotorder
