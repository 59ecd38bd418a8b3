#pragma once

#include <string>

#include "rotorder/algebraic.hpp"
#include "rotorder/angle.hpp"
#include "rotorder/poly.hpp"

namespace rotorder {

/// Outcome of a rationality decision for an angle. When rational, `angle`
/// carries the recovered multiple of π; otherwise `witness` names the failed
/// criterion (the non-integer coefficient, or the exhausted candidate list).
struct AngleVerdict {
    bool rational = false;
    RationalAngle angle;
    std::string witness;

    static AngleVerdict rational_multiple(RationalAngle a) { return {true, std::move(a), {}}; }
    static AngleVerdict irrational_multiple(std::string w) { return {false, {}, std::move(w)}; }
};

/// 2cos(γ/2) = 1 + cos φ for the product of two rotations by φ about
/// perpendicular axes. The annihilator is minimal: the rational shift of a
/// minimal polynomial stays minimal.
AlgebraicReal double_cos_half_gamma(const RationalAngle& phi);

/// Coefficients of det(M_c + I - xI) for the companion matrix of a monic
/// polynomial of degree d >= 3, via the binomial expansion in (1-x). Equals
/// (-1)^d times the characteristic polynomial of M_c + I; kept as an
/// independent cross-check of the determinant route.
PolyQ charpoly_shift_expansion(const PolyQ& monic);

/// Decides whether a = 2cos(θ) for some rational θ = (k/m)π, and recovers the
/// reduced angle in [0, π] if so. Candidates are the minimal polynomials of
/// doubled cosines with degree bounded by deg(annihilator), enumerated via
/// totient(x) >= sqrt(x/2); each is confirmed by exact gcd and a Sturm count
/// inside the isolating interval. Set `annihilator_is_minimal` to restrict
/// candidates to the exact degree. Rejects values outside [-2, 2].
AngleVerdict double_cos_membership(const AlgebraicReal& a, bool annihilator_is_minimal = false);

/// Full decision for the perpendicular equal-angle product: is γ a rational
/// multiple of π?
struct PerpendicularDecision {
    RationalAngle phi;
    AlgebraicReal two_cos_half;  ///< 2cos(γ/2) with its minimal annihilator
    AngleVerdict half;           ///< recovered γ/2 in [0, π]
    AngleVerdict full;           ///< recovered γ in (0, 2π] (identity reported as 2π)
};

PerpendicularDecision decide_perpendicular_product(const RationalAngle& phi);
AngleVerdict decide_perpendicular_angle(const RationalAngle& phi);

/// Smallest t >= 1 with t·γ ≡ 0 (mod 2π), for γ = (k/m)π reduced.
mpz_class rotation_order(const RationalAngle& gamma);

}  // namespace rotorder
