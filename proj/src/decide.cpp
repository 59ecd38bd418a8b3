#include "rotorder/decide.hpp"

#include <vector>

#include "rotorder/numtheory.hpp"
#include "rotorder/trigpoly.hpp"

namespace rotorder {

AlgebraicReal double_cos_half_gamma(const RationalAngle& phi) {
    return shift_by_rational(1, cos_of(phi));
}

PolyQ charpoly_shift_expansion(const PolyQ& monic) {
    if (!monic.is_monic()) throw std::invalid_argument("charpoly_shift_expansion: input must be monic");
    const long d = monic.degree();
    if (d < 3)
        throw std::invalid_argument("charpoly_shift_expansion: expansion assumes degree >= 3");

    std::vector<PolyQ> pw(static_cast<std::size_t>(d - 1));
    pw[0] = PolyQ::constant(1);
    PolyQ one_minus_x({mpq_class(1), mpq_class(-1)});
    for (std::size_t i = 1; i < pw.size(); ++i) pw[i] = pw[i - 1] * one_minus_x;

    PolyQ acc;
    for (long i = 0; i <= d - 3; ++i) {
        mpq_class c = monic[static_cast<std::size_t>(i)];
        if (((d + i) % 2) != 0) c = -c;
        if (c != 0) acc = acc + pw[static_cast<std::size_t>(i)].scaled(c);
    }
    const mpq_class& cd1 = monic[static_cast<std::size_t>(d - 1)];
    const mpq_class& cd2 = monic[static_cast<std::size_t>(d - 2)];
    PolyQ tail({cd2 - cd1 + 1, cd1 - 2, mpq_class(1)});
    return acc + pw[static_cast<std::size_t>(d - 2)] * tail;
}

namespace {

long double_cos_degree(unsigned n) {
    if (n <= 2) return 1;
    return totient(n).get_si() / 2;
}

// Ascending root index -> numerator k of the recovered angle 2k/N.
RationalAngle recovered_angle(unsigned n, long roots_below) {
    if (n == 1) return RationalAngle(0, 1);
    if (n == 2) return RationalAngle(1, 1);
    std::vector<unsigned> ks;
    for (unsigned k = 1; 2 * k <= n; ++k) {
        mpz_class g;
        mpz_class kz = k, nz = n;
        mpz_gcd(g.get_mpz_t(), kz.get_mpz_t(), nz.get_mpz_t());
        if (g == 1) ks.push_back(k);
    }
    // Roots 2cos(2πk/N) decrease as k grows, so ascending roots reverse k.
    unsigned k = ks.at(ks.size() - 1 - static_cast<std::size_t>(roots_below));
    return RationalAngle(2 * static_cast<long>(k), n);
}

}  // namespace

AngleVerdict double_cos_membership(const AlgebraicReal& a0, bool annihilator_is_minimal) {
    // Tight interval: makes the sign prune below decisive for every candidate
    // whose root gap exceeds the width (all of them, at these sizes).
    AlgebraicReal a = a0.refined(pow2(-80));
    const IntervalQ& iv = a.interval();
    if (iv.lo > 2 || iv.hi < -2)
        throw std::invalid_argument("double_cos_membership: value lies outside [-2, 2]");

    const long d = a.degree();
    const unsigned long n_cap = static_cast<unsigned long>(8 * d * d);
    for (unsigned long n = 1; n <= std::max<unsigned long>(n_cap, 2); ++n) {
        long deg_n = double_cos_degree(static_cast<unsigned>(n));
        if (annihilator_is_minimal ? (deg_n != d) : (deg_n > d)) continue;
        PolyZ cand = double_cos_minpoly(static_cast<unsigned>(n));

        // A simple candidate root inside the interval forces a sign change.
        int slo = cand.sign_at(iv.lo), shi = cand.sign_at(iv.hi);
        if (slo != 0 && shi != 0 && slo == shi) continue;

        PolyQ g = gcd_poly(a.annihilator().to_q(), cand.to_q());
        if (g.degree() < 1) continue;
        if (g != cand.to_q().monic())
            throw InternalError("irreducible candidate produced a proper gcd");

        SturmChain chain(cand);
        if (chain.count(iv.lo, iv.hi) != 1) continue;  // a is a different root
        long below = chain.count(mpq_class(-3), iv.lo);
        return AngleVerdict::rational_multiple(recovered_angle(static_cast<unsigned>(n), below));
    }
    return AngleVerdict::irrational_multiple(
        "no doubled-cosine minimal polynomial of degree <= " + std::to_string(d) + " matched");
}

PerpendicularDecision decide_perpendicular_product(const RationalAngle& phi) {
    AlgebraicReal a = double_cos_half_gamma(phi);

    // The minimal polynomial has integer coefficients iff the primitive
    // annihilator is monic.
    if (a.annihilator().leading() != 1) {
        PolyQ mon = a.annihilator().to_q().monic();
        long idx = 0;
        for (long i = mon.degree() - 1; i >= 0; --i) {
            if (mon[static_cast<std::size_t>(i)].get_den() != 1) {
                idx = i;
                break;
            }
        }
        AngleVerdict v = AngleVerdict::irrational_multiple("non-integer coefficient at x^" +
                                                           std::to_string(idx));
        return {phi, a, v, v};
    }

    AngleVerdict half = double_cos_membership(a, /*annihilator_is_minimal=*/true);
    if (!half.rational) return {phi, a, half, half};

    RationalAngle gamma = half.angle.doubled().mod_two_pi();
    if (gamma.is_zero_angle()) gamma = RationalAngle(2, 1);  // identity reported as 2π
    return {phi, a, half, AngleVerdict::rational_multiple(gamma)};
}

AngleVerdict decide_perpendicular_angle(const RationalAngle& phi) { return decide_perpendicular_product(phi).full; }

mpz_class rotation_order(const RationalAngle& gamma) {
    mpz_class two_m = 2 * gamma.den;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), gamma.num.get_mpz_t(), two_m.get_mpz_t());
    return two_m / g;
}

}  // namespace rotorder
