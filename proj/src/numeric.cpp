#include "rotorder/numeric.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cstdlib>

namespace rotorder {

namespace {

mpq_class to_mpq(const mpfr_t x) {
    mpq_class q;
    mpfr_get_q(q.get_mpq_t(), x);
    return q;
}

struct Mpfr {
    mpfr_t v;
    explicit Mpfr(unsigned bits) { mpfr_init2(v, bits); }
    ~Mpfr() { mpfr_clear(v); }
    Mpfr(const Mpfr&) = delete;
    Mpfr& operator=(const Mpfr&) = delete;
};

}  // namespace

unsigned default_precision_bits() {
    static const unsigned bits = [] {
        unsigned b = 128;
        if (const char* env = std::getenv("ROTORDER_PRECISION_BITS")) {
            char* end = nullptr;
            long v = std::strtol(env, &end, 10);
            if (end && *end == '\0' && v > 0) b = static_cast<unsigned>(v);
        }
        return std::clamp(b, 64u, 1u << 20);
    }();
    return bits;
}

IntervalQ cos_pi_enclosure(const mpq_class& t, unsigned bits) {
    Mpfr pi_lo(bits), pi_hi(bits), arg(bits), c(bits);
    mpfr_const_pi(pi_lo.v, MPFR_RNDD);
    mpfr_const_pi(pi_hi.v, MPFR_RNDU);

    // Directed products t*pi; sign of t picks which pi bound matters.
    const bool pos = t >= 0;
    mpfr_mul_q(arg.v, pos ? pi_lo.v : pi_hi.v, t.get_mpq_t(), MPFR_RNDD);
    mpq_class arg_lo = to_mpq(arg.v);
    mpfr_mul_q(arg.v, pos ? pi_hi.v : pi_lo.v, t.get_mpq_t(), MPFR_RNDU);
    mpq_class arg_hi = to_mpq(arg.v);

    mpq_class lo, hi;
    bool first = true;
    for (const mpq_class& a : {arg_lo, arg_hi}) {
        mpfr_set_q(arg.v, a.get_mpq_t(), MPFR_RNDN);  // a is representable at this precision
        mpfr_cos(c.v, arg.v, MPFR_RNDD);
        mpq_class clo = to_mpq(c.v);
        mpfr_cos(c.v, arg.v, MPFR_RNDU);
        mpq_class chi = to_mpq(c.v);
        if (first) {
            lo = clo;
            hi = chi;
            first = false;
        } else {
            lo = std::min(lo, clo);
            hi = std::max(hi, chi);
        }
    }
    return {lo, hi};
}

IntervalQ acos_over_pi_enclosure(const IntervalQ& x, unsigned bits) {
    mpq_class xlo = std::max(x.lo, mpq_class(-1));
    mpq_class xhi = std::min(x.hi, mpq_class(1));
    Mpfr pi_lo(bits), pi_hi(bits), arg(bits), a(bits), t(bits);
    mpfr_const_pi(pi_lo.v, MPFR_RNDD);
    mpfr_const_pi(pi_hi.v, MPFR_RNDU);

    // acos is decreasing; result range is [0, pi].
    mpfr_set_q(arg.v, xhi.get_mpq_t(), MPFR_RNDD);
    mpfr_acos(a.v, arg.v, MPFR_RNDD);
    mpfr_div(t.v, a.v, pi_hi.v, MPFR_RNDD);
    mpq_class lo = to_mpq(t.v);

    mpfr_set_q(arg.v, xlo.get_mpq_t(), MPFR_RNDU);
    mpfr_acos(a.v, arg.v, MPFR_RNDU);
    mpfr_div(t.v, a.v, pi_lo.v, MPFR_RNDU);
    mpq_class hi = to_mpq(t.v);

    return {std::max(lo, mpq_class(0)), std::min(hi, mpq_class(1))};
}

IntervalQ sqrt_enclosure(const mpq_class& x, unsigned bits) {
    if (x < 0) throw std::invalid_argument("sqrt_enclosure of negative rational");
    Mpfr arg(bits), r(bits);
    mpfr_set_q(arg.v, x.get_mpq_t(), MPFR_RNDD);
    mpfr_sqrt(r.v, arg.v, MPFR_RNDD);
    mpq_class lo = to_mpq(r.v);
    mpfr_set_q(arg.v, x.get_mpq_t(), MPFR_RNDU);
    mpfr_sqrt(r.v, arg.v, MPFR_RNDU);
    mpq_class hi = to_mpq(r.v);
    if (lo < 0) lo = 0;
    return {lo, hi};
}

std::optional<mpq_class> rational_probe(const IntervalQ& enclosure, const mpz_class& den_cap,
                                        const mpq_class& tolerance) {
    mpq_class t = enclosure.mid();
    // Continued-fraction convergents of t, stopping at the denominator cap.
    mpz_class p0 = 1, q0 = 0;  // h_{-1}/k_{-1}
    mpz_class p1, q1;          // current convergent
    mpz_class num = t.get_num(), den = t.get_den();
    mpz_class a, prev_p = 0, prev_q = 1;
    bool have = false;
    mpq_class best;
    while (den != 0) {
        mpz_class r;
        mpz_fdiv_qr(a.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        p1 = a * p0 + prev_p;
        q1 = a * q0 + prev_q;
        if (q1 > den_cap) break;
        prev_p = p0;
        prev_q = q0;
        p0 = p1;
        q0 = q1;
        mpq_class conv(p0, q0);
        conv.canonicalize();
        best = conv;
        have = true;
        num = den;
        den = r;
        if (best == t) break;
    }
    if (!have) return std::nullopt;
    mpq_class err = abs(best - t) ;
    mpq_class slack = enclosure.width() + tolerance;
    if (err <= slack) return best;
    return std::nullopt;
}

}  // namespace rotorder
