#include "rotorder/algebraic.hpp"

#include <cassert>
#include <functional>

#include "rotorder/numeric.hpp"
#include "rotorder/trigpoly.hpp"

namespace rotorder {

namespace {

// Isolation widths: start at 2^-64, double the precision target per retry,
// give up at 2^-1024.
AlgebraicReal isolate(const PolyZ& f, const std::function<IntervalQ(const mpq_class&)>& enclose) {
    SturmChain chain(f);
    for (long e = 64; e <= 1024; e *= 2) {
        IntervalQ iv = enclose(pow2(-e));
        if (f.sign_at(iv.lo) == 0) iv.lo -= chain.point_gap(iv.lo) / 2;
        if (f.sign_at(iv.hi) == 0) iv.hi += chain.point_gap(iv.hi) / 2;
        if (chain.count(iv.lo, iv.hi) == 1) return AlgebraicReal(f, std::move(iv));
    }
    throw IsolationFailure("no isolating interval within the 2^-1024 width cap");
}

PolyQ monic_of(const PolyZ& p) { return p.to_q().monic(); }

}  // namespace

AlgebraicReal::AlgebraicReal(PolyZ ann, IntervalQ iv) : ann_(std::move(ann)), iv_(std::move(iv)) {
#ifndef NDEBUG
    assert(ann_.degree() >= 1);
    assert(ann_.leading() > 0);
    assert(ann_.sign_at(iv_.lo) != 0 && ann_.sign_at(iv_.hi) != 0);
    assert(SturmChain(ann_).count(iv_.lo, iv_.hi) == 1);
#endif
}

AlgebraicReal AlgebraicReal::rational(const mpq_class& r) {
    PolyZ ann({mpz_class(-r.get_num()), mpz_class(r.get_den())});
    return AlgebraicReal(std::move(ann), {r - mpq_class(1, 2), r + mpq_class(1, 2)});
}

AlgebraicReal AlgebraicReal::from_isolated(const PolyQ& f, const IntervalQ& iv) {
    PolyZ ann = squarefree_primitive(f);
    if (ann.sign_at(iv.lo) == 0 || ann.sign_at(iv.hi) == 0)
        throw std::invalid_argument("from_isolated: interval endpoint is a root");
    if (SturmChain(ann).count(iv.lo, iv.hi) != 1)
        throw std::invalid_argument("from_isolated: interval does not isolate one root");
    return AlgebraicReal(std::move(ann), iv);
}

std::optional<mpq_class> AlgebraicReal::rational_value() const {
    if (ann_.degree() != 1) return std::nullopt;
    mpq_class v(-ann_[0], ann_[1]);
    v.canonicalize();
    return v;
}

AlgebraicReal AlgebraicReal::refined(const mpq_class& w) const {
    if (iv_.width() <= w) return *this;
    return AlgebraicReal(ann_, refine(ann_, iv_, w));
}

double AlgebraicReal::approx() const { return approx_rational(pow2(-64)).get_d(); }

mpq_class AlgebraicReal::approx_rational(const mpq_class& w) const {
    return refined(w).interval().mid();
}

bool is_zero(const AlgebraicReal& a) {
    return a.interval().contains(0) && a.annihilator().sign_at(0) == 0;
}

bool equals_rational(const AlgebraicReal& a, const mpq_class& r) {
    return a.interval().contains(r) && a.annihilator().sign_at(r) == 0;
}

int sign(const AlgebraicReal& a) {
    if (is_zero(a)) return 0;
    AlgebraicReal cur = a;
    while (true) {
        if (cur.interval().lo > 0) return 1;
        if (cur.interval().hi < 0) return -1;
        cur = cur.refined(cur.interval().width() / 4);
    }
}

bool alg_equal(const AlgebraicReal& a, const AlgebraicReal& b) {
    // Equal values force a common annihilator root inside both isolating
    // intervals; a gcd plus one Sturm count decides exactly.
    mpq_class lo = std::max(a.interval().lo, b.interval().lo);
    mpq_class hi = std::min(a.interval().hi, b.interval().hi);
    if (lo > hi) return false;
    PolyQ g = gcd_poly(a.annihilator().to_q(), b.annihilator().to_q());
    if (g.degree() < 1) return false;
    // Intersection endpoints are endpoints of one input interval, hence not
    // roots of its annihilator and not roots of the common divisor.
    return SturmChain(g).count(lo, hi) >= 1;
}

AlgebraicReal alg_neg(const AlgebraicReal& a) {
    PolyZ ann = content_primitive(a.annihilator().to_q().negated_arg()).primitive;
    return AlgebraicReal(std::move(ann), {-a.interval().hi, -a.interval().lo});
}

AlgebraicReal shift_by_rational(const mpq_class& q, const AlgebraicReal& a) {
    if (q == 0) return a;
    PolyZ ann = content_primitive(a.annihilator().to_q().shifted_arg(-q)).primitive;
    return AlgebraicReal(std::move(ann), {a.interval().lo + q, a.interval().hi + q});
}

AlgebraicReal scale_by_rational(const mpq_class& q, const AlgebraicReal& a) {
    if (q == 0) throw std::invalid_argument("scale_by_rational: factor must be nonzero");
    PolyZ ann = content_primitive(a.annihilator().to_q().scaled_arg(1 / q)).primitive;
    mpq_class x = q * a.interval().lo, y = q * a.interval().hi;
    if (q < 0) std::swap(x, y);
    return AlgebraicReal(std::move(ann), {std::move(x), std::move(y)});
}

AlgebraicReal alg_add(const AlgebraicReal& a, const AlgebraicReal& b) {
    if (auto r = a.rational_value()) return shift_by_rational(*r, b);
    if (auto r = b.rational_value()) return shift_by_rational(*r, a);
    PolyQ cp = charpoly(kron_sum(companion(monic_of(a.annihilator())),
                                 companion(monic_of(b.annihilator()))));
    PolyZ f = squarefree_primitive(cp);
    return isolate(f, [&](const mpq_class& w) {
        AlgebraicReal ra = a.refined(w), rb = b.refined(w);
        return IntervalQ{ra.interval().lo + rb.interval().lo, ra.interval().hi + rb.interval().hi};
    });
}

AlgebraicReal alg_sub(const AlgebraicReal& a, const AlgebraicReal& b) {
    return alg_add(a, alg_neg(b));
}

AlgebraicReal alg_mul(const AlgebraicReal& a, const AlgebraicReal& b) {
    if (auto r = a.rational_value())
        return (*r == 0) ? AlgebraicReal::rational(0) : scale_by_rational(*r, b);
    if (auto r = b.rational_value())
        return (*r == 0) ? AlgebraicReal::rational(0) : scale_by_rational(*r, a);
    PolyQ cp = charpoly(kron_prod(companion(monic_of(a.annihilator())),
                                  companion(monic_of(b.annihilator()))));
    PolyZ f = squarefree_primitive(cp);
    return isolate(f, [&](const mpq_class& w) {
        AlgebraicReal ra = a.refined(w), rb = b.refined(w);
        const mpq_class &la = ra.interval().lo, &ha = ra.interval().hi;
        const mpq_class &lb = rb.interval().lo, &hb = rb.interval().hi;
        mpq_class lo = la * lb, hi = lo;
        for (const mpq_class& c : {mpq_class(la * hb), mpq_class(ha * lb), mpq_class(ha * hb)}) {
            if (c < lo) lo = c;
            if (c > hi) hi = c;
        }
        return IntervalQ{std::move(lo), std::move(hi)};
    });
}

AlgebraicReal alg_square(const AlgebraicReal& a) {
    if (auto r = a.rational_value()) return AlgebraicReal::rational((*r) * (*r));
    // p(y)p(-y) = q(y^2) with q = pe^2 - x·po^2 from the even/odd split.
    const PolyZ& p = a.annihilator();
    std::vector<mpz_class> ev, od;
    for (long i = 0; i <= p.degree(); ++i) {
        if (i % 2 == 0)
            ev.push_back(p[static_cast<std::size_t>(i)]);
        else
            od.push_back(p[static_cast<std::size_t>(i)]);
    }
    PolyZ pe(std::move(ev)), po(std::move(od));
    PolyZ q = pe * pe - PolyZ({mpz_class(0), mpz_class(1)}) * po * po;
    PolyZ f = squarefree_primitive(q.to_q());
    return isolate(f, [&](const mpq_class& w) {
        AlgebraicReal ra = a.refined(w);
        const mpq_class &lo = ra.interval().lo, &hi = ra.interval().hi;
        mpq_class l2 = lo * lo, h2 = hi * hi;
        if (lo >= 0) return IntervalQ{std::move(l2), std::move(h2)};
        if (hi <= 0) return IntervalQ{std::move(h2), std::move(l2)};
        return IntervalQ{mpq_class(0), std::max(l2, h2)};
    });
}

AlgebraicReal sqrt_of_rational(const mpq_class& r) {
    if (r < 0) throw std::invalid_argument("sqrt_of_rational of a negative rational");
    if (r == 0) return AlgebraicReal::rational(0);
    mpz_class ns, ds;
    if (mpz_root(ns.get_mpz_t(), r.get_num().get_mpz_t(), 2) &&
        mpz_root(ds.get_mpz_t(), r.get_den().get_mpz_t(), 2)) {
        mpq_class v(ns, ds);
        v.canonicalize();
        return AlgebraicReal::rational(v);
    }
    PolyQ f({-r, mpq_class(0), mpq_class(1)});  // x^2 - r
    PolyZ prim = content_primitive(f).primitive;
    SturmChain chain(prim);
    for (unsigned bits = default_precision_bits();; bits *= 2) {
        IntervalQ iv = sqrt_enclosure(r, bits);
        if (prim.sign_at(iv.lo) == 0) iv.lo -= chain.point_gap(iv.lo) / 2;
        if (prim.sign_at(iv.hi) == 0) iv.hi += chain.point_gap(iv.hi) / 2;
        if (iv.lo > 0 && chain.count(iv.lo, iv.hi) == 1)
            return AlgebraicReal(prim, std::move(iv));
        if (bits > (1u << 16)) throw IsolationFailure("sqrt enclosure failed to isolate");
    }
}

mpz_class psi_index(const RationalAngle& angle) {
    mpz_class two_q = 2 * angle.den;
    mpz_class r = angle.num % two_q;
    if (r < 0) r += two_q;
    if (r == 0) return 1;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), r.get_mpz_t(), two_q.get_mpz_t());
    return two_q / g;
}

AlgebraicReal cos_of(const RationalAngle& angle) {
    mpz_class mz = psi_index(angle);
    if (mz > 1000000000)
        throw std::invalid_argument("cos_of: angle denominator too large");
    unsigned m = static_cast<unsigned>(mz.get_ui());
    PolyQ pm = psi(m);
    if (pm.degree() == 1) return AlgebraicReal::rational(-pm[0]);

    // Angle in units of π, folded into [0, 2).
    mpq_class t = angle.mod_two_pi().over_pi();
    PolyZ f = content_primitive(pm).primitive;
    SturmChain chain(f);
    for (unsigned bits = std::max(default_precision_bits(), 96u);; bits *= 2) {
        IntervalQ iv = cos_pi_enclosure(t, bits);
        if (f.sign_at(iv.lo) == 0) iv.lo -= chain.point_gap(iv.lo) / 2;
        if (f.sign_at(iv.hi) == 0) iv.hi += chain.point_gap(iv.hi) / 2;
        if (chain.count(iv.lo, iv.hi) == 1) return AlgebraicReal(f, std::move(iv));
        if (bits > (1u << 16))
            throw IsolationFailure("cosine enclosure failed to isolate a root of psi");
    }
}

AlgebraicReal sin_of(const RationalAngle& angle) {
    return cos_of(RationalAngle(angle.den - 2 * angle.num, 2 * angle.den));
}

// ---------------------------------------------------------------------------
// Composed rotation cosine inside Q(cos(2π/M))[√u]

namespace {

// Interval arithmetic for the validated enclosure (tightness not required).
IntervalQ iv_mul(const IntervalQ& x, const IntervalQ& y) {
    mpq_class a = x.lo * y.lo, b = x.lo * y.hi, c = x.hi * y.lo, d = x.hi * y.hi;
    return {std::min(std::min(a, b), std::min(c, d)), std::max(std::max(a, b), std::max(c, d))};
}

IntervalQ iv_sub(const IntervalQ& x, const IntervalQ& y) { return {x.lo - y.hi, x.hi - y.lo}; }

// T_j(x) reduced modulo m, via the recurrence with reduction at every step.
PolyQ chebyshev_mod(unsigned long j, const PolyQ& m) {
    auto reduce = [&](const PolyQ& p) { return p.divrem(m).second; };
    PolyQ prev = reduce(PolyQ::constant(1));
    if (j == 0) return prev;
    PolyQ cur = reduce(PolyQ({mpq_class(0), mpq_class(1)}));
    PolyQ two_x({mpq_class(0), mpq_class(2)});
    for (unsigned long i = 1; i < j; ++i) {
        PolyQ next = reduce(two_x * cur - prev);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

// Multiplication-by-e matrix on the power basis of Q[x]/(m), m monic.
MatrixQ mult_matrix(const PolyQ& e, const PolyQ& m) {
    const std::size_t d = static_cast<std::size_t>(m.degree());
    MatrixQ out(d);
    std::vector<mpq_class> col(e.coeffs().begin(), e.coeffs().end());
    col.resize(d, mpq_class(0));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t r = 0; r < d; ++r) out.at(r, i) = col[r];
        // next column: multiply by x, reduce by the monic modulus
        mpq_class lead = col[d - 1];
        for (std::size_t r = d - 1; r > 0; --r) col[r] = col[r - 1];
        col[0] = 0;
        if (lead != 0)
            for (std::size_t r = 0; r < d; ++r) col[r] -= lead * m[r];
    }
    return out;
}

}  // namespace

AlgebraicReal compose_rotation_cosine(const RationalAngle& h1, const RationalAngle& h2,
                                      const mpz_class& axis_dot,
                                      const mpz_class& axis_norm2_product) {
    if (axis_norm2_product <= 0)
        throw std::invalid_argument("compose_rotation_cosine: axis norms must be positive");

    // Working field index: all four trigonometric values are cosines of
    // multiples of 2π/M.
    mpz_class mz;
    mpz_lcm(mz.get_mpz_t(), mpz_class(2 * h1.den).get_mpz_t(),
            mpz_class(2 * h2.den).get_mpz_t());
    mpz_lcm(mz.get_mpz_t(), mz.get_mpz_t(), mpz_class(4).get_mpz_t());
    if (mz > 100000)
        throw std::invalid_argument(
            "compose_rotation_cosine: angle denominators too large for exact composition");
    const unsigned long m = mz.get_ui();
    const PolyQ modulus = psi(static_cast<unsigned>(m));

    // Chebyshev index of cos(t): t = (p/q)π = 2π·(p·M/(2q))/M, folded to [0, M/2].
    auto cos_index = [&](const RationalAngle& t) {
        mpz_class j = t.num * (mz / (2 * t.den));
        j %= mz;
        if (j < 0) j += mz;
        if (2 * j > mz) j = mz - j;
        return j.get_ui();
    };
    auto sin_index = [&](const RationalAngle& t) {
        return cos_index(RationalAngle(t.den - 2 * t.num, 2 * t.den));
    };

    auto reduce = [&](const PolyQ& p) { return p.divrem(modulus).second; };
    PolyQ cc = reduce(chebyshev_mod(cos_index(h1), modulus) * chebyshev_mod(cos_index(h2), modulus));
    PolyQ ss = reduce(chebyshev_mod(sin_index(h1), modulus) * chebyshev_mod(sin_index(h2), modulus));

    // ρ = sgn(dot)·√u with u = dot²/s; rational u collapses to the pure field.
    mpq_class u(axis_dot * axis_dot, axis_norm2_product);
    u.canonicalize();
    if (u > 1) throw std::invalid_argument("compose_rotation_cosine: |axis cosine| exceeds 1");

    PolyQ a, b;  // c = a + b√u
    bool pure = true;
    if (axis_dot == 0) {
        a = cc;
    } else {
        mpz_class rn, rd;
        if (mpz_root(rn.get_mpz_t(), u.get_num().get_mpz_t(), 2) &&
            mpz_root(rd.get_mpz_t(), u.get_den().get_mpz_t(), 2)) {
            mpq_class r0(rn, rd);
            r0.canonicalize();
            if (axis_dot < 0) r0 = -r0;
            a = cc - ss.scaled(r0);
        } else {
            pure = false;
            a = cc;
            b = (axis_dot > 0) ? -ss : ss;
        }
    }

    // cos γ = 2c² − 1.
    PolyQ ca = reduce(a * a + (b * b).scaled(u)).scaled(2) - PolyQ::constant(1);
    PolyQ cb = reduce(a * b).scaled(2 * 2);
    if (cb.is_zero()) pure = true;

    PolyQ cp;
    if (pure && modulus.degree() == 1) {
        // the field is Q itself
        return AlgebraicReal::rational(ca.eval(-modulus[0]));
    } else if (pure) {
        cp = charpoly(mult_matrix(ca, modulus));
    } else {
        const std::size_t d = static_cast<std::size_t>(modulus.degree());
        MatrixQ ma = mult_matrix(ca, modulus);
        MatrixQ mb = mult_matrix(cb, modulus);
        MatrixQ big(2 * d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                big.at(i, j) = ma.at(i, j);
                big.at(i, d + j) = mb.at(i, j) * u;
                big.at(d + i, j) = mb.at(i, j);
                big.at(d + i, d + j) = ma.at(i, j);
            }
        cp = charpoly(big);
    }
    PolyZ f = squarefree_primitive(cp);

    // Validated numeric enclosure of 2(cos h1 cos h2 − sin h1 sin h2 ρ)² − 1.
    SturmChain chain(f);
    mpq_class t1 = h1.mod_two_pi().over_pi(), t2 = h2.mod_two_pi().over_pi();
    for (unsigned bits = std::max(default_precision_bits(), 96u);; bits *= 2) {
        IntervalQ c1 = cos_pi_enclosure(t1, bits);
        IntervalQ c2 = cos_pi_enclosure(t2, bits);
        IntervalQ s1 = cos_pi_enclosure(mpq_class(1, 2) - t1, bits);
        IntervalQ s2 = cos_pi_enclosure(mpq_class(1, 2) - t2, bits);
        IntervalQ rho{mpq_class(0), mpq_class(0)};
        if (axis_dot != 0) {
            rho = sqrt_enclosure(u, bits);
            if (axis_dot < 0) rho = {-rho.hi, -rho.lo};
        }
        IntervalQ c = iv_sub(iv_mul(c1, c2), iv_mul(iv_mul(s1, s2), rho));
        IntervalQ sq = iv_mul(c, c);
        IntervalQ iv{2 * sq.lo - 1, 2 * sq.hi - 1};
        if (f.sign_at(iv.lo) == 0) iv.lo -= chain.point_gap(iv.lo) / 2;
        if (f.sign_at(iv.hi) == 0) iv.hi += chain.point_gap(iv.hi) / 2;
        if (chain.count(iv.lo, iv.hi) == 1) return AlgebraicReal(f, std::move(iv));
        if (bits > (1u << 16))
            throw IsolationFailure("composed-cosine enclosure failed to isolate");
    }
}

}  // namespace rotorder
