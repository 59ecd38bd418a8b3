#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "rotorder/errors.hpp"

namespace rotorder {

class PolyZ;

/// Dense univariate polynomial over the rationals, coefficients ascending.
/// The zero polynomial is the empty coefficient list; otherwise the leading
/// coefficient is nonzero. All rationals are stored canonical (reduced,
/// positive denominator).
class PolyQ {
public:
    PolyQ() = default;
    explicit PolyQ(std::vector<mpq_class> ascending);

    static PolyQ constant(const mpq_class& c);
    /// c * x^k
    static PolyQ monomial(const mpq_class& c, std::size_t k);
    /// x^n - 1
    static PolyQ x_power_minus_one(std::size_t n);

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    /// Coefficient of x^i (zero beyond the degree).
    const mpq_class& operator[](std::size_t i) const;
    const std::vector<mpq_class>& coeffs() const { return c_; }
    const mpq_class& leading() const;
    bool is_monic() const;
    bool all_integer() const;

    mpq_class eval(const mpq_class& x) const;
    int sign_at(const mpq_class& x) const;
    PolyQ derivative() const;

    PolyQ operator-() const;
    friend PolyQ operator+(const PolyQ& a, const PolyQ& b);
    friend PolyQ operator-(const PolyQ& a, const PolyQ& b);
    friend PolyQ operator*(const PolyQ& a, const PolyQ& b);
    PolyQ scaled(const mpq_class& s) const;
    bool operator==(const PolyQ&) const = default;

    /// Quotient and remainder; divisor must be nonzero.
    std::pair<PolyQ, PolyQ> divrem(const PolyQ& d) const;
    /// Exact quotient; throws NonExactDivision when the remainder is nonzero.
    PolyQ div_exact(const PolyQ& d) const;
    PolyQ monic() const;

    /// Substitute x -> x + t.
    PolyQ shifted_arg(const mpq_class& t) const;
    /// Substitute x -> s*x, s != 0.
    PolyQ scaled_arg(const mpq_class& s) const;
    /// Substitute x -> -x.
    PolyQ negated_arg() const;

    /// Ascending whitespace-separated coefficients, rationals as "p/q" or "p".
    std::string to_text() const;
    static PolyQ from_text(const std::string& text);

private:
    void normalize();
    std::vector<mpq_class> c_;
};

/// Dense univariate polynomial over the integers, coefficients ascending.
class PolyZ {
public:
    PolyZ() = default;
    explicit PolyZ(std::vector<mpz_class> ascending);

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const mpz_class& operator[](std::size_t i) const;
    const std::vector<mpz_class>& coeffs() const { return c_; }
    const mpz_class& leading() const;
    bool is_monic() const;

    mpq_class eval(const mpq_class& x) const;
    int sign_at(const mpq_class& x) const;
    PolyZ derivative() const;

    PolyZ operator-() const;
    friend PolyZ operator+(const PolyZ& a, const PolyZ& b);
    friend PolyZ operator-(const PolyZ& a, const PolyZ& b);
    friend PolyZ operator*(const PolyZ& a, const PolyZ& b);
    bool operator==(const PolyZ&) const = default;

    /// Exact integer division by a monic divisor.
    PolyZ div_exact_monic(const PolyZ& d) const;

    PolyQ to_q() const;
    std::string to_text() const;

private:
    void normalize();
    std::vector<mpz_class> c_;
};

/// The unique decomposition f = content * primitive with primitive an integer
/// polynomial of coefficient gcd 1 and positive leading coefficient.
struct ContentPrimitive {
    mpq_class content;
    PolyZ primitive;
};
ContentPrimitive content_primitive(const PolyQ& f);

/// Monic gcd over the rationals. Not both arguments may be zero.
PolyQ gcd_poly(const PolyQ& a, const PolyQ& b);

/// Squarefree part f / gcd(f, f') as a primitive integer polynomial with
/// positive leading coefficient.
PolyZ squarefree_primitive(const PolyQ& f);

/// Closed rational interval, lo <= hi.
struct IntervalQ {
    mpq_class lo;
    mpq_class hi;

    mpq_class width() const { return hi - lo; }
    mpq_class mid() const { return (lo + hi) / 2; }
    bool contains(const mpq_class& x) const { return lo <= x && x <= hi; }

    bool operator==(const IntervalQ&) const = default;
};

/// Signed remainder sequence of a squarefree-or-not polynomial; counts
/// distinct real roots by sign variations.
class SturmChain {
public:
    explicit SturmChain(const PolyZ& p);
    explicit SturmChain(const PolyQ& p);

    long variations(const mpq_class& x) const;
    /// Distinct real roots in (a, b). Requires p(a) != 0 and p(b) != 0.
    long count(const mpq_class& a, const mpq_class& b) const;
    const PolyQ& poly() const { return chain_.front(); }

    /// A gap d such that the polynomial has no root in [x-d, x) or (x, x+d]
    /// (x itself may or may not be a root).
    mpq_class point_gap(const mpq_class& x) const;

private:
    std::vector<PolyQ> chain_;
};

/// 1 + max |c_i| / |lead|; every real root lies in (-bound, bound).
mpq_class cauchy_root_bound(const PolyZ& p);

/// Pairwise-disjoint intervals, each isolating exactly one real root of p and
/// jointly covering every root of p in the box (roots landing exactly on box
/// endpoints included; endpoints of returned intervals are never roots).
/// Throws NotSquarefree when gcd(p, p') is nonconstant.
std::vector<IntervalQ> sturm_isolate(const PolyZ& p, const IntervalQ& box);

/// Shrink an isolating interval below the requested width by exact bisection.
/// Throws LostRoot if the sign conditions expected of an isolating interval
/// do not hold.
IntervalQ refine(const PolyZ& p, const IntervalQ& iv, const mpq_class& width);

/// Canonical rational from text ("p/q" or "p"); rejects zero denominators.
mpq_class parse_rational(const std::string& text);

/// 2^e as an exact rational, e possibly negative.
mpq_class pow2(long e);

}  // namespace rotorder
