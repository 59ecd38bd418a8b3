#include "rotorder/poly.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace rotorder {

namespace {
const mpq_class kZeroQ = 0;
const mpz_class kZeroZ = 0;
}  // namespace

// ---------------------------------------------------------------------------
// PolyQ

PolyQ::PolyQ(std::vector<mpq_class> ascending) : c_(std::move(ascending)) {
    for (auto& c : c_) c.canonicalize();
    normalize();
}

void PolyQ::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PolyQ PolyQ::constant(const mpq_class& c) { return PolyQ({c}); }

PolyQ PolyQ::monomial(const mpq_class& c, std::size_t k) {
    std::vector<mpq_class> v(k + 1, mpq_class(0));
    v[k] = c;
    return PolyQ(std::move(v));
}

PolyQ PolyQ::x_power_minus_one(std::size_t n) {
    std::vector<mpq_class> v(n + 1, mpq_class(0));
    v[0] = -1;
    v[n] = 1;
    return PolyQ(std::move(v));
}

const mpq_class& PolyQ::operator[](std::size_t i) const {
    return i < c_.size() ? c_[i] : kZeroQ;
}

const mpq_class& PolyQ::leading() const {
    if (is_zero()) throw std::invalid_argument("leading coefficient of zero polynomial");
    return c_.back();
}

bool PolyQ::is_monic() const { return !is_zero() && c_.back() == 1; }

bool PolyQ::all_integer() const {
    for (const auto& c : c_)
        if (c.get_den() != 1) return false;
    return true;
}

mpq_class PolyQ::eval(const mpq_class& x) const {
    mpq_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

int PolyQ::sign_at(const mpq_class& x) const { return sgn(eval(x)); }

PolyQ PolyQ::derivative() const {
    if (c_.size() <= 1) return PolyQ();
    std::vector<mpq_class> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return PolyQ(std::move(d));
}

PolyQ PolyQ::operator-() const {
    std::vector<mpq_class> v(c_);
    for (auto& c : v) c = -c;
    return PolyQ(std::move(v));
}

PolyQ operator+(const PolyQ& a, const PolyQ& b) {
    std::vector<mpq_class> v(std::max(a.c_.size(), b.c_.size()), mpq_class(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
    return PolyQ(std::move(v));
}

PolyQ operator-(const PolyQ& a, const PolyQ& b) { return a + (-b); }

PolyQ operator*(const PolyQ& a, const PolyQ& b) {
    if (a.is_zero() || b.is_zero()) return PolyQ();
    std::vector<mpq_class> v(a.c_.size() + b.c_.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return PolyQ(std::move(v));
}

PolyQ PolyQ::scaled(const mpq_class& s) const {
    std::vector<mpq_class> v(c_);
    for (auto& c : v) c *= s;
    return PolyQ(std::move(v));
}

std::pair<PolyQ, PolyQ> PolyQ::divrem(const PolyQ& d) const {
    if (d.is_zero()) throw std::invalid_argument("polynomial division by zero");
    if (degree() < d.degree()) return {PolyQ(), *this};
    std::vector<mpq_class> rem(c_);
    std::vector<mpq_class> quo(c_.size() - d.c_.size() + 1, mpq_class(0));
    const long dd = d.degree();
    for (long i = degree(); i >= dd; --i) {
        if (rem[i] == 0) continue;
        mpq_class f = rem[i] / d.c_.back();
        quo[i - dd] = f;
        for (long j = 0; j <= dd; ++j) rem[i - dd + j] -= f * d.c_[j];
    }
    return {PolyQ(std::move(quo)), PolyQ(std::move(rem))};
}

PolyQ PolyQ::div_exact(const PolyQ& d) const {
    auto [q, r] = divrem(d);
    if (!r.is_zero())
        throw NonExactDivision("polynomial division left remainder " + r.to_text());
    return q;
}

PolyQ PolyQ::monic() const {
    if (is_zero()) throw std::invalid_argument("monic of zero polynomial");
    return scaled(1 / leading());
}

PolyQ PolyQ::shifted_arg(const mpq_class& t) const {
    // Horner over x + t.
    PolyQ lin({t, mpq_class(1)});
    PolyQ acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + PolyQ::constant(*it);
    return acc;
}

PolyQ PolyQ::scaled_arg(const mpq_class& s) const {
    if (s == 0) throw std::invalid_argument("scaled_arg: s must be nonzero");
    std::vector<mpq_class> v(c_);
    mpq_class p = 1;
    for (std::size_t i = 1; i < v.size(); ++i) {
        p *= s;
        v[i] *= p;
    }
    return PolyQ(std::move(v));
}

PolyQ PolyQ::negated_arg() const {
    std::vector<mpq_class> v(c_);
    for (std::size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
    return PolyQ(std::move(v));
}

std::string PolyQ::to_text() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ' ';
        os << c_[i];
    }
    return os.str();
}

PolyQ PolyQ::from_text(const std::string& text) {
    std::istringstream is(text);
    std::vector<mpq_class> v;
    std::string tok;
    while (is >> tok) v.push_back(parse_rational(tok));
    return PolyQ(std::move(v));
}

// ---------------------------------------------------------------------------
// PolyZ

PolyZ::PolyZ(std::vector<mpz_class> ascending) : c_(std::move(ascending)) { normalize(); }

void PolyZ::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const mpz_class& PolyZ::operator[](std::size_t i) const {
    return i < c_.size() ? c_[i] : kZeroZ;
}

const mpz_class& PolyZ::leading() const {
    if (is_zero()) throw std::invalid_argument("leading coefficient of zero polynomial");
    return c_.back();
}

bool PolyZ::is_monic() const { return !is_zero() && c_.back() == 1; }

mpq_class PolyZ::eval(const mpq_class& x) const {
    mpq_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + mpq_class(*it);
    return acc;
}

int PolyZ::sign_at(const mpq_class& x) const { return sgn(eval(x)); }

PolyZ PolyZ::derivative() const {
    if (c_.size() <= 1) return PolyZ();
    std::vector<mpz_class> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return PolyZ(std::move(d));
}

PolyZ PolyZ::operator-() const {
    std::vector<mpz_class> v(c_);
    for (auto& c : v) c = -c;
    return PolyZ(std::move(v));
}

PolyZ operator+(const PolyZ& a, const PolyZ& b) {
    std::vector<mpz_class> v(std::max(a.c_.size(), b.c_.size()), mpz_class(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
    return PolyZ(std::move(v));
}

PolyZ operator-(const PolyZ& a, const PolyZ& b) { return a + (-b); }

PolyZ operator*(const PolyZ& a, const PolyZ& b) {
    if (a.is_zero() || b.is_zero()) return PolyZ();
    std::vector<mpz_class> v(a.c_.size() + b.c_.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return PolyZ(std::move(v));
}

PolyZ PolyZ::div_exact_monic(const PolyZ& d) const {
    if (!d.is_monic()) throw std::invalid_argument("div_exact_monic: divisor not monic");
    if (is_zero()) return PolyZ();
    if (degree() < d.degree())
        throw NonExactDivision("integer division: divisor degree exceeds dividend");
    std::vector<mpz_class> rem(c_);
    std::vector<mpz_class> quo(c_.size() - d.c_.size() + 1, mpz_class(0));
    const long dd = d.degree();
    for (long i = degree(); i >= dd; --i) {
        if (rem[i] == 0) continue;
        mpz_class f = rem[i];
        quo[i - dd] = f;
        for (long j = 0; j <= dd; ++j) rem[i - dd + j] -= f * d.c_[j];
    }
    for (const auto& r : rem)
        if (r != 0) throw NonExactDivision("integer polynomial division left a remainder");
    return PolyZ(std::move(quo));
}

PolyQ PolyZ::to_q() const {
    std::vector<mpq_class> v(c_.begin(), c_.end());
    return PolyQ(std::move(v));
}

std::string PolyZ::to_text() const { return to_q().to_text(); }

// ---------------------------------------------------------------------------
// Content and primitive part

ContentPrimitive content_primitive(const PolyQ& f) {
    if (f.is_zero()) throw std::invalid_argument("content_primitive of zero polynomial");
    mpz_class den_lcm = 1;
    for (const auto& c : f.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    std::vector<mpz_class> ints(f.coeffs().size());
    for (std::size_t i = 0; i < ints.size(); ++i) {
        mpq_class scaled = f.coeffs()[i] * mpq_class(den_lcm);
        assert(scaled.get_den() == 1);
        ints[i] = scaled.get_num();
    }
    mpz_class g = 0;
    for (const auto& z : ints) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    const int s = sgn(ints.back());
    mpz_class unit = g * s;
    for (auto& z : ints) z /= unit;
    mpq_class content(unit, den_lcm);
    content.canonicalize();
    return {content, PolyZ(std::move(ints))};
}

PolyQ gcd_poly(const PolyQ& a, const PolyQ& b) {
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd_poly(0, 0)");
    PolyQ x = a, y = b;
    while (!y.is_zero()) {
        PolyQ r = x.divrem(y).second;
        // Rescale remainders to primitive form to keep coefficients small.
        if (!r.is_zero()) r = content_primitive(r).primitive.to_q();
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

PolyZ squarefree_primitive(const PolyQ& f) {
    if (f.is_zero()) throw std::invalid_argument("squarefree_primitive of zero polynomial");
    if (f.degree() == 0) throw std::invalid_argument("squarefree_primitive of constant");
    PolyQ g = gcd_poly(f, f.derivative());
    PolyQ sf = (g.degree() > 0) ? f.div_exact(g) : f;
    return content_primitive(sf).primitive;
}

// ---------------------------------------------------------------------------
// Sturm machinery

SturmChain::SturmChain(const PolyZ& p) : SturmChain(p.to_q()) {}

SturmChain::SturmChain(const PolyQ& p) {
    if (p.is_zero()) throw std::invalid_argument("Sturm chain of zero polynomial");
    chain_.push_back(p);
    if (p.degree() == 0) return;
    chain_.push_back(p.derivative());
    while (chain_.back().degree() > 0) {
        PolyQ r = chain_[chain_.size() - 2].divrem(chain_.back()).second;
        if (r.is_zero()) break;
        // Scale by a positive rational (sign pattern is preserved).
        ContentPrimitive cp = content_primitive(r);
        PolyQ next = -cp.primitive.to_q();
        if (cp.content < 0) next = -next;
        chain_.push_back(std::move(next));
    }
}

long SturmChain::variations(const mpq_class& x) const {
    long v = 0;
    int prev = 0;
    for (const auto& p : chain_) {
        int s = p.sign_at(x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

long SturmChain::count(const mpq_class& a, const mpq_class& b) const {
    assert(a <= b);
    assert(chain_.front().sign_at(a) != 0 && chain_.front().sign_at(b) != 0);
    return variations(a) - variations(b);
}

mpq_class SturmChain::point_gap(const mpq_class& x) const {
    const PolyQ& p = chain_.front();
    const long inner = (p.sign_at(x) == 0) ? 1 : 0;
    mpq_class d = 1;
    while (true) {
        mpq_class a = x - d, b = x + d;
        if (p.sign_at(a) != 0 && p.sign_at(b) != 0 && count(a, b) == inner) return d;
        d /= 2;
    }
}

mpq_class cauchy_root_bound(const PolyZ& p) {
    if (p.is_zero() || p.degree() == 0) return 1;
    mpq_class m = 0;
    for (long i = 0; i < p.degree(); ++i) {
        mpq_class r = abs(mpq_class(p[i]) / mpq_class(p.leading()));
        if (r > m) m = r;
    }
    return m + 1;
}

std::vector<IntervalQ> sturm_isolate(const PolyZ& p, const IntervalQ& box) {
    if (p.is_zero()) throw std::invalid_argument("sturm_isolate of zero polynomial");
    if (box.lo > box.hi) throw std::invalid_argument("sturm_isolate: malformed box");
    if (p.degree() == 0) return {};
    {
        PolyQ g = gcd_poly(p.to_q(), p.to_q().derivative());
        if (g.degree() > 0) throw NotSquarefree("sturm_isolate: input has repeated roots");
    }
    SturmChain chain(p);

    // Push box endpoints off roots (outward, so endpoint roots stay covered).
    mpq_class lo = box.lo, hi = box.hi;
    if (p.sign_at(lo) == 0) lo -= chain.point_gap(lo) / 2;
    if (p.sign_at(hi) == 0) hi += chain.point_gap(hi) / 2;

    std::vector<IntervalQ> found;
    struct Item {
        mpq_class a, b;
        long n;
    };
    std::vector<Item> work;
    work.push_back({lo, hi, chain.count(lo, hi)});
    while (!work.empty()) {
        Item it = std::move(work.back());
        work.pop_back();
        if (it.n == 0) continue;
        if (it.n == 1) {
            found.push_back({it.a, it.b});
            continue;
        }
        mpq_class m = (it.a + it.b) / 2;
        if (p.sign_at(m) == 0) {
            // Rational root exactly at the midpoint: emit a tight interval
            // around it and recurse on both sides.
            mpq_class gap = chain.point_gap(m);
            mpq_class eps = std::min(gap, std::min(mpq_class((m - it.a) / 2), mpq_class((it.b - m) / 2)));
            found.push_back({m - eps, m + eps});
            work.push_back({it.a, m - eps, chain.count(it.a, m - eps)});
            work.push_back({m + eps, it.b, chain.count(m + eps, it.b)});
        } else {
            long left = chain.count(it.a, m);
            work.push_back({it.a, m, left});
            work.push_back({m, it.b, it.n - left});
        }
    }
    std::sort(found.begin(), found.end(),
              [](const IntervalQ& x, const IntervalQ& y) { return x.lo < y.lo; });
    return found;
}

IntervalQ refine(const PolyZ& p, const IntervalQ& iv, const mpq_class& width) {
    int slo = p.sign_at(iv.lo);
    int shi = p.sign_at(iv.hi);
    if (slo == 0 || shi == 0 || slo == shi)
        throw LostRoot("refine: interval endpoints do not bracket a single simple root");
    mpq_class lo = iv.lo, hi = iv.hi;
    while (hi - lo > width) {
        mpq_class m = (lo + hi) / 2;
        int sm = p.sign_at(m);
        if (sm == 0) {
            // The root is exactly m; pin a tight interval around it.
            mpq_class eps = std::min(width, mpq_class(hi - lo)) / 4;
            return {m - eps, m + eps};
        }
        if (sm == slo)
            lo = m;
        else
            hi = m;
    }
    return {lo, hi};
}

// ---------------------------------------------------------------------------

mpq_class parse_rational(const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw std::invalid_argument("malformed rational: " + text);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    q.canonicalize();
    return q;
}

mpq_class pow2(long e) {
    mpq_class q;
    if (e >= 0)
        mpq_mul_2exp(q.get_mpq_t(), mpq_class(1).get_mpq_t(), static_cast<unsigned long>(e));
    else
        mpq_div_2exp(q.get_mpq_t(), mpq_class(1).get_mpq_t(), static_cast<unsigned long>(-e));
    return q;
}

}  // namespace rotorder
