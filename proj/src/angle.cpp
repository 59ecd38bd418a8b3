#include "rotorder/angle.hpp"

#include <stdexcept>

#include "rotorder/poly.hpp"

namespace rotorder {

RationalAngle::RationalAngle(mpz_class n, mpz_class d) : num(std::move(n)), den(std::move(d)) {
    if (den == 0) throw std::invalid_argument("angle denominator must be nonzero");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

mpq_class RationalAngle::over_pi() const {
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

RationalAngle RationalAngle::from_fraction_of_pi(const mpq_class& q) {
    return RationalAngle(q.get_num(), q.get_den());
}

RationalAngle RationalAngle::parse(const std::string& text) {
    return from_fraction_of_pi(parse_rational(text));
}

RationalAngle RationalAngle::half() const { return RationalAngle(num, den * 2); }

RationalAngle RationalAngle::doubled() const { return RationalAngle(num * 2, den); }

RationalAngle RationalAngle::negated() const { return RationalAngle(-num, den); }

RationalAngle RationalAngle::operator+(const RationalAngle& o) const {
    return RationalAngle(num * o.den + o.num * den, den * o.den);
}

RationalAngle RationalAngle::operator-(const RationalAngle& o) const {
    return *this + o.negated();
}

RationalAngle RationalAngle::mod_two_pi() const {
    mpz_class m = num % (2 * den);
    if (m < 0) m += 2 * den;
    return RationalAngle(m, den);
}

std::string RationalAngle::to_text() const {
    std::string s = num.get_str();
    if (den != 1) s += "/" + den.get_str();
    return s;
}

}  // namespace rotorder
