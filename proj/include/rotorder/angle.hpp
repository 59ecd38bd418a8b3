#pragma once

#include <gmpxx.h>

#include <string>

namespace rotorder {

/// The angle (num/den)·π with gcd(|num|, den) = 1 and den >= 1.
struct RationalAngle {
    mpz_class num;
    mpz_class den;

    RationalAngle() : num(0), den(1) {}
    RationalAngle(mpz_class n, mpz_class d);

    /// Exact fraction num/den (the angle in units of π).
    mpq_class over_pi() const;
    static RationalAngle from_fraction_of_pi(const mpq_class& q);
    /// Parses "p/q" or "p" (units of π).
    static RationalAngle parse(const std::string& text);

    RationalAngle half() const;
    RationalAngle doubled() const;
    RationalAngle negated() const;
    RationalAngle operator+(const RationalAngle& o) const;
    RationalAngle operator-(const RationalAngle& o) const;
    /// Representative with num/den in [0, 2).
    RationalAngle mod_two_pi() const;
    bool is_zero_angle() const { return num == 0; }

    std::string to_text() const;
    bool operator==(const RationalAngle&) const = default;
};

}  // namespace rotorder
