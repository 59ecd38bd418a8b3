#include <doctest.h>

#include "rotorder/numtheory.hpp"

using namespace rotorder;

TEST_CASE("factorize basic values") {
    CHECK(factorize(1).empty());
    CHECK(factorize(15) == Factorization{{3, 1}, {5, 1}});
    CHECK(factorize(360) == Factorization{{2, 3}, {3, 2}, {5, 1}});
    CHECK(factorize(97) == Factorization{{97, 1}});
    CHECK_THROWS_AS(factorize(0), std::invalid_argument);
}

TEST_CASE("totient basic values") {
    CHECK(totient(1) == 1);
    // direct count of k <= 15 coprime to 15
    long count = 0;
    for (long k = 1; k <= 15; ++k) {
        mpz_class g, kz = k, n = 15;
        mpz_gcd(g.get_mpz_t(), kz.get_mpz_t(), n.get_mpz_t());
        if (g == 1) ++count;
    }
    CHECK(count == 8);
    CHECK(totient(15) == count);
    CHECK(totient(mpz_class(1) << 10) == mpz_class(1) << 9);
    CHECK_THROWS_AS(totient(0), std::invalid_argument);
}

TEST_CASE("moebius basic values") {
    CHECK(moebius(1) == 1);
    CHECK(moebius(4) == 0);
    CHECK(moebius(30) == -1);
    CHECK(moebius(6) == 1);
    CHECK_THROWS_AS(moebius(0), std::invalid_argument);
}

TEST_CASE("divisors basic values") {
    CHECK(divisors(1) == std::vector<mpz_class>{1});
    CHECK(divisors(15) == std::vector<mpz_class>{1, 3, 5, 15});
    CHECK(divisors(12) == std::vector<mpz_class>{1, 2, 3, 4, 6, 12});
    CHECK_THROWS_AS(divisors(0), std::invalid_argument);
}

TEST_CASE("moebius divisor sum is the unit impulse") {
    for (long n = 1; n <= 10000; ++n) {
        long sum = 0;
        for (const auto& d : divisors(n)) sum += moebius(d);
        CHECK(sum == (n == 1 ? 1 : 0));
    }
}

TEST_CASE("totient divisor sum reconstructs n") {
    for (long n = 1; n <= 10000; ++n) {
        mpz_class sum = 0;
        for (const auto& d : divisors(n)) sum += totient(d);
        CHECK(sum == n);
    }
}

TEST_CASE("factorization reconstructs and re-factorizes") {
    for (long n = 1; n <= 5000; ++n) {
        Factorization f = factorize(n);
        mpz_class prod = 1;
        mpz_class prev = 0;
        for (const auto& [p, e] : f) {
            CHECK(p > prev);
            CHECK(e >= 1);
            prev = p;
            for (unsigned i = 0; i < e; ++i) prod *= p;
        }
        CHECK(prod == n);
        CHECK(factorize(prod) == f);
    }
}
