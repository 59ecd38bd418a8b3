#pragma once

#include <gmpxx.h>

#include <vector>

namespace rotorder {

/// One prime power of a factorization. Factorizations are kept sorted by
/// ascending prime with every exponent >= 1; multiplying the powers back
/// together reconstructs the input.
struct PrimePower {
    mpz_class prime;
    unsigned exponent = 0;

    bool operator==(const PrimePower&) const = default;
};

using Factorization = std::vector<PrimePower>;

/// Deterministic trial division up to sqrt(n). n >= 1; n = 1 gives the empty
/// factorization.
Factorization factorize(const mpz_class& n);

/// Euler totient: the count of 1 <= k <= n coprime to n.
mpz_class totient(const mpz_class& n);

/// Moebius function: 0 when n has a square factor, otherwise (-1)^(number of
/// prime divisors).
int moebius(const mpz_class& n);

/// All divisors of n, ascending, including 1 and n.
std::vector<mpz_class> divisors(const mpz_class& n);

}  // namespace rotorder
