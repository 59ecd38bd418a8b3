#include "rotorder/numtheory.hpp"

#include <algorithm>
#include <stdexcept>

namespace rotorder {

Factorization factorize(const mpz_class& n) {
    if (n <= 0) throw std::invalid_argument("factorize: n must be positive");
    Factorization out;
    mpz_class rest = n;
    auto strip = [&](const mpz_class& p) {
        unsigned e = 0;
        while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
            rest /= p;
            ++e;
        }
        if (e > 0) out.push_back({p, e});
    };
    strip(2);
    mpz_class p = 3;
    while (p * p <= rest) {
        strip(p);
        p += 2;
    }
    if (rest > 1) out.push_back({rest, 1});
    return out;
}

mpz_class totient(const mpz_class& n) {
    mpz_class t = 1;
    for (const auto& [p, e] : factorize(n)) {
        mpz_class pe = 1;
        for (unsigned i = 1; i < e; ++i) pe *= p;
        t *= pe * (p - 1);
    }
    return t;
}

int moebius(const mpz_class& n) {
    Factorization f = factorize(n);
    for (const auto& pp : f)
        if (pp.exponent >= 2) return 0;
    return (f.size() % 2 == 0) ? 1 : -1;
}

std::vector<mpz_class> divisors(const mpz_class& n) {
    std::vector<mpz_class> out{1};
    for (const auto& [p, e] : factorize(n)) {
        const std::size_t base = out.size();
        mpz_class pe = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pe *= p;
            for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pe);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace rotorder
