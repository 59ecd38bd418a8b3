#include "rotorder/trigpoly.hpp"

#include <cassert>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "rotorder/numtheory.hpp"

namespace rotorder {

namespace {

// (T_k, T_{k+1}) in one pass of the recurrence.
std::pair<PolyZ, PolyZ> chebyshev_pair(unsigned k) {
    PolyZ prev(std::vector<mpz_class>{1});               // T_0
    PolyZ cur(std::vector<mpz_class>{0, 1});             // T_1
    if (k == 0) return {prev, cur};
    for (unsigned i = 1; i < k + 1; ++i) {
        // T_{i+1} = 2x·T_i - T_{i-1}
        std::vector<mpz_class> next(cur.coeffs().size() + 1, mpz_class(0));
        for (std::size_t j = 0; j < cur.coeffs().size(); ++j) next[j + 1] = 2 * cur.coeffs()[j];
        for (std::size_t j = 0; j < prev.coeffs().size(); ++j) next[j] -= prev.coeffs()[j];
        prev = std::move(cur);
        cur = PolyZ(std::move(next));
    }
    return {prev, cur};
}

template <typename K, typename V>
class FamilyCache {
public:
    bool lookup(const K& k, V& out) {
        std::lock_guard<std::mutex> lk(m_);
        auto it = map_.find(k);
        if (it == map_.end()) return false;
        out = it->second;
        return true;
    }
    V store(const K& k, V v) {
        std::lock_guard<std::mutex> lk(m_);
        return map_.emplace(k, std::move(v)).first->second;
    }

private:
    std::mutex m_;
    std::map<K, V> map_;
};

// Chebyshev difference scaled to the monic divisor product:
// odd n = 2k+1: 2^-k (T_{k+1} - T_k); even n = 2k: 2^-k (T_{k+1} - T_{k-1}).
PolyQ psi_divisor_product(unsigned n) {
    unsigned k = n / 2;
    PolyZ diff;
    if (n % 2 == 1) {
        auto [tk, tk1] = chebyshev_pair(k);
        diff = tk1 - tk;
    } else {
        auto [tkm1, tk] = chebyshev_pair(k - 1);
        // one more recurrence step for T_{k+1}
        std::vector<mpz_class> next(tk.coeffs().size() + 1, mpz_class(0));
        for (std::size_t j = 0; j < tk.coeffs().size(); ++j) next[j + 1] = 2 * tk.coeffs()[j];
        for (std::size_t j = 0; j < tkm1.coeffs().size(); ++j) next[j] -= tkm1.coeffs()[j];
        diff = PolyZ(std::move(next)) - tkm1;
    }
    return diff.to_q().scaled(pow2(-static_cast<long>(k)));
}

PolyQ compute_psi(unsigned n) {
    if (n == 1) return PolyQ({mpq_class(-1), mpq_class(1)});
    if (n == 2) return PolyQ({mpq_class(1), mpq_class(1)});
    PolyQ acc = psi_divisor_product(n);
    try {
        for (const auto& d : divisors(n))
            if (d < n) acc = acc.div_exact(psi(static_cast<unsigned>(d.get_ui())));
    } catch (const NonExactDivision& e) {
        throw InternalError(std::string("psi divide-down failed: ") + e.what());
    }
    if (!acc.is_monic()) throw InternalError("psi is not monic");
    if (mpz_class(acc.degree()) * 2 != totient(n)) throw InternalError("psi degree law violated");
    return acc;
}

}  // namespace

PolyZ chebyshev_T(unsigned k) {
    static FamilyCache<unsigned, PolyZ> cache;
    PolyZ out;
    if (cache.lookup(k, out)) return out;
    auto pair = chebyshev_pair(k == 0 ? 0 : k - 1);
    PolyZ t = (k == 0) ? pair.first : pair.second;
    if (k <= 512) return cache.store(k, std::move(t));
    return t;
}

PolyQ psi(unsigned n) {
    if (n == 0) throw std::invalid_argument("psi: index must be positive");
    static FamilyCache<unsigned, PolyQ> cache;
    PolyQ out;
    if (cache.lookup(n, out)) return out;
    return cache.store(n, compute_psi(n));
}

PolyQ psi_via_moebius(unsigned n) {
    if (n < 3) throw std::invalid_argument("psi_via_moebius: requires n >= 3");
    // G1(a) = 2^-a (T_{a+1} - T_{a-1});  G0(a) = 2^-floor(a/2) (T_{fa+1} - T_fa).
    auto g_even = [](unsigned a) {
        PolyZ diff = chebyshev_T(a + 1) - chebyshev_T(a - 1);
        return diff.to_q().scaled(pow2(-static_cast<long>(a)));
    };
    auto g_odd = [](unsigned a) {
        unsigned fa = a / 2;
        PolyZ diff = chebyshev_T(fa + 1) - chebyshev_T(fa);
        return diff.to_q().scaled(pow2(-static_cast<long>(fa)));
    };

    PolyQ num = PolyQ::constant(1);
    PolyQ den = PolyQ::constant(1);
    auto push = [&](const PolyQ& factor_num, const PolyQ& factor_den, int mu) {
        if (mu == 0) return;
        if (mu > 0) {
            num = num * factor_num;
            den = den * factor_den;
        } else {
            num = num * factor_den;
            den = den * factor_num;
        }
    };

    unsigned odd = n, m = 0;
    while (odd % 2 == 0) {
        odd /= 2;
        ++m;
    }
    for (const auto& dz : divisors(odd)) {
        unsigned d = static_cast<unsigned>(dz.get_ui());
        int mu = moebius(odd / d);
        if (m == 0) {
            push(g_odd(d), PolyQ::constant(1), mu);
        } else if (m == 1) {
            push(g_even(d), g_odd(d), mu);
        } else {
            push(g_even((1u << (m - 1)) * d), g_even((1u << (m - 2)) * d), mu);
        }
    }
    return num.div_exact(den);
}

bool has_nonint_coefficient(unsigned n) { return !psi(n).all_integer(); }

mpq_class psi_free_term_two_power(unsigned n) {
    if (n == 0) throw std::invalid_argument("psi_free_term_two_power: index must be positive");
    if (n == 1 || n == 2 || n == 4)
        throw std::invalid_argument("psi_free_term_two_power: rejected for n in {1,2,4}");
    long e = 0;
    if (n % 2 == 1) {
        for (const auto& dz : divisors(n)) {
            long d = dz.get_si();
            e -= moebius(mpz_class(n) / dz) * (d / 2);
        }
    } else {
        unsigned k = n, eta2 = 0;
        while (k % 2 == 0) {
            k /= 2;
            ++eta2;
        }
        for (const auto& dz : divisors(k)) {
            long d = dz.get_si();
            int mu = moebius(mpz_class(k) / dz);
            if (eta2 == 1)
                e -= mu * (d / 2);
            else
                e += mu * (1 - (1L << (eta2 - 2)) * d);
        }
    }
    return pow2(e);
}

PolyZ double_cos_minpoly(unsigned n) {
    if (n == 0) throw std::invalid_argument("double_cos_minpoly: index must be positive");
    static FamilyCache<unsigned, PolyZ> cache;
    PolyZ out;
    if (cache.lookup(n, out)) return out;

    PolyQ p = psi(n);
    const long d = p.degree();
    // 2^d · p(x/2): coefficient of x^i picks up 2^(d-i).
    std::vector<mpz_class> z(static_cast<std::size_t>(d) + 1);
    for (long i = 0; i <= d; ++i) {
        mpq_class c = p[static_cast<std::size_t>(i)] * pow2(d - i);
        if (c.get_den() != 1)
            throw InternalError("double cosine minimal polynomial has a non-integer coefficient");
        z[static_cast<std::size_t>(i)] = c.get_num();
    }
    PolyZ result(std::move(z));
    assert(result.is_monic());
    return cache.store(n, std::move(result));
}

PolyZ eta(unsigned n) {
    if (n == 0) throw std::invalid_argument("eta: index must be positive");
    return double_cos_minpoly(2 * n);
}

PolyZ cyclotomic(unsigned n) {
    if (n == 0) throw std::invalid_argument("cyclotomic: index must be positive");
    static FamilyCache<unsigned, PolyZ> cache;
    PolyZ out;
    if (cache.lookup(n, out)) return out;

    std::vector<mpz_class> base(n + 1, mpz_class(0));
    base[0] = -1;
    base[n] = 1;
    PolyZ acc(std::move(base));
    for (const auto& dz : divisors(n))
        if (dz < n) acc = acc.div_exact_monic(cyclotomic(static_cast<unsigned>(dz.get_ui())));
    return cache.store(n, std::move(acc));
}

}  // namespace rotorder
