// Acceptance suite: runs every exit criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion. Exit code 0 only when all pass.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "rotorder/decide.hpp"
#include "rotorder/gates.hpp"
#include "rotorder/numeric.hpp"
#include "rotorder/numtheory.hpp"
#include "rotorder/trigpoly.hpp"

using namespace rotorder;

namespace {

int failures = 0;

class Criterion {
public:
    explicit Criterion(std::string label) : label_(std::move(label)) {}

    void expect(bool ok, const std::string& detail) {
        if (!ok) {
            ok_ = false;
            if (!detail.empty()) notes_.push_back(detail);
        }
    }
    void note(const std::string& text) { notes_.push_back(text); }

    void finish(double seconds) {
        std::printf("%s  %s  (%.2fs)\n", ok_ ? "PASS" : "FAIL", label_.c_str(), seconds);
        for (const auto& n : notes_) std::printf("      %s\n", n.c_str());
        if (!ok_) ++failures;
    }

private:
    std::string label_;
    bool ok_ = true;
    std::vector<std::string> notes_;
};

template <typename F>
void run(const std::string& label, F body) {
    Criterion c(label);
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.expect(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.finish(secs);
}

bool reduced(long p, long q) {
    mpz_class g, pz = p, qz = q;
    mpz_gcd(g.get_mpz_t(), pz.get_mpz_t(), qz.get_mpz_t());
    return g == 1;
}

mpq_class tol_pow10(int k) {  // 10^-k
    mpq_class t(1, 1);
    for (int i = 0; i < k; ++i) t /= 10;
    return t;
}

}  // namespace

int main() {
    run("1. perpendicular-product sweep q<=50: rational exactly on multiples of π/2, under 10s",
        [](Criterion& c) {
            auto t0 = std::chrono::steady_clock::now();
            long checked = 0;
            for (long q = 1; q <= 50; ++q) {
                for (long p = -2 * q; p <= 2 * q; ++p) {
                    if (!reduced(p, q)) continue;
                    RationalAngle phi(p, q);
                    bool expect = (phi.den == 1 || phi.den == 2);
                    AngleVerdict v = decide_perpendicular_angle(phi);
                    ++checked;
                    if (v.rational != expect) {
                        c.expect(false, "mismatch at φ = " + phi.to_text() + "·π");
                        return;
                    }
                }
            }
            double secs =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            c.note(std::to_string(checked) + " reduced angles decided");
            c.expect(secs < 10.0, "runtime " + std::to_string(secs) + "s exceeds 10s");
        });

    run("2. exceptional cases: φ=π/2 → η₃, φ=π → η₂, φ=2π → x-2, exact", [](Criterion& c) {
        c.expect(decide_perpendicular_product(RationalAngle(1, 2)).two_cos_half.annihilator() == eta(3),
                 "φ=π/2 annihilator is not η₃");
        c.expect(decide_perpendicular_product(RationalAngle(1, 1)).two_cos_half.annihilator() == eta(2),
                 "φ=π annihilator is not η₂");
        PolyZ xm2({mpz_class(-2), mpz_class(1)});
        c.expect(decide_perpendicular_product(RationalAngle(2, 1)).two_cos_half.annihilator() == xm2,
                 "φ=2π annihilator is not x-2");
    });

    run("3. integrality laws for n<=300, under 30s", [](Criterion& c) {
        auto t0 = std::chrono::steady_clock::now();
        for (unsigned n = 1; n <= 300; ++n) {
            bool nonint = has_nonint_coefficient(n);
            bool expect = !(n == 1 || n == 2 || n == 4);
            if (nonint != expect) {
                c.expect(false, "ψ integrality fails at n=" + std::to_string(n));
                return;
            }
            PolyZ e = eta(n);  // construction itself asserts integer coefficients
            if (!e.is_monic()) {
                c.expect(false, "η not monic at n=" + std::to_string(n));
                return;
            }
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        c.expect(secs < 30.0, "runtime " + std::to_string(secs) + "s exceeds 30s");
    });

    run("4. chebyshev coefficient facts for k<=64, exact", [](Criterion& c) {
        for (unsigned k = 1; k <= 64; ++k) {
            PolyZ t = chebyshev_T(k);
            c.expect(t.leading() == mpz_class(1) << (k - 1),
                     "leading coefficient at k=" + std::to_string(k));
            for (long i = 0; i <= t.degree(); ++i)
                if ((static_cast<unsigned>(i) % 2) != (k % 2))
                    c.expect(t[static_cast<std::size_t>(i)] == 0,
                             "parity at k=" + std::to_string(k));
            if (k % 2 == 0)
                c.expect(abs(t[0]) == 1, "free term at even k=" + std::to_string(k));
            else {
                c.expect(t[0] == 0, "c0 at odd k=" + std::to_string(k));
                c.expect(abs(t[1]) == k, "c1 at odd k=" + std::to_string(k));
            }
        }
    });

    run("5. divisor-product identities n<=99 and moebius construction n<=200, exact",
        [](Criterion& c) {
            for (unsigned n = 2; n <= 99; ++n) {
                unsigned k = n / 2;
                PolyQ prod = PolyQ::constant(1);
                for (const auto& d : divisors(n))
                    prod = prod * psi(static_cast<unsigned>(d.get_ui()));
                PolyZ rhs = (n % 2 == 1) ? chebyshev_T(k + 1) - chebyshev_T(k)
                                         : chebyshev_T(k + 1) - chebyshev_T(k - 1);
                if (!(prod.scaled(pow2(static_cast<long>(k))) == rhs.to_q())) {
                    c.expect(false, "identity fails at n=" + std::to_string(n));
                    return;
                }
            }
            for (unsigned n = 3; n <= 200; ++n) {
                if (!(psi_via_moebius(n) == psi(n))) {
                    c.expect(false, "moebius construction differs at n=" + std::to_string(n));
                    return;
                }
            }
        });

    run("6. ψ₁₅ free-term adjudication: construction vs exponent formula vs 100-bit roots",
        [](Criterion& c) {
            mpq_class from_construction = abs(psi(15)[0]);
            mpq_class from_formula = psi_free_term_two_power(15);
            c.expect(from_construction == from_formula,
                     "construction and exponent formula disagree");

            mpq_class numeric = 1;
            for (unsigned k : {1u, 2u, 4u, 7u}) numeric *= cos_pi_enclosure(mpq_class(2 * k, 15), 100).mid();
            // product of the four roots equals the free term of the monic quartic
            mpq_class tol = tol_pow10(20);
            c.expect(abs(numeric - psi(15)[0]) <= tol,
                     "numeric root product differs beyond 1e-20");

            c.note("free term |c₀| = " + from_construction.get_str() + " = 2^-4");
            c.expect(from_construction == pow2(-4), "value is not 2^-4");
            c.expect(from_construction != pow2(-8), "value unexpectedly equals 2^-8");
        });

    run("7. H·T classifier sweep q<=40: finite exactly on {0, π/4, π/2, 3π/4} mod π",
        [](Criterion& c) {
            for (long q = 1; q <= 40; ++q) {
                for (long p = 0; p < 2 * q; ++p) {
                    if (!reduced(p, q)) continue;
                    RationalAngle phi(p, q);
                    mpq_class frac = phi.over_pi();
                    mpz_class fl;
                    mpz_fdiv_q(fl.get_mpz_t(), frac.get_num().get_mpz_t(),
                               frac.get_den().get_mpz_t());
                    mpq_class r = frac - mpq_class(fl);
                    bool finite = (r == 0 || r == mpq_class(1, 4) || r == mpq_class(1, 2) ||
                                   r == mpq_class(3, 4));
                    if (ht_classify(phi).infinite() != !finite) {
                        c.expect(false, "classifier mismatch at φ = " + phi.to_text() + "·π");
                        return;
                    }
                }
            }
            c.expect(ht_classify(RationalAngle(1, 8)).infinite(), "φ=π/8 must be infinite");
        });

    run("8. numeric oracle: continued-fraction probe agrees on the q<=50 sweep",
        [](Criterion& c) {
            const unsigned bits = 128;
            const mpq_class tol = pow2(-80);
            long disagreements = 0;
            for (long q = 1; q <= 50; ++q) {
                for (long p = 0; p <= 2 * q; ++p) {
                    if (!reduced(p, q)) continue;
                    RationalAngle phi(p, q);
                    AngleVerdict v = decide_perpendicular_angle(phi);
                    IntervalQ cc = cos_pi_enclosure(phi.over_pi(), bits);
                    IntervalQ u{(cc.lo * cc.lo + 2 * cc.lo - 1) / 2,
                                (cc.hi * cc.hi + 2 * cc.hi - 1) / 2};
                    IntervalQ t = acos_over_pi_enclosure(u, bits);
                    if (v.rational) {
                        auto probe = rational_probe(t, mpz_class(1000000), tol);
                        mpq_class folded = v.angle.mod_two_pi().over_pi();
                        if (folded > 1) folded = 2 - folded;
                        if (!probe || *probe != folded) ++disagreements;
                    } else {
                        if (rational_probe(t, mpz_class(1000), tol)) ++disagreements;
                    }
                }
            }
            c.expect(disagreements == 0,
                     std::to_string(disagreements) + " oracle disagreements");
        });

    run("9. companion calculus: round trips, kronecker residuals <= 1e-10, expansion cross-check",
        [](Criterion& c) {
            std::mt19937_64 gen(2026);
            auto rnd_rat = [&](long bound) {
                std::uniform_int_distribution<long> num(-bound, bound), den(1, bound);
                mpq_class r(num(gen), den(gen));
                r.canonicalize();
                return r;
            };
            for (int i = 0; i < 50; ++i) {
                std::uniform_int_distribution<long> degd(1, 8);
                long d = degd(gen);
                std::vector<mpq_class> coeffs;
                for (long j = 0; j < d; ++j) coeffs.push_back(rnd_rat(9));
                coeffs.push_back(1);
                PolyQ m(std::move(coeffs));
                if (!(charpoly(companion(m)) == m)) {
                    c.expect(false, "charpoly∘companion failed");
                    return;
                }
            }

            const mpq_class residual_tol = tol_pow10(10);
            for (int i = 0; i < 50; ++i) {
                std::uniform_int_distribution<long> sd(2, 60);
                long s1 = sd(gen), s2 = sd(gen);
                mpq_class t1 = rnd_rat(9), t2 = rnd_rat(9);
                AlgebraicReal a = shift_by_rational(t1, sqrt_of_rational(s1));
                AlgebraicReal b = shift_by_rational(t2, sqrt_of_rational(s2));
                mpq_class av = t1 + sqrt_enclosure(s1, 160).mid();
                mpq_class bv = t2 + sqrt_enclosure(s2, 160).mid();
                if (!(abs(alg_add(a, b).annihilator().eval(av + bv)) <= residual_tol) ||
                    !(abs(alg_mul(a, b).annihilator().eval(av * bv)) <= residual_tol)) {
                    c.expect(false, "kronecker annihilation residual too large");
                    return;
                }
            }

            for (unsigned n = 3; n <= 100; ++n) {
                PolyQ m = psi(n);
                if (m.degree() < 3) continue;
                PolyQ w = charpoly_shift_expansion(m);
                MatrixQ shifted =
                    companion(m) + MatrixQ::identity(static_cast<std::size_t>(m.degree()));
                mpq_class sign = (m.degree() % 2 == 0) ? 1 : -1;
                if (!(w == charpoly(shifted).scaled(sign))) {
                    c.expect(false, "shift expansion mismatch at n=" + std::to_string(n));
                    return;
                }
            }
        });

    run("10. group closure of {π/2 about x, π/2 about z} is finite within cap 1000",
        [](Criterion& c) {
            std::vector<Gate> gens{
                Gate("x", {mpz_class(1), mpz_class(0), mpz_class(0)}, RationalAngle(1, 2)),
                Gate("z", {mpz_class(0), mpz_class(0), mpz_class(1)}, RationalAngle(1, 2))};
            ClosureResult r = group_closure(gens, 1000);
            c.expect(!r.cap_exceeded, "closure exceeded the cap");
            c.expect(r.order <= 48, "order exceeds 48");
            c.note("exact closure order: " + std::to_string(r.order));
        });

    std::printf("%s: %d of 10 criteria failed\n", failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
                failures);
    return failures == 0 ? 0 : 1;
}
