#include "rotorder/cli_commands.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include "rotorder/decide.hpp"
#include "rotorder/errors.hpp"
#include "rotorder/gates.hpp"
#include "rotorder/numeric.hpp"
#include "rotorder/numtheory.hpp"
#include "rotorder/trigpoly.hpp"

namespace rotorder {

namespace {

using nlohmann::json;

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

json angle_json(const RationalAngle& a) {
    return {{"num", a.num.get_str()}, {"den", a.den.get_str()}, {"text", a.to_text() + "·π"}};
}

json verdict_json(const AngleVerdict& v) {
    json j;
    j["rational_multiple_of_pi"] = v.rational;
    if (v.rational)
        j["angle"] = angle_json(v.angle);
    else
        j["witness"] = v.witness;
    return j;
}

std::string verdict_line(const AngleVerdict& v) {
    if (v.rational) return "rational multiple of π: γ = " + v.angle.to_text() + "·π";
    return "irrational multiple of π (" + v.witness + ")";
}

json product_json(const ProductVerdict& p) {
    json j;
    j["verdict"] = verdict_json(p.verdict);
    j["order"] = p.infinite() ? json("infinite") : json(p.order->get_str());
    j["cos_gamma"] = {{"annihilator", p.cos_gamma.annihilator().to_text()},
                      {"approx", p.cos_gamma.approx()}};
    return j;
}

std::string product_line(const std::string& label, const ProductVerdict& p) {
    std::string s = label + ": ";
    if (p.infinite())
        s += "infinite order (" + p.verdict.witness + ")";
    else
        s += "finite order " + p.order->get_str() + ", γ = " + p.verdict.angle.to_text() + "·π";
    return s;
}

std::string word_text(const std::vector<Letter>& word, const std::vector<Gate>& gates) {
    std::string s;
    for (const Letter& l : word) {
        if (!s.empty()) s += "·";
        s += gates[l.gate].name;
        if (l.inverse) s += "⁻¹";
    }
    return s;
}

// Fold an angle (units of π) into the acos range [0, 1].
mpq_class fold_to_acos_range(const RationalAngle& a) {
    mpq_class x = a.mod_two_pi().over_pi();
    return (x <= 1) ? x : mpq_class(2 - x);
}

struct OracleOutcome {
    bool agreed;
    std::string detail;
};

// Numeric cross-check of a decision: recover γ/π from
// cos γ = (cos²φ + 2cos φ − 1)/2 at high precision and run the
// continued-fraction probe.
OracleOutcome oracle_check(const RationalAngle& phi, const AngleVerdict& verdict) {
    const unsigned bits = std::max(default_precision_bits(), 128u);
    IntervalQ c = cos_pi_enclosure(phi.mod_two_pi().over_pi(), bits);
    // u = (c² + 2c − 1)/2 is increasing in c on [−1, 1].
    IntervalQ u{(c.lo * c.lo + 2 * c.lo - 1) / 2, (c.hi * c.hi + 2 * c.hi - 1) / 2};
    IntervalQ t = acos_over_pi_enclosure(u, bits);
    const mpq_class tol = pow2(-80);

    if (verdict.rational) {
        auto probe = rational_probe(t, mpz_class(1000000), tol);
        if (!probe) return {false, "probe found no rational for a RationalMultiple verdict"};
        if (*probe != fold_to_acos_range(verdict.angle))
            return {false, "probe angle " + probe->get_str() + " != recovered " +
                               verdict.angle.to_text()};
        return {true, "probe matched " + probe->get_str()};
    }
    auto probe = rational_probe(t, mpz_class(1000), tol);
    if (probe)
        return {false,
                "probe found denominator <= 1000 for an IrrationalMultiple verdict: " +
                    probe->get_str()};
    return {true, "no denominator <= 1000"};
}

}  // namespace

Report cmd_minpoly(const std::string& family, unsigned long n) {
    Timer timer;
    Report rep;
    PolyQ poly;
    bool integer_flag = false;
    if (family == "psi") {
        if (n < 1 || n > 10000) throw UsageError("minpoly psi: n must be in [1, 10^4]");
        poly = psi(static_cast<unsigned>(n));
        integer_flag = !has_nonint_coefficient(static_cast<unsigned>(n));
    } else if (family == "eta") {
        if (n < 1 || n > 10000) throw UsageError("minpoly eta: n must be in [1, 10^4]");
        poly = eta(static_cast<unsigned>(n)).to_q();
        integer_flag = true;
    } else if (family == "cyclotomic") {
        if (n < 1 || n > 10000)
            throw UsageError("minpoly cyclotomic: n must be in [1, 10^4]");
        poly = cyclotomic(static_cast<unsigned>(n)).to_q();
        integer_flag = true;
    } else if (family == "chebyshev") {
        if (n > 1000) throw UsageError("minpoly chebyshev: k must be <= 10^3");
        poly = chebyshev_T(static_cast<unsigned>(n)).to_q();
        integer_flag = true;
    } else {
        throw UsageError("unknown family \"" + family + "\" (psi|eta|cyclotomic|chebyshev)");
    }

    rep.data["command"] = "minpoly";
    rep.data["inputs"] = {{"family", family}, {"n", n}};
    rep.data["results"] = {{"coefficients", poly.to_text()},
                           {"degree", poly.degree()},
                           {"integer", integer_flag}};
    rep.lines.push_back(family + "_" + std::to_string(n) + ": " + poly.to_text() +
                        "   (degree " + std::to_string(poly.degree()) +
                        (integer_flag ? ", integer coefficients)" : ", non-integer coefficients)"));
    rep.data["timing_ms"] = timer.ms();
    return rep;
}

Report cmd_decide(const std::string& angle_text) {
    Timer timer;
    RationalAngle phi = RationalAngle::parse(angle_text);
    PerpendicularDecision t = decide_perpendicular_product(phi);

    Report rep;
    rep.data["command"] = "decide";
    rep.data["inputs"] = {{"phi", angle_json(phi)}};
    json res;
    res["verdict"] = verdict_json(t.full);
    res["two_cos_half_gamma"] = {
        {"annihilator", t.two_cos_half.annihilator().to_text()},
        {"minimal_polynomial", t.two_cos_half.annihilator().to_q().monic().to_text()},
        {"approx", t.two_cos_half.approx()}};
    if (t.half.rational) res["half_angle"] = angle_json(t.half.angle);
    rep.data["results"] = res;

    rep.lines.push_back("φ = " + phi.to_text() + "·π → " + verdict_line(t.full));
    rep.lines.push_back("annihilator of 2cos(γ/2): " +
                        t.two_cos_half.annihilator().to_q().monic().to_text());
    rep.data["timing_ms"] = timer.ms();
    return rep;
}

Report cmd_gates(const std::string& file_path, const std::string& action,
                 const std::string& phi_text, unsigned max_len) {
    Timer timer;
    std::ifstream in(file_path);
    if (!in) throw std::invalid_argument("cannot open gate file: " + file_path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::vector<Gate> gates = parse_gate_set_json(buf.str());

    Report rep;
    rep.data["command"] = "gates";
    json inputs;
    inputs["file"] = file_path;
    inputs["action"] = action;
    json gj = json::array();
    for (const Gate& g : gates)
        gj.push_back({{"name", g.name},
                      {"axis", {g.axis[0].get_str(), g.axis[1].get_str(), g.axis[2].get_str()}},
                      {"angle", angle_json(g.angle)}});
    inputs["gates"] = gj;

    if (action == "product") {
        if (gates.size() < 2)
            throw std::invalid_argument("gates product: need at least two gates");
        ProductVerdict p = product_order(gates[0], gates[1]);
        rep.data["results"] = product_json(p);
        rep.lines.push_back(product_line(gates[0].name + "·" + gates[1].name, p));
    } else if (action == "ht") {
        if (phi_text.empty()) throw UsageError("gates ht: requires --phi p/q");
        RationalAngle phi = RationalAngle::parse(phi_text);
        inputs["phi"] = angle_json(phi);
        ProductVerdict p = ht_classify(phi);
        rep.data["results"] = product_json(p);
        rep.lines.push_back(product_line("H·T(" + phi.to_text() + "·π)", p));
    } else if (action == "search") {
        WordSearchStats stats;
        auto witness = word_search(gates, max_len, &stats);
        json res;
        res["words_checked"] = stats.words_checked;
        json overflows = json::array();
        for (const auto& w : stats.degree_overflows) overflows.push_back(word_text(w, gates));
        res["degree_overflows"] = overflows;
        if (witness) {
            res["witness"] = {{"word", word_text(witness->word, gates)},
                              {"verdict", product_json(witness->verdict)}};
            rep.lines.push_back("infinite-order word found: " + word_text(witness->word, gates));
        } else {
            res["witness"] = nullptr;
            rep.lines.push_back("no infinite-order word up to length " + std::to_string(max_len) +
                                " (certifies nothing)");
        }
        for (const auto& w : stats.degree_overflows)
            rep.lines.push_back("degree overflow, word skipped: " + word_text(w, gates));
        rep.data["results"] = res;
    } else {
        throw UsageError("unknown action \"" + action + "\" (product|ht|search)");
    }
    rep.data["inputs"] = inputs;
    rep.data["timing_ms"] = timer.ms();
    return rep;
}

Report cmd_sweep(unsigned qmax) {
    Timer timer;
    if (qmax < 1 || qmax > 200) throw UsageError("sweep: qmax must be in [1, 200]");

    Report rep;
    unsigned long rational_count = 0, irrational_count = 0, disagreements = 0;
    json detail = json::array();
    for (unsigned q = 1; q <= qmax; ++q) {
        for (unsigned p = 0; p <= 2 * q; ++p) {
            mpz_class g;
            mpz_class pz = p, qz = q;
            mpz_gcd(g.get_mpz_t(), pz.get_mpz_t(), qz.get_mpz_t());
            if (g != 1) continue;
            RationalAngle phi(p, q);
            AngleVerdict v = decide_perpendicular_angle(phi);
            (v.rational ? rational_count : irrational_count)++;
            OracleOutcome oracle = oracle_check(phi, v);
            if (!oracle.agreed) {
                ++disagreements;
                detail.push_back({{"phi", phi.to_text()},
                                  {"verdict", verdict_json(v)},
                                  {"oracle", oracle.detail}});
                rep.lines.push_back("DISAGREEMENT at φ = " + phi.to_text() + "·π: " +
                                    oracle.detail);
            }
        }
    }
    rep.data["command"] = "sweep";
    rep.data["inputs"] = {{"qmax", qmax}};
    rep.data["results"] = {{"rational_multiples", rational_count},
                           {"irrational_multiples", irrational_count},
                           {"oracle_disagreements", disagreements},
                           {"disagreement_detail", detail}};
    rep.lines.push_back("sweep q <= " + std::to_string(qmax) + ": " +
                        std::to_string(rational_count) + " rational, " +
                        std::to_string(irrational_count) + " irrational, " +
                        std::to_string(disagreements) + " oracle disagreements");
    rep.exit_code = disagreements == 0 ? 0 : 3;
    rep.data["timing_ms"] = timer.ms();
    return rep;
}

}  // namespace rotorder
