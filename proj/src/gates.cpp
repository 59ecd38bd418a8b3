#include "rotorder/gates.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>
#include <variant>

namespace rotorder {

namespace {

constexpr long kWordDegreeCap = 64;

mpz_class dot3(const std::array<mpz_class, 3>& a, const std::array<mpz_class, 3>& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

std::array<mpz_class, 3> cross3(const std::array<mpz_class, 3>& a,
                                const std::array<mpz_class, 3>& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

mpz_class norm2(const std::array<mpz_class, 3>& a) { return dot3(a, a); }

AlgebraicReal capped(AlgebraicReal x) {
    if (x.degree() > kWordDegreeCap)
        throw DegreeOverflow("annihilator degree " + std::to_string(x.degree()) +
                             " exceeds the word composition cap");
    return x;
}

// Pre-checks bound the cost: combined annihilator degrees multiply, and the
// cap must fire before the Kronecker work, not after.
AlgebraicReal mul_capped(const AlgebraicReal& a, const AlgebraicReal& b) {
    if (!a.rational_value() && !b.rational_value() && a.degree() * b.degree() > kWordDegreeCap)
        throw DegreeOverflow("product degree bound exceeds the word composition cap");
    return capped(alg_mul(a, b));
}

AlgebraicReal add_capped(const AlgebraicReal& a, const AlgebraicReal& b) {
    if (!a.rational_value() && !b.rational_value() && a.degree() * b.degree() > kWordDegreeCap)
        throw DegreeOverflow("sum degree bound exceeds the word composition cap");
    return capped(alg_add(a, b));
}

AlgebraicReal sub_capped(const AlgebraicReal& a, const AlgebraicReal& b) {
    return add_capped(a, alg_neg(b));
}

}  // namespace

Gate::Gate(std::string n, std::array<mpz_class, 3> ax, RationalAngle an)
    : name(std::move(n)), axis(std::move(ax)), angle(std::move(an)) {
    if (axis[0] == 0 && axis[1] == 0 && axis[2] == 0)
        throw std::invalid_argument("gate axis must be nonzero");
}

AlgebraicReal axis_cosine(const Gate& a, const Gate& b) {
    mpz_class r = dot3(a.axis, b.axis);
    if (r == 0) return AlgebraicReal::rational(0);
    mpq_class sq(r * r, norm2(a.axis) * norm2(b.axis));
    sq.canonicalize();
    AlgebraicReal mag = sqrt_of_rational(sq);
    return r > 0 ? mag : alg_neg(mag);
}

AlgebraicReal product_cos_gamma(const Gate& a, const Gate& b) {
    return compose_rotation_cosine(a.angle.half(), b.angle.half(), dot3(a.axis, b.axis),
                                   norm2(a.axis) * norm2(b.axis));
}

ProductVerdict product_order(const Gate& a, const Gate& b) {
    AlgebraicReal cg = product_cos_gamma(a, b);
    AngleVerdict v = double_cos_membership(scale_by_rational(2, cg));
    if (!v.rational) return {std::move(cg), std::move(v), std::nullopt};
    mpz_class order = rotation_order(v.angle);
    return {std::move(cg), std::move(v), std::move(order)};
}

ProductVerdict ht_classify(const RationalAngle& phi) {
    const RationalAngle two_phi = phi.doubled();
    // 2cosγ + 1 = -cos 2φ, i.e. 2cos(γ+π) = cos 2φ + 1; the shifted angle
    // γ' = γ+π is exactly the half-angle recovered by the 2φ decision.
    AlgebraicReal cos_gamma =
        scale_by_rational(mpq_class(-1, 2), shift_by_rational(1, cos_of(two_phi)));
    PerpendicularDecision rep = decide_perpendicular_product(two_phi);
    if (!rep.half.rational)
        return {std::move(cos_gamma), AngleVerdict::irrational_multiple(rep.half.witness),
                std::nullopt};
    RationalAngle gamma(rep.half.angle.den - rep.half.angle.num, rep.half.angle.den);
    mpz_class order = rotation_order(gamma);
    return {std::move(cos_gamma), AngleVerdict::rational_multiple(std::move(gamma)),
            std::move(order)};
}

// ---------------------------------------------------------------------------
// Exact {-1,0,1} rotation matrices and brute-force closure

namespace {

using Mat3 = std::array<int, 9>;

Mat3 mat_mul(const Mat3& a, const Mat3& b) {
    Mat3 c{};
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) {
            int aik = a[i * 3 + k];
            if (aik == 0) continue;
            for (int j = 0; j < 3; ++j) c[i * 3 + j] += aik * b[k * 3 + j];
        }
    return c;
}

Mat3 exact_rotation_matrix(const Gate& g) {
    RationalAngle a = g.angle.mod_two_pi();
    if (a.den != 1 && a.den != 2)
        throw std::invalid_argument("group_closure: gate angle is not a multiple of π/2");
    int c = 0, s = 0;
    if (a.den == 1) {
        c = (a.num == 0) ? 1 : -1;
        s = 0;
    } else {
        c = 0;
        s = (a.num == 1) ? 1 : -1;
    }
    const mpz_class n2 = norm2(g.axis);
    mpz_class t = 0;
    if (s != 0) {
        if (mpz_perfect_square_p(n2.get_mpz_t()) == 0)
            throw std::invalid_argument(
                "group_closure: quarter-turn about this axis is not an exact integer matrix");
        mpz_sqrt(t.get_mpz_t(), n2.get_mpz_t());
    }
    const auto& k = g.axis;
    const mpz_class kmat[9] = {0, -k[2], k[1], k[2], 0, -k[0], -k[1], k[0], 0};
    Mat3 m{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            mpq_class e = (i == j) ? mpq_class(c) : mpq_class(0);
            if (s != 0) e += mpq_class(s * kmat[i * 3 + j], t);
            e += mpq_class((1 - c) * k[i] * k[j], n2);
            e.canonicalize();
            if (e.get_den() != 1 || e < -1 || e > 1)
                throw std::invalid_argument(
                    "group_closure: rotation matrix entries are not all in {-1,0,1}");
            m[i * 3 + j] = static_cast<int>(e.get_num().get_si());
        }
    return m;
}

}  // namespace

ClosureResult group_closure(const std::vector<Gate>& gates, unsigned long cap) {
    if (gates.empty()) throw std::invalid_argument("group_closure: empty gate list");
    std::vector<Mat3> gens;
    gens.reserve(gates.size());
    for (const Gate& g : gates) gens.push_back(exact_rotation_matrix(g));

    std::set<Mat3> seen(gens.begin(), gens.end());
    std::vector<Mat3> frontier(seen.begin(), seen.end());
    while (!frontier.empty()) {
        if (seen.size() > cap) return {true, seen.size()};
        std::vector<Mat3> next;
        for (const Mat3& x : frontier)
            for (const Mat3& g : gens) {
                Mat3 y = mat_mul(x, g);
                if (seen.insert(y).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    if (seen.size() > cap) return {true, seen.size()};
    return {false, seen.size()};
}

// ---------------------------------------------------------------------------
// Word search

namespace {

// Exact rotation about a fixed integer axis; products of collinear rotations
// stay in this cheap form.
struct AxisAngleState {
    std::array<mpz_class, 3> axis;
    RationalAngle angle;
};

struct QuatState {
    AlgebraicReal w;
    std::array<AlgebraicReal, 3> v;
};

using WordState = std::variant<AxisAngleState, QuatState>;

QuatState to_quat(const AxisAngleState& s) {
    RationalAngle h = s.angle.half();
    AlgebraicReal w = cos_of(h);
    AlgebraicReal sv = mul_capped(sin_of(h), sqrt_of_rational(mpq_class(1) / norm2(s.axis)));
    std::array<AlgebraicReal, 3> v{AlgebraicReal::rational(0), AlgebraicReal::rational(0),
                                   AlgebraicReal::rational(0)};
    for (int i = 0; i < 3; ++i)
        if (s.axis[i] != 0) v[i] = scale_by_rational(mpq_class(s.axis[i]), sv);
    return {std::move(w), std::move(v)};
}

QuatState quat_mul(const QuatState& a, const QuatState& b) {
    AlgebraicReal dp = add_capped(add_capped(mul_capped(a.v[0], b.v[0]),
                                             mul_capped(a.v[1], b.v[1])),
                                  mul_capped(a.v[2], b.v[2]));
    AlgebraicReal w = sub_capped(mul_capped(a.w, b.w), dp);
    std::array<AlgebraicReal, 3> v{AlgebraicReal::rational(0), AlgebraicReal::rational(0),
                                   AlgebraicReal::rational(0)};
    for (int i = 0; i < 3; ++i) {
        int j = (i + 1) % 3, k = (i + 2) % 3;
        AlgebraicReal cr = sub_capped(mul_capped(a.v[j], b.v[k]), mul_capped(a.v[k], b.v[j]));
        v[i] = add_capped(add_capped(mul_capped(a.w, b.v[i]), mul_capped(b.w, a.v[i])), cr);
    }
    return {std::move(w), std::move(v)};
}

WordState compose(const WordState& state, const AxisAngleState& g) {
    if (const auto* ax = std::get_if<AxisAngleState>(&state)) {
        const auto c = cross3(ax->axis, g.axis);
        if (c[0] == 0 && c[1] == 0 && c[2] == 0) {
            const bool same = dot3(ax->axis, g.axis) > 0;
            RationalAngle sum = same ? (ax->angle + g.angle) : (ax->angle - g.angle);
            return AxisAngleState{ax->axis, sum.mod_two_pi()};
        }
        return quat_mul(to_quat(*ax), to_quat(g));
    }
    return quat_mul(std::get<QuatState>(state), to_quat(g));
}

}  // namespace

std::optional<WordWitness> word_search(const std::vector<Gate>& gates, unsigned max_len,
                                       WordSearchStats* stats) {
    if (gates.empty() || max_len == 0)
        throw std::invalid_argument("word_search: need gates and max_len >= 1");
    const std::size_t nletters = 2 * gates.size();
    auto letter_of = [&](std::size_t idx) { return Letter{idx % gates.size(), idx >= gates.size()}; };
    auto gate_state = [&](const Letter& l) {
        const Gate& g = gates[l.gate];
        return AxisAngleState{g.axis, l.inverse ? g.angle.negated() : g.angle};
    };

    for (unsigned len = 1; len <= max_len; ++len) {
        std::vector<std::size_t> idx(len, 0);
        while (true) {
            // Skip words with an adjacent letter-inverse pair; their rotation
            // equals an already-checked shorter word.
            bool reducible = false;
            for (unsigned i = 0; i + 1 < len; ++i) {
                Letter x = letter_of(idx[i]), y = letter_of(idx[i + 1]);
                if (x.gate == y.gate && x.inverse != y.inverse) {
                    reducible = true;
                    break;
                }
            }
            if (!reducible) {
                std::vector<Letter> word;
                word.reserve(len);
                for (auto i : idx) word.push_back(letter_of(i));
                try {
                    WordState state = gate_state(word[0]);
                    for (unsigned i = 1; i < len; ++i) state = compose(state, gate_state(word[i]));
                    if (stats) ++stats->words_checked;
                    if (const auto* q = std::get_if<QuatState>(&state)) {
                        AngleVerdict v =
                            double_cos_membership(scale_by_rational(2, q->w));
                        if (!v.rational) {
                            AlgebraicReal cg = shift_by_rational(
                                -1, scale_by_rational(2, alg_square(q->w)));
                            return WordWitness{std::move(word),
                                               {std::move(cg), std::move(v), std::nullopt}};
                        }
                    }
                } catch (const DegreeOverflow&) {
                    if (stats) stats->degree_overflows.push_back(std::move(word));
                }
            }
            // next word in lexicographic order
            long pos = static_cast<long>(len) - 1;
            while (pos >= 0 && idx[static_cast<std::size_t>(pos)] + 1 == nletters) {
                idx[static_cast<std::size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0) break;
            ++idx[static_cast<std::size_t>(pos)];
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Gate-set file format

std::vector<Gate> parse_gate_set_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("gate file: ") + e.what());
    }
    if (!doc.is_object()) throw std::invalid_argument("gate file: top level must be an object");
    for (auto it = doc.begin(); it != doc.end(); ++it)
        if (it.key() != "gates")
            throw std::invalid_argument("gate file: unknown field \"" + it.key() + "\"");
    if (!doc.contains("gates") || !doc["gates"].is_array())
        throw std::invalid_argument("gate file: missing \"gates\" array");

    std::vector<Gate> out;
    std::size_t index = 0;
    for (const auto& g : doc["gates"]) {
        const std::string where = "gate #" + std::to_string(index++);
        if (!g.is_object()) throw std::invalid_argument(where + ": must be an object");
        for (auto it = g.begin(); it != g.end(); ++it)
            if (it.key() != "name" && it.key() != "axis" && it.key() != "angle")
                throw std::invalid_argument(where + ": unknown field \"" + it.key() + "\"");
        if (!g.contains("name") || !g["name"].is_string())
            throw std::invalid_argument(where + ": missing string field \"name\"");
        if (!g.contains("axis") || !g["axis"].is_array() || g["axis"].size() != 3)
            throw std::invalid_argument(where + ": \"axis\" must be an array of 3 integers");
        std::array<mpz_class, 3> axis;
        for (int i = 0; i < 3; ++i) {
            if (!g["axis"][i].is_number_integer())
                throw std::invalid_argument(where + ": axis entries must be integers");
            axis[i] = mpz_class(g["axis"][i].get<long>());
        }
        if (!g.contains("angle") || !g["angle"].is_object())
            throw std::invalid_argument(where + ": missing object field \"angle\"");
        const auto& an = g["angle"];
        for (auto it = an.begin(); it != an.end(); ++it)
            if (it.key() != "num" && it.key() != "den")
                throw std::invalid_argument(where + ": unknown angle field \"" + it.key() + "\"");
        if (!an.contains("num") || !an["num"].is_number_integer() || !an.contains("den") ||
            !an["den"].is_number_integer())
            throw std::invalid_argument(where + ": angle needs integer \"num\" and \"den\"");
        long num = an["num"].get<long>(), den = an["den"].get<long>();
        if (den == 0) throw std::invalid_argument(where + ": angle denominator must be nonzero");
        out.emplace_back(g["name"].get<std::string>(), std::move(axis),
                         RationalAngle(mpz_class(num), mpz_class(den)));
    }
    if (out.empty()) throw std::invalid_argument("gate file: \"gates\" must be nonempty");
    return out;
}

}  // namespace rotorder
