#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "rotorder/algebraic.hpp"
#include "rotorder/angle.hpp"
#include "rotorder/decide.hpp"

namespace rotorder {

/// A rotation gate: unnormalized integer axis plus the SO(3) rotation angle
/// as a rational multiple of π (the SU(2) half-angle is angle/2).
struct Gate {
    std::string name;
    std::array<mpz_class, 3> axis;
    RationalAngle angle;

    Gate(std::string n, std::array<mpz_class, 3> ax, RationalAngle an);
};

/// Verdict for a composed rotation: its cosine as an exact algebraic number,
/// the rationality decision for the rotation angle, and the exact SO(3) order
/// (empty = infinite order).
struct ProductVerdict {
    AlgebraicReal cos_gamma;
    AngleVerdict verdict;
    std::optional<mpz_class> order;

    bool infinite() const { return !order.has_value(); }
};

/// Cosine of the angle between the two (unnormalized) axes, exactly:
/// dot/sqrt(|a|^2 |b|^2), rational when the norm product is a perfect square.
AlgebraicReal axis_cosine(const Gate& a, const Gate& b);

/// cos γ for the product rotation a·b, via the half-angle scalar composition
/// c = cos(φ1/2)cos(φ2/2) - sin(φ1/2)sin(φ2/2)·(k̂1·k̂2) and cos γ = 2c² - 1.
/// Product-to-sum keeps the degrees down when the axis cosine is rational.
AlgebraicReal product_cos_gamma(const Gate& a, const Gate& b);

/// Full order decision for the two-gate product.
ProductVerdict product_order(const Gate& a, const Gate& b);

/// Order decision for Hadamard · phase(φ): infinite except at
/// φ ≡ 0, π/4, π/2, 3π/4 (mod π). Decided through the perpendicular
/// equal-angle machinery applied to 2φ, with the recovered angle shifted by π.
ProductVerdict ht_classify(const RationalAngle& phi);

struct ClosureResult {
    bool cap_exceeded = false;
    unsigned long order = 0;
};

/// Brute-force closure of the generated matrix group. Requires every angle in
/// {kπ/2} and every resulting exact rotation matrix to have entries in
/// {-1, 0, 1}; rejects gate sets outside that precondition.
ClosureResult group_closure(const std::vector<Gate>& gates, unsigned long cap);

struct Letter {
    std::size_t gate = 0;
    bool inverse = false;

    bool operator==(const Letter&) const = default;
};

struct WordWitness {
    std::vector<Letter> word;
    ProductVerdict verdict;
};

struct WordSearchStats {
    unsigned long words_checked = 0;
    std::vector<std::vector<Letter>> degree_overflows;
};

/// First word (length-then-lexicographic over generators and inverses, up to
/// max_len) whose rotation angle is an irrational multiple of π. A hit
/// certifies the generated set is infinite; no hit certifies nothing.
/// Words whose annihilators exceed degree 64 are recorded in `stats` and
/// skipped rather than failing the search.
std::optional<WordWitness> word_search(const std::vector<Gate>& gates, unsigned max_len,
                                       WordSearchStats* stats = nullptr);

/// Gate-set JSON: {"gates":[{"name":..., "axis":[i,j,k], "angle":{"num":p,"den":q}}]}.
/// Angles in units of π; axis entries integers; unknown fields rejected.
std::vector<Gate> parse_gate_set_json(const std::string& text);

}  // namespace rotorder
