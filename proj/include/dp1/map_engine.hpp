/* Monomial fiberwise maps between sextics in normal form.
 *
 * A map scales coordinates by powers of t,
 *     p = t^a x,  q = t^b y,  r = t^c z,  s = t^d w,
 * with inverse exponents (alpha,beta,gamma,delta) determined by the
 * weight system
 *     a+alpha = b+beta = m,  c+gamma = 2m,  d+delta = 3m,
 *     2d = 3c,  2delta = 3gamma,
 * both quadruples normalized to contain a zero.
 */
#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "dp1/fibration.hpp"

namespace dp1 {

struct MonomialMap {
    std::array<int, 4> fwd{0, 0, 0, 0};  // (a, b, c, d)
    std::array<int, 4> inv{0, 0, 0, 0};  // (alpha, beta, gamma, delta)
    int m = 0;

    bool is_identity() const { return m == 0; }

    MonomialMap inverse() const {
        MonomialMap r;
        r.fwd = inv;
        r.inv = fwd;
        r.m = m;
        return r;
    }

    MonomialMap swapped_xy() const {
        MonomialMap r = *this;
        std::swap(r.fwd[0], r.fwd[1]);
        std::swap(r.inv[0], r.inv[1]);
        return r;
    }

    bool satisfies_invariants() const {
        int mn_f = std::min(std::min(fwd[0], fwd[1]), std::min(fwd[2], fwd[3]));
        int mn_i = std::min(std::min(inv[0], inv[1]), std::min(inv[2], inv[3]));
        return mn_f == 0 && mn_i == 0 && fwd[0] + inv[0] == m && fwd[1] + inv[1] == m &&
               fwd[2] + inv[2] == 2 * m && fwd[3] + inv[3] == 3 * m &&
               2 * fwd[3] == 3 * fwd[2] && 2 * inv[3] == 3 * inv[2];
    }

    std::string fwd_string() const {
        return std::to_string(fwd[0]) + "," + std::to_string(fwd[1]) + "," +
               std::to_string(fwd[2]) + "," + std::to_string(fwd[3]);
    }
};

class MapError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Solve the weight system for a forward exponent quadruple. The input is
// first normalized by the projective rescale (a,b,c,d) -> (a-e, b-e,
// c-2e, d-3e), which is the identity on the underlying map.
inline MonomialMap solve_weights(std::array<int, 4> fwd) {
    for (int v : fwd) {
        if (v < 0) throw MapError("solve_weights: negative exponent");
    }
    if (2 * fwd[3] != 3 * fwd[2])
        throw MapError(
            "solve_weights: 2d != 3c, the map does not preserve the normal form "
            "(condition (5) fails)");
    int e = std::min(std::min(fwd[0], fwd[1]), std::min(fwd[2] / 2, fwd[3] / 3));
    fwd = {fwd[0] - e, fwd[1] - e, fwd[2] - 2 * e, fwd[3] - 3 * e};
    MonomialMap r;
    r.fwd = fwd;
    r.m = std::max(std::max(fwd[0], fwd[1]), fwd[2] / 2);
    r.inv = {r.m - fwd[0], r.m - fwd[1], 2 * r.m - fwd[2], 3 * r.m - fwd[3]};
    if (!r.satisfies_invariants())
        throw MapError("solve_weights: no valid level m for " + r.fwd_string());
    return r;
}

inline MonomialMap parse_map(const std::string& text) {
    std::array<int, 4> fwd{};
    std::size_t pos = 0;
    for (int i = 0; i < 4; ++i) {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == ',')) ++pos;
        std::size_t start = pos;
        while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) ||
                                     text[pos] == '-'))
            ++pos;
        if (start == pos) throw MapError("parse_map: expected four integers \"a,b,c,d\"");
        fwd[i] = std::stoi(text.substr(start, pos - start));
    }
    return solve_weights(fwd);
}

struct CaseClass {
    enum class Tag { A, B, C, D };
    Tag tag = Tag::D;
    int m = 0;
    // case D data, normalized so that k <= l
    int k = 0;
    int l = 0;
    bool swapped_xy = false;  // x<->y swap applied during normalization
    bool flipped = false;     // map and inverse exchanged during normalization

    std::string tag_name() const {
        switch (tag) {
            case Tag::A: return "A";
            case Tag::B: return "B";
            case Tag::C: return "C";
            default: return "D";
        }
    }
};

// Classify a solved map into the four shapes, using the x<->y symmetry
// and, when the z-power sits on the forward side only partially, the
// exchange of the map with its inverse.
inline CaseClass classify_case(const MonomialMap& map) {
    if (!map.satisfies_invariants())
        throw MapError("classify_case: map violates the weight-system invariants");
    if (map.m == 0)
        throw MapError("classify_case: identity map has no case (level m = 0)");
    CaseClass cc;
    cc.m = map.m;
    MonomialMap w = map;
    if (w.fwd[2] > 0 && w.inv[2] > 0) {
        // both sides carry z-powers: case D
        cc.tag = CaseClass::Tag::D;
        if (w.fwd[0] > w.fwd[1]) {
            w = w.swapped_xy();
            cc.swapped_xy = true;
        }
        if (w.fwd[0] != 0 || w.fwd[1] != w.m || w.fwd[2] % 2 != 0)
            throw MapError("classify_case: exponents match no case shape");
        cc.k = w.fwd[2] / 2;
        cc.l = w.inv[2] / 2;
        if (cc.k > cc.l) {
            std::swap(cc.k, cc.l);
            cc.flipped = true;
        }
        if (cc.k <= 0 || cc.l <= 0 || cc.k + cc.l != cc.m)
            throw MapError("classify_case: exponents match no case shape");
        return cc;
    }
    if (w.fwd[2] > 0) {
        // z-power entirely on the forward side: the inverse has the table shape
        w = w.inverse();
        cc.flipped = true;
    }
    // now fwd = (a, b, 0, 0) with max(a,b) = m
    if (w.fwd[0] > w.fwd[1]) {
        w = w.swapped_xy();
        cc.swapped_xy = true;
    }
    int a = w.fwd[0], b = w.fwd[1];
    if (b != w.m) throw MapError("classify_case: exponents match no case shape");
    if (a == 0) {
        cc.tag = CaseClass::Tag::B;
    } else if (a == w.m) {
        cc.tag = CaseClass::Tag::C;
    } else {
        cc.tag = CaseClass::Tag::A;
    }
    return cc;
}

struct TransformViolation {
    std::string monomial;
    int valuation;          // after clearing; negative = offending
    int required_deficit;   // how far below the DVR it sits
};

struct TransformResult {
    bool ok = false;
    Fibration result;              // valid when ok
    int cleared_valuation = 0;     // equals 2*delta = 3*gamma on success
    bool used_xy_swap = false;     // transform succeeded for the swapped orientation
    std::vector<TransformViolation> violations;  // when !ok, for the direct attempt
    std::string error;
};

namespace detail {

inline TransformResult transform_attempt(const Fibration& X, const MonomialMap& map) {
    TransformResult out;
    WPoly poly = X.to_wpoly();
    std::array<std::pair<int, int>, 4> img{{{map.inv[0], kVarX},
                                            {map.inv[1], kVarY},
                                            {map.inv[2], kVarZ},
                                            {map.inv[3], kVarW}}};
    WPoly sub = poly.substitute_monomial(img);
    int target = 2 * map.inv[3];  // valuation of the s^2 term
    int got = *sub.t_valuation();
    out.cleared_valuation = target;
    if (got < target) {
        // some monomial falls outside the DVR after the s^2-normalized
        // clearing; the central fiber of the image would pass through a
        // singular point of the weighted space
        WPoly cleared = sub.shifted_t(-target);
        for (const auto& [m, c] : cleared.terms()) {
            int v = *c.valuation();
            if (v < 0) {
                TransformViolation tv;
                tv.monomial = WPoly::monomial(TCoeff(1), m, VarSet::PQRS).to_string();
                tv.valuation = v;
                tv.required_deficit = -v;
                out.violations.push_back(tv);
            }
        }
        out.error = "image not in the DVR (Gorenstein fails on the image)";
        return out;
    }
    WPoly cleared = sub.shifted_t(-target).with_var_set(VarSet::PQRS);
    out.result = Fibration::from_wpoly(cleared, /*allow_degenerate=*/true);
    out.ok = true;
    return out;
}

}  // namespace detail

// Substitute the inverse map into X, clear t^{2 delta}, rename to
// (p,q,r,s). If the direct orientation leaves the DVR, the x<->y swapped
// orientation is tried before reporting failure.
inline TransformResult transform_fibration(const Fibration& X, const MonomialMap& map) {
    TransformResult direct = detail::transform_attempt(X, map);
    if (direct.ok || map.fwd[0] == map.fwd[1]) return direct;
    TransformResult swapped = detail::transform_attempt(X, map.swapped_xy());
    if (swapped.ok) {
        swapped.used_xy_swap = true;
        return swapped;
    }
    return direct;
}

struct CoefficientConstraint {
    std::string name;  // e.g. "f4[2]" or "g6[1]"
    int index;
    int min_valuation;
};

// The case-D valuation table. On the image side (g4, g6) the exponents
// are 4k - im and 6k - im; on the source side (f4, f6) they mirror to
// im - 4k and im - 6k. Entries are clamped at zero.
inline std::vector<CoefficientConstraint> coefficient_constraints(const CaseClass& cc) {
    if (cc.tag != CaseClass::Tag::D)
        throw MapError("coefficient_constraints: case D required");
    if (cc.k <= 0 || cc.l <= 0) throw MapError("coefficient_constraints: k,l > 0 required");
    std::vector<CoefficientConstraint> out;
    auto add = [&out](const std::string& base, int i, int v) {
        out.push_back({base + "[" + std::to_string(i) + "]", i, std::max(v, 0)});
    };
    for (int i = 0; i <= 4; ++i) add("g4", i, 4 * cc.k - i * cc.m);
    for (int i = 0; i <= 6; ++i) add("g6", i, 6 * cc.k - i * cc.m);
    for (int i = 0; i <= 4; ++i) add("f4", i, i * cc.m - 4 * cc.k);
    for (int i = 0; i <= 6; ++i) add("f6", i, i * cc.m - 6 * cc.k);
    return out;
}

struct ConstraintReport {
    bool pass = false;
    bool degenerate = false;
    std::vector<TransformViolation> violations;  // all of them, not first-failure
};

namespace detail {

inline std::vector<TransformViolation> check_side(const Fibration& X, int k, int m) {
    std::vector<TransformViolation> v;
    auto need = [&v](const TCoeff& c, int minv, const std::string& name) {
        if (c.is_zero()) return;
        int got = *c.valuation();
        if (got < minv)
            v.push_back({name, got, minv - got});
    };
    for (int i = 0; i <= 4; ++i)
        need(X.f4[i], std::max(i * m - 4 * k, 0), "f4[" + std::to_string(i) + "]");
    for (int i = 0; i <= 6; ++i)
        need(X.f6[i], std::max(i * m - 6 * k, 0), "f6[" + std::to_string(i) + "]");
    return v;
}

}  // namespace detail

// Evaluate the valuation table on X's actual coefficients, in the
// orientation the map prescribes; the x<->y retry belongs to the
// transform engine. The check passes exactly when the direct transform
// attempt stays in the DVR.
inline ConstraintReport check_constraints(const Fibration& X, const MonomialMap& map) {
    CaseClass cc = classify_case(map);
    if (cc.tag != CaseClass::Tag::D)
        throw MapError("check_constraints: case D required");
    ConstraintReport r;
    r.degenerate = X.degenerate;
    // which of x,y carries t^m in the inverse decides the mirror
    int k = map.fwd[2] / 2;
    r.violations = map.inv[0] == map.m ? detail::check_side(X, k, map.m)
                                       : detail::check_side(X.swapped_xy(), k, map.m);
    r.pass = r.violations.empty();
    return r;
}

}  // namespace dp1
