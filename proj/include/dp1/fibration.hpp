/* A del Pezzo fibration of degree 1 in normal form: the sextic
 *     w^2 + z^3 + z f4(x,y) + f6(x,y) = 0
 * in P(1,1,2,3) over the base DVR, stored as the pair of binary forms.
 */
#pragma once

#include <stdexcept>
#include <string>

#include "dp1/binary_form.hpp"

namespace dp1 {

struct Fibration {
    BinaryForm f4{4};
    BinaryForm f6{6};

    Fibration() = default;
    Fibration(BinaryForm f4_, BinaryForm f6_, bool allow_degenerate = false)
        : f4(std::move(f4_)), f6(std::move(f6_)) {
        if (f4.degree() != 4 || f6.degree() != 6)
            throw std::domain_error("Fibration: f4/f6 degree mismatch");
        if (!f4.in_dvr() || !f6.in_dvr())
            throw std::domain_error("Fibration: coefficient with negative valuation");
        degenerate = f4.is_zero_mod_t() && f6.is_zero_mod_t();
        if (degenerate && !allow_degenerate)
            throw std::domain_error(
                "Fibration: central fiber degenerates to the cone w^2+z^3=0 "
                "(pass allow_degenerate to accept)");
    }

    // central fiber is the cone w^2 + z^3 = 0
    bool degenerate = false;

    WPoly to_wpoly(VarSet set = VarSet::XYZW) const {
        WPoly r(set);
        Mono w2;
        w2.e[kVarW] = 2;
        r.add_term(w2, TCoeff(1));
        Mono z3;
        z3.e[kVarZ] = 3;
        r.add_term(z3, TCoeff(1));
        r += WPoly::variable(kVarZ, set) * f4.to_wpoly(set);
        r += f6.to_wpoly(set);
        return r;
    }

    static Fibration from_wpoly(const WPoly& p, bool allow_degenerate = false) {
        Mono w2;
        w2.e[kVarW] = 2;
        Mono z3;
        z3.e[kVarZ] = 3;
        if (!p.coeff(w2).is_one() || !p.coeff(z3).is_one())
            throw std::domain_error("Fibration: not in normal form (w^2/z^3 not monic)");
        BinaryForm f4(4), f6(6);
        for (const auto& [m, c] : p.terms()) {
            if (m.e[kVarW] == 2 && m.e[kVarZ] == 0 && m.e[kVarX] == 0 && m.e[kVarY] == 0)
                continue;
            if (m.e[kVarW] == 0 && m.e[kVarZ] == 3 && m.e[kVarX] == 0 && m.e[kVarY] == 0)
                continue;
            if (m.e[kVarW] == 0 && m.e[kVarZ] == 1 && m.e[kVarX] + m.e[kVarY] == 4) {
                f4[m.e[kVarY]] = c;
                continue;
            }
            if (m.e[kVarW] == 0 && m.e[kVarZ] == 0 && m.e[kVarX] + m.e[kVarY] == 6) {
                f6[m.e[kVarY]] = c;
                continue;
            }
            throw std::domain_error("Fibration: unexpected monomial " +
                                    WPoly::monomial(c, m, p.var_set()).to_string());
        }
        return Fibration(std::move(f4), std::move(f6), allow_degenerate);
    }

    Fibration swapped_xy(bool allow_degenerate = true) const {
        return Fibration(f4.swapped_xy(), f6.swapped_xy(), allow_degenerate);
    }

    friend bool operator==(const Fibration& a, const Fibration& b) {
        return a.f4 == b.f4 && a.f6 == b.f6;
    }

    std::string to_string(VarSet set = VarSet::XYZW) const {
        return to_wpoly(set).to_string();
    }
};

}  // namespace dp1
