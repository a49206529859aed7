/* Reduction of a general degree-6 hypersurface
 *
 *   a w^2 + b z^3 + w z cf1(x,y) + w f3(x,y) + z^2 f2(x,y)
 *                 + z f4(x,y) + f6(x,y) = 0
 *
 * over the DVR to the normal form w^2 + z^3 + z f4 + f6 = 0, through a
 * unit rescale and triangular shifts of w and z. The recorded change of
 * coordinates expresses the normal-form coordinates in the input ones:
 *
 *   w_nf = u*w + s1(x,y)*z + s3(x,y),   z_nf = v*z + b2(x,y)
 *
 * with u = sqrt(a), v = cbrt(b) as truncated unit series. Exactness is
 * certified by substituting the record back into the normal form and
 * comparing with the input on the nose; if series truncation breaks the
 * identity the operation reports an error asking for a higher guard.
 */
#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "dp1/fibration.hpp"

namespace dp1 {

struct GeneralSextic {
    TCoeff a{1};         // w^2
    TCoeff b{1};         // z^3
    BinaryForm cf1{1};   // w z * cf1, the f1 slot with its scalar absorbed
    BinaryForm f3{3};    // w * f3
    BinaryForm f2{2};    // z^2 * f2
    BinaryForm f4{4};    // z * f4
    BinaryForm f6{6};

    WPoly to_wpoly(VarSet set = VarSet::XYZW) const {
        WPoly w = WPoly::variable(kVarW, set);
        WPoly z = WPoly::variable(kVarZ, set);
        WPoly r = w * w * WPoly::constant(a, set);
        r += z * z * z * WPoly::constant(b, set);
        r += w * z * cf1.to_wpoly(set);
        r += w * f3.to_wpoly(set);
        r += z * z * f2.to_wpoly(set);
        r += z * f4.to_wpoly(set);
        r += f6.to_wpoly(set);
        return r;
    }

    static GeneralSextic from_wpoly(const WPoly& p) {
        GeneralSextic s;
        s.a = TCoeff();
        s.b = TCoeff();
        for (const auto& [m, c] : p.terms()) {
            int dx = m.e[kVarX] + m.e[kVarY];
            if (m.e[kVarW] == 2 && m.e[kVarZ] == 0 && dx == 0) {
                s.a = c;
            } else if (m.e[kVarW] == 0 && m.e[kVarZ] == 3 && dx == 0) {
                s.b = c;
            } else if (m.e[kVarW] == 1 && m.e[kVarZ] == 1 && dx == 1) {
                s.cf1[m.e[kVarY]] = c;
            } else if (m.e[kVarW] == 1 && m.e[kVarZ] == 0 && dx == 3) {
                s.f3[m.e[kVarY]] = c;
            } else if (m.e[kVarW] == 0 && m.e[kVarZ] == 2 && dx == 2) {
                s.f2[m.e[kVarY]] = c;
            } else if (m.e[kVarW] == 0 && m.e[kVarZ] == 1 && dx == 4) {
                s.f4[m.e[kVarY]] = c;
            } else if (m.e[kVarW] == 0 && m.e[kVarZ] == 0 && dx == 6) {
                s.f6[m.e[kVarY]] = c;
            } else {
                throw std::domain_error("GeneralSextic: monomial of weighted degree != 6");
            }
        }
        return s;
    }
};

struct GorensteinResult {
    bool ok = false;
    // set on violation
    std::string offending_coefficient;
    std::string singular_point;
};

// The central fiber avoids the two singular points of P(1,1,2,3) exactly
// when both a and b are units of the DVR.
inline GorensteinResult gorenstein_check(const GeneralSextic& s) {
    GorensteinResult r;
    if (s.a.is_zero() || !s.a.in_dvr() || !s.a.is_unit()) {
        r.offending_coefficient = "a";
        r.singular_point = "(0:0:0:1)";
        return r;
    }
    if (s.b.is_zero() || !s.b.in_dvr() || !s.b.is_unit()) {
        r.offending_coefficient = "b";
        r.singular_point = "(0:0:1:0)";
        return r;
    }
    r.ok = true;
    return r;
}

struct CoordChange {
    TCoeff u{1};
    TCoeff v{1};
    BinaryForm s1{1};
    BinaryForm s3{3};
    BinaryForm b2{2};

    bool is_identity() const {
        return u.is_one() && v.is_one() && s1.is_zero() && s3.is_zero() && b2.is_zero();
    }

    // substitute the recorded coordinates into a polynomial in (x,y,z,w)
    WPoly apply(const WPoly& poly) const {
        VarSet set = poly.var_set();
        WPoly wimg = WPoly::variable(kVarW, set).scaled(u) +
                     WPoly::variable(kVarZ, set) * s1.to_wpoly(set) +
                     s3.to_wpoly(set);
        WPoly zimg = WPoly::variable(kVarZ, set).scaled(v) + b2.to_wpoly(set);
        std::map<int, WPoly> images;
        images[kVarW] = wimg;
        images[kVarZ] = zimg;
        return poly.substitute_many(images);
    }
};

struct NormalizeResult {
    Fibration fibration;
    CoordChange record;
};

class NormalFormError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline NormalizeResult normalize_sextic(const GeneralSextic& s, int guard = 8) {
    GorensteinResult g = gorenstein_check(s);
    if (!g.ok)
        throw NormalFormError("normalize_sextic: coefficient " + g.offending_coefficient +
                              " is not a unit; central fiber passes through " +
                              g.singular_point);
    WPoly input = s.to_wpoly();
    int prec = input.max_t_degree() + guard + 1;

    auto u_opt = s.a.sqrt_series(prec);
    if (!u_opt)
        throw NormalFormError(
            "normalize_sextic: a is not a square over Q (a field extension "
            "would be required; not performed)");
    auto v_opt = s.b.cbrt_series(prec);
    if (!v_opt)
        throw NormalFormError(
            "normalize_sextic: b is not a cube over Q (a field extension "
            "would be required; not performed)");
    CoordChange rec;
    rec.u = *u_opt;
    rec.v = *v_opt;

    TCoeff inv2u = rec.u.scaled(Rational(2)).inverse_series(prec);
    rec.s1 = s.cf1.scaled(inv2u);
    rec.s3 = s.f3.scaled(inv2u);
    BinaryForm f2_res = s.f2 - rec.s1 * rec.s1;
    TCoeff inv3v2 = (rec.v * rec.v).scaled(Rational(3)).inverse_series(prec);
    rec.b2 = f2_res.scaled(inv3v2);

    // residual = input - w_nf^2 - z_nf^3 should be z*(deg 4) + (deg 6)
    VarSet set = input.var_set();
    WPoly wimg = WPoly::variable(kVarW, set).scaled(rec.u) +
                 WPoly::variable(kVarZ, set) * rec.s1.to_wpoly(set) +
                 rec.s3.to_wpoly(set);
    WPoly zimg = WPoly::variable(kVarZ, set).scaled(rec.v) + rec.b2.to_wpoly(set);
    WPoly residual = input - wimg * wimg - zimg * zimg * zimg;

    BinaryForm rz(4), rc(6);
    for (const auto& [m, c] : residual.terms()) {
        int dx = m.e[kVarX] + m.e[kVarY];
        if (m.e[kVarW] == 0 && m.e[kVarZ] == 1 && dx == 4) {
            rz[m.e[kVarY]] = c;
        } else if (m.e[kVarW] == 0 && m.e[kVarZ] == 0 && dx == 6) {
            rc[m.e[kVarY]] = c;
        }
        // other slots are truncation dust; the final check decides
    }
    TCoeff invv = rec.v.inverse_series(prec);
    BinaryForm f4p = rz.scaled(invv);
    BinaryForm f6p = rc - rec.b2 * f4p;

    WPoly nf = WPoly::monomial(TCoeff(1), Mono{{0, 0, 0, 2}}, set) +
               WPoly::monomial(TCoeff(1), Mono{{0, 0, 3, 0}}, set) +
               WPoly::variable(kVarZ, set) * f4p.to_wpoly(set) + f6p.to_wpoly(set);
    if (rec.apply(nf) != input)
        throw NormalFormError(
            "normalize_sextic: back-substitution check failed; the required "
            "unit roots or shifts are not exactly representable at this "
            "precision (raise the guard)");

    NormalizeResult out;
    out.fibration = Fibration(f4p, f6p, /*allow_degenerate=*/true);
    out.record = rec;
    return out;
}

}  // namespace dp1
