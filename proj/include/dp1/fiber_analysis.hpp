/* Fiber-level analysis: the trichotomy of a central fiber (normal with
 * classified points / non-normal cusp / non-normal node), extraction of
 * the singular locus through resultants and gcds of binary forms, and a
 * Jacobian smoothness scan of a whole fibration over the base.
 */
#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "dp1/singularity.hpp"

namespace dp1 {

// exact quotient of binary forms (nullopt if not divisible)
inline std::optional<BinaryForm> binary_divide_exact(const BinaryForm& num,
                                                     const BinaryForm& den) {
    if (den.is_zero()) throw std::domain_error("binary_divide_exact: zero divisor");
    if (num.is_zero()) return BinaryForm(0);
    if (num.degree() < den.degree()) return std::nullopt;
    auto split = [](const BinaryForm& p, int& xm, int& ym, std::vector<TCoeff>& core) {
        int lo = 0;
        while (p[lo].is_zero()) ++lo;
        int hi = p.degree();
        while (p[hi].is_zero()) --hi;
        ym = lo;
        xm = p.degree() - hi;
        core.assign(static_cast<std::size_t>(hi - lo) + 1, TCoeff());
        for (int i = lo; i <= hi; ++i) core[static_cast<std::size_t>(i - lo)] = p[i];
    };
    int nx, ny, dx, dy;
    std::vector<TCoeff> nc, dc;
    split(num, nx, ny, nc);
    split(den, dx, dy, dc);
    if (nx < dx || ny < dy) return std::nullopt;
    auto q = uvp::divide_exact(nc, dc);
    if (!q) return std::nullopt;
    BinaryForm r(num.degree() - den.degree());
    for (std::size_t i = 0; i < q->size(); ++i)
        r[static_cast<int>(i) + (ny - dy)] = (*q)[i];
    return r;
}

// dehomogenizations of a binary form into a univariate polynomial held in
// a TCoeff (the t slot carries the surviving variable's exponent)
inline TCoeff dehomogenize_y1(const BinaryForm& f) {
    TCoeff r;  // polynomial in x
    for (int i = 0; i <= f.degree(); ++i) {
        for (const auto& [e, c] : f[i].terms()) {
            if (e != 0) throw std::domain_error("dehomogenize: t-dependent form");
            r.add_term(f.degree() - i, c);
        }
    }
    return r;
}

struct RationalRoots {
    std::vector<Rational> roots;      // distinct rational roots
    std::vector<TCoeff> leftovers;    // squarefree factors with no rational root
    bool complete = true;             // false if divisor enumeration gave up
};

namespace detail {

inline std::vector<BigInt> divisors_bounded(BigInt n, bool& complete,
                                            std::size_t cap = 4096) {
    n = n.abs();
    if (n.is_zero()) {
        complete = false;
        return {BigInt(1)};
    }
    std::vector<std::pair<BigInt, int>> primes;
    for (long long p = 2; p <= 1000000; p = p == 2 ? 3 : p + 2) {
        BigInt bp(p);
        if (bp * bp > n) break;
        int e = 0;
        while ((n % bp).is_zero()) {
            n = n / bp;
            ++e;
        }
        if (e > 0) primes.push_back({bp, e});
    }
    if (!n.is_one()) {
        // remaining cofactor; if composite with large factors the divisor
        // list below is incomplete only when it is a proper power or a
        // product, which we cannot tell cheaply -- flag unless it is small
        primes.push_back({n, 1});
        if (n > BigInt(1000000000000LL)) complete = false;
    }
    std::vector<BigInt> divs{BigInt(1)};
    for (const auto& [p, e] : primes) {
        std::size_t old = divs.size();
        BigInt pk(1);
        for (int k = 1; k <= e; ++k) {
            pk = pk * p;
            for (std::size_t i = 0; i < old; ++i) {
                divs.push_back(divs[i] * pk);
                if (divs.size() > cap) {
                    complete = false;
                    return divs;
                }
            }
        }
    }
    return divs;
}

}  // namespace detail

// rational roots of a univariate polynomial over Q (held in a TCoeff)
inline RationalRoots rational_roots(const TCoeff& poly) {
    RationalRoots out;
    if (poly.is_zero())
        throw std::domain_error("rational_roots: zero polynomial");
    TCoeff p = poly;
    if (*p.valuation() > 0) {
        out.roots.push_back(Rational(0));
        p = p.shifted(-*p.valuation());
    }
    if (p.max_degree() == 0) return out;
    for (const auto& [factor, mult] : detail::yun_squarefree(p)) {
        TCoeff f = factor;
        if (f.max_degree() == 1) {
            out.roots.push_back(-f.coeff(0) / f.coeff(1));
            continue;
        }
        // integerize
        BigInt lcm(1);
        for (const auto& [e, c] : f.terms()) {
            BigInt d = c.den();
            lcm = lcm / BigInt::gcd(lcm, d) * d;
        }
        TCoeff fi = f.scaled(Rational(lcm));
        BigInt a0 = fi.coeff(0).num(), an = fi.coeff(fi.max_degree()).num();
        bool complete = true;
        auto dn = detail::divisors_bounded(a0, complete);
        auto dd = detail::divisors_bounded(an, complete);
        if (!complete) {
            out.complete = false;
            out.leftovers.push_back(f);
            continue;
        }
        TCoeff rem = f;
        for (const auto& pnum : dn) {
            bool deflated_any = false;
            for (const auto& pden : dd) {
                for (int sgn = 0; sgn < 2; ++sgn) {
                    Rational cand(sgn ? -pnum : pnum, pden);
                    if (rem.max_degree() >= 1 && rem.eval(cand).is_zero()) {
                        out.roots.push_back(cand);
                        // deflate by (t - cand)
                        TCoeff lin = TCoeff::t(1) - TCoeff(cand);
                        rem = rem.divided_exact(lin).value();
                        deflated_any = true;
                    }
                }
            }
            (void)deflated_any;
            if (rem.max_degree() == 0) break;
        }
        if (rem.max_degree() >= 1) out.leftovers.push_back(rem);
    }
    return out;
}

// ---------------------------------------------------------------------

struct CentralFiberReport {
    enum class Kind { Normal, NonNormalCusp, NonNormalNode } kind = Kind::Normal;
    std::vector<SingularityReport> points;
    std::vector<std::string> conjugate_sets;  // unresolved non-rational candidates
    bool rationality_violation = false;
    std::string node_double_curve;  // z = s(x,y) along which the node fiber is glued
    bool degenerate_cone = false;

    bool smooth() const {
        return kind == Kind::Normal && points.empty() && conjugate_sets.empty();
    }
};

namespace detail {

// the surface w^2 + z^3 + z*A(x) + B(x) localized at (x0, z0), as a plane
// germ in (u, v) = (x - x0, z - z0); A, B univariate in the TCoeff slot
inline PlanePoly surface_point_germ(const TCoeff& A, const TCoeff& B,
                                    const Rational& x0, const Rational& z0) {
    TCoeff As = A.compose_t_plus(x0), Bs = B.compose_t_plus(x0);
    PlanePoly out;
    // (z0 + v)^3
    out.add_term(0, 3, Rational(1));
    out.add_term(0, 2, Rational(3) * z0);
    out.add_term(0, 1, Rational(3) * z0 * z0);
    out.add_term(0, 0, z0.pow(3));
    for (const auto& [e, c] : As.terms()) {
        out.add_term(e, 1, c);
        out.add_term(e, 0, c * z0);
    }
    for (const auto& [e, c] : Bs.terms()) out.add_term(e, 0, c);
    return out;
}

struct FiberPoint {
    Rational x0, y0, z0;  // projective (x0:y0) normalized, z in that chart
    int chart;            // kVarX or kVarY
};

// solve the singular-locus system of w^2+z^3+z f4+f6 = 0 over a field
// specialization (forms with constant coefficients); returns candidate
// surface-singular points plus unresolved conjugate factors
inline void fiber_singular_points(const BinaryForm& f4c, const BinaryForm& f6c,
                                  std::vector<FiberPoint>& points,
                                  std::vector<std::string>& conjugates) {
    BinaryForm f43 = f4c * f4c * f4c;
    BinaryForm f62 = f6c * f6c;
    BinaryForm disc = f43.scaled(TCoeff(-4)) - f62.scaled(TCoeff(27));
    // disc is nonzero here (the non-normal path is handled by the caller)
    std::vector<BinaryForm> conditions{disc};
    BinaryForm bx = f4c.derivative_x(), cx = f6c.derivative_x();
    if (!(bx.is_zero() && cx.is_zero())) {
        BinaryForm rx = (cx * cx).scaled(TCoeff(3)) + f4c * bx * bx;
        if (rx.is_zero()) {
            // the x-partial condition holds identically along the z-branch
        } else {
            conditions.push_back(rx);
        }
    }
    BinaryForm by = f4c.derivative_y(), cy = f6c.derivative_y();
    if (!(by.is_zero() && cy.is_zero())) {
        BinaryForm ry = (cy * cy).scaled(TCoeff(3)) + f4c * by * by;
        if (!ry.is_zero()) conditions.push_back(ry);
    }
    BinaryForm g = conditions.front();
    for (std::size_t i = 1; i < conditions.size(); ++i)
        g = binary_gcd(g, conditions[i]);

    // roots of g in P^1
    int lo = 0;
    while (lo <= g.degree() && g[lo].is_zero()) ++lo;
    int hi = g.degree();
    while (hi >= 0 && g[hi].is_zero()) --hi;
    if (lo > hi) throw std::domain_error("fiber_singular_points: zero gcd");

    auto multiple_root_z = [&](const Rational& x0, const Rational& y0,
                               Rational& z0) -> bool {
        Rational p0 = f4c.eval(x0, y0).constant_part();
        Rational q0 = f6c.eval(x0, y0).constant_part();
        if (p0.is_zero() && q0.is_zero()) {
            z0 = Rational(0);
            return true;
        }
        if (p0.is_zero()) return false;  // disc != 0 at the point
        // double root of z^3 + p z + q when the discriminant vanishes
        z0 = Rational(-3) * q0 / (Rational(2) * p0);
        Rational c = z0.pow(3) + p0 * z0 + q0;
        Rational cz = Rational(3) * z0 * z0 + p0;
        return c.is_zero() && cz.is_zero();
    };
    auto check_point = [&](const Rational& x0, const Rational& y0) {
        Rational z0;
        if (!multiple_root_z(x0, y0, z0)) return;
        // remaining Jacobian conditions
        Rational gx = (bx.is_zero() && cx.is_zero())
                          ? Rational(0)
                          : bx.eval(x0, y0).constant_part() * z0 +
                                cx.eval(x0, y0).constant_part();
        Rational gy = (by.is_zero() && cy.is_zero())
                          ? Rational(0)
                          : by.eval(x0, y0).constant_part() * z0 +
                                cy.eval(x0, y0).constant_part();
        if (!gx.is_zero() || !gy.is_zero()) return;
        FiberPoint fp;
        if (!y0.is_zero()) {
            fp.chart = kVarY;
            fp.x0 = x0 / y0;
            fp.y0 = Rational(1);
            fp.z0 = z0 / y0.pow(2);
        } else {
            fp.chart = kVarX;
            fp.x0 = Rational(1);
            fp.y0 = Rational(0);
            fp.z0 = z0;
        }
        points.push_back(fp);
    };

    if (lo > 0) check_point(Rational(1), Rational(0));   // y = 0
    if (hi < g.degree()) check_point(Rational(0), Rational(1));  // x = 0
    if (hi > lo) {
        TCoeff dehom;  // polynomial in u = y/x of the core factor
        for (int i = lo; i <= hi; ++i) {
            for (const auto& [e, c] : g[i].terms()) {
                if (e != 0)
                    throw std::domain_error("fiber_singular_points: t survives");
                dehom.add_term(i - lo, c);
            }
        }
        RationalRoots rr = rational_roots(dehom);
        for (const auto& u0 : rr.roots) check_point(Rational(1), u0);
        for (const auto& f : rr.leftovers) {
            // verify the cleared Jacobian conditions modulo the factor;
            // 2 f4 f6' - 3 f6 f4' clears z0 = -3 f6 / (2 f4)
            TCoeff f4u = dehomogenize_y1(f4c.swapped_xy());
            TCoeff f6u = dehomogenize_y1(f6c.swapped_xy());
            TCoeff f4du = dehomogenize_y1(bx.swapped_xy());
            TCoeff f6du = dehomogenize_y1(cx.swapped_xy());
            TCoeff f4dv = dehomogenize_y1(by.swapped_xy());
            TCoeff f6dv = dehomogenize_y1(cy.swapped_xy());
            TCoeff e1 = f4u.scaled(Rational(2)) * f6du - f6u.scaled(Rational(3)) * f4du;
            TCoeff e2 = f4u.scaled(Rational(2)) * f6dv - f6u.scaled(Rational(3)) * f4dv;
            auto reduces = [&](const TCoeff& e) {
                if (e.is_zero()) return true;
                TCoeff g2 = tpoly_gcd(e, f);
                return g2.max_degree() == f.max_degree();
            };
            if (tpoly_gcd(f4u, f).max_degree() > 0) {
                conjugates.push_back("candidates along " + f.to_string() +
                                     " (unresolved: shares factor with f4)");
            } else if (reduces(e1) && reduces(e2)) {
                conjugates.push_back("conjugate singular set of degree " +
                                     std::to_string(f.max_degree()) + ": " +
                                     f.to_string());
            }
            if (!rr.complete)
                conjugates.push_back("root search incomplete for " + f.to_string());
        }
    }
}

}  // namespace detail

// Trichotomy of the fiber of a fibration at t = t0 (default: the central
// fiber). Classifies every rational singular point of a normal fiber;
// non-normal fibers are split into the cusp and node patterns by the
// repeated factor of the z-cubic.
inline CentralFiberReport fiber_type_at(const Fibration& X,
                                        const Rational& t0 = Rational(0),
                                        int blowup_bound = 30) {
    Fibration Xs = t0.is_zero()
                       ? X
                       : Fibration(BinaryForm(4, [&] {
                                       std::vector<TCoeff> v;
                                       for (int i = 0; i <= 4; ++i)
                                           v.push_back(X.f4[i].compose_t_plus(t0));
                                       return v;
                                   }()),
                                   BinaryForm(6, [&] {
                                       std::vector<TCoeff> v;
                                       for (int i = 0; i <= 6; ++i)
                                           v.push_back(X.f6[i].compose_t_plus(t0));
                                       return v;
                                   }()),
                                   /*allow_degenerate=*/true);
    BinaryForm f4c = Xs.f4.mod_t(), f6c = Xs.f6.mod_t();
    CentralFiberReport out;

    if (f4c.is_zero() && f6c.is_zero()) {
        out.kind = CentralFiberReport::Kind::NonNormalCusp;
        out.degenerate_cone = true;
        return out;
    }
    BinaryForm disc =
        (f4c * f4c * f4c).scaled(TCoeff(-4)) - (f6c * f6c).scaled(TCoeff(27));
    if (disc.is_zero()) {
        // non-normal: the z-cubic has a repeated factor z = s(x,y)
        if (f4c.is_zero()) {
            out.kind = CentralFiberReport::Kind::NonNormalCusp;
            return out;
        }
        auto s = binary_divide_exact(f6c.scaled(TCoeff(-3)), f4c.scaled(TCoeff(2)));
        if (!s)
            throw std::domain_error("fiber_type_at: inexact double-root division");
        if (s->is_zero()) {
            out.kind = CentralFiberReport::Kind::NonNormalCusp;
            return out;
        }
        // verify the (z-s)^2 (z+2s) shape exactly
        BinaryForm s2 = *s * *s;
        if (f4c != s2.scaled(TCoeff(-3)) || f6c != (s2 * *s).scaled(TCoeff(2)))
            throw std::domain_error("fiber_type_at: repeated factor shape mismatch");
        out.kind = CentralFiberReport::Kind::NonNormalNode;
        out.node_double_curve = "z = " + s->to_string();
        return out;
    }

    std::vector<detail::FiberPoint> pts;
    detail::fiber_singular_points(f4c, f6c, pts, out.conjugate_sets);
    for (const auto& fp : pts) {
        TCoeff A, B;  // univariate restriction in the chart
        if (fp.chart == kVarY) {
            A = dehomogenize_y1(f4c);  // f4(x, 1)
            B = dehomogenize_y1(f6c);
        } else {
            A = dehomogenize_y1(f4c.swapped_xy());  // f4(1, y)
            B = dehomogenize_y1(f6c.swapped_xy());
        }
        Rational u0 = fp.chart == kVarY ? fp.x0 : fp.y0;
        PlanePoly germ = detail::surface_point_germ(A, B, u0, fp.z0);
        SingularityReport r = classify_surface_double_point(germ, blowup_bound);
        r.location = "(" + fp.x0.to_string() + ":" + fp.y0.to_string() + ":" +
                     fp.z0.to_string() + ":0), t=" + t0.to_string();
        if (r.tag == SingularityReport::Tag::MinimallyElliptic) {
            r.rationality_violation = true;
            out.rationality_violation = true;
        }
        out.points.push_back(r);
    }
    return out;
}

inline CentralFiberReport central_fiber_type(const Fibration& X, int blowup_bound = 30) {
    return fiber_type_at(X, Rational(0), blowup_bound);
}

// ---------------------------------------------------------------------

struct SmoothnessReport {
    bool certified_smooth = false;
    bool degenerate = false;
    std::vector<SingularityReport> singular_points;  // genuine 3-fold singularities
    std::vector<std::string> fiber_only;   // fiber-singular, 3-fold smooth
    std::vector<std::string> unresolved;   // candidates the search could not settle
    std::vector<std::string> evidence;
};

namespace detail {

// rational roots of a binary form over the constants, as normalized
// projective points, plus unresolved factors
struct FormRoots {
    std::vector<std::pair<Rational, Rational>> points;  // (x0, y0), one of them 1
    std::vector<std::string> leftovers;
};

inline FormRoots binary_form_roots(const BinaryForm& g) {
    FormRoots out;
    int lo = 0;
    while (lo <= g.degree() && g[lo].is_zero()) ++lo;
    int hi = g.degree();
    while (hi >= 0 && g[hi].is_zero()) --hi;
    if (lo > hi) throw std::domain_error("binary_form_roots: zero form");
    if (lo > 0) out.points.push_back({Rational(1), Rational(0)});
    if (hi < g.degree()) out.points.push_back({Rational(0), Rational(1)});
    if (hi > lo) {
        TCoeff dehom;
        for (int i = lo; i <= hi; ++i) {
            for (const auto& [e, c] : g[i].terms()) {
                if (e != 0) throw std::domain_error("binary_form_roots: t survives");
                dehom.add_term(i - lo, c);
            }
        }
        RationalRoots rr = rational_roots(dehom);
        for (const auto& u0 : rr.roots) out.points.push_back({Rational(1), u0});
        for (const auto& f : rr.leftovers)
            out.leftovers.push_back("conjugate root set of " + f.to_string());
        if (!rr.complete) out.leftovers.push_back("root search incomplete");
    }
    return out;
}

// Total-space singular points sitting on the double curve of a
// non-normal fiber at t = tau. Along the curve {w = 0, z = s(x,y)} all
// four coordinate partials vanish identically, so the singular points
// are exactly the zeros of the d/dt restriction s*f4' + f6'.
inline void non_normal_fiber_points(const Fibration& V, const Rational& tau,
                                    int blowup_bound, int cdv_trials,
                                    std::uint64_t seed, SmoothnessReport& out) {
    Fibration Vs = tau.is_zero() ? V : [&] {
        std::vector<TCoeff> v4, v6;
        for (int i = 0; i <= 4; ++i) v4.push_back(V.f4[i].compose_t_plus(tau));
        for (int i = 0; i <= 6; ++i) v6.push_back(V.f6[i].compose_t_plus(tau));
        return Fibration(BinaryForm(4, v4), BinaryForm(6, v6), true);
    }();
    BinaryForm f4c = Vs.f4.mod_t(), f6c = Vs.f6.mod_t();
    BinaryForm s(2);  // double curve z = s(x,y); zero for the cusp pattern
    if (!f4c.is_zero()) {
        auto q = binary_divide_exact(f6c.scaled(TCoeff(-3)), f4c.scaled(TCoeff(2)));
        if (!q) {
            out.unresolved.push_back("t=" + tau.to_string() +
                                     ": double-curve extraction failed");
            return;
        }
        s = *q;
    }
    BinaryForm ft = s * Vs.f4.dt().mod_t() + Vs.f6.dt().mod_t();
    if (ft.is_zero()) {
        out.unresolved.push_back("total space is singular along the double curve "
                                 "of the fiber at t=" + tau.to_string());
        return;
    }
    FormRoots roots = binary_form_roots(ft);
    for (const auto& l : roots.leftovers)
        out.unresolved.push_back("t=" + tau.to_string() + ": " + l);
    for (const auto& [x0, y0] : roots.points) {
        int chart = !y0.is_zero() ? kVarY : kVarX;
        Rational xc = chart == kVarY ? x0 / y0 : Rational(1);
        Rational yc = chart == kVarY ? Rational(1) : y0;
        Rational zc = chart == kVarY ? s.eval(xc, Rational(1)).constant_part()
                                     : s.eval(Rational(1), yc).constant_part();
        std::array<Rational, 4> pt{xc, yc, zc, Rational(0)};
        AffineGerm germ = make_germ(V, chart, pt, tau);
        std::string loc = "(" + x0.to_string() + ":" + y0.to_string() + ":" +
                          zc.to_string() + ":0), t=" + tau.to_string();
        SingularityReport r;
        try {
            r = classify_cDV(germ, cdv_trials, seed, blowup_bound);
        } catch (const std::exception& e) {
            r.status = SingularityReport::Status::Unresolved;
            r.evidence.push_back(e.what());
        }
        r.location = loc;
        out.singular_points.push_back(r);
    }
}

}  // namespace detail

// Scan the total space for singular points: eliminate z from the fiber
// Jacobian, locate candidate parameters through resultants in t, then
// verify each candidate fiber exactly and apply the d/dt condition.
inline SmoothnessReport smoothness_scan(const Fibration& V, int blowup_bound = 30,
                                        int cdv_trials = 7, std::uint64_t seed = 1) {
    SmoothnessReport out;
    out.degenerate = V.degenerate;
    const BinaryForm& g4 = V.f4;
    const BinaryForm& g6 = V.f6;
    BinaryForm disc = (g4 * g4 * g4).scaled(TCoeff(-4)) - (g6 * g6).scaled(TCoeff(27));
    if (disc.is_zero()) {
        out.unresolved.push_back("every fiber is non-normal (z-discriminant vanishes)");
        return out;
    }
    std::vector<BinaryForm> conditions;
    if (g4.is_zero()) {
        // z = 0 is forced at a singular point; the remaining conditions
        // are just the vanishing of both partials of g6
        BinaryForm gp = g6.derivative_x(), gq = g6.derivative_y();
        if (!gp.is_zero()) conditions.push_back(gp);
        if (!gq.is_zero()) conditions.push_back(gq);
    } else {
        conditions.push_back(disc);
        BinaryForm bx = g4.derivative_x(), cx = g6.derivative_x();
        if (!(bx.is_zero() && cx.is_zero())) {
            BinaryForm rx = (cx * cx).scaled(TCoeff(3)) + g4 * bx * bx;
            if (!rx.is_zero()) conditions.push_back(rx);
        }
        BinaryForm by = g4.derivative_y(), cy = g6.derivative_y();
        if (!(by.is_zero() && cy.is_zero())) {
            BinaryForm ry = (cy * cy).scaled(TCoeff(3)) + g4 * by * by;
            if (!ry.is_zero()) conditions.push_back(ry);
        }
    }
    if (conditions.size() < 2) {
        out.unresolved.push_back("Jacobian system degenerates; scan not applicable");
        return out;
    }
    auto positive_degree = [](const BinaryForm& f) { return f.degree() > 0; };
    BinaryForm gall = conditions[0];
    for (std::size_t i = 1; i < conditions.size(); ++i)
        gall = binary_gcd(gall, conditions[i]);
    if (positive_degree(gall)) {
        // a whole curve of fiber-singular candidates; out of scope for the
        // certificate
        out.unresolved.push_back("fiber-singular candidates along the curve " +
                                 gall.to_string(VarSet::PQRS) + " = 0");
        return out;
    }

    // candidate parameters where the specialized conditions acquire a
    // common root: resultants of the pairwise-coprime reductions, plus
    // resultants of shared factors against the remaining condition
    BinaryForm g01 = binary_gcd(conditions[0], conditions[1]);
    TCoeff h;
    if (positive_degree(g01)) {
        // common points of the first two conditions either sit on g01 = 0
        // (and then must also satisfy the third) or on the coprime parts
        if (conditions.size() < 3) {
            out.unresolved.push_back("two Jacobian conditions share the factor " +
                                     g01.to_string(VarSet::PQRS));
            return out;
        }
        BinaryForm c0 = binary_divide_exact(conditions[0], g01).value();
        BinaryForm c1 = binary_divide_exact(conditions[1], g01).value();
        h = binary_resultant(c0, c1) * binary_resultant(g01, conditions[2]);
    } else {
        h = binary_resultant(conditions[0], conditions[1]);
    }
    if (h.is_zero()) {
        out.unresolved.push_back("degenerate resultant in the parameter direction");
        return out;
    }
    out.evidence.push_back("parameter resultant degree " + std::to_string(h.max_degree()));
    if (h.max_degree() == 0 && h.valuation().value_or(0) == 0) {
        out.certified_smooth = true;
        out.evidence.push_back("no candidate parameters: fibers are smooth for every t");
        return out;
    }
    RationalRoots taus = rational_roots(h);
    if (!taus.complete) {
        out.unresolved.push_back("could not enumerate all candidate parameters");
    }
    for (const auto& f : taus.leftovers)
        out.unresolved.push_back("conjugate candidate parameters: roots of " +
                                 f.to_string());
    for (const auto& tau : taus.roots) {
        CentralFiberReport fr = fiber_type_at(V, tau, blowup_bound);
        if (fr.kind != CentralFiberReport::Kind::Normal) {
            detail::non_normal_fiber_points(V, tau, blowup_bound, cdv_trials, seed, out);
            continue;
        }
        for (const auto& cs : fr.conjugate_sets)
            out.unresolved.push_back("t=" + tau.to_string() + ": " + cs);
        // re-derive the rational singular points to test the 3-fold condition
        std::vector<detail::FiberPoint> pts;
        std::vector<std::string> conj;
        Fibration Vs = tau.is_zero() ? V : [&] {
            std::vector<TCoeff> v4, v6;
            for (int i = 0; i <= 4; ++i) v4.push_back(V.f4[i].compose_t_plus(tau));
            for (int i = 0; i <= 6; ++i) v6.push_back(V.f6[i].compose_t_plus(tau));
            return Fibration(BinaryForm(4, v4), BinaryForm(6, v6), true);
        }();
        detail::fiber_singular_points(Vs.f4.mod_t(), Vs.f6.mod_t(), pts, conj);
        for (const auto& fp : pts) {
            // d/dt of the total equation at the point
            Rational ft = Vs.f4.dt().eval(fp.x0, fp.y0).constant_part() * fp.z0 +
                          Vs.f6.dt().eval(fp.x0, fp.y0).constant_part();
            std::string loc = "(" + fp.x0.to_string() + ":" + fp.y0.to_string() + ":" +
                              fp.z0.to_string() + ":0), t=" + tau.to_string();
            if (!ft.is_zero()) {
                out.fiber_only.push_back(loc + " (fiber singular, total space smooth)");
                continue;
            }
            std::array<Rational, 4> pt{fp.x0, fp.y0, fp.z0, Rational(0)};
            AffineGerm germ = make_germ(V, fp.chart, pt, tau);
            SingularityReport r;
            try {
                r = classify_cDV(germ, cdv_trials, seed, blowup_bound);
            } catch (const std::exception& e) {
                r.status = SingularityReport::Status::Unresolved;
                r.evidence.push_back(e.what());
            }
            r.location = loc;
            out.singular_points.push_back(r);
        }
    }
    out.certified_smooth =
        out.singular_points.empty() && out.unresolved.empty() && !out.degenerate;
    return out;
}

}  // namespace dp1
