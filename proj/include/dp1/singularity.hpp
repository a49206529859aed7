/* Singularity analysis for the 3-fold total spaces and their fibers:
 * Jacobian tests at points and along coordinate curves, double-point
 * reduction of surface germs, compound du Val classification through
 * random hyperplane sections, and the general-anticanonical-member test.
 */
#pragma once

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "dp1/fibration.hpp"
#include "dp1/plane_curve.hpp"

namespace dp1 {

struct AffineGerm {
    WPoly poly;                     // chart variable substituted by 1
    int chart_var = kVarY;          // kVarX or kVarY
    std::array<Rational, 4> point;  // affine coordinates; chart slot = 1
    Rational t0;                    // parameter of the base point
    bool threefold = true;          // include d/dt in Jacobian tests
};

inline AffineGerm make_germ(const WPoly& hypersurface, int chart_var,
                            const std::array<Rational, 4>& point,
                            const Rational& t0 = Rational(0), bool threefold = true) {
    if (chart_var != kVarX && chart_var != kVarY)
        throw std::domain_error("make_germ: chart variable must have weight 1");
    AffineGerm g;
    g.poly = hypersurface.substitute_var(chart_var, Rational(1));
    g.chart_var = chart_var;
    g.point = point;
    g.point[chart_var] = Rational(1);
    g.t0 = t0;
    g.threefold = threefold;
    return g;
}

inline AffineGerm make_germ(const Fibration& X, int chart_var,
                            const std::array<Rational, 4>& point,
                            const Rational& t0 = Rational(0), bool threefold = true) {
    return make_germ(X.to_wpoly(), chart_var, point, t0, threefold);
}

// germ translated so that the base point sits at the origin
inline WPoly germ_at_origin(const AffineGerm& g) {
    WPoly p = g.poly;
    VarSet set = p.var_set();
    std::map<int, WPoly> shifts;
    for (int v = 0; v < 4; ++v) {
        if (v == g.chart_var) continue;
        if (!g.point[v].is_zero())
            shifts[v] = WPoly::variable(v, set) +
                        WPoly::constant(TCoeff(g.point[v]), set);
    }
    if (!shifts.empty()) p = p.substitute_many(shifts);
    if (!g.t0.is_zero()) p = p.compose_t_plus(g.t0);
    return p;
}

inline bool is_singular_at(const AffineGerm& g) {
    if (!g.poly.eval(g.point, g.t0).is_zero())
        throw std::domain_error("is_singular_at: point does not lie on the hypersurface");
    for (int v = 0; v < 4; ++v) {
        if (v == g.chart_var) continue;
        if (!g.poly.partial(v).eval(g.point, g.t0).is_zero()) return false;
    }
    if (g.threefold && !g.poly.dt().eval(g.point, g.t0).is_zero()) return false;
    return true;
}

struct CurveCheckResult {
    bool contained = false;
    bool singular_along = false;
    std::string detail;
};

// Symbolic check along the vanishing locus of a subset of {t,x,y,z,w}:
// does the curve lie on X, and do all first partials vanish identically
// along it?
inline CurveCheckResult singular_curve_check(const WPoly& X, bool vanish_t,
                                             const std::array<bool, 4>& vanish_var) {
    auto reduce = [&](const WPoly& p) {
        WPoly r = p;
        for (int v = 0; v < 4; ++v) {
            if (vanish_var[v]) r = r.substitute_var(v, Rational(0));
        }
        if (vanish_t) r = r.mod_t();
        return r;
    };
    CurveCheckResult out;
    WPoly on = reduce(X);
    if (!on.is_zero()) {
        out.detail = "curve not contained in the hypersurface: residual " + on.to_string();
        return out;
    }
    out.contained = true;
    for (int v = 0; v < 4; ++v) {
        WPoly d = reduce(X.partial(v));
        if (!d.is_zero()) {
            out.detail = std::string("partial in ") + var_name(X.var_set(), v) +
                         " does not vanish along the curve: " + d.to_string();
            return out;
        }
    }
    WPoly dt = reduce(X.dt());
    if (!dt.is_zero()) {
        out.detail = "partial in t does not vanish along the curve: " + dt.to_string();
        return out;
    }
    out.singular_along = true;
    return out;
}

inline CurveCheckResult singular_curve_check(const Fibration& X, bool vanish_t,
                                             const std::array<bool, 4>& vanish_var) {
    return singular_curve_check(X.to_wpoly(), vanish_t, vanish_var);
}

// ---------------------------------------------------------------------

struct SingularityReport {
    enum class Tag {
        Smooth,
        A,
        D,
        E,
        MinimallyElliptic,
        NonNormalCusp,
        NonNormalNode,
        BeyondBound,
    };
    enum class Status { Classified, NonIsolated, Unstable, Unresolved };

    Tag tag = Tag::BeyondBound;
    Status status = Status::Classified;
    int index = 0;
    int milnor = -1;
    bool compound = false;  // classified through hyperplane sections (cX)
    bool rationality_violation = false;
    std::string location;
    std::vector<std::string> evidence;

    bool du_val() const {
        return status == Status::Classified &&
               (tag == Tag::Smooth || tag == Tag::A || tag == Tag::D || tag == Tag::E);
    }

    std::string tag_name() const {
        std::string prefix = compound ? "c" : "";
        switch (tag) {
            case Tag::Smooth: return "smooth";
            case Tag::A: return prefix + "A" + std::to_string(index);
            case Tag::D: return prefix + "D" + std::to_string(index);
            case Tag::E: return prefix + "E" + std::to_string(index);
            case Tag::MinimallyElliptic: return "minimally-elliptic";
            case Tag::NonNormalCusp: return "non-normal-cusp";
            case Tag::NonNormalNode: return "non-normal-node";
            default: return "beyond-bound";
        }
    }
};

inline SingularityReport report_from_curve_class(const CurveClass& c) {
    SingularityReport r;
    r.milnor = c.milnor;
    r.index = c.index;
    r.evidence = c.evidence;
    switch (c.type) {
        case CurveType::Smooth: r.tag = SingularityReport::Tag::Smooth; break;
        case CurveType::A: r.tag = SingularityReport::Tag::A; break;
        case CurveType::D: r.tag = SingularityReport::Tag::D; break;
        case CurveType::E: r.tag = SingularityReport::Tag::E; break;
        case CurveType::MinimallyElliptic:
            r.tag = SingularityReport::Tag::MinimallyElliptic;
            break;
        case CurveType::NonIsolated:
            r.tag = SingularityReport::Tag::BeyondBound;
            r.status = SingularityReport::Status::NonIsolated;
            break;
        default:
            r.tag = SingularityReport::Tag::BeyondBound;
            break;
    }
    return r;
}

// Extract F for a germ of the shape w^2*c2 + w*B + C with constant c2,
// so that the germ is equivalent to w^2 + F after completing the square.
// var_u = -1 selects the t-slot.
inline PlanePoly double_point_branch(const WPoly& germ, int var_u, int var_v,
                                     int var_w = kVarW) {
    WPoly c2(germ.var_set()), c1(germ.var_set()), c0(germ.var_set());
    for (const auto& [m, c] : germ.terms()) {
        for (int v = 0; v < 4; ++v) {
            if (v == var_u || v == var_v || v == var_w) continue;
            if (m.e[v] != 0)
                throw std::domain_error("double_point_branch: extra variable present");
        }
        Mono rest = m;
        int ew = m.e[var_w];
        rest.e[var_w] = 0;
        if (ew == 0) {
            c0.add_term(rest, c);
        } else if (ew == 1) {
            c1.add_term(rest, c);
        } else if (ew == 2) {
            c2.add_term(rest, c);
        } else {
            throw std::domain_error("double_point_branch: degree > 2 in w");
        }
    }
    Mono unit;
    if (c2.term_count() != 1 || !(c2.terms().begin()->first == unit) ||
        !c2.terms().begin()->second.is_rational_constant())
        throw std::domain_error("double_point_branch: w^2 coefficient not constant");
    Rational a2 = c2.terms().begin()->second.constant_part();
    // w^2 a2 + w c1 + c0  ==  a2 (w + c1/(2 a2))^2 + c0 - c1^2/(4 a2)
    WPoly F = c0.scaled(TCoeff(Rational(1) / a2)) -
              (c1 * c1).scaled(TCoeff(Rational(1) / (Rational(4) * a2 * a2)));
    PlanePoly out;
    for (const auto& [m, c] : F.terms()) {
        int ev = m.e[var_v];
        int eu = var_u >= 0 ? m.e[var_u] : 0;
        for (const auto& [te, q] : c.terms()) {
            if (var_u >= 0) {
                if (te != 0)
                    throw std::domain_error("double_point_branch: t survives in germ");
                out.add_term(eu, ev, q);
            } else {
                out.add_term(te, ev, q);
            }
        }
    }
    return out;
}

// du Val type of a surface double point w^2 + F(u,v): the type of the
// plane branch germ
inline SingularityReport classify_surface_double_point(const PlanePoly& branch,
                                                       int blowup_bound = 30) {
    return report_from_curve_class(classify_plane_germ(branch, blowup_bound));
}

// overload for a germ still carrying its w^2 (completed exactly first)
inline SingularityReport classify_surface_double_point(const WPoly& germ, int var_u,
                                                       int var_v,
                                                       int blowup_bound = 30) {
    return classify_surface_double_point(double_point_branch(germ, var_u, var_v),
                                         blowup_bound);
}

// deterministic rational sampling for section coefficients; numerators
// and denominators bounded by 97
inline Rational random_rational(std::mt19937_64& rng, bool nonzero = true) {
    std::uniform_int_distribution<int> num(1, 97), den(1, 97), sgn(0, 1);
    int n = num(rng);
    if (!nonzero) {
        std::uniform_int_distribution<int> z(0, 4);
        if (z(rng) == 0) n = 0;
    }
    Rational r(n, den(rng));
    return sgn(rng) ? r : -r;
}

// Compound du Val classification: slice the 3-fold germ by random
// rational hyperplane sections through the point and classify the
// resulting double points. The hyperplanes are drawn from the two
// pencils that keep the section polynomial exact (solving for the
// weight-1 chart coordinate or for t); genericity is certified
// empirically by trial agreement.
inline SingularityReport classify_cDV(const AffineGerm& germ, int trials = 7,
                                      std::uint64_t seed = 1, int blowup_bound = 30) {
    if (!is_singular_at(germ))
        throw std::domain_error("classify_cDV: point is not singular");
    WPoly g0 = germ_at_origin(germ);
    VarSet set = g0.var_set();
    int xvar = germ.chart_var == kVarY ? kVarX : kVarY;

    std::mt19937_64 rng(seed);
    std::vector<SingularityReport> samples;
    int non_isolated = 0;
    for (int i = 0; i < trials; ++i) {
        Rational a = random_rational(rng), c = random_rational(rng);
        WPoly section(set);
        int var_u, var_v = kVarZ;
        if (i % 2 == 0) {
            // x = a t + c z
            std::map<int, WPoly> img;
            img[xvar] = WPoly::constant(TCoeff::term(a, 1), set) +
                        WPoly::variable(kVarZ, set).scaled(TCoeff(c));
            section = g0.substitute_many(img);
            var_u = -1;  // remaining coordinates (t, z)
        } else {
            // t = a x + c z
            WPoly img = WPoly::variable(xvar, set).scaled(TCoeff(a)) +
                        WPoly::variable(kVarZ, set).scaled(TCoeff(c));
            section = g0.substitute_t(img);
            var_u = xvar;
        }
        SingularityReport r = classify_surface_double_point(
            double_point_branch(section, var_u, var_v), blowup_bound);
        if (r.status == SingularityReport::Status::NonIsolated) {
            ++non_isolated;
            continue;
        }
        samples.push_back(r);
    }

    SingularityReport out;
    out.compound = true;
    if (samples.empty()) {
        out.status = SingularityReport::Status::NonIsolated;
        out.evidence.push_back("all sections were non-isolated; the point is not cDV");
        return out;
    }
    // modal type with at most one outlier tolerated
    int best = -1, best_count = 0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        int count = 0;
        for (const auto& s : samples) {
            if (s.tag == samples[i].tag && s.index == samples[i].index) ++count;
        }
        if (count > best_count) {
            best_count = count;
            best = static_cast<int>(i);
        }
    }
    out.tag = samples[static_cast<std::size_t>(best)].tag;
    out.index = samples[static_cast<std::size_t>(best)].index;
    out.milnor = samples[static_cast<std::size_t>(best)].milnor;
    out.evidence = samples[static_cast<std::size_t>(best)].evidence;
    out.evidence.push_back("agreeing sections: " + std::to_string(best_count) + "/" +
                           std::to_string(samples.size()) +
                           (non_isolated ? " (+" + std::to_string(non_isolated) +
                                               " degenerate)"
                                         : ""));
    if (best_count + 1 < static_cast<int>(samples.size()))
        out.status = SingularityReport::Status::Unstable;
    return out;
}

struct ElephantResult {
    bool du_val = false;      // general member has at most du Val points
    bool degenerate = false;  // every sampled member was non-isolated
    SingularityReport modal;
    std::vector<std::string> evidence;
};

// General member of |-K| through the base point: in the chart it takes
// the shape {x = t h}. Samples rational h and classifies the resulting
// surface germ; terminality requires the general member to be du Val.
inline ElephantResult elephant_check(const AffineGerm& germ, int samples = 5,
                                     std::uint64_t seed = 1, int blowup_bound = 30) {
    WPoly g0 = germ_at_origin(germ);
    VarSet set = g0.var_set();
    int xvar = germ.chart_var == kVarY ? kVarX : kVarY;
    std::mt19937_64 rng(seed);

    ElephantResult out;
    std::vector<SingularityReport> reports;
    int non_isolated = 0;
    for (int i = 0; i < samples; ++i) {
        Rational h = random_rational(rng);
        std::map<int, WPoly> img;
        img[xvar] = WPoly::constant(TCoeff::term(h, 1), set);
        WPoly member = g0.substitute_many(img);
        SingularityReport r = classify_surface_double_point(
            double_point_branch(member, /*var_u=*/-1, kVarZ), blowup_bound);
        if (r.status == SingularityReport::Status::NonIsolated) {
            ++non_isolated;
            out.evidence.push_back("h sample gave a non-isolated member");
            continue;
        }
        out.evidence.push_back("member {x=t*h}, h=" + h.to_string() + " -> " +
                               r.tag_name());
        reports.push_back(r);
    }
    if (reports.empty()) {
        out.degenerate = true;
        return out;
    }
    int best = -1, best_count = 0;
    for (std::size_t i = 0; i < reports.size(); ++i) {
        int count = 0;
        for (const auto& s : reports) {
            if (s.tag == reports[i].tag && s.index == reports[i].index) ++count;
        }
        if (count > best_count) {
            best_count = count;
            best = static_cast<int>(i);
        }
    }
    out.modal = reports[static_cast<std::size_t>(best)];
    out.du_val = out.modal.du_val();
    return out;
}

}  // namespace dp1
