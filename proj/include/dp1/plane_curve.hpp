/* Plane curve germs at the origin over Q and their classification.
 *
 * Recognition works by embedded resolution: iterated point blowups with
 * multiplicity tracking. For a reduced germ the resolution yields the
 * delta invariant (sum of m_p(m_p-1)/2 over infinitely near points) and
 * the branch count r, whence the Milnor number mu = 2*delta - r + 1.
 * The simple types are then read off:
 *
 *   mult 1                    -> smooth
 *   mult 2                    -> A_mu
 *   mult 3, cubic 3 distinct  -> D_4
 *   mult 3, cubic double+one  -> D_mu (mu >= 5)
 *   mult 3, cubic triple      -> E_mu for mu in {6,7,8};
 *                                mu = 10 is the simple-elliptic class
 *                                (minimally elliptic as a double cover)
 *   mult >= 4, or bound hit   -> beyond the classified range
 *
 * Non-reduced germs (a repeated component through the origin) are
 * reported as non-isolated instead of being resolved.
 */
#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dp1/binary_form.hpp"

namespace dp1 {

class PlanePoly {
public:
    using Key = std::pair<int, int>;  // (e_u, e_v)

    PlanePoly() = default;
    explicit PlanePoly(const Rational& c) {
        if (!c.is_zero()) terms_[{0, 0}] = c;
    }

    static PlanePoly u(int e = 1) {
        PlanePoly r;
        r.terms_[{e, 0}] = Rational(1);
        return r;
    }
    static PlanePoly v(int e = 1) {
        PlanePoly r;
        r.terms_[{0, e}] = Rational(1);
        return r;
    }
    static PlanePoly term(const Rational& c, int eu, int ev) {
        PlanePoly r;
        if (!c.is_zero()) r.terms_[{eu, ev}] = c;
        return r;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, Rational>& terms() const { return terms_; }

    void add_term(int eu, int ev, const Rational& c) {
        if (c.is_zero()) return;
        Key k{eu, ev};
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_[k] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend PlanePoly operator-(const PlanePoly& a) {
        PlanePoly r;
        for (const auto& [k, c] : a.terms_) r.terms_[k] = -c;
        return r;
    }
    friend PlanePoly operator+(const PlanePoly& a, const PlanePoly& b) {
        PlanePoly r = a;
        for (const auto& [k, c] : b.terms_) r.add_term(k.first, k.second, c);
        return r;
    }
    friend PlanePoly operator-(const PlanePoly& a, const PlanePoly& b) {
        PlanePoly r = a;
        for (const auto& [k, c] : b.terms_) r.add_term(k.first, k.second, -c);
        return r;
    }
    friend PlanePoly operator*(const PlanePoly& a, const PlanePoly& b) {
        PlanePoly r;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_)
                r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
        return r;
    }
    friend bool operator==(const PlanePoly& a, const PlanePoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const PlanePoly& a, const PlanePoly& b) { return !(a == b); }

    PlanePoly scaled(const Rational& c) const {
        PlanePoly r;
        if (c.is_zero()) return r;
        for (const auto& [k, q] : terms_) r.terms_[k] = q * c;
        return r;
    }

    PlanePoly pow(int e) const {
        PlanePoly r(Rational(1));
        PlanePoly base = *this;
        while (e != 0) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    Rational eval(const Rational& u0, const Rational& v0) const {
        Rational acc;
        for (const auto& [k, c] : terms_) acc += c * u0.pow(k.first) * v0.pow(k.second);
        return acc;
    }

    // multiplicity at the origin
    int ord() const {
        int m = -1;
        for (const auto& [k, c] : terms_) {
            int d = k.first + k.second;
            if (m < 0 || d < m) m = d;
        }
        return m;  // -1 for the zero polynomial
    }
    int total_degree() const {
        int m = 0;
        for (const auto& [k, c] : terms_) m = std::max(m, k.first + k.second);
        return m;
    }

    // coefficients a_j of u^{m-j} v^j in the lowest-degree form
    std::vector<Rational> tangent_cone() const {
        int m = ord();
        std::vector<Rational> a(static_cast<std::size_t>(m) + 1);
        for (const auto& [k, c] : terms_) {
            if (k.first + k.second == m) a[static_cast<std::size_t>(k.second)] = c;
        }
        return a;
    }

    PlanePoly derivative_u() const {
        PlanePoly r;
        for (const auto& [k, c] : terms_) {
            if (k.first > 0) r.add_term(k.first - 1, k.second, c * Rational(k.first));
        }
        return r;
    }
    PlanePoly derivative_v() const {
        PlanePoly r;
        for (const auto& [k, c] : terms_) {
            if (k.second > 0) r.add_term(k.first, k.second - 1, c * Rational(k.second));
        }
        return r;
    }

    // strict transform in the chart covering the finite direction
    // v/u = theta:  f(u, u*(theta + v)) / u^m
    PlanePoly blowup_finite(const Rational& theta) const {
        int m = ord();
        PlanePoly r;
        for (const auto& [k, c] : terms_) {
            // u^i (u(theta+v))^j = u^{i+j} (theta+v)^j
            std::vector<Rational> tpow(static_cast<std::size_t>(k.second) + 1, Rational(1));
            for (int s = 1; s <= k.second; ++s) tpow[static_cast<std::size_t>(s)] =
                tpow[static_cast<std::size_t>(s - 1)] * theta;
            Rational binom(1);
            for (int s = 0; s <= k.second; ++s) {
                // coefficient of v^s: C(j,s) theta^{j-s}
                r.add_term(k.first + k.second - m, s,
                           c * binom * tpow[static_cast<std::size_t>(k.second - s)]);
                binom = binom * Rational(k.second - s) / Rational(s + 1);
            }
        }
        return r;
    }

    // strict transform in the chart covering the direction (0:1):
    // f(u*v, v) / v^m
    PlanePoly blowup_infinity() const {
        int m = ord();
        PlanePoly r;
        for (const auto& [k, c] : terms_)
            r.add_term(k.first, k.first + k.second - m, c);
        return r;
    }

    PlanePoly swapped() const {
        PlanePoly r;
        for (const auto& [k, c] : terms_) r.terms_[{k.second, k.first}] = c;
        return r;
    }

    // invertible linear change (u,v) -> (a u + b v, c u + d v)
    PlanePoly linear_change(const Rational& a, const Rational& b, const Rational& c,
                            const Rational& d) const {
        PlanePoly nu = PlanePoly::u().scaled(a) + PlanePoly::v().scaled(b);
        PlanePoly nv = PlanePoly::u().scaled(c) + PlanePoly::v().scaled(d);
        PlanePoly r;
        for (const auto& [k, q] : terms_)
            r = r + nu.pow(k.first) * nv.pow(k.second).scaled(q);
        return r;
    }

    // view as a polynomial in u whose coefficients live in Q[v]
    // (the TCoeff "t" slot carries the v-exponent)
    std::vector<TCoeff> as_u_poly() const {
        std::vector<TCoeff> r;
        for (const auto& [k, c] : terms_) {
            if (k.first >= static_cast<int>(r.size()))
                r.resize(static_cast<std::size_t>(k.first) + 1);
            r[static_cast<std::size_t>(k.first)].add_term(k.second, c);
        }
        uvp::trim(r);
        return r;
    }
    static PlanePoly from_u_poly(const std::vector<TCoeff>& p) {
        PlanePoly r;
        for (std::size_t i = 0; i < p.size(); ++i)
            for (const auto& [e, c] : p[i].terms())
                r.add_term(static_cast<int>(i), e, c);
        return r;
    }

    std::optional<PlanePoly> divided_exact(const PlanePoly& d) const {
        auto q = uvp::divide_exact(as_u_poly(), d.as_u_poly());
        if (!q) return std::nullopt;
        return from_u_poly(*q);
    }

    std::string to_string(const char* un = "u", const char* vn = "v") const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [k, c] : terms_) {
            Rational mag = c.abs();
            if (first) {
                if (c.sign() < 0) os << "-";
                first = false;
            } else {
                os << (c.sign() < 0 ? " - " : " + ");
            }
            bool printed = false;
            if (!mag.is_one() || (k.first == 0 && k.second == 0)) {
                os << mag.to_string();
                printed = true;
            }
            auto var = [&](const char* n, int e) {
                if (e == 0) return;
                if (printed) os << "*";
                os << n;
                if (e != 1) os << "^" << e;
                printed = true;
            };
            var(un, k.first);
            var(vn, k.second);
        }
        return os.str();
    }

private:
    std::map<Key, Rational> terms_;
};

inline PlanePoly bivariate_gcd(const PlanePoly& f, const PlanePoly& g) {
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    return PlanePoly::from_u_poly(uvp::gcd(f.as_u_poly(), g.as_u_poly()));
}

// ---------------------------------------------------------------------

enum class CurveType {
    Smooth,
    A,
    D,
    E,
    MinimallyElliptic,  // the mu = 10 simple-elliptic class
    NotSimple,          // isolated, beyond the range above
    NonIsolated,
    BeyondBound,        // blowup bound exhausted or unresolvable over Q
};

struct CurveClass {
    CurveType type = CurveType::BeyondBound;
    int index = 0;       // n for A_n/D_n, 6/7/8 for E
    int milnor = -1;     // -1 when unknown
    int multiplicity = 0;
    long long delta = 0;
    long long branches = 0;
    std::vector<std::string> evidence;

    bool is_simple() const {
        return type == CurveType::Smooth || type == CurveType::A ||
               type == CurveType::D || type == CurveType::E;
    }
    std::string type_name() const {
        switch (type) {
            case CurveType::Smooth: return "smooth";
            case CurveType::A: return "A" + std::to_string(index);
            case CurveType::D: return "D" + std::to_string(index);
            case CurveType::E: return "E" + std::to_string(index);
            case CurveType::MinimallyElliptic: return "minimally-elliptic";
            case CurveType::NotSimple: return "not-simple(mu=" + std::to_string(milnor) + ")";
            case CurveType::NonIsolated: return "non-isolated";
            default: return "beyond-bound";
        }
    }
};

class BlowupBoundError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

// squarefree decomposition over Q of a univariate polynomial held in a
// TCoeff; returns (factor, multiplicity) pairs, factors monic
inline std::vector<std::pair<TCoeff, int>> yun_squarefree(const TCoeff& p) {
    std::vector<std::pair<TCoeff, int>> out;
    if (p.is_zero() || p.max_degree() == 0) return out;
    TCoeff a = p.scaled(Rational(1) / p.coeff(p.max_degree()));
    TCoeff g = tpoly_gcd(a, a.derivative());
    TCoeff w = a.divided_exact(g).value();
    TCoeff y = a.derivative().divided_exact(g).value();
    int mult = 1;
    while (w.max_degree() > 0 || !w.coeff(0).is_one()) {
        TCoeff z = y - w.derivative();
        if (z.is_zero()) {
            if (w.max_degree() > 0) out.push_back({w, mult});
            break;
        }
        TCoeff f = tpoly_gcd(w, z);
        if (f.max_degree() > 0) out.push_back({f, mult});
        w = w.divided_exact(f).value();
        y = z.divided_exact(f).value();
        ++mult;
    }
    return out;
}

struct ResolveStats {
    long long delta = 0;
    long long branches = 0;
    int blowups = 0;
    std::vector<std::string> sequence;
};

// top-level tangent-cone shape, captured on the first call
struct TangentShape {
    int mult = 0;
    int distinct_roots = 0;     // over the algebraic closure
    int max_root_mult = 0;
};

inline void resolve_germ(const PlanePoly& f, int bound, ResolveStats& stats,
                         TangentShape* top_shape) {
    int m = f.ord();
    if (m < 0) throw std::domain_error("resolve_germ: zero polynomial");
    if (m == 0) throw std::domain_error("resolve_germ: germ does not vanish at origin");
    if (m == 1) {
        stats.branches += 1;
        return;
    }
    if (stats.blowups >= bound)
        throw BlowupBoundError("plane-curve resolution exceeded the blowup bound");
    ++stats.blowups;
    stats.delta += static_cast<long long>(m) * (m - 1) / 2;
    stats.sequence.push_back("m=" + std::to_string(m));

    std::vector<Rational> cone = f.tangent_cone();
    int jmax = m;
    while (jmax >= 0 && cone[static_cast<std::size_t>(jmax)].is_zero()) --jmax;
    // slope polynomial P(theta) = sum a_j theta^j
    TCoeff slope;
    for (int j = 0; j <= jmax; ++j) slope.add_term(j, cone[static_cast<std::size_t>(j)]);

    TangentShape shape;
    shape.mult = m;

    int inf_mult = m - jmax;
    if (inf_mult > 0) {
        shape.distinct_roots += 1;
        shape.max_root_mult = std::max(shape.max_root_mult, inf_mult);
        if (inf_mult == 1) {
            stats.branches += 1;
        } else {
            resolve_germ(f.blowup_infinity(), bound, stats, nullptr);
        }
    }
    for (const auto& [factor, mult] : yun_squarefree(slope)) {
        int d = factor.max_degree();
        shape.distinct_roots += d;
        shape.max_root_mult = std::max(shape.max_root_mult, mult);
        if (mult == 1) {
            stats.branches += d;
        } else if (d == 1) {
            Rational theta = -factor.coeff(0) / factor.coeff(1);
            resolve_germ(f.blowup_finite(theta), bound, stats, nullptr);
        } else {
            // a repeated direction that is not rational; the germs met in
            // this toolkit never produce one
            throw BlowupBoundError(
                "repeated tangent direction is irrational; not resolvable here");
        }
    }
    if (top_shape) *top_shape = shape;
}

}  // namespace detail

inline CurveClass classify_plane_germ(const PlanePoly& germ, int blowup_bound = 30) {
    CurveClass out;
    if (germ.is_zero()) {
        out.type = CurveType::NonIsolated;
        out.evidence.push_back("zero polynomial");
        return out;
    }
    if (!germ.eval(Rational(0), Rational(0)).is_zero())
        throw std::domain_error("classify_plane_germ: germ does not vanish at the origin");

    // reducedness: the repeated part of f is gcd(f, f_u, f_v)
    PlanePoly rep = bivariate_gcd(bivariate_gcd(germ, germ.derivative_u()),
                                  germ.derivative_v());
    PlanePoly reduced = germ;
    if (rep.total_degree() > 0) {
        if (rep.eval(Rational(0), Rational(0)).is_zero()) {
            out.type = CurveType::NonIsolated;
            out.evidence.push_back("repeated component through the origin: " +
                                   rep.to_string());
            return out;
        }
        auto q = germ.divided_exact(rep);
        if (!q) throw std::domain_error("classify_plane_germ: inexact squarefree division");
        reduced = *q;
    }

    out.multiplicity = reduced.ord();
    if (out.multiplicity == 0) {
        // the repeated part carried the vanishing; cannot happen for germs
        throw std::domain_error("classify_plane_germ: reduced part is a unit");
    }

    detail::ResolveStats stats;
    detail::TangentShape shape;
    try {
        detail::resolve_germ(reduced, blowup_bound, stats, &shape);
    } catch (const BlowupBoundError& e) {
        out.type = CurveType::BeyondBound;
        out.evidence.push_back(e.what());
        return out;
    }
    out.delta = stats.delta;
    out.branches = stats.branches;
    out.milnor = static_cast<int>(2 * stats.delta - stats.branches + 1);
    out.evidence.push_back("multiplicity sequence: " + [&] {
        std::string s;
        for (const auto& x : stats.sequence) s += (s.empty() ? "" : ", ") + x;
        return s.empty() ? std::string("(smooth)") : s;
    }());
    out.evidence.push_back("delta=" + std::to_string(stats.delta) +
                           " branches=" + std::to_string(stats.branches) +
                           " milnor=" + std::to_string(out.milnor));

    if (out.multiplicity == 1) {
        out.type = CurveType::Smooth;
        out.index = 0;
        return out;
    }
    if (out.multiplicity == 2) {
        out.type = CurveType::A;
        out.index = out.milnor;
        return out;
    }
    if (out.multiplicity == 3) {
        if (shape.max_root_mult == 1) {
            out.type = CurveType::D;
            out.index = 4;  // three distinct tangents
            return out;
        }
        if (shape.max_root_mult == 2) {
            out.type = CurveType::D;
            out.index = out.milnor;
            return out;
        }
        // triple tangent
        if (out.milnor >= 6 && out.milnor <= 8) {
            out.type = CurveType::E;
            out.index = out.milnor;
            return out;
        }
        if (out.milnor == 10) {
            out.type = CurveType::MinimallyElliptic;
            out.index = out.milnor;
            return out;
        }
        out.type = CurveType::NotSimple;
        out.index = out.milnor;
        return out;
    }
    out.type = CurveType::NotSimple;
    out.index = out.milnor;
    out.evidence.push_back("multiplicity >= 4");
    return out;
}

}  // namespace dp1
