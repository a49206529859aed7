/* Polynomials in four coordinates of weights (1,1,2,3) with TCoeff
 * coefficients. Used both for homogeneous equations in the weighted
 * projective space and for affine chart restrictions (where homogeneity
 * is simply not asserted).
 *
 * Canonical term order for printing: lexicographic, descending, on
 * (e_w, e_z, e_x, e_y).
 */
#pragma once

#include <array>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "dp1/tcoeff.hpp"

namespace dp1 {

enum class VarSet { XYZW, PQRS };

inline const char* var_name(VarSet set, int v) {
    static const char* xyzw[4] = {"x", "y", "z", "w"};
    static const char* pqrs[4] = {"p", "q", "r", "s"};
    return set == VarSet::XYZW ? xyzw[v] : pqrs[v];
}

inline constexpr int kVarX = 0, kVarY = 1, kVarZ = 2, kVarW = 3;
inline constexpr int var_weight(int v) { return v == kVarZ ? 2 : (v == kVarW ? 3 : 1); }

struct Mono {
    std::array<int, 4> e{0, 0, 0, 0};

    int weighted_degree() const { return e[0] + e[1] + 2 * e[2] + 3 * e[3]; }
    bool operator==(const Mono& o) const { return e == o.e; }
};

// canonical order: (e_w, e_z, e_x, e_y) descending
struct MonoOrder {
    bool operator()(const Mono& a, const Mono& b) const {
        if (a.e[3] != b.e[3]) return a.e[3] > b.e[3];
        if (a.e[2] != b.e[2]) return a.e[2] > b.e[2];
        if (a.e[0] != b.e[0]) return a.e[0] > b.e[0];
        return a.e[1] > b.e[1];
    }
};

class WPoly {
public:
    using TermMap = std::map<Mono, TCoeff, MonoOrder>;

    explicit WPoly(VarSet set = VarSet::XYZW) : set_(set) {}

    static WPoly variable(int v, VarSet set = VarSet::XYZW) {
        WPoly r(set);
        Mono m;
        m.e[v] = 1;
        r.terms_[m] = TCoeff(1);
        return r;
    }
    static WPoly constant(const TCoeff& c, VarSet set = VarSet::XYZW) {
        WPoly r(set);
        if (!c.is_zero()) r.terms_[Mono{}] = c;
        return r;
    }
    static WPoly monomial(const TCoeff& c, const Mono& m, VarSet set = VarSet::XYZW) {
        WPoly r(set);
        if (!c.is_zero()) r.terms_[m] = c;
        return r;
    }

    VarSet var_set() const { return set_; }
    WPoly with_var_set(VarSet s) const {
        WPoly r = *this;
        r.set_ = s;
        return r;
    }

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    TCoeff coeff(const Mono& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? TCoeff() : it->second;
    }

    void add_term(const Mono& m, const TCoeff& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_[m] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend WPoly operator-(const WPoly& a) {
        WPoly r(a.set_);
        for (const auto& [m, c] : a.terms_) r.terms_[m] = -c;
        return r;
    }
    friend WPoly operator+(const WPoly& a, const WPoly& b) {
        WPoly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }
    friend WPoly operator-(const WPoly& a, const WPoly& b) {
        WPoly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
        return r;
    }
    friend WPoly operator*(const WPoly& a, const WPoly& b) {
        WPoly r(a.set_);
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                Mono m;
                for (int i = 0; i < 4; ++i) m.e[i] = ma.e[i] + mb.e[i];
                r.add_term(m, ca * cb);
            }
        }
        return r;
    }
    WPoly& operator+=(const WPoly& b) { return *this = *this + b; }
    WPoly& operator-=(const WPoly& b) { return *this = *this - b; }
    WPoly& operator*=(const WPoly& b) { return *this = *this * b; }

    friend bool operator==(const WPoly& a, const WPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const WPoly& a, const WPoly& b) { return !(a == b); }

    WPoly scaled(const TCoeff& c) const {
        WPoly r(set_);
        for (const auto& [m, k] : terms_) {
            TCoeff nc = k * c;
            if (!nc.is_zero()) r.terms_[m] = nc;
        }
        return r;
    }

    WPoly pow(int e) const {
        if (e < 0) throw std::domain_error("WPoly: negative power");
        WPoly r = constant(TCoeff(1), set_);
        WPoly base = *this;
        while (e != 0) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    std::optional<int> homogeneous_degree() const {
        std::optional<int> d;
        for (const auto& [m, c] : terms_) {
            int dm = m.weighted_degree();
            if (!d) {
                d = dm;
            } else if (*d != dm) {
                return std::nullopt;
            }
        }
        return d;  // nullopt only if inconsistent; zero poly -> nullopt too
    }
    bool is_homogeneous(int degree) const {
        for (const auto& [m, c] : terms_) {
            if (m.weighted_degree() != degree) return false;
        }
        return true;
    }

    // monomial substitution: variable v -> t^{img[v].first} * var(img[v].second)
    WPoly substitute_monomial(const std::array<std::pair<int, int>, 4>& img) const {
        WPoly r(set_);
        for (const auto& [m, c] : terms_) {
            Mono nm;
            int tshift = 0;
            for (int v = 0; v < 4; ++v) {
                nm.e[img[v].second] += m.e[v];
                tshift += img[v].first * m.e[v];
            }
            r.add_term(nm, c.shifted(tshift));
        }
        return r;
    }

    // substitute a rational constant for one variable (chart restriction)
    WPoly substitute_var(int v, const Rational& value) const {
        WPoly r(set_);
        for (const auto& [m, c] : terms_) {
            Mono nm = m;
            int e = nm.e[v];
            nm.e[v] = 0;
            r.add_term(nm, c.scaled(value.pow(e)));
        }
        return r;
    }

    // simultaneous polynomial substitution for a subset of the variables
    WPoly substitute_many(const std::map<int, WPoly>& images) const {
        WPoly r(set_);
        for (const auto& [m, c] : terms_) {
            WPoly term = constant(c, set_);
            Mono rest;
            for (int v = 0; v < 4; ++v) {
                auto it = images.find(v);
                if (it == images.end()) {
                    rest.e[v] = m.e[v];
                } else if (m.e[v] > 0) {
                    term = term * it->second.pow(m.e[v]);
                }
            }
            term = term * monomial(TCoeff(1), rest, set_);
            r += term;
        }
        return r;
    }

    // substitute a polynomial for the uniformizer t itself
    WPoly substitute_t(const WPoly& image) const {
        WPoly r(set_);
        for (const auto& [m, c] : terms_) {
            if (!c.in_dvr())
                throw std::domain_error("WPoly: t-substitution into Laurent coefficient");
            WPoly acc(set_);
            for (const auto& [e, q] : c.terms())
                acc += image.pow(e).scaled(TCoeff(q));
            r += acc * monomial(TCoeff(1), m, set_);
        }
        return r;
    }

    WPoly partial(int v) const {
        WPoly r(set_);
        for (const auto& [m, c] : terms_) {
            if (m.e[v] == 0) continue;
            Mono nm = m;
            nm.e[v] -= 1;
            r.add_term(nm, c.scaled(Rational(m.e[v])));
        }
        return r;
    }
    WPoly dt() const {
        WPoly r(set_);
        for (const auto& [m, c] : terms_) r.add_term(m, c.derivative());
        return r;
    }

    std::optional<int> t_valuation() const {
        std::optional<int> v;
        for (const auto& [m, c] : terms_) {
            int vc = *c.valuation();
            if (!v || vc < *v) v = vc;
        }
        return v;
    }
    WPoly shifted_t(int e) const {
        WPoly r(set_);
        for (const auto& [m, c] : terms_) r.terms_[m] = c.shifted(e);
        return r;
    }
    bool coefficients_in_dvr() const {
        for (const auto& [m, c] : terms_) {
            if (!c.in_dvr()) return false;
        }
        return true;
    }

    // reduce mod t: keep constant parts of the coefficients
    WPoly mod_t() const {
        WPoly r(set_);
        for (const auto& [m, c] : terms_) r.add_term(m, TCoeff(c.constant_part()));
        return r;
    }

    // shift coefficients t -> t + t0
    WPoly compose_t_plus(const Rational& t0) const {
        WPoly r(set_);
        for (const auto& [m, c] : terms_) r.add_term(m, c.compose_t_plus(t0));
        return r;
    }

    Rational eval(const std::array<Rational, 4>& pt, const Rational& t0) const {
        Rational acc;
        for (const auto& [m, c] : terms_) {
            Rational v = c.eval(t0);
            for (int i = 0; i < 4; ++i) v *= pt[i].pow(m.e[i]);
            acc += v;
        }
        return acc;
    }

    int max_var_exponent(int v) const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.e[v]);
        return d;
    }
    int max_t_degree() const {
        int d = 0;
        for (const auto& [m, c] : terms_)
            d = std::max(d, c.max_degree());
        return d;
    }

    // canonical text form; flattens coefficients so that every printed
    // summand is rational * t-power * monomial
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            for (const auto& [e, q] : c.terms()) {
                Rational mag = q.abs();
                if (first) {
                    if (q.sign() < 0) os << "-";
                    first = false;
                } else {
                    os << (q.sign() < 0 ? " - " : " + ");
                }
                bool printed = false;
                bool bare = (e == 0) && (m == Mono{});
                if (!mag.is_one() || bare) {
                    os << mag.to_string();
                    printed = true;
                }
                if (e != 0) {
                    if (printed) os << "*";
                    os << "t";
                    if (e != 1) os << "^" << e;
                    printed = true;
                }
                for (int v : {kVarW, kVarZ, kVarX, kVarY}) {
                    if (m.e[v] == 0) continue;
                    if (printed) os << "*";
                    os << var_name(set_, v);
                    if (m.e[v] != 1) os << "^" << m.e[v];
                    printed = true;
                }
            }
        }
        return os.str();
    }

private:
    VarSet set_;
    TermMap terms_;
};

}  // namespace dp1
