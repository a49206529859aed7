/* Coefficients over the base germ: finite Laurent polynomials in the
 * uniformizer t with exact rational coefficients. An element lies in the
 * local ring iff its valuation is >= 0, and is a unit iff the valuation
 * is exactly 0. Negative exponents are permitted transiently (they show
 * up while applying monomial coordinate changes and are cleared before
 * results are accepted).
 */
#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "dp1/rational.hpp"

namespace dp1 {

class TCoeff {
public:
    TCoeff() = default;
    TCoeff(const Rational& c) {
        if (!c.is_zero()) terms_[0] = c;
    }
    TCoeff(long long c) : TCoeff(Rational(c)) {}
    TCoeff(int c) : TCoeff(Rational(c)) {}

    static TCoeff t(int e = 1) {
        TCoeff r;
        r.terms_[e] = Rational(1);
        return r;
    }
    static TCoeff term(const Rational& c, int e) {
        TCoeff r;
        if (!c.is_zero()) r.terms_[e] = c;
        return r;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_rational_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
    }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == 0 &&
               terms_.begin()->second.is_one();
    }

    // minimal exponent present; nullopt for the zero element
    std::optional<int> valuation() const {
        if (terms_.empty()) return std::nullopt;
        return terms_.begin()->first;
    }
    bool in_dvr() const { return terms_.empty() || terms_.begin()->first >= 0; }
    bool is_unit() const { return !terms_.empty() && terms_.begin()->first == 0; }

    int max_degree() const {
        if (terms_.empty()) return 0;
        return terms_.rbegin()->first;
    }

    Rational coeff(int e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational() : it->second;
    }
    // value at t = 0 (requires valuation >= 0)
    Rational constant_part() const {
        if (!in_dvr()) throw std::domain_error("TCoeff: negative valuation at t=0");
        return coeff(0);
    }

    const std::map<int, Rational>& terms() const { return terms_; }

    friend TCoeff operator-(const TCoeff& a) {
        TCoeff r;
        for (const auto& [e, c] : a.terms_) r.terms_[e] = -c;
        return r;
    }
    friend TCoeff operator+(const TCoeff& a, const TCoeff& b) {
        TCoeff r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }
    friend TCoeff operator-(const TCoeff& a, const TCoeff& b) {
        TCoeff r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }
    friend TCoeff operator*(const TCoeff& a, const TCoeff& b) {
        TCoeff r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    TCoeff& operator+=(const TCoeff& b) { return *this = *this + b; }
    TCoeff& operator-=(const TCoeff& b) { return *this = *this - b; }
    TCoeff& operator*=(const TCoeff& b) { return *this = *this * b; }

    friend bool operator==(const TCoeff& a, const TCoeff& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const TCoeff& a, const TCoeff& b) { return !(a == b); }

    TCoeff scaled(const Rational& c) const {
        TCoeff r;
        if (c.is_zero()) return r;
        for (const auto& [e, k] : terms_) r.terms_[e] = k * c;
        return r;
    }
    // multiply by t^e
    TCoeff shifted(int e) const {
        TCoeff r;
        for (const auto& [k, c] : terms_) r.terms_[k + e] = c;
        return r;
    }
    // drop exponents >= bound
    TCoeff truncated(int bound) const {
        TCoeff r;
        for (const auto& [e, c] : terms_) {
            if (e < bound) r.terms_[e] = c;
        }
        return r;
    }

    TCoeff derivative() const {
        TCoeff r;
        for (const auto& [e, c] : terms_) {
            if (e != 0) r.add_term(e - 1, c * Rational(e));
        }
        return r;
    }

    Rational eval(const Rational& t0) const {
        Rational acc;
        for (const auto& [e, c] : terms_) acc += c * t0.pow(e);
        return acc;
    }

    // composition t -> t + t0 (polynomial part only; requires valuation >= 0)
    TCoeff compose_t_plus(const Rational& t0) const {
        if (!in_dvr()) throw std::domain_error("TCoeff: shift of Laurent element");
        TCoeff r;
        for (const auto& [e, c] : terms_) {
            // (t + t0)^e expanded
            std::vector<Rational> pw(static_cast<std::size_t>(e) + 1, Rational(1));
            for (int k = 1; k <= e; ++k) pw[k] = pw[k - 1] * t0;
            Rational ch(1);
            for (int k = 0; k <= e; ++k) {
                r.add_term(e - k, c * ch * pw[k]);
                ch = ch * Rational(e - k) / Rational(k + 1);
            }
        }
        return r;
    }

    // exact division; nullopt if the divisor does not divide exactly
    std::optional<TCoeff> divided_exact(const TCoeff& d) const {
        if (d.is_zero()) throw std::domain_error("TCoeff: division by zero");
        if (is_zero()) return TCoeff();
        int vd = *d.valuation();
        int vn = *valuation();
        // divide ascending from the lowest term
        TCoeff num = *this;
        TCoeff q;
        Rational lead = d.terms_.begin()->second;
        int steps_bound = (max_degree() - vn) - (d.max_degree() - vd) + 1;
        if (steps_bound < 0) return std::nullopt;
        while (!num.is_zero()) {
            int e = *num.valuation() - vd;
            Rational c = num.terms_.begin()->second / lead;
            q.add_term(e, c);
            num = num - d * TCoeff::term(c, e);
            if (--steps_bound < 0 && !num.is_zero()) return std::nullopt;
        }
        return q;
    }

    // series inverse to the given truncation bound (requires nonzero
    // leading coefficient; result valuation = -valuation())
    TCoeff inverse_series(int prec) const {
        if (is_zero()) throw std::domain_error("TCoeff: inverse of zero");
        int v = *valuation();
        TCoeff a = shifted(-v);  // unit with a(0) != 0
        Rational a0 = a.coeff(0);
        TCoeff r = TCoeff(Rational(1) / a0);
        // x_{n+1} = x_n (2 - a x_n), doubling precision
        for (int have = 1; have < prec; have *= 2) {
            int next = std::min(prec, have * 2);
            TCoeff two(Rational(2));
            r = (r * (two - (a * r).truncated(next))).truncated(next);
        }
        return r.shifted(-v);
    }

    // series square root to the truncation bound; leading coefficient must
    // be an exact rational square and the valuation must be even
    std::optional<TCoeff> sqrt_series(int prec) const {
        if (is_zero()) return TCoeff();
        int v = *valuation();
        if (v % 2 != 0) return std::nullopt;
        TCoeff a = shifted(-v);
        auto r0 = a.coeff(0).sqrt_exact();
        if (!r0 || r0->is_zero()) return std::nullopt;
        TCoeff r(*r0);
        Rational inv2r0 = Rational(1) / (Rational(2) * *r0);
        for (int n = 1; n < prec; ++n) {
            // coefficient of t^n in r^2 with current partial r
            Rational cn = (r * r).coeff(n);
            Rational target = a.coeff(n);
            Rational rn = (target - cn) * inv2r0;
            if (!rn.is_zero()) r.add_term(n, rn);
        }
        return r.shifted(v / 2);
    }

    // series cube root, analogous to sqrt_series
    std::optional<TCoeff> cbrt_series(int prec) const {
        if (is_zero()) return TCoeff();
        int v = *valuation();
        if (v % 3 != 0) return std::nullopt;
        TCoeff a = shifted(-v);
        auto r0 = a.coeff(0).cbrt_exact();
        if (!r0 || r0->is_zero()) return std::nullopt;
        TCoeff r(*r0);
        Rational inv3r0sq = Rational(1) / (Rational(3) * *r0 * *r0);
        for (int n = 1; n < prec; ++n) {
            Rational cn = (r * r * r).coeff(n);
            Rational target = a.coeff(n);
            Rational rn = (target - cn) * inv3r0sq;
            if (!rn.is_zero()) r.add_term(n, rn);
        }
        return r.shifted(v / 3);
    }

    // canonical text form, ascending powers of t, e.g. "3/2 + t^4 - 2*t^5"
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            Rational mag = c.abs();
            if (first) {
                if (c.sign() < 0) os << "-";
                first = false;
            } else {
                os << (c.sign() < 0 ? " - " : " + ");
            }
            bool unit_mag = mag.is_one();
            if (e == 0) {
                os << mag.to_string();
            } else {
                if (!unit_mag) os << mag.to_string() << "*";
                os << "t";
                if (e != 1) os << "^" << e;
            }
        }
        return os.str();
    }

    void add_term(int e, const Rational& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_[e] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

private:
    std::map<int, Rational> terms_;
};

namespace detail_tgcd {

// Provable coprimality over Q by a gcd modulo a prime: when both leading
// coefficients survive the reduction, the mod-p gcd degree bounds the
// rational one from above, so a constant mod-p gcd certifies coprimality.
// Returns nullopt when the prime is unusable.
inline std::optional<bool> coprime_mod_p(const TCoeff& a, const TCoeff& b) {
    constexpr unsigned long long P = 2147483647ULL;  // 2^31 - 1
    auto powmod = [](unsigned long long base, unsigned long long e) {
        unsigned long long r = 1;
        base %= P;
        while (e) {
            if (e & 1) r = r * base % P;
            base = base * base % P;
            e >>= 1;
        }
        return r;
    };
    auto reduce = [&](const TCoeff& f, std::vector<unsigned long long>& out) -> bool {
        out.assign(static_cast<std::size_t>(f.max_degree()) + 1, 0);
        for (const auto& [e, c] : f.terms()) {
            unsigned long long den = c.den().mod_small(P);
            if (den == 0) return false;
            unsigned long long num = c.num().mod_small(P);
            unsigned long long v = num * powmod(den, P - 2) % P;
            if (c.num().is_neg() && v != 0) v = P - v;
            out[static_cast<std::size_t>(e)] = v;
        }
        if (out.empty() || out.back() == 0) return false;  // degree dropped
        return true;
    };
    std::vector<unsigned long long> fa, fb;
    if (!reduce(a, fa) || !reduce(b, fb)) return std::nullopt;
    // Euclid mod P
    while (!fb.empty()) {
        unsigned long long inv = powmod(fb.back(), P - 2);
        while (fa.size() >= fb.size()) {
            unsigned long long q = fa.back() * inv % P;
            std::size_t shift = fa.size() - fb.size();
            for (std::size_t i = 0; i < fb.size(); ++i) {
                unsigned long long sub = q * fb[i] % P;
                fa[i + shift] = (fa[i + shift] + P - sub) % P;
            }
            while (!fa.empty() && fa.back() == 0) fa.pop_back();
            if (fa.empty()) break;
        }
        std::swap(fa, fb);
    }
    return fa.size() == 1;
}

}  // namespace detail_tgcd

// gcd in Q[t] of two polynomial elements (valuations >= 0), normalized
// monic. Zero inputs are absorbed; gcd(0,0) = 0. Fraction-free primitive
// remainder sequence to keep coefficient growth in check.
inline TCoeff tpoly_gcd(TCoeff a, TCoeff b) {
    if (!a.in_dvr() || !b.in_dvr())
        throw std::domain_error("tpoly_gcd: Laurent input");
    auto make_monic = [](const TCoeff& p) {
        if (p.is_zero()) return p;
        Rational lead = p.coeff(p.max_degree());
        return p.scaled(Rational(1) / lead);
    };
    // integer-primitive normalization
    auto primitive = [](const TCoeff& p) {
        if (p.is_zero()) return p;
        BigInt lcm(1);
        for (const auto& [e, c] : p.terms()) {
            const BigInt& d = c.den();
            lcm = lcm / BigInt::gcd(lcm, d) * d;
        }
        TCoeff q = p.scaled(Rational(lcm));
        BigInt g(0);
        for (const auto& [e, c] : q.terms()) g = BigInt::gcd(g, c.num());
        return q.scaled(Rational(BigInt(1), g));
    };
    // common t-power
    int shift = 0;
    if (!a.is_zero() && !b.is_zero()) {
        shift = std::min(*a.valuation(), *b.valuation());
        a = a.shifted(-*a.valuation());
        b = b.shifted(-*b.valuation());
    }
    a = primitive(a);
    b = primitive(b);
    if (!a.is_zero() && !b.is_zero() && a.max_degree() > 0 && b.max_degree() > 0) {
        auto coprime = detail_tgcd::coprime_mod_p(a, b);
        if (coprime && *coprime) return TCoeff(1).shifted(shift);
    }
    if (!a.is_zero() && !b.is_zero() && a.max_degree() < b.max_degree()) std::swap(a, b);
    while (!b.is_zero() && b.max_degree() > 0) {
        // pseudo-remainder of a by b, then strip integer content
        TCoeff r = a;
        int db = b.max_degree();
        Rational lb = b.coeff(db);
        while (!r.is_zero() && r.max_degree() >= db) {
            int e = r.max_degree() - db;
            Rational lr = r.coeff(r.max_degree());
            r = r.scaled(lb) - b * TCoeff::term(lr, e);
        }
        a = std::move(b);
        b = primitive(r);
    }
    TCoeff g = b.is_zero() ? a : TCoeff(1);
    g = make_monic(g);
    return g.is_zero() ? g : g.shifted(shift);
}

}  // namespace dp1
