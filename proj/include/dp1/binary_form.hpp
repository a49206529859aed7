/* Binary forms in two weight-1 coordinates with TCoeff coefficients,
 * plus the elimination toolkit over them: Sylvester resultants (Bareiss,
 * fraction free) and gcd via a primitive pseudo-remainder sequence over
 * the fraction field of Q[t].
 *
 * Resultant sign convention: Sylvester matrix with f's coefficient rows
 * on top (deg g of them), then g's rows. Pinned by the golden value
 * res(x*y, x+y) = -1.
 */
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dp1/wpoly.hpp"

namespace dp1 {

class BinaryForm {
public:
    BinaryForm() : degree_(0), c_(1) {}
    explicit BinaryForm(int degree)
        : degree_(degree), c_(static_cast<std::size_t>(degree) + 1) {
        if (degree < 0) throw std::domain_error("BinaryForm: negative degree");
    }
    BinaryForm(int degree, std::vector<TCoeff> coeffs)
        : degree_(degree), c_(std::move(coeffs)) {
        if (c_.size() != static_cast<std::size_t>(degree) + 1)
            throw std::domain_error("BinaryForm: coefficient count mismatch");
    }

    int degree() const { return degree_; }
    // coefficient of x^{degree-i} y^i
    const TCoeff& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
    TCoeff& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }

    bool is_zero() const {
        for (const auto& c : c_) {
            if (!c.is_zero()) return false;
        }
        return true;
    }
    bool in_dvr() const {
        for (const auto& c : c_) {
            if (!c.in_dvr()) return false;
        }
        return true;
    }
    bool is_zero_mod_t() const {
        for (const auto& c : c_) {
            if (!c.in_dvr() || !c.constant_part().is_zero()) return false;
        }
        return true;
    }

    friend BinaryForm operator+(const BinaryForm& a, const BinaryForm& b) {
        if (a.degree_ != b.degree_)
            throw std::domain_error("BinaryForm: degree mismatch in sum");
        BinaryForm r(a.degree_);
        for (int i = 0; i <= a.degree_; ++i) r[i] = a[i] + b[i];
        return r;
    }
    friend BinaryForm operator-(const BinaryForm& a, const BinaryForm& b) {
        if (a.degree_ != b.degree_)
            throw std::domain_error("BinaryForm: degree mismatch in difference");
        BinaryForm r(a.degree_);
        for (int i = 0; i <= a.degree_; ++i) r[i] = a[i] - b[i];
        return r;
    }
    friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
        BinaryForm r(a.degree_ + b.degree_);
        for (int i = 0; i <= a.degree_; ++i)
            for (int j = 0; j <= b.degree_; ++j) r[i + j] += a[i] * b[j];
        return r;
    }
    friend bool operator==(const BinaryForm& a, const BinaryForm& b) {
        return a.degree_ == b.degree_ && a.c_ == b.c_;
    }
    friend bool operator!=(const BinaryForm& a, const BinaryForm& b) {
        return !(a == b);
    }

    BinaryForm scaled(const TCoeff& k) const {
        BinaryForm r(degree_);
        for (int i = 0; i <= degree_; ++i) r[i] = c_[static_cast<std::size_t>(i)] * k;
        return r;
    }

    BinaryForm derivative_x() const {
        if (degree_ == 0) return BinaryForm(0);
        BinaryForm r(degree_ - 1);
        for (int i = 0; i < degree_; ++i)
            r[i] = c_[static_cast<std::size_t>(i)].scaled(Rational(degree_ - i));
        return r;
    }
    BinaryForm derivative_y() const {
        if (degree_ == 0) return BinaryForm(0);
        BinaryForm r(degree_ - 1);
        for (int i = 0; i < degree_; ++i)
            r[i] = c_[static_cast<std::size_t>(i) + 1].scaled(Rational(i + 1));
        return r;
    }
    BinaryForm dt() const {
        BinaryForm r(degree_);
        for (int i = 0; i <= degree_; ++i)
            r[i] = c_[static_cast<std::size_t>(i)].derivative();
        return r;
    }

    BinaryForm mod_t() const {
        BinaryForm r(degree_);
        for (int i = 0; i <= degree_; ++i)
            r[i] = TCoeff(c_[static_cast<std::size_t>(i)].constant_part());
        return r;
    }

    TCoeff eval(const Rational& x0, const Rational& y0) const {
        TCoeff acc;
        for (int i = 0; i <= degree_; ++i)
            acc += c_[static_cast<std::size_t>(i)].scaled(
                x0.pow(degree_ - i) * y0.pow(i));
        return acc;
    }

    WPoly to_wpoly(VarSet set = VarSet::XYZW) const {
        WPoly r(set);
        for (int i = 0; i <= degree_; ++i) {
            Mono m;
            m.e[kVarX] = degree_ - i;
            m.e[kVarY] = i;
            r.add_term(m, c_[static_cast<std::size_t>(i)]);
        }
        return r;
    }
    static BinaryForm from_wpoly(const WPoly& p, int degree) {
        BinaryForm r(degree);
        for (const auto& [m, c] : p.terms()) {
            if (m.e[kVarZ] != 0 || m.e[kVarW] != 0 || m.e[kVarX] + m.e[kVarY] != degree)
                throw std::domain_error("BinaryForm: not a binary form of that degree");
            r[m.e[kVarY]] = c;
        }
        return r;
    }

    // exchange the roles of x and y
    BinaryForm swapped_xy() const {
        BinaryForm r(degree_);
        for (int i = 0; i <= degree_; ++i) r[i] = c_[static_cast<std::size_t>(degree_ - i)];
        return r;
    }

    std::string to_string(VarSet set = VarSet::XYZW) const {
        return to_wpoly(set).to_string();
    }

private:
    int degree_;
    std::vector<TCoeff> c_;
};

// ---------------------------------------------------------------------
// univariate polynomials over Q[t], represented as ascending coefficient
// vectors; shared by the binary-form gcd and the plane-curve machinery
// ---------------------------------------------------------------------

namespace uvp {

inline void trim(std::vector<TCoeff>& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}
inline bool is_zero(const std::vector<TCoeff>& p) { return p.empty(); }
inline int degree(const std::vector<TCoeff>& p) {
    return static_cast<int>(p.size()) - 1;
}

inline std::vector<TCoeff> mul(const std::vector<TCoeff>& a,
                               const std::vector<TCoeff>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<TCoeff> r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

inline std::vector<TCoeff> scale(const std::vector<TCoeff>& a, const TCoeff& k) {
    std::vector<TCoeff> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * k;
    trim(r);
    return r;
}

inline std::vector<TCoeff> sub(std::vector<TCoeff> a, const std::vector<TCoeff>& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

inline TCoeff content(const std::vector<TCoeff>& p) {
    TCoeff g;
    for (const auto& c : p) g = tpoly_gcd(g, c);
    return g;
}

inline std::vector<TCoeff> divide_coeffs_exact(const std::vector<TCoeff>& p,
                                               const TCoeff& d) {
    std::vector<TCoeff> r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i].is_zero()) continue;
        auto q = p[i].divided_exact(d);
        if (!q) throw std::domain_error("uvp: inexact content division");
        r[i] = *q;
    }
    trim(r);
    return r;
}

// pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) * a  mod  b
inline std::vector<TCoeff> prem(std::vector<TCoeff> a, const std::vector<TCoeff>& b) {
    int db = degree(b);
    const TCoeff& lb = b.back();
    while (!is_zero(a) && degree(a) >= db) {
        int shift = degree(a) - db;
        TCoeff la = a.back();
        a = scale(a, lb);
        std::vector<TCoeff> t(static_cast<std::size_t>(shift) + 1);
        t.back() = la;
        a = sub(a, mul(b, t));
    }
    return a;
}

// gcd over the fraction field Q(t), returned as gcd(contents) times the
// primitive gcd over Q[t]; inputs must have coefficients of valuation >= 0
inline std::vector<TCoeff> gcd(std::vector<TCoeff> a, std::vector<TCoeff> b) {
    trim(a);
    trim(b);
    if (is_zero(a)) return b;
    if (is_zero(b)) return a;
    TCoeff ca = content(a), cb = content(b);
    a = divide_coeffs_exact(a, ca);
    b = divide_coeffs_exact(b, cb);
    TCoeff cg = tpoly_gcd(ca, cb);
    if (degree(a) < degree(b)) std::swap(a, b);
    // cheap coprimality certificate: a specialization t -> t0 that keeps
    // both leading coefficients alive can only shrink the gcd, so a
    // coprime specialization proves the primitive parts coprime
    if (degree(b) > 0) {
        for (long long t0v : {1LL, -1LL, 2LL, -2LL, 3LL, 5LL, 7LL, 11LL}) {
            Rational t0(t0v);
            if (a.back().eval(t0).is_zero() || b.back().eval(t0).is_zero()) continue;
            TCoeff sa, sb;
            for (std::size_t i = 0; i < a.size(); ++i)
                sa.add_term(static_cast<int>(i), a[i].eval(t0));
            for (std::size_t i = 0; i < b.size(); ++i)
                sb.add_term(static_cast<int>(i), b[i].eval(t0));
            if (tpoly_gcd(sa, sb).max_degree() == 0) return {cg};
            break;
        }
    }
    while (!is_zero(b) && degree(b) > 0) {
        std::vector<TCoeff> r = prem(a, b);
        if (!is_zero(r)) r = divide_coeffs_exact(r, content(r));
        a = std::move(b);
        b = std::move(r);
    }
    if (!is_zero(b)) return {cg};  // coprime primitive parts
    std::vector<TCoeff> g = a;
    if (!cg.is_one()) g = scale(g, cg);
    return g;
}

// exact division (nullopt if not divisible)
inline std::optional<std::vector<TCoeff>> divide_exact(std::vector<TCoeff> a,
                                                       const std::vector<TCoeff>& b) {
    trim(a);
    if (is_zero(a)) return std::vector<TCoeff>{};
    if (is_zero(b)) throw std::domain_error("uvp: division by zero");
    int db = degree(b);
    std::vector<TCoeff> q(a.size());
    while (!is_zero(a) && degree(a) >= db) {
        int shift = degree(a) - db;
        auto qc = a.back().divided_exact(b.back());
        if (!qc) return std::nullopt;
        q[static_cast<std::size_t>(shift)] += *qc;
        std::vector<TCoeff> t(static_cast<std::size_t>(shift) + 1);
        t.back() = *qc;
        a = sub(a, mul(b, t));
    }
    if (!is_zero(a)) return std::nullopt;
    trim(q);
    return q;
}

}  // namespace uvp

// Sylvester resultant of univariate polynomials over Q[t] with declared
// degrees (binary-form convention: declared degree may exceed the actual
// one; the matrix then correctly reports common roots at infinity).
inline TCoeff sylvester_resultant(const std::vector<TCoeff>& f, int m,
                                  const std::vector<TCoeff>& g, int n) {
    if (m < 0 || n < 0) throw std::domain_error("resultant: negative degree");
    if (m == 0 && n == 0) return TCoeff(1);
    auto at = [](const std::vector<TCoeff>& p, int i) {
        return i >= 0 && i < static_cast<int>(p.size()) ? p[static_cast<std::size_t>(i)]
                                                        : TCoeff();
    };
    if (n == 0) {
        TCoeff r(1);
        for (int i = 0; i < m; ++i) r *= at(g, 0);
        return r;
    }
    if (m == 0) {
        TCoeff r(1);
        for (int i = 0; i < n; ++i) r *= at(f, 0);
        return r;
    }
    int k = m + n;
    std::vector<std::vector<TCoeff>> a(static_cast<std::size_t>(k),
                                       std::vector<TCoeff>(static_cast<std::size_t>(k)));
    // row convention: ascending coefficients, f rows first (res(x,y) = 1)
    for (int r = 0; r < n; ++r)
        for (int j = 0; j <= m; ++j) a[r][r + j] = at(f, j);
    for (int r = 0; r < m; ++r)
        for (int j = 0; j <= n; ++j) a[n + r][r + j] = at(g, j);

    // Bareiss fraction-free elimination
    TCoeff prev(1);
    int sign = 1;
    for (int p = 0; p < k - 1; ++p) {
        if (a[p][p].is_zero()) {
            int swap_row = -1;
            for (int i = p + 1; i < k; ++i) {
                if (!a[i][p].is_zero()) {
                    swap_row = i;
                    break;
                }
            }
            if (swap_row < 0) return TCoeff();  // singular
            std::swap(a[static_cast<std::size_t>(p)], a[static_cast<std::size_t>(swap_row)]);
            sign = -sign;
        }
        for (int i = p + 1; i < k; ++i) {
            for (int j = p + 1; j < k; ++j) {
                TCoeff num = a[i][j] * a[p][p] - a[i][p] * a[p][j];
                auto q = num.divided_exact(prev);
                if (!q) throw std::domain_error("resultant: inexact Bareiss division");
                a[i][j] = *q;
            }
            a[i][p] = TCoeff();
        }
        prev = a[p][p];
    }
    TCoeff det = a[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(k - 1)];
    return sign < 0 ? -det : det;
}

// resultant of two binary forms. Monomial factors are split off first,
// using multiplicativity and the closed forms
//   res(x, h) = h(0,1),  res(y, h) = (-1)^{deg h} h(1,0),
//   res(a, b) = (-1)^{deg a deg b} res(b, a).
inline TCoeff binary_resultant(const BinaryForm& f, const BinaryForm& g) {
    if (f.is_zero() || g.is_zero())
        throw std::domain_error("binary_resultant: zero input");
    auto split = [](const BinaryForm& p, int& xm, int& ym) {
        int lo = 0;
        while (p[lo].is_zero()) ++lo;
        int hi = p.degree();
        while (p[hi].is_zero()) --hi;
        ym = lo;
        xm = p.degree() - hi;
        std::vector<TCoeff> core(static_cast<std::size_t>(hi - lo) + 1);
        for (int i = lo; i <= hi; ++i) core[static_cast<std::size_t>(i - lo)] = p[i];
        return core;
    };
    int fa, fb, ga, gb;
    std::vector<TCoeff> fc = split(f, fa, fb), gc = split(g, ga, gb);
    if ((fa > 0 && ga > 0) || (fb > 0 && gb > 0)) return TCoeff();  // common root
    int m0 = uvp::degree(fc), n0 = uvp::degree(gc);
    TCoeff r(1);
    auto powmul = [&r](TCoeff base, int e) {
        for (int i = 0; i < e; ++i) r *= base;
    };
    // res(x^fa, y^gb) = 1; res(y^fb, x^ga) = (-1)^{fb ga}
    if ((fb * ga) % 2 != 0) r = -r;
    powmul(gc.back(), fa);                                        // res(x, g0)^fa
    powmul(n0 % 2 ? -gc.front() : gc.front(), fb);                // res(y, g0)^fb
    powmul(m0 % 2 ? -fc.back() : fc.back(), ga);                  // res(f0, x)^ga
    powmul(fc.front(), gb);                                       // res(f0, y)^gb
    if (m0 == 0) {
        powmul(fc[0], n0);
        return r;
    }
    if (n0 == 0) {
        powmul(gc[0], m0);
        return r;
    }
    return r * sylvester_resultant(fc, m0, gc, n0);
}

// gcd of two binary forms over Q(t), cleared to a primitive form over
// Q[t] with unit normalization on the leading nonzero coefficient
inline BinaryForm binary_gcd(const BinaryForm& f, const BinaryForm& g) {
    if (f.is_zero() && g.is_zero())
        throw std::domain_error("binary_gcd: both inputs zero");
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    auto split = [](const BinaryForm& p, int& xmult, int& ymult,
                    std::vector<TCoeff>& core) {
        int lo = 0;
        while (p[lo].is_zero()) ++lo;
        int hi = p.degree();
        while (p[hi].is_zero()) --hi;
        ymult = lo;
        xmult = p.degree() - hi;
        core.assign(static_cast<std::size_t>(hi - lo) + 1, TCoeff());
        for (int i = lo; i <= hi; ++i) core[static_cast<std::size_t>(i - lo)] = p[i];
    };
    int fx, fy, gx, gy;
    std::vector<TCoeff> fc, gc;
    split(f, fx, fy, fc);
    split(g, gx, gy, gc);
    std::vector<TCoeff> core = uvp::gcd(fc, gc);
    int xm = std::min(fx, gx), ym = std::min(fy, gy);
    int d = uvp::degree(core) + xm + ym;
    BinaryForm r(d);
    for (std::size_t i = 0; i < core.size(); ++i)
        r[static_cast<int>(i) + ym] = core[i];
    // normalize so the lowest nonzero coefficient is a monic t-polynomial
    for (int i = 0; i <= d; ++i) {
        if (!r[i].is_zero()) {
            Rational lead = r[i].coeff(r[i].max_degree());
            return r.scaled(TCoeff(Rational(1) / lead));
        }
    }
    return r;
}

}  // namespace dp1
