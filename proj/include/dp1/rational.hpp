/* Exact rational numbers over BigInt. Always normalized: positive
 * denominator, coprime numerator/denominator. */
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "dp1/bigint.hpp"

namespace dp1 {

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(int n) : num_(n), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
        normalize();
    }
    Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

    // "n", "-n", "n/m"
    static Rational from_string(std::string_view s) {
        auto slash = s.find('/');
        if (slash == std::string_view::npos)
            return Rational(BigInt::from_string(s));
        return Rational(BigInt::from_string(s.substr(0, slash)),
                        BigInt::from_string(s.substr(slash + 1)));
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_integer() const { return den_.is_one(); }
    int sign() const { return num_.sign(); }

    friend Rational operator-(const Rational& a) {
        Rational r = a;
        r.num_ = -r.num_;
        return r;
    }
    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    Rational abs() const { return num_.is_neg() ? -*this : *this; }

    Rational pow(int e) const {
        if (e >= 0)
            return Rational(num_.pow(static_cast<unsigned>(e)),
                            den_.pow(static_cast<unsigned>(e)));
        if (is_zero()) throw std::domain_error("Rational: 0^negative");
        return Rational(den_.pow(static_cast<unsigned>(-e)),
                        num_.pow(static_cast<unsigned>(-e)));
    }

    std::optional<Rational> sqrt_exact() const {
        if (num_.is_neg()) return std::nullopt;
        auto sn = num_.sqrt_exact();
        auto sd = den_.sqrt_exact();
        if (!sn || !sd) return std::nullopt;
        return Rational(*sn, *sd);
    }
    std::optional<Rational> cbrt_exact() const {
        auto cn = num_.cbrt_exact();
        auto cd = den_.cbrt_exact();
        if (!cn || !cd) return std::nullopt;
        return Rational(*cn, *cd);
    }

    std::string to_string() const {
        if (den_.is_one()) return num_.to_string();
        return num_.to_string() + "/" + den_.to_string();
    }

private:
    BigInt num_, den_;

    void normalize() {
        if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
        if (den_.is_neg()) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_.is_zero()) {
            den_ = BigInt(1);
            return;
        }
        BigInt g = BigInt::gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
    }
};

}  // namespace dp1
