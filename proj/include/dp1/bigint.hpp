/* Arbitrary-precision signed integers.
 *
 * Sign-magnitude representation over 32-bit limbs, little endian, no
 * trailing zero limbs. Small and self-contained; sized for exact
 * symbolic computation at desk scale, not for cryptographic workloads.
 */
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dp1 {

class BigInt {
public:
    BigInt() = default;
    BigInt(long long v) {
        if (v < 0) { neg_ = true; }
        // careful with LLONG_MIN
        unsigned long long m = neg_ ? ~static_cast<unsigned long long>(v) + 1ULL
                                    : static_cast<unsigned long long>(v);
        while (m != 0) {
            limbs_.push_back(static_cast<std::uint32_t>(m & 0xffffffffULL));
            m >>= 32;
        }
    }
    BigInt(int v) : BigInt(static_cast<long long>(v)) {}

    static BigInt from_string(std::string_view s) {
        bool neg = false;
        std::size_t i = 0;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            neg = s[i] == '-';
            ++i;
        }
        if (i >= s.size()) throw std::invalid_argument("BigInt: empty numeral");
        BigInt r;
        BigInt chunk_scale(1000000000LL);
        // accumulate in 9-digit chunks
        std::uint32_t acc = 0;
        int acc_len = 0;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9')
                throw std::invalid_argument("BigInt: bad digit in numeral");
            acc = acc * 10 + static_cast<std::uint32_t>(s[i] - '0');
            if (++acc_len == 9) {
                r = r * chunk_scale + BigInt(static_cast<long long>(acc));
                acc = 0;
                acc_len = 0;
            }
        }
        if (acc_len > 0) {
            long long p = 1;
            for (int k = 0; k < acc_len; ++k) p *= 10;
            r = r * BigInt(p) + BigInt(static_cast<long long>(acc));
        }
        r.neg_ = neg && !r.is_zero();
        return r;
    }

    bool is_zero() const { return limbs_.empty(); }
    bool is_neg() const { return neg_; }
    int sign() const { return is_zero() ? 0 : (neg_ ? -1 : 1); }

    bool is_one() const { return !neg_ && limbs_.size() == 1 && limbs_[0] == 1; }

    bool fits_ll() const {
        if (limbs_.size() > 2) return false;
        unsigned long long m = mag_ull();
        return neg_ ? m <= 0x8000000000000000ULL : m < 0x8000000000000000ULL;
    }
    long long to_ll() const {
        if (!fits_ll()) throw std::overflow_error("BigInt: does not fit long long");
        unsigned long long m = mag_ull();
        return neg_ ? -static_cast<long long>(m - 1) - 1 : static_cast<long long>(m);
    }

    friend BigInt operator-(const BigInt& a) {
        BigInt r = a;
        if (!r.is_zero()) r.neg_ = !r.neg_;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.neg_ == b.neg_) {
            BigInt r;
            r.limbs_ = add_mag(a.limbs_, b.limbs_);
            r.neg_ = a.neg_ && !r.limbs_.empty();
            return r;
        }
        int c = cmp_mag(a.limbs_, b.limbs_);
        if (c == 0) return BigInt();
        BigInt r;
        if (c > 0) {
            r.limbs_ = sub_mag(a.limbs_, b.limbs_);
            r.neg_ = a.neg_;
        } else {
            r.limbs_ = sub_mag(b.limbs_, a.limbs_);
            r.neg_ = b.neg_;
        }
        if (r.limbs_.empty()) r.neg_ = false;
        return r;
    }
    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.is_zero() || b.is_zero()) return BigInt();
        BigInt r;
        r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
        for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
            std::uint64_t carry = 0;
            std::uint64_t ai = a.limbs_[i];
            for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
                std::uint64_t cur = r.limbs_[i + j] + ai * b.limbs_[j] + carry;
                r.limbs_[i + j] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
            }
            std::size_t k = i + b.limbs_.size();
            while (carry != 0) {
                std::uint64_t cur = r.limbs_[k] + carry;
                r.limbs_[k] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
                ++k;
            }
        }
        r.trim();
        r.neg_ = (a.neg_ != b.neg_);
        return r;
    }

    // Truncated quotient and remainder: a = q*b + r with |r| < |b| and
    // sign(r) == sign(a) (or r == 0).
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
        if (cmp_mag(a.limbs_, b.limbs_) < 0) {
            q = BigInt();
            r = a;
            return;
        }
        std::vector<std::uint32_t> qm, rm;
        divmod_mag(a.limbs_, b.limbs_, qm, rm);
        q.limbs_ = std::move(qm);
        q.trim();
        q.neg_ = !q.limbs_.empty() && (a.neg_ != b.neg_);
        r.limbs_ = std::move(rm);
        r.trim();
        r.neg_ = !r.limbs_.empty() && a.neg_;
    }
    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return q;
    }
    friend BigInt operator%(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return r;
    }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.neg_ == b.neg_ && a.limbs_ == b.limbs_;
    }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b) {
        if (a.neg_ != b.neg_) return a.neg_;
        int c = cmp_mag(a.limbs_, b.limbs_);
        return a.neg_ ? c > 0 : c < 0;
    }
    friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

    BigInt abs() const {
        BigInt r = *this;
        r.neg_ = false;
        return r;
    }

    static BigInt gcd(BigInt a, BigInt b) {
        a.neg_ = false;
        b.neg_ = false;
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        int sa = a.trailing_zero_bits(), sb = b.trailing_zero_bits();
        int s = std::min(sa, sb);
        a.shr(sa);
        b.shr(sb);
        while (true) {
            int c = cmp_mag(a.limbs_, b.limbs_);
            if (c == 0) break;
            if (c < 0) std::swap(a, b);
            a.limbs_ = sub_mag(a.limbs_, b.limbs_);
            a.trim();
            if (a.is_zero()) { a = b; break; }
            a.shr(a.trailing_zero_bits());
        }
        a.shl(s);
        return a;
    }

    BigInt pow(unsigned e) const {
        BigInt r(1), base = *this;
        while (e != 0) {
            if (e & 1u) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    // Exact integer square root if *this is a perfect square.
    std::optional<BigInt> sqrt_exact() const {
        if (neg_) return std::nullopt;
        if (is_zero()) return BigInt();
        BigInt x = *this, y = (x + BigInt(1)) / BigInt(2);
        if (y.is_zero()) y = BigInt(1);
        while (y < x) {
            x = y;
            y = (x + *this / x) / BigInt(2);
        }
        if (x * x == *this) return x;
        return std::nullopt;
    }

    // Exact integer cube root if *this is a perfect cube (sign allowed).
    std::optional<BigInt> cbrt_exact() const {
        if (is_zero()) return BigInt();
        BigInt n = abs();
        BigInt x = n, two(2), three(3);
        BigInt y = (two * x + n / (x * x) + BigInt(1)) / three;
        while (y < x) {
            x = y;
            y = (two * x + n / (x * x)) / three;
        }
        if (x * x * x == n) return neg_ ? -x : x;
        return std::nullopt;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::vector<std::uint32_t> m = limbs_;
        std::string out;
        while (!m.empty()) {
            std::uint64_t rem = 0;
            for (std::size_t i = m.size(); i-- > 0;) {
                std::uint64_t cur = (rem << 32) | m[i];
                m[i] = static_cast<std::uint32_t>(cur / 1000000000ULL);
                rem = cur % 1000000000ULL;
            }
            while (!m.empty() && m.back() == 0) m.pop_back();
            std::string chunk = std::to_string(rem);
            if (!m.empty())
                chunk = std::string(9 - chunk.size(), '0') + chunk;
            out = chunk + out;
        }
        return neg_ ? "-" + out : out;
    }

    // magnitude modulo a small modulus (m < 2^31)
    unsigned long long mod_small(unsigned long long m) const {
        unsigned long long r = 0;
        for (std::size_t i = limbs_.size(); i-- > 0;)
            r = ((r << 32) | limbs_[i]) % m;
        return r;
    }

    std::size_t bit_length() const {
        if (limbs_.empty()) return 0;
        std::uint32_t top = limbs_.back();
        std::size_t b = (limbs_.size() - 1) * 32;
        while (top != 0) {
            ++b;
            top >>= 1;
        }
        return b;
    }

private:
    bool neg_ = false;
    std::vector<std::uint32_t> limbs_;

    unsigned long long mag_ull() const {
        unsigned long long m = 0;
        if (limbs_.size() > 0) m = limbs_[0];
        if (limbs_.size() > 1) m |= static_cast<unsigned long long>(limbs_[1]) << 32;
        return m;
    }

    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
        if (limbs_.empty()) neg_ = false;
    }

    int trailing_zero_bits() const {
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            if (limbs_[i] != 0) {
                std::uint32_t v = limbs_[i];
                int b = 0;
                while ((v & 1u) == 0) {
                    ++b;
                    v >>= 1;
                }
                return static_cast<int>(i) * 32 + b;
            }
        }
        return 0;
    }

    void shr(int bits) {
        int words = bits / 32, s = bits % 32;
        if (words > 0)
            limbs_.erase(limbs_.begin(),
                         limbs_.begin() + std::min<std::size_t>(words, limbs_.size()));
        if (s > 0 && !limbs_.empty()) {
            for (std::size_t i = 0; i + 1 < limbs_.size(); ++i)
                limbs_[i] = (limbs_[i] >> s) | (limbs_[i + 1] << (32 - s));
            limbs_.back() >>= s;
        }
        trim();
    }

    void shl(int bits) {
        if (is_zero() || bits == 0) return;
        int words = bits / 32, s = bits % 32;
        if (s > 0) {
            std::uint32_t carry = 0;
            for (std::size_t i = 0; i < limbs_.size(); ++i) {
                std::uint32_t next = limbs_[i] >> (32 - s);
                limbs_[i] = (limbs_[i] << s) | carry;
                carry = next;
            }
            if (carry != 0) limbs_.push_back(carry);
        }
        limbs_.insert(limbs_.begin(), words, 0);
    }

    static int cmp_mag(const std::vector<std::uint32_t>& a,
                       const std::vector<std::uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;) {
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        }
        return 0;
    }

    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        const auto& big = a.size() >= b.size() ? a : b;
        const auto& small = a.size() >= b.size() ? b : a;
        std::vector<std::uint32_t> r = big;
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < small.size(); ++i) {
            std::uint64_t cur = static_cast<std::uint64_t>(r[i]) + small[i] + carry;
            r[i] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        for (std::size_t i = small.size(); carry != 0 && i < r.size(); ++i) {
            std::uint64_t cur = static_cast<std::uint64_t>(r[i]) + carry;
            r[i] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry != 0) r.push_back(static_cast<std::uint32_t>(carry));
        return r;
    }

    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r = a;
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < b.size() || borrow != 0; ++i) {
            std::int64_t cur = static_cast<std::int64_t>(r[i]) - borrow -
                               (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
            if (cur < 0) {
                cur += 1LL << 32;
                borrow = 1;
            } else {
                borrow = 0;
            }
            r[i] = static_cast<std::uint32_t>(cur);
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    // Knuth algorithm D on magnitudes; requires |a| >= |b| > 0.
    static void divmod_mag(const std::vector<std::uint32_t>& a,
                           const std::vector<std::uint32_t>& b,
                           std::vector<std::uint32_t>& q,
                           std::vector<std::uint32_t>& r) {
        if (b.size() == 1) {
            q.assign(a.size(), 0);
            std::uint64_t rem = 0;
            for (std::size_t i = a.size(); i-- > 0;) {
                std::uint64_t cur = (rem << 32) | a[i];
                q[i] = static_cast<std::uint32_t>(cur / b[0]);
                rem = cur % b[0];
            }
            r.clear();
            if (rem != 0) r.push_back(static_cast<std::uint32_t>(rem));
            return;
        }
        int s = 0;
        for (std::uint32_t top = b.back(); (top & 0x80000000u) == 0; top <<= 1) ++s;
        std::size_t n = b.size(), m = a.size() - n;
        std::vector<std::uint32_t> v(b), u(a);
        u.push_back(0);
        if (s > 0) {
            for (std::size_t i = v.size(); i-- > 1;)
                v[i] = (v[i] << s) | (v[i - 1] >> (32 - s));
            v[0] <<= s;
            for (std::size_t i = u.size(); i-- > 1;)
                u[i] = (u[i] << s) | (u[i - 1] >> (32 - s));
            u[0] <<= s;
        }
        q.assign(m + 1, 0);
        const std::uint64_t base = 1ULL << 32;
        for (std::size_t j = m + 1; j-- > 0;) {
            std::uint64_t num = (static_cast<std::uint64_t>(u[j + n]) << 32) | u[j + n - 1];
            std::uint64_t qhat = num / v[n - 1];
            std::uint64_t rhat = num % v[n - 1];
            while (qhat >= base ||
                   qhat * v[n - 2] > ((rhat << 32) | u[j + n - 2])) {
                --qhat;
                rhat += v[n - 1];
                if (rhat >= base) break;
            }
            // multiply and subtract
            std::int64_t borrow = 0;
            std::uint64_t carry = 0;
            for (std::size_t i = 0; i < n; ++i) {
                std::uint64_t p = qhat * v[i] + carry;
                carry = p >> 32;
                std::int64_t t =
                    static_cast<std::int64_t>(u[i + j]) - borrow -
                    static_cast<std::int64_t>(p & 0xffffffffULL);
                if (t < 0) {
                    t += static_cast<std::int64_t>(base);
                    borrow = 1;
                } else {
                    borrow = 0;
                }
                u[i + j] = static_cast<std::uint32_t>(t);
            }
            std::int64_t t = static_cast<std::int64_t>(u[j + n]) - borrow -
                             static_cast<std::int64_t>(carry);
            if (t < 0) {
                // qhat was one too large; add back
                t += static_cast<std::int64_t>(base);
                --qhat;
                std::uint64_t c2 = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    std::uint64_t cur = static_cast<std::uint64_t>(u[i + j]) + v[i] + c2;
                    u[i + j] = static_cast<std::uint32_t>(cur);
                    c2 = cur >> 32;
                }
                t += static_cast<std::int64_t>(c2);
                t &= static_cast<std::int64_t>(base) - 1;
            }
            u[j + n] = static_cast<std::uint32_t>(t);
            q[j] = static_cast<std::uint32_t>(qhat);
        }
        r.assign(u.begin(), u.begin() + n);
        if (s > 0) {
            for (std::size_t i = 0; i + 1 < r.size(); ++i)
                r[i] = (r[i] >> s) | (r[i + 1] << (32 - s));
            r.back() >>= s;
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
    }
};

}  // namespace dp1
