#include "zeta2k/bigint.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace zeta2k {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using limbs = std::vector<u64>;

// ---- magnitude primitives -------------------------------------------------

void add_mag(limbs& a, const limbs& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    u64 carry = 0;
    std::size_t i = 0;
    for (; i < b.size(); ++i) {
        u64 s = a[i] + b[i];
        u64 c1 = s < a[i];
        u64 s2 = s + carry;
        c1 += s2 < s;
        a[i] = s2;
        carry = c1;
    }
    for (; carry && i < a.size(); ++i) {
        a[i] += 1;
        carry = a[i] == 0;
    }
    if (carry) a.push_back(1);
}

// requires |a| >= |b|
void sub_mag(limbs& a, const limbs& b) {
    u64 borrow = 0;
    std::size_t i = 0;
    for (; i < b.size(); ++i) {
        u64 t = a[i] - b[i];
        u64 b1 = t > a[i];
        u64 t2 = t - borrow;
        b1 += t2 > t;
        a[i] = t2;
        borrow = b1;
    }
    for (; borrow && i < a.size(); ++i) {
        u64 t = a[i] - 1;
        borrow = t > a[i];
        a[i] = t;
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
}

limbs mul_mag(const limbs& a, const limbs& b) {
    if (a.empty() || b.empty()) return {};
    limbs r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        u64 carry = 0;
        u128 ai = a[i];
        for (std::size_t j = 0; j < b.size(); ++j) {
            u128 cur = static_cast<u128>(r[i + j]) + ai * b[j] + carry;
            r[i + j] = static_cast<u64>(cur);
            carry = static_cast<u64>(cur >> 64);
        }
        r[i + b.size()] = carry;
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

void shl_mag(limbs& a, std::size_t bits) {
    if (a.empty() || bits == 0) return;
    std::size_t limb_shift = bits / 64;
    unsigned bit_shift = bits % 64;
    std::size_t old = a.size();
    a.resize(old + limb_shift + (bit_shift ? 1 : 0), 0);
    if (bit_shift) {
        for (std::size_t i = old; i-- > 0;) {
            u64 hi = a[i] >> (64 - bit_shift);
            a[i + limb_shift + 1] |= hi;
            a[i + limb_shift] = a[i] << bit_shift;
        }
    } else {
        for (std::size_t i = old; i-- > 0;) a[i + limb_shift] = a[i];
    }
    for (std::size_t i = 0; i < limb_shift; ++i) a[i] = 0;
    while (!a.empty() && a.back() == 0) a.pop_back();
}

void shr_mag(limbs& a, std::size_t bits) {
    std::size_t limb_shift = bits / 64;
    unsigned bit_shift = bits % 64;
    if (limb_shift >= a.size()) {
        a.clear();
        return;
    }
    a.erase(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(limb_shift));
    if (bit_shift) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            a[i] >>= bit_shift;
            if (i + 1 < a.size()) a[i] |= a[i + 1] << (64 - bit_shift);
        }
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
}

u64 divmod_small(limbs& a, u64 d) {
    u64 rem = 0;
    for (std::size_t i = a.size(); i-- > 0;) {
        u128 cur = (static_cast<u128>(rem) << 64) | a[i];
        a[i] = static_cast<u64>(cur / d);
        rem = static_cast<u64>(cur % d);
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
    return rem;
}

void mul_small(limbs& a, u64 m) {
    if (m == 0) {
        a.clear();
        return;
    }
    u64 carry = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        u128 cur = static_cast<u128>(a[i]) * m + carry;
        a[i] = static_cast<u64>(cur);
        carry = static_cast<u64>(cur >> 64);
    }
    if (carry) a.push_back(carry);
}

void add_small(limbs& a, u64 v) {
    u64 carry = v;
    for (std::size_t i = 0; carry && i < a.size(); ++i) {
        u64 s = a[i] + carry;
        carry = s < a[i];
        a[i] = s;
    }
    if (carry) a.push_back(carry);
}

// Knuth algorithm D on magnitudes; quotient into q, remainder into u (low part).
void divmod_mag(const limbs& uin, const limbs& vin, limbs& q, limbs& r) {
    const std::size_t n = vin.size();
    const std::size_t m = uin.size();  // caller guarantees |u| >= |v|, so m >= n
    q.clear();
    r.clear();
    if (n == 1) {
        limbs a = uin;
        u64 rem = divmod_small(a, vin[0]);
        q = std::move(a);
        if (rem) r.push_back(rem);
        return;
    }
    const unsigned s = static_cast<unsigned>(std::countl_zero(vin[n - 1]));
    limbs vn = vin;
    shl_mag(vn, s);
    limbs un = uin;
    shl_mag(un, s);
    un.resize(m + 1, 0);

    q.assign(m - n + 1, 0);
    const u64 vtop = vn[n - 1];
    const u64 vsec = vn[n - 2];
    for (std::size_t j = m - n + 1; j-- > 0;) {
        u128 num = (static_cast<u128>(un[j + n]) << 64) | un[j + n - 1];
        u128 qhat = num / vtop;
        u128 rhat = num % vtop;
        while (qhat >> 64 || qhat * vsec > ((rhat << 64) | un[j + n - 2])) {
            --qhat;
            rhat += vtop;
            if (rhat >> 64) break;
        }
        // multiply-subtract qhat*vn from un[j..j+n]
        u64 carry = 0, borrow = 0;
        for (std::size_t i = 0; i < n; ++i) {
            u128 p = qhat * vn[i] + carry;
            carry = static_cast<u64>(p >> 64);
            u64 pl = static_cast<u64>(p);
            u64 t = un[i + j] - pl;
            u64 b1 = t > un[i + j];
            u64 t2 = t - borrow;
            b1 += t2 > t;
            un[i + j] = t2;
            borrow = b1;
        }
        u64 t = un[j + n] - carry;
        u64 b1 = t > un[j + n];
        u64 t2 = t - borrow;
        b1 += t2 > t;
        un[j + n] = t2;
        if (b1) {  // qhat was one too large
            --qhat;
            u64 c = 0;
            for (std::size_t i = 0; i < n; ++i) {
                u128 sum = static_cast<u128>(un[i + j]) + vn[i] + c;
                un[i + j] = static_cast<u64>(sum);
                c = static_cast<u64>(sum >> 64);
            }
            un[j + n] += c;
        }
        q[j] = static_cast<u64>(qhat);
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    un.resize(n);
    shr_mag(un, s);
    r = std::move(un);
}

}  // namespace

// ---- BigInt ----------------------------------------------------------------

void BigInt::trim() noexcept {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

int BigInt::cmp_mag(const limbs& a, const limbs& b) noexcept {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

BigInt BigInt::from_decimal(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("BigInt: empty decimal string");
    bool neg = false;
    std::size_t pos = 0;
    if (s[0] == '-' || s[0] == '+') {
        neg = s[0] == '-';
        pos = 1;
    }
    if (pos == s.size()) throw std::invalid_argument("BigInt: no digits");
    BigInt r;
    while (pos < s.size()) {
        std::size_t chunk = std::min<std::size_t>(19, s.size() - pos);
        u64 acc = 0, scale = 1;
        for (std::size_t i = 0; i < chunk; ++i) {
            char c = s[pos + i];
            if (c < '0' || c > '9') throw std::invalid_argument("BigInt: bad digit");
            acc = acc * 10 + static_cast<u64>(c - '0');
            scale *= 10;
        }
        mul_small(r.mag_, scale);
        add_small(r.mag_, acc);
        pos += chunk;
    }
    r.sign_ = r.mag_.empty() ? 0 : (neg ? -1 : 1);
    return r;
}

std::size_t BigInt::bit_length() const noexcept {
    if (mag_.empty()) return 0;
    return (mag_.size() - 1) * 64 + static_cast<std::size_t>(std::bit_width(mag_.back()));
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt& BigInt::operator+=(const BigInt& o) {
    if (o.sign_ == 0) return *this;
    if (sign_ == 0) return *this = o;
    if (sign_ == o.sign_) {
        add_mag(mag_, o.mag_);
        return *this;
    }
    int c = cmp_mag(mag_, o.mag_);
    if (c == 0) {
        mag_.clear();
        sign_ = 0;
    } else if (c > 0) {
        sub_mag(mag_, o.mag_);
    } else {
        limbs tmp = o.mag_;
        sub_mag(tmp, mag_);
        mag_ = std::move(tmp);
        sign_ = o.sign_;
    }
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& o) {
    if (o.sign_ == 0) return *this;
    if (this == &o) {
        mag_.clear();
        sign_ = 0;
        return *this;
    }
    BigInt neg = o;
    neg.sign_ = -neg.sign_;
    return *this += neg;
}

BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return {};
    BigInt r;
    r.mag_ = mul_mag(a.mag_, b.mag_);
    r.sign_ = a.sign_ == b.sign_ ? 1 : -1;
    r.trim();
    return r;
}

BigInt& BigInt::operator*=(const BigInt& o) { return *this = *this * o; }

void BigInt::divmod(const BigInt& u, const BigInt& v, BigInt& q, BigInt& r) {
    if (v.sign_ == 0) throw std::domain_error("BigInt: division by zero");
    if (u.sign_ == 0) {
        q = BigInt{};
        r = BigInt{};
        return;
    }
    if (cmp_mag(u.mag_, v.mag_) < 0) {
        q = BigInt{};
        r = u;
        return;
    }
    limbs qm, rm;
    divmod_mag(u.mag_, v.mag_, qm, rm);
    int usign = u.sign_;
    q = BigInt(u.sign_ == v.sign_ ? 1 : -1, std::move(qm));
    r = BigInt(usign, std::move(rm));
}

BigInt operator/(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return r;
}

BigInt& BigInt::operator/=(const BigInt& o) { return *this = *this / o; }
BigInt& BigInt::operator%=(const BigInt& o) { return *this = *this % o; }

BigInt BigInt::operator<<(std::size_t bits) const {
    BigInt r = *this;
    shl_mag(r.mag_, bits);
    r.trim();
    return r;
}

BigInt BigInt::operator>>(std::size_t bits) const {
    BigInt r = *this;
    shr_mag(r.mag_, bits);
    r.trim();
    return r;
}

BigInt BigInt::pow(unsigned long e) const {
    BigInt base = *this, r = 1;
    while (e) {
        if (e & 1) r *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return r;
}

BigInt gcd(BigInt a, BigInt b) {
    a.sign_ = a.mag_.empty() ? 0 : 1;
    b.sign_ = b.mag_.empty() ? 0 : 1;
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    // one modular step when the sizes are far apart, then binary gcd
    for (;;) {
        if (a.mag_.size() > b.mag_.size() + 1) {
            a %= b;
            if (a.is_zero()) return b;
        } else if (b.mag_.size() > a.mag_.size() + 1) {
            b %= a;
            if (b.is_zero()) return a;
        } else {
            break;
        }
    }
    auto trailing = [](const std::vector<std::uint64_t>& m) {
        std::size_t tz = 0;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) {
                tz += 64;
            } else {
                tz += static_cast<std::size_t>(std::countr_zero(m[i]));
                break;
            }
        }
        return tz;
    };
    std::size_t az = trailing(a.mag_), bz = trailing(b.mag_);
    std::size_t shift = std::min(az, bz);
    a = a >> az;
    b = b >> bz;
    while (!a.is_zero()) {
        if (BigInt::cmp_mag(a.mag_, b.mag_) < 0) std::swap(a.mag_, b.mag_);
        sub_mag(a.mag_, b.mag_);
        a.trim();
        if (a.is_zero()) break;
        a = a >> trailing(a.mag_);
    }
    return b << shift;
}

std::strong_ordering BigInt::operator<=>(const BigInt& o) const noexcept {
    if (sign_ != o.sign_) return sign_ <=> o.sign_;
    int c = cmp_mag(mag_, o.mag_);
    if (sign_ < 0) c = -c;
    return c <=> 0;
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    limbs tmp = mag_;
    std::string digits;
    while (!tmp.empty()) {
        u64 rem = divmod_small(tmp, 10000000000000000000ull);  // 10^19
        char buf[20];
        if (tmp.empty()) {
            int n = std::snprintf(buf, sizeof buf, "%llu", static_cast<unsigned long long>(rem));
            digits.insert(0, buf, static_cast<std::size_t>(n));
        } else {
            std::snprintf(buf, sizeof buf, "%019llu", static_cast<unsigned long long>(rem));
            digits.insert(0, buf, 19);
        }
    }
    return sign_ < 0 ? "-" + digits : digits;
}

double BigInt::to_double() const noexcept {
    if (is_zero()) return 0.0;
    std::size_t bl = bit_length();
    double d;
    if (bl <= 64) {
        d = static_cast<double>(mag_[0]);
    } else {
        BigInt top = *this >> (bl - 64);
        d = std::ldexp(static_cast<double>(top.mag_[0]), static_cast<int>(bl) - 64);
    }
    return sign_ < 0 ? -d : d;
}

long long BigInt::to_int64() const {
    if (is_zero()) return 0;
    if (mag_.size() > 1) throw std::overflow_error("BigInt: does not fit in 64 bits");
    u64 m = mag_[0];
    if (sign_ > 0) {
        if (m > static_cast<u64>(std::numeric_limits<long long>::max()))
            throw std::overflow_error("BigInt: does not fit in 64 bits");
        return static_cast<long long>(m);
    }
    if (m > static_cast<u64>(std::numeric_limits<long long>::max()) + 1)
        throw std::overflow_error("BigInt: does not fit in 64 bits");
    return static_cast<long long>(~m + 1);
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.to_string(); }

}  // namespace zeta2k
