#include "zeta2k/pi_series.hpp"

#include <stdexcept>

#include "zeta2k/pi_approx.hpp"

namespace zeta2k {

void PiSeries::set(long l, Rational q) {
    if (l < 0) throw std::invalid_argument("PiSeries: negative exponent");
    if (q.is_zero()) {
        terms_.erase(l);
    } else {
        terms_[l] = std::move(q);
    }
}

PiSeries PiSeries::constant(Rational q) {
    PiSeries s;
    s.set(0, std::move(q));
    return s;
}

PiSeries PiSeries::pi_even_power(long l, Rational coeff) {
    PiSeries s;
    s.set(l, std::move(coeff));
    return s;
}

Rational PiSeries::coeff(long l) const {
    auto it = terms_.find(l);
    return it == terms_.end() ? Rational(0) : it->second;
}

long PiSeries::max_half_exponent() const noexcept {
    return terms_.empty() ? -1 : terms_.rbegin()->first;
}

PiSeries PiSeries::operator-() const {
    PiSeries r;
    for (const auto& [l, q] : terms_) r.terms_.emplace(l, -q);
    return r;
}

PiSeries& PiSeries::operator+=(const PiSeries& o) {
    for (const auto& [l, q] : o.terms_) set(l, coeff(l) + q);
    return *this;
}

PiSeries& PiSeries::operator-=(const PiSeries& o) {
    for (const auto& [l, q] : o.terms_) set(l, coeff(l) - q);
    return *this;
}

PiSeries& PiSeries::operator*=(const PiSeries& o) {
    PiSeries r;
    for (const auto& [la, qa] : terms_) {
        for (const auto& [lb, qb] : o.terms_) {
            r.set(la + lb, r.coeff(la + lb) + qa * qb);
        }
    }
    return *this = std::move(r);
}

PiSeries& PiSeries::scale(const Rational& q) {
    if (q.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [l, c] : terms_) c *= q;
    return *this;
}

std::string PiSeries::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [l, q] : terms_) {
        std::string body = q.abs().to_string();
        if (l > 0) body += "*pi^" + std::to_string(2 * l);
        if (first) {
            out = q.is_negative() ? "-" + body : body;
            first = false;
        } else {
            out += q.is_negative() ? " - " : " + ";
            out += body;
        }
    }
    return out;
}

BoundedValue pi_series_eval(const PiSeries& s, int digits) {
    if (digits < 1) throw std::invalid_argument("pi_series_eval: digits must be >= 1");
    if (s.is_zero()) return {Rational(0), Rational(0)};

    // amplification of the pi error through the powers:
    // |pi^(2l) - p^(2l)| <= 2l * 4^(2l-1) * |pi - p|   (both values below 4)
    Rational amp;
    for (const auto& [l, q] : s.terms()) {
        if (l == 0) continue;
        amp += q.abs() * Rational(BigInt(2 * l) * BigInt(4).pow(static_cast<unsigned long>(2 * l - 1)));
    }
    if (amp.is_zero()) return {s.coeff(0), Rational(0)};  // constant series: exact

    // choose the pi precision so amp * 10^-d <= 10^-digits
    std::ptrdiff_t mag = static_cast<std::ptrdiff_t>(amp.numerator().to_string().size()) -
                         static_cast<std::ptrdiff_t>(amp.denominator().to_string().size()) + 1;
    int d = digits + static_cast<int>(std::max<std::ptrdiff_t>(mag, 0)) + 1;

    for (;;) {
        PiApprox p = pi_approx(d);
        Rational err = amp * p.error;
        Rational target(BigInt(1), BigInt(10).pow(static_cast<unsigned long>(digits)));
        if (err <= target) {
            Rational p2 = p.value * p.value;
            Rational value;
            Rational cur(1);
            long cur_l = 0;
            for (const auto& [l, q] : s.terms()) {
                while (cur_l < l) {
                    cur *= p2;
                    ++cur_l;
                }
                value += q * cur;
            }
            return {value, err};
        }
        d += 2;  // precision estimate fell short; tighten and retry
    }
}

DecimalValue pi_series_render(const PiSeries& s, int digits) {
    BoundedValue b = pi_series_eval(s, digits);
    return {to_decimal_string(b.value, digits), b.value, b.error};
}

}  // namespace zeta2k
