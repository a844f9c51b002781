#pragma once

#include <cstdint>
#include <string>

#include "textclf/error.hpp"

namespace textclf {

// Exact rational arithmetic. Downsampling fractions and every evaluation
// metric are kept as rationals so identities like micro-F1 == accuracy hold
// exactly instead of within a float tolerance. Components stay within the
// int64 range after reduction; intermediates use 128-bit arithmetic.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long value) : num_(value), den_(1) {} // NOLINT(implicit)
    Rational(long long num, long long den) : num_(num), den_(den) { normalize(); }

    static Rational of(__int128 num, __int128 den) {
        Rational r;
        r.num_ = num;
        r.den_ = den;
        r.normalize();
        return r;
    }

    // Accepts "3/4", "12", and plain decimals such as "0.25".
    static Rational parse(const std::string& text) {
        if (text.empty()) throw argument_error("empty rational literal");
        auto slash = text.find('/');
        if (slash != std::string::npos) {
            long long n = parse_int(text.substr(0, slash));
            long long d = parse_int(text.substr(slash + 1));
            if (d == 0) throw argument_error("rational with zero denominator: " + text);
            return Rational(n, d);
        }
        auto dot = text.find('.');
        if (dot == std::string::npos) return Rational(parse_int(text), 1);
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        std::size_t frac_len = text.size() - dot - 1;
        if (frac_len == 0 || frac_len > 18)
            throw argument_error("unparseable rational literal: " + text);
        long long den = 1;
        for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
        return Rational(parse_int(digits), den);
    }

    long long num() const { return static_cast<long long>(num_); }
    long long den() const { return static_cast<long long>(den_); }

    double to_double() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    bool is_zero() const { return num_ == 0; }
    bool is_negative() const { return num_ < 0; }

    // floor(n * this), computed in integer arithmetic. This is what makes
    // floor(35522 * 1/3) come out as 11840 instead of drifting through a
    // double.
    long long floor_mul(long long n) const {
        __int128 p = static_cast<__int128>(n) * num_;
        __int128 q = den_;
        __int128 d = p / q;
        if (p % q != 0 && ((p < 0) != (q < 0))) --d;
        return static_cast<long long>(d);
    }

    std::string str() const {
        std::string s = int128_str(num_);
        if (den_ != 1) s += "/" + int128_str(den_);
        return s;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return of(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return of(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return of(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw argument_error("rational division by zero");
        return of(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

private:
    __int128 num_;
    __int128 den_;

    static long long parse_int(const std::string& s) {
        if (s.empty()) throw argument_error("unparseable integer literal");
        std::size_t pos = 0;
        long long v = 0;
        bool neg = false;
        if (s[pos] == '-' || s[pos] == '+') {
            neg = s[pos] == '-';
            ++pos;
        }
        if (pos == s.size()) throw argument_error("unparseable integer literal: " + s);
        for (; pos < s.size(); ++pos) {
            if (s[pos] < '0' || s[pos] > '9')
                throw argument_error("unparseable integer literal: " + s);
            v = v * 10 + (s[pos] - '0');
        }
        return neg ? -v : v;
    }

    static unsigned __int128 gcd128(unsigned __int128 a, unsigned __int128 b) {
        while (b != 0) {
            unsigned __int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    static std::string int128_str(__int128 v) {
        if (v == 0) return "0";
        bool neg = v < 0;
        unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v)
                                  : static_cast<unsigned __int128>(v);
        std::string s;
        while (u != 0) {
            s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(u % 10)));
            u /= 10;
        }
        return neg ? "-" + s : s;
    }

    void normalize() {
        if (den_ == 0) throw argument_error("rational with zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        unsigned __int128 a = num_ < 0 ? static_cast<unsigned __int128>(-num_)
                                       : static_cast<unsigned __int128>(num_);
        unsigned __int128 g = gcd128(a, static_cast<unsigned __int128>(den_));
        if (g > 1) {
            num_ /= static_cast<__int128>(g);
            den_ /= static_cast<__int128>(g);
        }
        // keep reduced components inside int64 so comparison cross-products
        // cannot overflow the 128-bit intermediates
        constexpr __int128 kLimit = static_cast<__int128>(1) << 63;
        if (num_ >= kLimit || -num_ >= kLimit || den_ >= kLimit)
            throw internal_error("rational overflow after reduction: " + int128_str(num_) +
                                 "/" + int128_str(den_));
    }
};

} // namespace textclf
