#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include "spanweight/errors.hpp"

namespace spanweight {

// Exact arbitrary-precision rational. All weights, spans and weighted degrees
// in this library are Rationals; comparisons are exact, there is no epsilon
// anywhere. Backed by GMP's mpq_class, kept canonical (positive denominator,
// gcd(|num|, den) = 1) at all times.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}          // NOLINT: implicit by design, mirrors integer literals
    Rational(long num, long den) {
        if (den == 0) throw DomainError("rational with zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    // Accepts "p", "p/q" (q > 0) and decimal notation ("1.5", "-.25", "2.").
    static Rational parse(const std::string& text);

    // Inverse of parse: "p" when the denominator is 1, else "p/q".
    std::string str() const {
        if (q_.get_den() == 1) return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    const mpz_class& numerator() const { return q_.get_num(); }
    const mpz_class& denominator() const { return q_.get_den(); }

    bool is_integer() const { return q_.get_den() == 1; }
    bool is_zero() const { return sgn(q_) == 0; }
    int sign() const { return sgn(q_); }

    // Exact conversion; the value must be an integer that fits in long.
    long to_long() const {
        if (!is_integer() || !q_.get_num().fits_slong_p())
            throw DomainError("rational " + str() + " is not a machine integer");
        return q_.get_num().get_si();
    }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational::raw(a.q_ + b.q_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational::raw(a.q_ - b.q_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational::raw(a.q_ * b.q_); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (sgn(b.q_) == 0) throw DomainError("rational division by zero");
        return Rational::raw(a.q_ / b.q_);
    }
    Rational operator-() const { return Rational::raw(-q_); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    static Rational raw(mpq_class q) {
        Rational r;
        r.q_ = std::move(q);   // results of mpq arithmetic are already canonical
        return r;
    }
    mpq_class q_;
};

inline Rational Rational::parse(const std::string& text) {
    auto fail = [&]() -> Rational { throw ParseError("bad rational literal '" + text + "'"); };
    if (text.empty()) return fail();
    std::size_t pos = 0;
    bool neg = false;
    if (text[pos] == '+' || text[pos] == '-') {
        neg = text[pos] == '-';
        ++pos;
    }
    auto digits = [&](std::size_t& i) {
        std::string d;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') d += text[i++];
        return d;
    };
    std::string ipart = digits(pos);
    if (pos == text.size()) {
        if (ipart.empty()) return fail();
        Rational r = Rational::raw(mpq_class{mpz_class{ipart}});
        return neg ? -r : r;
    }
    if (text[pos] == '/') {
        ++pos;
        std::string den = digits(pos);
        if (ipart.empty() || den.empty() || pos != text.size()) return fail();
        mpz_class d{den};
        if (d == 0) throw ParseError("bad rational literal '" + text + "': zero denominator");
        mpq_class q{mpz_class{ipart}, d};
        q.canonicalize();
        Rational r = Rational::raw(q);
        return neg ? -r : r;
    }
    if (text[pos] == '.') {
        ++pos;
        std::string fpart = digits(pos);
        if (pos != text.size()) return fail();
        if (ipart.empty() && fpart.empty()) return fail();
        mpz_class scale = 1;
        for (std::size_t i = 0; i < fpart.size(); ++i) scale *= 10;
        mpz_class num = mpz_class{ipart.empty() ? "0" : ipart} * scale + mpz_class{fpart.empty() ? "0" : fpart};
        mpq_class q{num, scale};
        q.canonicalize();
        Rational r = Rational::raw(q);
        return neg ? -r : r;
    }
    return fail();
}

} // namespace spanweight
