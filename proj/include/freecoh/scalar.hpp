#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace freecoh {

using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(long long num, long long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    return Rational(Integer(num), Integer(den));
}

/// "num/den", or just "num" when the denominator is 1.
inline std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << '/' << denominator(r);
    return os.str();
}

inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse rational: '" + s + "'");
    }
}

inline Rational pow_r(Rational base, size_t e) {
    Rational r(1);
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

inline double to_double(const Rational& r) {
    return static_cast<double>(numerator(r)) / static_cast<double>(denominator(r));
}

/// Complex number with exact rational components.
struct Complex {
    Rational re;
    Rational im;

    Complex() = default;
    Complex(Rational r) : re(std::move(r)) {}
    Complex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    Complex(long long r) : re(r) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    Complex conj() const { return {re, -im}; }

    /// |z|^2, always a nonnegative rational.
    Rational norm_sq() const { return re * re + im * im; }

    Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
    Complex& operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }

    friend Complex operator+(Complex a, const Complex& b) { return a += b; }
    friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
    friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Complex operator*(const Rational& s, const Complex& a) { return {s * a.re, s * a.im}; }
    friend Complex operator*(const Complex& a, const Rational& s) { return s * a; }
    friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const Complex& a, const Complex& b) { return !(a == b); }
};

/// "re", or "re+im*i" / "re-im*i" for non-real values.
inline std::string to_string(const Complex& z) {
    if (z.is_real()) return to_string(z.re);
    std::string s = to_string(z.re);
    s += (z.im < 0) ? "-" : "+";
    s += to_string(z.im < 0 ? Rational(-z.im) : z.im);
    s += "*i";
    return s;
}

inline std::ostream& operator<<(std::ostream& os, const Complex& z) { return os << to_string(z); }

}  // namespace freecoh
