#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "scalar.hpp"

namespace freecoh {

inline bool is_prime(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline void require_prime(uint32_t p) {
    if (!is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
}

/// Finite digit string over {0..p-1}, little-endian (digits[0] is the units
/// digit). Labels both a Fock basis vector and a p-adic disk of radius
/// p^{-length}. The empty word is Z_p itself.
struct Word {
    std::vector<uint32_t> digits;
    uint32_t p = 2;

    Word() = default;
    Word(std::vector<uint32_t> d, uint32_t prime) : digits(std::move(d)), p(prime) {
        require_prime(p);
        for (uint32_t x : digits)
            if (x >= p) throw std::invalid_argument("digit " + std::to_string(x) + " out of range for p=" + std::to_string(p));
    }
    static Word empty(uint32_t prime) { return Word({}, prime); }

    size_t length() const { return digits.size(); }
    bool is_empty() const { return digits.empty(); }

    Word child(uint32_t digit) const {
        if (digit >= p) throw std::invalid_argument("digit out of range");
        Word w = *this;
        w.digits.push_back(digit);
        return w;
    }
    Word parent() const {
        if (digits.empty()) throw std::logic_error("empty word has no parent");
        Word w = *this;
        w.digits.pop_back();
        return w;
    }
    uint32_t last_digit() const {
        if (digits.empty()) throw std::logic_error("empty word has no last digit");
        return digits.back();
    }
    Word prefix(size_t n) const {
        if (n > digits.size()) throw std::invalid_argument("prefix longer than word");
        return Word(std::vector<uint32_t>(digits.begin(), digits.begin() + n), p);
    }
    bool is_prefix_of(const Word& other) const {
        if (p != other.p) throw std::invalid_argument("mixed primes");
        if (length() > other.length()) return false;
        return std::equal(digits.begin(), digits.end(), other.digits.begin());
    }

    // Ordered by (p, length, digits): enumeration order used throughout.
    friend bool operator<(const Word& a, const Word& b) {
        if (a.p != b.p) return a.p < b.p;
        if (a.digits.size() != b.digits.size()) return a.digits.size() < b.digits.size();
        return a.digits < b.digits;
    }
    friend bool operator==(const Word& a, const Word& b) { return a.p == b.p && a.digits == b.digits; }
    friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }
};

/// Comma-separated little-endian digits, e.g. "0,1,1"; empty word is "".
inline std::string to_string(const Word& w) {
    std::string s;
    for (size_t i = 0; i < w.digits.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(w.digits[i]);
    }
    return s;
}

inline Word parse_word(const std::string& s, uint32_t p) {
    std::vector<uint32_t> digits;
    if (!s.empty()) {
        size_t pos = 0;
        while (pos <= s.size()) {
            size_t comma = s.find(',', pos);
            std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
                throw std::invalid_argument("bad word digit '" + tok + "' in '" + s + "'");
            digits.push_back(static_cast<uint32_t>(std::stoul(tok)));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    }
    return Word(std::move(digits), p);
}

/// p-adic exponent of a nonzero rational.
inline long padic_valuation(const Rational& x, uint32_t p) {
    require_prime(p);
    if (x == 0) throw std::invalid_argument("valuation of zero is undefined");
    long v = 0;
    Integer num = numerator(x), den = denominator(x);
    while (num % p == 0) { num /= p; ++v; }
    while (den % p == 0) { den /= p; --v; }
    return v;
}

/// ||x||_p = p^{-gamma} for x = p^gamma m/n with m, n coprime to p.
inline Rational padic_norm(const Rational& x, uint32_t p) {
    long gamma = padic_valuation(x, p);
    Integer pw = boost::multiprecision::pow(Integer(p), static_cast<unsigned>(gamma < 0 ? -gamma : gamma));
    return gamma >= 0 ? Rational(1, pw) : Rational(pw, 1);
}

/// Total variant: ||0||_p = 0.
inline Rational padic_norm_total(const Rational& x, uint32_t p) {
    require_prime(p);
    if (x == 0) return Rational(0);
    return padic_norm(x, p);
}

/// Ball D(center, p^{-|center|}) in Z_p. The center word determines the
/// radius; D(empty) = Z_p.
struct Disk {
    Word center;

    Disk() = default;
    explicit Disk(Word c) : center(std::move(c)) {}

    uint32_t p() const { return center.p; }
    size_t depth() const { return center.length(); }

    friend bool operator<(const Disk& a, const Disk& b) { return a.center < b.center; }
    friend bool operator==(const Disk& a, const Disk& b) { return a.center == b.center; }
    friend bool operator!=(const Disk& a, const Disk& b) { return !(a == b); }
};

enum class DiskRelation { Equal, AContainsB, BContainsA, Disjoint };

/// Ultrametric trichotomy: two disks are nested or disjoint, never partially
/// overlapping.
inline DiskRelation disk_relation(const Disk& a, const Disk& b) {
    if (a.p() != b.p()) throw std::invalid_argument("mixed primes");
    if (a.center == b.center) return DiskRelation::Equal;
    if (a.center.is_prefix_of(b.center)) return DiskRelation::AContainsB;
    if (b.center.is_prefix_of(a.center)) return DiskRelation::BContainsA;
    return DiskRelation::Disjoint;
}

/// mu(D) = p^{-depth}; normalized so mu(Z_p) = 1.
inline Rational haar_measure(const Disk& d) {
    Integer pw = boost::multiprecision::pow(Integer(d.p()), static_cast<unsigned>(d.depth()));
    return Rational(1, pw);
}

inline Word longest_common_prefix(const Word& a, const Word& b) {
    if (a.p != b.p) throw std::invalid_argument("mixed primes");
    size_t n = 0;
    size_t cap = std::min(a.length(), b.length());
    while (n < cap && a.digits[n] == b.digits[n]) ++n;
    return a.prefix(n);
}

/// Eventually periodic p-adic integer: digit stream is preperiod followed by
/// period repeated forever (empty period pads with zeros). Exactly the
/// rational points of Z_p.
struct PAdicPoint {
    Word preperiod;
    Word period;

    PAdicPoint() = default;
    PAdicPoint(Word pre, Word per) : preperiod(std::move(pre)), period(std::move(per)) {
        if (preperiod.p != period.p) throw std::invalid_argument("mixed primes");
    }
    static PAdicPoint zero(uint32_t p) { return {Word::empty(p), Word::empty(p)}; }

    uint32_t p() const { return preperiod.p; }

    uint32_t digit_at(size_t n) const {
        if (n < preperiod.length()) return preperiod.digits[n];
        if (period.is_empty()) return 0;
        return period.digits[(n - preperiod.length()) % period.length()];
    }
    Word prefix(size_t n) const {
        std::vector<uint32_t> d(n);
        for (size_t i = 0; i < n; ++i) d[i] = digit_at(i);
        return Word(std::move(d), p());
    }
    bool in_disk(const Disk& d) const {
        if (p() != d.p()) throw std::invalid_argument("mixed primes");
        return prefix(d.depth()) == d.center;
    }
};

/// "pre|per" with both parts in comma form; "pre" alone means zero padding.
inline PAdicPoint parse_point(const std::string& s, uint32_t p) {
    auto bar = s.find('|');
    if (bar == std::string::npos) return {parse_word(s, p), Word::empty(p)};
    return {parse_word(s.substr(0, bar), p), parse_word(s.substr(bar + 1), p)};
}

inline std::string to_string(const PAdicPoint& x) {
    if (x.period.is_empty()) return to_string(x.preperiod);
    return to_string(x.preperiod) + "|" + to_string(x.period);
}

inline Rational pow_rational(uint32_t p, long e) {
    Integer pw = boost::multiprecision::pow(Integer(p), static_cast<unsigned>(e < 0 ? -e : e));
    return e >= 0 ? Rational(pw, 1) : Rational(1, pw);
}

}  // namespace freecoh
