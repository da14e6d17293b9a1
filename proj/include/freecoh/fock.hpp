#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#include "padic.hpp"
#include "scalar.hpp"

namespace freecoh {

/// Sparse vector in the truncated free Fock space over p letters. Basis
/// vectors are words I (the state A^dag_I Omega); distinct words are
/// orthonormal. Absent word means coefficient zero.
class FockVector {
public:
    using Coeffs = std::map<Word, Complex>;

    explicit FockVector(uint32_t p) : p_(p) { require_prime(p); }

    static FockVector zero(uint32_t p) { return FockVector(p); }
    static FockVector vacuum(uint32_t p) { return basis(Word::empty(p)); }
    static FockVector basis(const Word& w) {
        FockVector v(w.p);
        v.coeffs_[w] = Complex(1);
        return v;
    }

    uint32_t p() const { return p_; }
    const Coeffs& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    size_t max_degree() const {
        size_t m = 0;
        for (const auto& [w, c] : coeffs_) m = std::max(m, w.length());
        return m;
    }

    Complex coeff(const Word& w) const {
        auto it = coeffs_.find(w);
        return it == coeffs_.end() ? Complex() : it->second;
    }

    void add(const Word& w, const Complex& c) {
        if (w.p != p_) throw std::invalid_argument("mixed primes");
        if (c.is_zero()) return;
        auto [it, inserted] = coeffs_.try_emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }

    FockVector& operator+=(const FockVector& o) {
        check_p(o);
        for (const auto& [w, c] : o.coeffs_) add(w, c);
        return *this;
    }
    FockVector& operator-=(const FockVector& o) {
        check_p(o);
        for (const auto& [w, c] : o.coeffs_) add(w, -c);
        return *this;
    }
    friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
    friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
    friend FockVector operator*(const Complex& s, const FockVector& v) {
        FockVector r(v.p_);
        if (s.is_zero()) return r;
        for (const auto& [w, c] : v.coeffs_) r.coeffs_[w] = s * c;
        return r;
    }
    friend bool operator==(const FockVector& a, const FockVector& b) {
        return a.p_ == b.p_ && a.coeffs_ == b.coeffs_;
    }

    /// One "word -> value" line per coefficient, sorted by (degree, lex).
    std::string dump() const {
        std::ostringstream os;
        for (const auto& [w, c] : coeffs_)
            os << (w.is_empty() ? std::string("()") : to_string(w)) << " -> " << to_string(c) << "\n";
        return os.str();
    }

    void check_p(const FockVector& o) const {
        if (p_ != o.p_) throw std::invalid_argument("mixed primes");
    }

private:
    Coeffs coeffs_;
    uint32_t p_;
};

/// A^dag_i: basis word I -> word Ii (appends the digit; in tensor language
/// this prepends the factor e_i).
inline FockVector create(uint32_t i, const FockVector& v) {
    if (i >= v.p()) throw std::invalid_argument("digit out of range");
    FockVector r(v.p());
    for (const auto& [w, c] : v.coeffs()) r.add(w.child(i), c);
    return r;
}

/// A_i: basis word Ij -> delta_{ij} I; kills the vacuum.
inline FockVector annihilate(uint32_t i, const FockVector& v) {
    if (i >= v.p()) throw std::invalid_argument("digit out of range");
    FockVector r(v.p());
    for (const auto& [w, c] : v.coeffs())
        if (!w.is_empty() && w.last_digit() == i) r.add(w.parent(), c);
    return r;
}

/// A = sum_i A_i: strips the last digit of every word; kills the vacuum.
inline FockVector annihilation_sum(const FockVector& v) {
    FockVector r(v.p());
    for (const auto& [w, c] : v.coeffs())
        if (!w.is_empty()) r.add(w.parent(), c);
    return r;
}

/// Hermitian inner product; conjugate-linear in the second slot.
inline Complex inner(const FockVector& v, const FockVector& w) {
    v.check_p(w);
    Complex acc;
    const auto& a = v.coeffs();
    const auto& b = w.coeffs();
    // walk the smaller map
    if (a.size() <= b.size()) {
        for (const auto& [word, c] : a) {
            auto it = b.find(word);
            if (it != b.end()) acc += c * it->second.conj();
        }
    } else {
        for (const auto& [word, c] : b) {
            auto it = a.find(word);
            if (it != a.end()) acc += it->second * c.conj();
        }
    }
    return acc;
}

inline Rational norm_sq(const FockVector& v) {
    Rational acc;
    for (const auto& [w, c] : v.coeffs()) acc += c.norm_sq();
    return acc;
}

}  // namespace freecoh
