#pragma once

#include <string>
#include <vector>

#include "coherent.hpp"
#include "lc_space.hpp"
#include "padic.hpp"
#include "scalar.hpp"

namespace freecoh {

enum class PairingCase { Nested, Disjoint, Delta, Cascade };

inline std::string to_string(PairingCase c) {
    switch (c) {
        case PairingCase::Nested: return "nested";
        case PairingCase::Disjoint: return "disjoint";
        case PairingCase::Delta: return "delta";
        case PairingCase::Cascade: return "cascade";
    }
    return "?";
}

/// Exact value of a Fock pairing as a function of t = lambda^2/p:
///
///     value(t) = sum_{i<m} poly[i] t^i + tail_coeff * t^m / (1 - t)
///
/// for t in (0,1). Every pairing computed here has this shape; the
/// regularized limit lim_{t->1-} (1-t) value(t) is tail_coeff.
struct PairingValue {
    std::vector<Complex> poly;  // a_0 .. a_{m-1}, canonically of length m
    Complex tail_coeff;
    size_t tail_start = 0;      // m
    uint32_t p = 2;
    PairingCase kind = PairingCase::Nested;

    void canonicalize() { poly.resize(tail_start); }

    Complex value_at(const Rational& t) const {
        require_t(t);
        Complex acc;
        Rational tp(1);
        for (const auto& a : poly) {
            acc += a * tp;
            tp *= t;
        }
        // tp == t^{tail_start} for canonical poly
        acc += tail_coeff * (pow_r(t, tail_start) / (Rational(1) - t));
        return acc;
    }

    /// Partial sum of the series through degree n: the exact value of the
    /// same pairing computed in the degree-n truncated Fock space.
    Complex truncated_value_at(const Rational& t, size_t n) const {
        require_t(t);
        Complex acc;
        Rational tp(1);
        for (size_t i = 0; i < poly.size() && i <= n; ++i) {
            acc += poly[i] * tp;
            tp *= t;
        }
        if (n + 1 > tail_start)
            acc += tail_coeff * ((pow_r(t, tail_start) - pow_r(t, n + 1)) / (Rational(1) - t));
        return acc;
    }
};

/// The regularized limit lim_{lambda -> sqrt(p)-} (1 - lambda^2/p)(.,.)
/// read off algebraically: (1-t) kills the polynomial part and leaves the
/// geometric tail coefficient.
inline Complex regularized_limit(const PairingValue& v) { return v.tail_coeff; }

/// (X_I, X_J) as an exact function of t. Nested disks give the three-block
/// series with tail p^{min(|I|,|J|)}; disjoint disks give a finite
/// polynomial supported on the common-prefix chain.
inline PairingValue pairing_indicators(const Word& a, const Word& b) {
    if (a.p != b.p) throw std::invalid_argument("mixed primes");
    const Word& shorter = a.length() <= b.length() ? a : b;
    const Word& longer = a.length() <= b.length() ? b : a;
    const uint32_t p = a.p;
    PairingValue v;
    v.p = p;
    if (shorter.is_prefix_of(longer)) {
        v.kind = PairingCase::Nested;
        v.tail_start = longer.length();
        v.poly.reserve(v.tail_start);
        for (size_t i = 0; i < shorter.length(); ++i) v.poly.emplace_back(pow_rational(p, static_cast<long>(i)));
        Rational plateau = pow_rational(p, static_cast<long>(shorter.length()));
        for (size_t i = shorter.length(); i < longer.length(); ++i) v.poly.emplace_back(plateau);
        v.tail_coeff = Complex(plateau);
    } else {
        v.kind = PairingCase::Disjoint;
        size_t l = longest_common_prefix(a, b).length();
        v.tail_start = l + 1;
        for (size_t i = 0; i <= l; ++i) v.poly.emplace_back(pow_rational(p, static_cast<long>(i)));
        v.tail_coeff = Complex(0);
    }
    v.canonicalize();
    return v;
}

/// (X_x, X_J) for a delta-path state over the infinite digit stream x.
/// Limit is p^{|J|} when x lies in D(J), zero otherwise.
inline PairingValue pairing_delta(const PAdicPoint& x, const Word& j) {
    if (x.p() != j.p) throw std::invalid_argument("mixed primes");
    const uint32_t p = j.p;
    PairingValue v;
    v.p = p;
    v.kind = PairingCase::Delta;
    if (x.prefix(j.length()) == j) {
        v.tail_start = j.length();
        for (size_t i = 0; i < j.length(); ++i) v.poly.emplace_back(pow_rational(p, static_cast<long>(i)));
        v.tail_coeff = Complex(pow_rational(p, static_cast<long>(j.length())));
    } else {
        size_t l = 0;
        while (l < j.length() && x.digit_at(l) == j.digits[l]) ++l;
        v.tail_start = l + 1;
        for (size_t i = 0; i <= l; ++i) v.poly.emplace_back(pow_rational(p, static_cast<long>(i)));
        v.tail_coeff = Complex(0);
    }
    v.canonicalize();
    return v;
}

/// (Psi, X_I) for a cascade state, bilinear in both slots. Ancestor levels
/// contribute p^d Psi_{I_d} t^d; from level |I| on, the cascade condition
/// collapses every level to the same p^{|I|} Psi_I.
inline PairingValue pairing_coherent(const CascadeTree& tree, const Word& word) {
    if (tree.p() != word.p) throw std::invalid_argument("mixed primes");
    if (word.length() > tree.depth())
        throw ResolutionError("pairing word deeper than cascade tree resolution");
    const uint32_t p = word.p;
    PairingValue v;
    v.p = p;
    v.kind = PairingCase::Cascade;
    v.tail_start = word.length();
    for (size_t d = 0; d < word.length(); ++d)
        v.poly.push_back(pow_rational(p, static_cast<long>(d)) * tree.value(word.prefix(d)));
    v.tail_coeff = pow_rational(p, static_cast<long>(word.length())) * tree.value(word);
    v.canonicalize();
    return v;
}

/// phi(X_I): the normalized indicator theta_{|I|}(x - I) / mu(D_I).
inline LCFunction phi_indicator(const Word& word) { return normalized_indicator(Disk(word)); }

/// phi(Psi): the distribution whose value on the indicator of D(I) is Psi_I.
inline Distribution phi_coherent(CascadeTree tree) { return Distribution::cascade(std::move(tree)); }

/// The mu-scaled pairing from the isomorphism: evaluates the distribution
/// phi(Psi) at resolution |I|, i.e. recovers Psi_I exactly.
inline Complex distribution_value(const CascadeTree& tree, const Word& word) {
    PairingValue v = pairing_coherent(tree, word);
    return haar_measure(Disk(word)) * regularized_limit(v);
}

// ---- deep-truncation numeric oracles -------------------------------------
//
// Degree-by-degree floating-point summation of the truncated Fock inner
// product. Degrees whose word sets are uniform blocks are summed by count,
// so truncation degrees far beyond what a materialized vector can hold are
// reachable. Checked against numeric_oracle on materialized states at small
// degree in the test suite.

/// Truncated (X_I, X_J) summed term-by-term in double precision.
inline double numeric_series_indicators(const Word& a, const Word& b, double t, size_t n) {
    if (a.p != b.p) throw std::invalid_argument("mixed primes");
    const Word& shorter = a.length() <= b.length() ? a : b;
    const Word& longer = a.length() <= b.length() ? b : a;
    const double p = static_cast<double>(a.p);
    double acc = 0.0;
    if (shorter.is_prefix_of(longer)) {
        for (size_t k = 0; k <= n; ++k) {
            double g;
            if (k < shorter.length()) {
                g = 1.0;  // single common prefix word, both coefficients 1
            } else if (k < longer.length()) {
                g = std::pow(p, -static_cast<double>(k - shorter.length()));
            } else {
                // p^{k-|J|} extensions of the longer word
                double count = std::pow(p, static_cast<double>(k - longer.length()));
                g = count * std::pow(p, -static_cast<double>(k - shorter.length())) *
                    std::pow(p, -static_cast<double>(k - longer.length()));
            }
            acc += std::pow(p * t, static_cast<double>(k)) * g;
        }
    } else {
        size_t l = longest_common_prefix(a, b).length();
        for (size_t k = 0; k <= std::min(n, l); ++k)
            acc += std::pow(p * t, static_cast<double>(k));
    }
    return acc;
}

/// Truncated (Psi, X_I) summed term-by-term in double precision. Levels up
/// to the tree depth are enumerated outright; deeper levels reuse the
/// descendant sums, which the tree's additivity keeps level-independent.
inline double numeric_series_cascade(const CascadeTree& tree, const Word& word, double t, size_t n) {
    if (tree.p() != word.p) throw std::invalid_argument("mixed primes");
    if (word.length() > tree.depth())
        throw ResolutionError("pairing word deeper than cascade tree resolution");
    const double p = static_cast<double>(word.p);
    double acc = 0.0;
    for (size_t k = 0; k < word.length() && k <= n; ++k)
        acc += std::pow(p * t, static_cast<double>(k)) * to_double(tree.value(word.prefix(k)).re);
    // descendant sums of `word` per level, enumerated up to the tree depth
    std::vector<double> level_sum;
    for (size_t k = word.length(); k <= tree.depth(); ++k) {
        double s = 0.0;
        for (const auto& [w, c] : tree.values())
            if (w.length() == k && word.is_prefix_of(w)) s += to_double(c.re);
        level_sum.push_back(s);
    }
    const double p_i = std::pow(p, static_cast<double>(word.length()));
    for (size_t k = word.length(); k <= n; ++k) {
        size_t idx = std::min(k - word.length(), level_sum.size() - 1);
        acc += p_i * std::pow(t, static_cast<double>(k)) * level_sum[idx];
    }
    return acc;
}

}  // namespace freecoh
