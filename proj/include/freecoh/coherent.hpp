#pragma once

#include <complex>
#include <stdexcept>

#include "fock.hpp"
#include "lc_space.hpp"
#include "padic.hpp"
#include "scalar.hpp"

namespace freecoh {

enum class StateFamily { Cascade, Indicator, DeltaPath };

/// Degree-truncated coherent-state vector at a fixed rational t = lambda^2/p,
/// t in (0,1) <=> lambda in (0, sqrt(p)).
///
/// Coefficients are stored *reduced*: the Fock coefficient of word K is
/// lambda^{|K|} times the stored value. Every pairing is a series in
/// lambda^2 = p t, so reduced storage keeps all arithmetic rational.
struct TruncatedState {
    FockVector reduced;
    size_t trunc_degree;
    Rational t;
    StateFamily family;

    uint32_t p() const { return reduced.p(); }
};

inline void require_t(const Rational& t) {
    if (!(t > 0 && t < 1)) throw std::invalid_argument("t = lambda^2/p must lie in (0,1)");
}

/// Psi = sum_I lambda^{|I|} Psi_I A^dag_I Omega, truncated at degree N.
inline TruncatedState coherent_from_cascade(const CascadeTree& tree, const Rational& t, size_t n) {
    require_t(t);
    if (n > tree.depth())
        throw ResolutionError("truncation degree exceeds cascade tree depth");
    FockVector v(tree.p());
    for (const auto& [w, c] : tree.values())
        if (w.length() <= n) v.add(w, c);
    return {std::move(v), n, t, StateFamily::Cascade};
}

/// X_I truncated at degree N, by the closed form of its coefficients:
/// 1 on every prefix of I, p^{-(|K|-|I|)} on every extension K of I.
inline TruncatedState indicator_state(const Word& word, const Rational& t, size_t n) {
    require_t(t);
    if (n < word.length())
        throw std::invalid_argument("truncation degree below |I|");
    FockVector v(word.p);
    for (size_t k = 0; k <= word.length(); ++k) v.add(word.prefix(k), Complex(1));
    std::vector<Word> frontier{word};
    Rational weight(1);
    for (size_t k = word.length() + 1; k <= n; ++k) {
        weight /= word.p;
        std::vector<Word> next;
        next.reserve(frontier.size() * word.p);
        for (const auto& w : frontier)
            for (uint32_t i = 0; i < word.p; ++i) next.push_back(w.child(i));
        frontier = std::move(next);
        for (const auto& w : frontier) v.add(w, Complex(weight));
    }
    return {std::move(v), n, t, StateFamily::Indicator};
}

/// X_I by literally expanding its defining operator series with the Fock
/// operators: creation spread (1/p) sum_i A^dag_i applied repeatedly, plus
/// |I| applications of sum_i A_i. Cross-check route for indicator_state.
inline TruncatedState indicator_state_by_operators(const Word& word, const Rational& t, size_t n) {
    require_t(t);
    if (n < word.length())
        throw std::invalid_argument("truncation degree below |I|");
    const uint32_t p = word.p;
    const Rational inv_p(1, p);
    FockVector total(p);

    // creation branch: each application carries one lambda and a 1/p
    FockVector layer = FockVector::basis(word);
    total += layer;
    for (size_t k = word.length() + 1; k <= n; ++k) {
        FockVector next(p);
        for (uint32_t i = 0; i < p; ++i) next += create(i, layer);
        layer = Complex(inv_p) * next;
        total += layer;
    }

    // annihilation branch: lambda^{-l} against the overall lambda^{|I|}
    // leaves reduced weight 1 on each proper prefix
    FockVector down = FockVector::basis(word);
    for (size_t l = 1; l <= word.length(); ++l) {
        down = annihilation_sum(down);
        total += down;
    }
    return {std::move(total), n, t, StateFamily::Indicator};
}

/// Delta-path state for an infinite digit stream x: reduced coefficient 1 on
/// prefix_k(x) for every k <= N.
inline TruncatedState delta_path_state(const PAdicPoint& x, const Rational& t, size_t n) {
    require_t(t);
    FockVector v(x.p());
    for (size_t k = 0; k <= n; ++k) v.add(x.prefix(k), Complex(1));
    return {std::move(v), n, t, StateFamily::DeltaPath};
}

/// Exact inner product of two truncated states: sum over words of
/// (p t)^{|K|} a_K conj(b_K). Conjugates the second slot.
inline Complex truncated_inner(const TruncatedState& a, const TruncatedState& b) {
    a.reduced.check_p(b.reduced);
    if (a.t != b.t) throw std::invalid_argument("states instantiated at different t");
    const Rational pt = Rational(a.p()) * a.t;
    Complex acc;
    for (const auto& [w, c] : a.reduced.coeffs()) {
        Complex d = b.reduced.coeff(w);
        if (!d.is_zero()) acc += pow_r(pt, w.length()) * (c * d.conj());
    }
    return acc;
}

/// Bilinear pairing variant (no conjugation): the functional action used for
/// (Psi, X_I). Coincides with truncated_inner on real states.
inline Complex truncated_pair(const TruncatedState& a, const TruncatedState& b) {
    a.reduced.check_p(b.reduced);
    if (a.t != b.t) throw std::invalid_argument("states instantiated at different t");
    const Rational pt = Rational(a.p()) * a.t;
    Complex acc;
    for (const auto& [w, c] : a.reduced.coeffs()) {
        Complex d = b.reduced.coeff(w);
        if (!d.is_zero()) acc += pow_r(pt, w.length()) * (c * d);
    }
    return acc;
}

/// Squared norm of (A - lambda) s restricted to degrees < trunc_degree.
/// Exactly zero iff the underlying values satisfy the cascade condition on
/// every node with all children below the truncation cut. A violation of
/// magnitude eps at the children of a depth-(d-1) node contributes
/// (p t)^d eps^2.
inline Rational eigen_residual(const TruncatedState& s) {
    const Rational pt = Rational(s.p()) * s.t;
    // child sums keyed by parent word
    std::map<Word, Complex> child_sum;
    for (const auto& [w, c] : s.reduced.coeffs())
        if (!w.is_empty()) child_sum[w.parent()] += c;
    Rational acc;
    for (const auto& [w, c] : s.reduced.coeffs()) {
        if (w.length() + 1 > s.trunc_degree) continue;
        auto it = child_sum.find(w);
        Complex violation = (it == child_sum.end() ? Complex() : it->second) - c;
        if (!violation.is_zero()) acc += pow_r(pt, w.length() + 1) * violation.norm_sq();
        if (it != child_sum.end()) child_sum.erase(it);
    }
    // parents with zero own coefficient but nonzero child sum
    for (const auto& [w, sum] : child_sum)
        if (w.length() + 1 <= s.trunc_degree && !sum.is_zero())
            acc += pow_r(pt, w.length() + 1) * sum.norm_sq();
    return acc;
}

/// Floating-point Fock inner product of two materialized truncated states.
inline double numeric_oracle(const TruncatedState& a, const TruncatedState& b) {
    a.reduced.check_p(b.reduced);
    if (a.t != b.t) throw std::invalid_argument("states instantiated at different t");
    const double pt = static_cast<double>(a.p()) * to_double(a.t);
    std::complex<double> acc = 0.0;
    for (const auto& [w, c] : a.reduced.coeffs()) {
        Complex d = b.reduced.coeff(w);
        if (d.is_zero()) continue;
        std::complex<double> ca(to_double(c.re), to_double(c.im));
        std::complex<double> cb(to_double(d.re), to_double(d.im));
        acc += std::pow(pt, static_cast<double>(w.length())) * ca * std::conj(cb);
    }
    return acc.real();
}

}  // namespace freecoh
