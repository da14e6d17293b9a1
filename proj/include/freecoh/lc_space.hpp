#pragma once

#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <variant>

#include "padic.hpp"
#include "scalar.hpp"

namespace freecoh {

struct ResolutionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Locally constant function on Z_p: finite linear combination of disk
/// indicators, f(x) = sum_D c_D [x in D]. Terms may overlap; refine() gives
/// the canonical disjoint form at a fixed level.
class LCFunction {
public:
    using Terms = std::map<Disk, Complex>;

    explicit LCFunction(uint32_t p) : p_(p) { require_prime(p); }

    static LCFunction zero(uint32_t p) { return LCFunction(p); }

    uint32_t p() const { return p_; }
    const Terms& terms() const { return terms_; }
    bool is_zero_combination() const { return terms_.empty(); }

    size_t max_depth() const {
        size_t m = 0;
        for (const auto& [d, c] : terms_) m = std::max(m, d.depth());
        return m;
    }

    void add(const Disk& d, const Complex& c) {
        if (d.p() != p_) throw std::invalid_argument("mixed primes");
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(d, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Complex evaluate(const PAdicPoint& x) const {
        if (x.p() != p_) throw std::invalid_argument("mixed primes");
        Complex acc;
        for (const auto& [d, c] : terms_)
            if (x.in_disk(d)) acc += c;
        return acc;
    }

    LCFunction& operator+=(const LCFunction& o) {
        if (p_ != o.p_) throw std::invalid_argument("mixed primes");
        for (const auto& [d, c] : o.terms_) add(d, c);
        return *this;
    }
    friend LCFunction operator+(LCFunction a, const LCFunction& b) { return a += b; }
    friend LCFunction operator*(const Complex& s, const LCFunction& f) {
        LCFunction r(f.p_);
        if (s.is_zero()) return r;
        for (const auto& [d, c] : f.terms_) r.terms_[d] = s * c;
        return r;
    }

private:
    Terms terms_;
    uint32_t p_;
};

/// Indicator of the disk: 1 on d, 0 elsewhere.
inline LCFunction indicator(const Disk& d) {
    LCFunction f(d.p());
    f.add(d, Complex(1));
    return f;
}

/// theta / ||theta||^2 = p^{depth} * theta: the function the isomorphism
/// assigns to the coherent state X_I.
inline LCFunction normalized_indicator(const Disk& d) {
    LCFunction f(d.p());
    f.add(d, Complex(pow_rational(d.p(), static_cast<long>(d.depth()))));
    return f;
}

/// Rewrites f on pairwise-disjoint depth-`level` disks; equal as a function
/// and idempotent.
inline LCFunction refine(const LCFunction& f, size_t level) {
    if (level < f.max_depth())
        throw std::invalid_argument("refinement level below the deepest disk in f");
    LCFunction r(f.p());
    for (const auto& [d, c] : f.terms()) {
        // spread c over all depth-`level` descendants of d
        std::vector<Word> frontier{d.center};
        while (!frontier.empty() && frontier.front().length() < level) {
            std::vector<Word> next;
            next.reserve(frontier.size() * f.p());
            for (const auto& w : frontier)
                for (uint32_t i = 0; i < f.p(); ++i) next.push_back(w.child(i));
            frontier = std::move(next);
        }
        for (const auto& w : frontier) r.add(Disk(w), c);
    }
    return r;
}

/// Haar measure of the intersection of two disks: the smaller one's measure
/// when nested, zero when disjoint.
inline Rational measure_of_intersection(const Disk& a, const Disk& b) {
    switch (disk_relation(a, b)) {
        case DiskRelation::Equal:
        case DiskRelation::AContainsB: return haar_measure(b);
        case DiskRelation::BContainsA: return haar_measure(a);
        case DiskRelation::Disjoint: return Rational(0);
    }
    return Rational(0);
}

/// L2 inner product with respect to Haar measure, exact; conjugates the
/// second argument. Works term-pairwise through disk intersections, which
/// agrees with refining both to a common level and summing cells.
inline Complex l2_inner(const LCFunction& f, const LCFunction& g) {
    if (f.p() != g.p()) throw std::invalid_argument("mixed primes");
    Complex acc;
    for (const auto& [da, ca] : f.terms())
        for (const auto& [db, cb] : g.terms()) {
            Rational mu = measure_of_intersection(da, db);
            if (mu != 0) acc += mu * (ca * cb.conj());
        }
    return acc;
}

inline Rational l2_norm_sq_real(const LCFunction& f) {
    Complex v = l2_inner(f, f);
    return v.re;  // imaginary part is identically zero for f against itself
}

/// Depth-N additive assignment I -> Psi_I on the p-ary word tree: every
/// interior node's value is the sum of its p children. Defines both a free
/// coherent state and (as disk values) a distribution at resolution N.
class CascadeTree {
public:
    CascadeTree(uint32_t p, size_t depth) : p_(p), depth_(depth) { require_prime(p); }

    uint32_t p() const { return p_; }
    size_t depth() const { return depth_; }

    void set(const Word& w, const Complex& v) {
        check_word(w);
        values_[w] = v;
    }

    const Complex& value(const Word& w) const {
        check_word(w);
        auto it = values_.find(w);
        if (it == values_.end())
            throw std::invalid_argument("cascade tree has no value at node '" + to_string(w) + "'");
        return it->second;
    }

    bool has_all_nodes() const {
        size_t expected = 0, level = 1;
        for (size_t d = 0; d <= depth_; ++d, level *= p_) expected += level;
        return values_.size() == expected;
    }

    /// First node where Psi_I != sum_i Psi_{Ii}, if any.
    std::optional<Word> first_violation() const {
        for (const auto& [w, v] : values_) {
            if (w.length() >= depth_) continue;
            Complex sum;
            for (uint32_t i = 0; i < p_; ++i) sum += value(w.child(i));
            if (sum != v) return w;
        }
        return std::nullopt;
    }

    bool is_consistent() const { return has_all_nodes() && !first_violation(); }

    const std::map<Word, Complex>& values() const { return values_; }

private:
    void check_word(const Word& w) const {
        if (w.p != p_) throw std::invalid_argument("mixed primes");
        if (w.length() > depth_)
            throw ResolutionError("node '" + to_string(w) + "' exceeds tree depth " + std::to_string(depth_));
    }

    std::map<Word, Complex> values_;
    uint32_t p_;
    size_t depth_;
};

namespace detail {
/// Small random rational, numerator in [-9,9], denominator in [1,9].
inline Rational small_rational(std::mt19937_64& rng) {
    long long num = static_cast<long long>(rng() % 19) - 9;
    long long den = static_cast<long long>(rng() % 9) + 1;
    return make_rational(num, den);
}
}  // namespace detail

/// Deterministic random cascade tree: each node's first p-1 children are
/// drawn freely, the last child balances the sum. Real rational values.
inline CascadeTree random_cascade(uint32_t p, size_t depth, uint64_t seed) {
    CascadeTree tree(p, depth);
    std::mt19937_64 rng(seed);
    tree.set(Word::empty(p), Complex(detail::small_rational(rng)));
    std::vector<Word> level{Word::empty(p)};
    for (size_t d = 0; d < depth; ++d) {
        std::vector<Word> next;
        next.reserve(level.size() * p);
        for (const auto& w : level) {
            Complex remaining = tree.value(w);
            for (uint32_t i = 0; i + 1 < p; ++i) {
                Complex c(detail::small_rational(rng));
                tree.set(w.child(i), c);
                remaining -= c;
            }
            tree.set(w.child(p - 1), remaining);
            for (uint32_t i = 0; i < p; ++i) next.push_back(w.child(i));
        }
        level = std::move(next);
    }
    return tree;
}

/// Distribution on Z_p, resolution-bounded. Action on the indicator of a
/// disk D(I): Cascade -> Psi_I, Delta(x) -> [x in D(I)], Haar -> mu(D(I)).
class Distribution {
public:
    struct Haar {};

    static Distribution cascade(CascadeTree t) { return Distribution(std::move(t)); }
    static Distribution delta(PAdicPoint x) { return Distribution(std::move(x)); }
    static Distribution haar(uint32_t p) {
        require_prime(p);
        Distribution d{Haar{}};
        d.p_ = p;
        return d;
    }

    uint32_t p() const { return p_; }
    bool is_cascade() const { return std::holds_alternative<CascadeTree>(kind_); }
    const CascadeTree& tree() const { return std::get<CascadeTree>(kind_); }

    Complex act_on_indicator(const Disk& d) const {
        if (d.p() != p_) throw std::invalid_argument("mixed primes");
        if (const auto* t = std::get_if<CascadeTree>(&kind_)) return t->value(d.center);
        if (const auto* x = std::get_if<PAdicPoint>(&kind_)) return Complex(x->in_disk(d) ? 1 : 0);
        return Complex(haar_measure(d));
    }

private:
    explicit Distribution(CascadeTree t) : kind_(std::move(t)) { p_ = tree().p(); }
    explicit Distribution(PAdicPoint x) : kind_(std::move(x)) { p_ = std::get<PAdicPoint>(kind_).p(); }
    explicit Distribution(Haar h) : kind_(h) {}

    std::variant<CascadeTree, PAdicPoint, Haar> kind_;
    uint32_t p_ = 2;
};

/// Bilinear action of a distribution on a locally constant function.
/// Cascade distributions reject functions finer than their resolution.
inline Complex act(const Distribution& d, const LCFunction& f) {
    if (d.p() != f.p()) throw std::invalid_argument("mixed primes");
    Complex acc;
    for (const auto& [disk, c] : f.terms()) acc += c * d.act_on_indicator(disk);
    return acc;
}

}  // namespace freecoh
