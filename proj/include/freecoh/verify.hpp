#pragma once

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "coherent.hpp"
#include "fock.hpp"
#include "lc_space.hpp"
#include "limit.hpp"
#include "padic.hpp"
#include "scalar.hpp"

namespace freecoh {

struct SuiteReport {
    std::string name;
    size_t checks = 0;
    size_t failures = 0;
    std::string first_counterexample;

    bool ok() const { return failures == 0; }

    void fail(const std::string& msg) {
        ++failures;
        if (first_counterexample.empty()) first_counterexample = msg;
    }

    std::string summary() const {
        std::ostringstream os;
        os << name << ": " << (checks - failures) << "/" << checks << " checks OK";
        if (!ok()) os << "; first counterexample: " << first_counterexample;
        return os.str();
    }
};

struct VerifyConfig {
    uint32_t p = 2;
    size_t depth = 5;
    uint64_t seed = 1;
    size_t pair_cap = 100000;  // lexicographic cap on enumerated word pairs
    size_t trees = 100;
};

namespace detail {

/// All words over {0..p-1} up to the given length, ordered by (length, lex).
inline std::vector<Word> words_up_to(uint32_t p, size_t max_len) {
    std::vector<Word> out{Word::empty(p)};
    size_t level_begin = 0;
    for (size_t len = 1; len <= max_len; ++len) {
        size_t level_end = out.size();
        for (size_t i = level_begin; i < level_end; ++i)
            for (uint32_t d = 0; d < p; ++d) out.push_back(out[i].child(d));
        level_begin = level_end;
    }
    return out;
}

inline Word random_word(std::mt19937_64& rng, uint32_t p, size_t max_len) {
    size_t len = rng() % (max_len + 1);
    std::vector<uint32_t> digits(len);
    for (auto& d : digits) d = static_cast<uint32_t>(rng() % p);
    return Word(std::move(digits), p);
}

inline FockVector random_sparse_vector(std::mt19937_64& rng, uint32_t p, size_t terms, size_t max_len) {
    FockVector v(p);
    for (size_t i = 0; i < terms; ++i)
        v.add(random_word(rng, p, max_len), Complex(small_rational(rng), small_rational(rng)));
    return v;
}

/// Random rational enriched with an explicit p-power factor so all
/// valuations get exercised.
inline Rational random_rational_with_valuation(std::mt19937_64& rng, uint32_t p) {
    Rational base = small_rational(rng);
    if (base == 0) base = Rational(1);
    long e = static_cast<long>(rng() % 11) - 5;
    return base * pow_rational(p, e);
}

}  // namespace detail

/// Strong triangle inequality, disk trichotomy against a residue-enumeration
/// oracle, Haar additivity, norm multiplicativity.
inline SuiteReport verify_padic(const VerifyConfig& cfg) {
    SuiteReport rep{"padic"};
    std::mt19937_64 rng(cfg.seed);
    const uint32_t p = cfg.p;

    for (size_t i = 0; i < 10000; ++i) {
        Rational x = detail::random_rational_with_valuation(rng, p);
        Rational y = detail::random_rational_with_valuation(rng, p);
        Rational z = detail::random_rational_with_valuation(rng, p);
        ++rep.checks;
        Rational lhs = padic_norm_total(x - y, p);
        Rational rhs = std::max(padic_norm_total(x - z, p), padic_norm_total(z - y, p));
        if (lhs > rhs) {
            std::ostringstream os;
            os << "triangle: x=" << to_string(x) << " y=" << to_string(y) << " z=" << to_string(z);
            rep.fail(os.str());
        }
        ++rep.checks;
        if (x != 0 && y != 0 && padic_norm(x * y, p) != padic_norm(x, p) * padic_norm(y, p))
            rep.fail("multiplicativity: x=" + to_string(x) + " y=" + to_string(y));
    }

    // trichotomy oracle: residue sets mod p^depth
    size_t depth = std::min<size_t>(cfg.depth, 6);
    auto words = detail::words_up_to(p, depth);
    uint64_t modulus = 1;
    for (size_t i = 0; i < depth; ++i) modulus *= p;
    auto residues = [&](const Word& w) {
        std::vector<bool> in(modulus, false);
        uint64_t base = 0, step = 1;
        for (size_t i = 0; i < w.length(); ++i) {
            base += static_cast<uint64_t>(w.digits[i]) * step;
            step *= p;
        }
        for (uint64_t r = base; r < modulus; r += step) in[r] = true;
        return in;
    };
    for (const auto& a : words)
        for (const auto& b : words) {
            ++rep.checks;
            auto ra = residues(a), rb = residues(b);
            bool a_sub_b = true, b_sub_a = true, disjoint = true;
            for (uint64_t r = 0; r < modulus; ++r) {
                if (ra[r] && !rb[r]) a_sub_b = false;
                if (rb[r] && !ra[r]) b_sub_a = false;
                if (ra[r] && rb[r]) disjoint = false;
            }
            DiskRelation expect = disjoint           ? DiskRelation::Disjoint
                                  : a_sub_b && b_sub_a ? DiskRelation::Equal
                                  : b_sub_a            ? DiskRelation::AContainsB
                                                       : DiskRelation::BContainsA;
            if (!disjoint && !a_sub_b && !b_sub_a) {
                rep.fail("oracle found partial overlap: a=" + to_string(a) + " b=" + to_string(b));
                continue;
            }
            if (disk_relation(Disk(a), Disk(b)) != expect)
                rep.fail("trichotomy: a=" + to_string(a) + " b=" + to_string(b));
        }

    // Haar additivity over children, all disks to depth 8
    for (const auto& w : detail::words_up_to(p, std::min<size_t>(cfg.depth + 3, 8) - 1)) {
        ++rep.checks;
        Rational sum;
        for (uint32_t i = 0; i < p; ++i) sum += haar_measure(Disk(w.child(i)));
        if (sum != haar_measure(Disk(w))) rep.fail("additivity at " + to_string(w));
    }
    return rep;
}

/// Free relations A_i A^dag_j = delta_ij, adjointness of A_i and A^dag_i,
/// and a witness that A^dag_i A_j is not a scalar (free, not canonical,
/// commutation relations).
inline SuiteReport verify_fock(const VerifyConfig& cfg) {
    SuiteReport rep{"fock"};
    std::mt19937_64 rng(cfg.seed);
    const uint32_t p = cfg.p;

    for (size_t trial = 0; trial < 100; ++trial) {
        FockVector v = detail::random_sparse_vector(rng, p, 6, 5);
        FockVector w = detail::random_sparse_vector(rng, p, 6, 5);
        for (uint32_t i = 0; i < p; ++i) {
            for (uint32_t j = 0; j < p; ++j) {
                ++rep.checks;
                FockVector lhs = annihilate(i, create(j, v));
                FockVector expect = (i == j) ? v : FockVector::zero(p);
                if (lhs != expect) {
                    std::ostringstream os;
                    os << "A_" << i << " Adag_" << j << " trial " << trial;
                    rep.fail(os.str());
                }
            }
            ++rep.checks;
            if (inner(create(i, v), w) != inner(v, annihilate(i, w)))
                rep.fail("adjointness i=" + std::to_string(i) + " trial " + std::to_string(trial));
        }
    }

    // Adag_0 A_0 kills basis (1) while the identity does not
    ++rep.checks;
    FockVector witness = FockVector::basis(Word({1}, p));
    if (!create(0, annihilate(0, witness)).is_zero() || witness.is_zero())
        rep.fail("expected Adag_0 A_0 to differ from the identity on basis (1)");
    return rep;
}

/// Regularized limits of (X_I, X_J) against the min(p^{|I|}, p^{|J|}) / 0
/// dichotomy and against the L2 inner product of the phi-images. Exact.
inline SuiteReport verify_lemma1(const VerifyConfig& cfg) {
    SuiteReport rep{"lemma1"};
    auto words = detail::words_up_to(cfg.p, cfg.depth);
    size_t pairs = 0;
    for (const auto& a : words) {
        if (pairs >= cfg.pair_cap) break;
        for (const auto& b : words) {
            if (pairs++ >= cfg.pair_cap) break;
            ++rep.checks;
            PairingValue v = pairing_indicators(a, b);
            Complex limit = regularized_limit(v);
            DiskRelation rel = disk_relation(Disk(a), Disk(b));
            Complex expect;
            if (rel != DiskRelation::Disjoint)
                expect = Complex(pow_rational(cfg.p, static_cast<long>(std::min(a.length(), b.length()))));
            Complex l2 = l2_inner(phi_indicator(a), phi_indicator(b));
            if (limit != expect || limit != l2)
                rep.fail("I=" + to_string(a) + " J=" + to_string(b) + " limit=" + to_string(limit) +
                         " min-rule=" + to_string(expect) + " l2=" + to_string(l2));
        }
    }
    return rep;
}

/// Delta-path limits: p^{|J|} times disk membership, and agreement with the
/// delta distribution acting on the normalized indicator. Exact.
inline SuiteReport verify_lemma2(const VerifyConfig& cfg) {
    SuiteReport rep{"lemma2"};
    const uint32_t p = cfg.p;
    std::vector<PAdicPoint> points;
    for (size_t total = 0; total <= 4; ++total)
        for (size_t pre_len = 0; pre_len <= total; ++pre_len) {
            size_t per_len = total - pre_len;
            for (const auto& pre : detail::words_up_to(p, pre_len))
                if (pre.length() == pre_len)
                    for (const auto& per : detail::words_up_to(p, per_len))
                        if (per.length() == per_len) points.emplace_back(pre, per);
        }
    auto words = detail::words_up_to(p, std::min<size_t>(cfg.depth, 5));
    for (const auto& x : points)
        for (const auto& j : words) {
            ++rep.checks;
            Complex limit = regularized_limit(pairing_delta(x, j));
            bool inside = x.in_disk(Disk(j));
            Complex expect = inside ? Complex(pow_rational(p, static_cast<long>(j.length()))) : Complex(0);
            Complex via_act = act(Distribution::delta(x), normalized_indicator(Disk(j)));
            if (limit != expect || limit != via_act)
                rep.fail("x=" + to_string(x) + " J=" + to_string(j) + " limit=" + to_string(limit));
        }
    return rep;
}

/// The level recursion behind convergence: for a cascade state Psi and an
/// indicator state X_I, the degree-(|I|+k) slice pairing is 1/p of the
/// previous one, so series terms beyond |I| decay with exact ratio t.
inline SuiteReport verify_lemma3(const VerifyConfig& cfg) {
    SuiteReport rep{"lemma3"};
    std::mt19937_64 rng(cfg.seed);
    const uint32_t p = cfg.p;
    const Rational inv_p(1, p);
    const Rational t(1, 2);
    for (size_t trial = 0; trial < 20; ++trial) {
        CascadeTree tree = random_cascade(p, cfg.depth, rng());
        Word word = detail::random_word(rng, p, std::min<size_t>(cfg.depth, 3));
        TruncatedState psi = coherent_from_cascade(tree, t, cfg.depth);
        TruncatedState x = indicator_state(word, t, cfg.depth);
        // bilinear slice pairings per degree
        std::vector<Complex> slice(cfg.depth + 1);
        for (const auto& [w, c] : psi.reduced.coeffs()) {
            Complex d = x.reduced.coeff(w);
            if (!d.is_zero()) slice[w.length()] += c * d;
        }
        for (size_t k = word.length() + 1; k <= cfg.depth; ++k) {
            ++rep.checks;
            if (slice[k] != inv_p * slice[k - 1])
                rep.fail("slice recursion at degree " + std::to_string(k) + ", I=" + to_string(word) +
                         ", trial " + std::to_string(trial));
        }
        // tail of the exact pairing is a pure geometric series in t
        PairingValue v = pairing_coherent(tree, word);
        ++rep.checks;
        Rational tail_bound = v.tail_coeff.norm_sq();  // nonzero iff Psi_I != 0
        Complex full = v.value_at(t);
        Complex truncated = v.truncated_value_at(t, cfg.depth);
        Complex tail = full - truncated;
        Complex expect_tail = v.tail_coeff * (pow_r(t, cfg.depth + 1) / (Rational(1) - t));
        (void)tail_bound;
        if (tail != expect_tail)
            rep.fail("tail mismatch, I=" + to_string(word) + ", trial " + std::to_string(trial));
    }
    return rep;
}

/// Round trip of the isomorphism: mu(D_I) times the regularized pairing
/// limit recovers every tree value; plus constructive surjectivity at a
/// fixed level.
inline SuiteReport verify_theorem(const VerifyConfig& cfg) {
    SuiteReport rep{"theorem"};
    std::mt19937_64 rng(cfg.seed);
    const uint32_t p = cfg.p;
    for (size_t trial = 0; trial < cfg.trees; ++trial) {
        CascadeTree tree = random_cascade(p, cfg.depth, rng());
        bool tree_ok = true;
        for (const auto& [w, psi] : tree.values()) {
            ++rep.checks;
            if (distribution_value(tree, w) != psi) {
                rep.fail("tree " + std::to_string(trial) + " node " + to_string(w));
                tree_ok = false;
            }
        }
        (void)tree_ok;
    }

    // surjectivity at level n: arbitrary leaf assignment extends to a
    // cascade whose phi-image acts as assigned
    size_t n = std::min<size_t>(cfg.depth, 3);
    CascadeTree ext(p, n);
    auto words = detail::words_up_to(p, n);
    for (const auto& w : words)
        if (w.length() == n) ext.set(w, Complex(detail::small_rational(rng)));
    for (size_t len = n; len-- > 0;)
        for (const auto& w : words)
            if (w.length() == len) {
                Complex sum;
                for (uint32_t i = 0; i < p; ++i) sum += ext.value(w.child(i));
                ext.set(w, sum);
            }
    ++rep.checks;
    if (!ext.is_consistent()) rep.fail("surjectivity: upward extension is not a cascade");
    Distribution dist = phi_coherent(ext);
    for (const auto& w : words)
        if (w.length() == n) {
            ++rep.checks;
            if (act(dist, indicator(Disk(w))) != ext.value(w))
                rep.fail("surjectivity: action differs at leaf " + to_string(w));
        }
    return rep;
}

inline SuiteReport run_suite(const std::string& name, const VerifyConfig& cfg) {
    if (name == "padic") return verify_padic(cfg);
    if (name == "fock") return verify_fock(cfg);
    if (name == "lemma1") return verify_lemma1(cfg);
    if (name == "lemma2") return verify_lemma2(cfg);
    if (name == "lemma3") return verify_lemma3(cfg);
    if (name == "theorem") return verify_theorem(cfg);
    throw std::invalid_argument("unknown suite '" + name + "'");
}

inline const std::vector<std::string>& all_suites() {
    static const std::vector<std::string> names{"padic", "fock", "lemma1", "lemma2", "lemma3", "theorem"};
    return names;
}

}  // namespace freecoh
