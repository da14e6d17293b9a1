// freecoh command line driver: exact pairings and regularized limits,
// lemma/theorem verification suites, random cascade generation, and
// t -> 1 convergence sweeps.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "freecoh/json_io.hpp"
#include "freecoh/limit.hpp"
#include "freecoh/verify.hpp"

namespace {

using namespace freecoh;

constexpr size_t kDepthCap = 64;

std::ostream& open_output(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw std::invalid_argument("cannot open output file '" + path + "'");
    return file;
}

std::string decimal(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

struct PairArgs {
    uint32_t p = 2;
    std::string word_i;
    std::string word_j;
    std::optional<std::string> delta;
    std::optional<std::string> cascade_file;
    std::optional<std::string> t;
    std::string out;
    std::string format = "json";
    bool has_i = false;
    bool has_j = false;
};

int run_pair(const PairArgs& args) {
    require_prime(args.p);
    PairingValue v;
    if (args.delta) {
        if (!args.has_j) throw std::invalid_argument("--delta requires --J");
        PAdicPoint x = parse_point(*args.delta, args.p);
        v = pairing_delta(x, parse_word(args.word_j, args.p));
    } else if (args.cascade_file) {
        if (!args.has_i) throw std::invalid_argument("--cascade requires --I");
        CascadeTree tree = load_cascade(*args.cascade_file);
        if (tree.p() != args.p) throw std::invalid_argument("cascade file prime differs from --p");
        v = pairing_coherent(tree, parse_word(args.word_i, args.p));
    } else {
        if (!args.has_i || !args.has_j) throw std::invalid_argument("pair requires --I and --J (or --delta/--cascade)");
        v = pairing_indicators(parse_word(args.word_i, args.p), parse_word(args.word_j, args.p));
    }
    std::optional<Rational> t;
    if (args.t) {
        t = parse_rational(*args.t);
        require_t(*t);
    }
    std::ofstream file;
    std::ostream& out = open_output(file, args.out);
    if (args.format == "text") {
        out << "case: " << to_string(v.kind) << "\n";
        out << "tail_start: " << v.tail_start << "\n";
        out << "tail_coeff: " << to_string(v.tail_coeff) << "\n";
        out << "limit: " << to_string(regularized_limit(v)) << "\n";
        if (t) out << "value_at_t: " << to_string(v.value_at(*t)) << "\n";
    } else {
        json j = pairing_to_json(v);
        if (t) {
            j["t"] = to_string(*t);
            j["value_at_t"] = to_string(v.value_at(*t));
        }
        out << j.dump(2) << "\n";
    }
    return 0;
}

struct VerifyArgs {
    std::string suite = "all";
    VerifyConfig cfg;
    std::optional<std::string> cascade_file;
    std::string out;
};

int run_verify(const VerifyArgs& args) {
    require_prime(args.cfg.p);
    if (args.cfg.depth > kDepthCap) throw std::invalid_argument("--depth exceeds cap of 64");
    if (args.cascade_file) {
        // validation path: a bad file is a usage error, reported with the
        // offending node named by the loader
        load_cascade(*args.cascade_file);
    }
    std::ofstream file;
    std::ostream& out = open_output(file, args.out);
    std::vector<std::string> suites =
        args.suite == "all" ? all_suites() : std::vector<std::string>{args.suite};
    bool all_ok = true;
    for (const auto& name : suites) {
        SuiteReport rep = run_suite(name, args.cfg);
        out << rep.summary() << "\n";
        all_ok = all_ok && rep.ok();
    }
    out << (all_ok ? "PASS" : "FAIL") << "\n";
    return all_ok ? 0 : 1;
}

struct SweepArgs {
    uint32_t p = 2;
    std::string word_i;
    std::string word_j;
    size_t k_max = 20;
    std::string out;
};

int run_sweep(const SweepArgs& args) {
    require_prime(args.p);
    PairingValue v = pairing_indicators(parse_word(args.word_i, args.p), parse_word(args.word_j, args.p));
    Complex limit = regularized_limit(v);
    std::ofstream file;
    std::ostream& out = open_output(file, args.out);
    out << "k,t,value,scaled_value,limit,abs_error,t_dec,scaled_value_dec,abs_error_dec\n";
    for (size_t k = 2; k <= args.k_max; ++k) {
        Rational t = Rational(1) - pow_r(Rational(1, 2), k);
        Complex value = v.value_at(t);
        Complex scaled = (Rational(1) - t) * value;
        Complex err = scaled - limit;
        Rational abs_err = err.re < 0 ? Rational(-err.re) : err.re;  // sweeps are real
        out << k << "," << to_string(t) << "," << to_string(value) << "," << to_string(scaled) << ","
            << to_string(limit) << "," << to_string(abs_err) << "," << decimal(to_double(t)) << ","
            << decimal(to_double(scaled.re)) << "," << decimal(to_double(abs_err)) << "\n";
    }
    return 0;
}

struct RandomCascadeArgs {
    uint32_t p = 2;
    size_t depth = 5;
    uint64_t seed = 1;
    std::string out;
};

int run_random_cascade(const RandomCascadeArgs& args) {
    require_prime(args.p);
    if (args.depth > 16) throw std::invalid_argument("--depth too large for an explicit tree (cap 16)");
    CascadeTree tree = random_cascade(args.p, args.depth, args.seed);
    std::ofstream file;
    std::ostream& out = open_output(file, args.out);
    out << cascade_to_json(tree).dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"free coherent states over p letters: exact pairings, regularized limits, and the p-adic distribution picture"};
    app.require_subcommand(1);

    PairArgs pair_args;
    auto* pair = app.add_subcommand("pair", "compute one pairing and its regularized limit");
    pair->add_option("--p", pair_args.p, "prime modulus")->required();
    auto* opt_i = pair->add_option("--I", pair_args.word_i, "word, comma form, little-endian");
    auto* opt_j = pair->add_option("--J", pair_args.word_j, "word, comma form, little-endian");
    pair->add_option("--delta", pair_args.delta, "eventually periodic point, 'pre|per' comma form");
    pair->add_option("--cascade", pair_args.cascade_file, "cascade tree JSON file");
    pair->add_option("--t", pair_args.t, "rational t = lambda^2/p in (0,1), as num/den; reports value(t) too");
    pair->add_option("--out", pair_args.out, "output file (default stdout)");
    pair->add_option("--format", pair_args.format, "json or text")->check(CLI::IsMember({"json", "text"}));

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", verify_args.suite, "padic|fock|lemma1|lemma2|lemma3|theorem|all")
        ->check(CLI::IsMember({"padic", "fock", "lemma1", "lemma2", "lemma3", "theorem", "all"}));
    verify->add_option("--p", verify_args.cfg.p, "prime modulus");
    verify->add_option("--depth", verify_args.cfg.depth, "word/tree depth");
    verify->add_option("--seed", verify_args.cfg.seed, "random seed");
    verify->add_option("--trees", verify_args.cfg.trees, "random trees for the theorem suite");
    verify->add_option("--cascade", verify_args.cascade_file, "cascade tree JSON file to validate first");
    verify->add_option("--out", verify_args.out, "output file (default stdout)");

    SweepArgs sweep_args;
    auto* sweep = app.add_subcommand("sweep", "CSV convergence table for t = 1 - 2^{-k}");
    sweep->add_option("--p", sweep_args.p, "prime modulus")->required();
    sweep->add_option("--I", sweep_args.word_i, "word, comma form");
    sweep->add_option("--J", sweep_args.word_j, "word, comma form");
    sweep->add_option("--kmax", sweep_args.k_max, "largest k in the grid");
    sweep->add_option("--out", sweep_args.out, "output file (default stdout)");

    RandomCascadeArgs rc_args;
    auto* rc = app.add_subcommand("random-cascade", "generate a seeded random cascade tree as JSON");
    rc->add_option("--p", rc_args.p, "prime modulus");
    rc->add_option("--depth", rc_args.depth, "tree depth");
    rc->add_option("--seed", rc_args.seed, "random seed");
    rc->add_option("--out", rc_args.out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        pair_args.has_i = opt_i->count() > 0;
        pair_args.has_j = opt_j->count() > 0;
        if (pair->parsed()) return run_pair(pair_args);
        if (verify->parsed()) return run_verify(verify_args);
        if (sweep->parsed()) return run_sweep(sweep_args);
        if (rc->parsed()) return run_random_cascade(rc_args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
