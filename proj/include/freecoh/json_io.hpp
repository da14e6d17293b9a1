#pragma once

#include <cstdint>
#include <fstream>
#include <limits>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "lc_space.hpp"
#include "limit.hpp"
#include "padic.hpp"
#include "scalar.hpp"

namespace freecoh {

using json = nlohmann::json;

namespace detail {

inline json integer_to_json(const Integer& n) {
    if (n >= std::numeric_limits<int64_t>::min() && n <= std::numeric_limits<int64_t>::max())
        return static_cast<int64_t>(n);
    return n.str();
}

inline Integer integer_from_json(const json& j, const std::string& field) {
    if (j.is_number_integer()) return Integer(j.get<int64_t>());
    if (j.is_string()) return Integer(j.get<std::string>());
    throw std::invalid_argument("field '" + field + "' must be an integer or integer string");
}

}  // namespace detail

inline json cascade_to_json(const CascadeTree& tree) {
    json values = json::array();
    for (const auto& [w, c] : tree.values()) {
        values.push_back({{"word", to_string(w)},
                          {"re_num", detail::integer_to_json(numerator(c.re))},
                          {"re_den", detail::integer_to_json(denominator(c.re))},
                          {"im_num", detail::integer_to_json(numerator(c.im))},
                          {"im_den", detail::integer_to_json(denominator(c.im))}});
    }
    return {{"p", tree.p()}, {"depth", tree.depth()}, {"values", values}};
}

/// Parses and re-validates a cascade tree: every node present, every
/// interior node equal to the sum of its children.
inline CascadeTree cascade_from_json(const json& j) {
    if (!j.is_object() || !j.contains("p") || !j.contains("depth") || !j.contains("values"))
        throw std::invalid_argument("cascade JSON must contain fields p, depth, values");
    uint32_t p = j.at("p").get<uint32_t>();
    require_prime(p);
    size_t depth = j.at("depth").get<size_t>();
    CascadeTree tree(p, depth);
    for (const auto& entry : j.at("values")) {
        Word w = parse_word(entry.at("word").get<std::string>(), p);
        Integer re_den = detail::integer_from_json(entry.at("re_den"), "re_den");
        Integer im_den = detail::integer_from_json(entry.at("im_den"), "im_den");
        if (re_den == 0 || im_den == 0)
            throw std::invalid_argument("zero denominator at node '" + to_string(w) + "'");
        Complex c(Rational(detail::integer_from_json(entry.at("re_num"), "re_num"), re_den),
                  Rational(detail::integer_from_json(entry.at("im_num"), "im_num"), im_den));
        tree.set(w, c);
    }
    if (!tree.has_all_nodes())
        throw std::invalid_argument("cascade JSON is missing nodes for depth " + std::to_string(depth));
    if (auto bad = tree.first_violation())
        throw std::invalid_argument("cascade condition violated at node '" + to_string(*bad) + "'");
    return tree;
}

inline void save_cascade(const CascadeTree& tree, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << cascade_to_json(tree).dump(2) << "\n";
}

inline CascadeTree load_cascade(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open cascade file '" + path + "'");
    json j;
    in >> j;
    return cascade_from_json(j);
}

inline json pairing_to_json(const PairingValue& v) {
    json poly = json::array();
    for (const auto& a : v.poly) poly.push_back(to_string(a));
    return {{"p", v.p},
            {"case", to_string(v.kind)},
            {"poly", poly},
            {"tail_coeff", to_string(v.tail_coeff)},
            {"tail_start", v.tail_start},
            {"limit", to_string(regularized_limit(v))}};
}

}  // namespace freecoh
