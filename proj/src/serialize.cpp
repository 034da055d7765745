#include "riordan/serialize.hpp"

#include <vector>

#include "riordan/errors.hpp"
#include "riordan/rational.hpp"

namespace riordan {

namespace {

const nlohmann::json& field(const nlohmann::json& doc, const char* key) {
    if (!doc.is_object() || !doc.contains(key))
        throw InvalidDocument(std::string("missing field \"") + key + "\"");
    return doc.at(key);
}

}  // namespace

nlohmann::json series_doc(const Series& s) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const Rat& c : s.coeffs()) coeffs.push_back(rat_to_string(c));
    return nlohmann::json{{"trunc_order", s.trunc_order()}, {"coeffs", std::move(coeffs)}};
}

Series series_from_doc(const nlohmann::json& doc) {
    const nlohmann::json& order = field(doc, "trunc_order");
    const nlohmann::json& coeffs = field(doc, "coeffs");
    if (!order.is_number_integer() || order.get<long long>() < 0)
        throw InvalidDocument("trunc_order must be a non-negative integer");
    if (!coeffs.is_array())
        throw InvalidDocument("coeffs must be an array of rational strings");
    const long long n = order.get<long long>();
    if (static_cast<long long>(coeffs.size()) != n + 1)
        throw InvalidDocument("coeffs length must be trunc_order + 1");
    std::vector<Rat> values;
    values.reserve(coeffs.size());
    for (const nlohmann::json& c : coeffs) {
        if (!c.is_string())
            throw InvalidDocument("coefficients must be rational strings, not numbers");
        values.push_back(rat_from_string(c.get<std::string>()));
    }
    return Series(std::move(values));
}

nlohmann::json pair_doc(const RiordanPair& p) {
    return nlohmann::json{{"d", series_doc(p.d())}, {"h", series_doc(p.h())}};
}

RiordanPair pair_from_doc(const nlohmann::json& doc) {
    return RiordanPair(series_from_doc(field(doc, "d")), series_from_doc(field(doc, "h")));
}

nlohmann::json witness_doc(const CommutatorWitness& w) {
    return nlohmann::json{{"target", pair_doc(w.target)},
                          {"left", pair_doc(w.left)},
                          {"right", pair_doc(w.right)},
                          {"verified_order", w.verified_order},
                          {"identity_checked", true}};
}

CommutatorWitness witness_from_doc(const nlohmann::json& doc) {
    const nlohmann::json& checked = field(doc, "identity_checked");
    if (!checked.is_boolean() || !checked.get<bool>())
        throw InvalidDocument("witness documents must carry identity_checked = true");
    const nlohmann::json& order = field(doc, "verified_order");
    if (!order.is_number_integer() || order.get<long long>() < 0)
        throw InvalidDocument("verified_order must be a non-negative integer");
    CommutatorWitness w{pair_from_doc(field(doc, "left")), pair_from_doc(field(doc, "right")),
                        pair_from_doc(field(doc, "target")),
                        static_cast<int>(order.get<long long>())};
    if (w.verified_order > w.left.trunc_order() || w.verified_order > w.right.trunc_order() ||
        w.verified_order > w.target.trunc_order())
        throw InvalidDocument("verified_order exceeds a component window");
    if (!witness_holds(w)) throw InvalidDocument("witness identity does not re-verify");
    return w;
}

}  // namespace riordan
