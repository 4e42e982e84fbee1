#pragma once

/// @file system_json.hpp
/// @brief JSON wire format for coupled systems.
///
/// Schema (all scalars are strings in the exact grammar of scalar.hpp;
/// plain JSON integers are also accepted on input, floats never):
///
///   {
///     "order": 2,
///     "matrices": [[["1","0"],["1","1"]], [["1","0"],["1","1"]]],
///     "initialA": ["1","1"],
///     "initialB": ["0","1"],
///     "coefficients": ["2","1","-2","-1"]   // optional, see below
///   }
///
/// The optional "coefficients" field pins the decoupled coefficient vector
/// a document claims for itself; the verify command checks generated
/// sequences against it, which is how externally supplied or hand-edited
/// coefficients get caught.

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "coupled_system.hpp"
#include "scalar.hpp"

namespace vecrec {

struct ParsedDocument {
    CoupledSystem system;
    std::optional<std::vector<Scalar>> coefficients;
};

namespace detail {

inline Scalar scalar_from_json(const nlohmann::json& value, const std::string& where) {
    if (value.is_string()) {
        return parse_scalar(value.get<std::string>());
    }
    if (value.is_number_integer()) {
        return Scalar(Rational(Integer(std::to_string(value.get<long long>()))));
    }
    throw std::invalid_argument(where + ": scalars must be strings (or plain integers)");
}

inline std::vector<Scalar> scalar_list_from_json(const nlohmann::json& value,
                                                 const std::string& where) {
    if (!value.is_array()) throw std::invalid_argument(where + ": expected an array");
    std::vector<Scalar> out;
    out.reserve(value.size());
    for (const auto& item : value) out.push_back(scalar_from_json(item, where));
    return out;
}

}  // namespace detail

inline ParsedDocument parse_system(const nlohmann::json& doc) {
    if (!doc.is_object()) throw std::invalid_argument("system document must be a JSON object");
    for (const char* key : {"order", "matrices", "initialA", "initialB"}) {
        if (!doc.contains(key)) {
            throw std::invalid_argument(std::string("system document missing field '") + key +
                                        "'");
        }
    }
    if (!doc["order"].is_number_integer() || doc["order"].get<long long>() < 1) {
        throw std::invalid_argument("'order' must be a positive integer");
    }
    const auto order = doc["order"].get<std::size_t>();

    const auto& mats = doc["matrices"];
    if (!mats.is_array() || mats.size() != order) {
        throw std::invalid_argument("'matrices' must list exactly order-many 2x2 matrices");
    }
    std::vector<Mat2> matrices;
    matrices.reserve(order);
    for (std::size_t t = 0; t < order; ++t) {
        const auto& rows = mats[t];
        const std::string where = "matrices[" + std::to_string(t) + "]";
        if (!rows.is_array() || rows.size() != 2 || !rows[0].is_array() || rows[0].size() != 2 ||
            !rows[1].is_array() || rows[1].size() != 2) {
            throw std::invalid_argument(where + ": expected a 2x2 grid of scalars");
        }
        matrices.emplace_back(
            detail::scalar_from_json(rows[0][0], where), detail::scalar_from_json(rows[0][1], where),
            detail::scalar_from_json(rows[1][0], where), detail::scalar_from_json(rows[1][1], where));
    }

    std::vector<Scalar> init_a = detail::scalar_list_from_json(doc["initialA"], "initialA");
    std::vector<Scalar> init_b = detail::scalar_list_from_json(doc["initialB"], "initialB");
    if (init_a.size() != order || init_b.size() != order) {
        throw std::invalid_argument("initialA/initialB must each have exactly order-many entries");
    }

    ParsedDocument out{CoupledSystem(std::move(matrices), std::move(init_a), std::move(init_b)),
                       std::nullopt};
    if (doc.contains("coefficients")) {
        out.coefficients = detail::scalar_list_from_json(doc["coefficients"], "coefficients");
    }
    return out;
}

inline ParsedDocument parse_system_text(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& err) {
        throw std::invalid_argument(std::string("invalid JSON: ") + err.what());
    }
    return parse_system(doc);
}

inline nlohmann::json scalars_to_json(const std::vector<Scalar>& values) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Scalar& v : values) arr.push_back(to_string(v));
    return arr;
}

/// Canonical serialization; parse → serialize is idempotent.
inline nlohmann::json system_to_json(
    const CoupledSystem& sys,
    const std::optional<std::vector<Scalar>>& coefficients = std::nullopt) {
    nlohmann::json doc;
    doc["order"] = sys.order();
    nlohmann::json mats = nlohmann::json::array();
    for (const Mat2& m : sys.matrices()) {
        mats.push_back(nlohmann::json::array(
            {nlohmann::json::array({to_string(m.a11), to_string(m.a12)}),
             nlohmann::json::array({to_string(m.a21), to_string(m.a22)})}));
    }
    doc["matrices"] = std::move(mats);
    doc["initialA"] = scalars_to_json(sys.initial_a());
    doc["initialB"] = scalars_to_json(sys.initial_b());
    if (coefficients) {
        doc["coefficients"] = scalars_to_json(*coefficients);
    }
    return doc;
}

}  // namespace vecrec
