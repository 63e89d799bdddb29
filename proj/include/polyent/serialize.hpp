#ifndef POLYENT_SERIALIZE_HPP
#define POLYENT_SERIALIZE_HPP

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "polyent/classic_info.hpp"
#include "polyent/distribution.hpp"
#include "polyent/synergy.hpp"

namespace polyent {

// On-disk schemas:
//   Pmf             [0.5, 0.5]
//   FactoredSystem  {"marginals": [[...], [...], ...]}
//   JointTable      {"shape": [2, 2], "probs": [...]}   (row-major)
using Distribution =
    std::variant<Pmf<double>, FactoredSystem<double>, JointTable<double>>;

namespace detail {

inline Vector<double> json_to_vector(const nlohmann::json& arr) {
    if (!arr.is_array() || arr.empty())
        throw NotNormalized("expected a non-empty JSON array of numbers");
    Vector<double> v(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (!arr[i].is_number()) throw NotNormalized("non-numeric probability entry");
        v[static_cast<Eigen::Index>(i)] = arr[i].get<double>();
    }
    return v;
}

}  // namespace detail

// Auto-detects the schema by shape: array -> Pmf, object with "marginals" ->
// FactoredSystem, object with "shape"/"probs" -> JointTable.
inline Distribution parse_distribution(const nlohmann::json& doc) {
    if (doc.is_array()) return Pmf<double>(detail::json_to_vector(doc));
    if (doc.is_object() && doc.contains("marginals")) {
        std::vector<Pmf<double>> marginals;
        for (const auto& arr : doc.at("marginals"))
            marginals.emplace_back(detail::json_to_vector(arr));
        return FactoredSystem<double>(std::move(marginals));
    }
    if (doc.is_object() && doc.contains("shape") && doc.contains("probs")) {
        std::vector<Eigen::Index> shape;
        for (const auto& n : doc.at("shape")) shape.push_back(n.get<Eigen::Index>());
        return JointTable<double>(std::move(shape),
                                  detail::json_to_vector(doc.at("probs")));
    }
    throw NotNormalized("unrecognized distribution schema");
}

inline nlohmann::json to_json(const Pmf<double>& p) {
    return nlohmann::json(
        std::vector<double>(p.probs().data(), p.probs().data() + p.size()));
}

inline nlohmann::json to_json(const FactoredSystem<double>& s) {
    nlohmann::json marginals = nlohmann::json::array();
    for (const auto& m : s.marginals()) marginals.push_back(to_json(m));
    return {{"marginals", std::move(marginals)}};
}

inline nlohmann::json to_json(const JointTable<double>& t) {
    return {{"shape", t.shape()},
            {"probs", std::vector<double>(t.probs().data(),
                                          t.probs().data() + t.cells())}};
}

inline nlohmann::json to_json(const SynergyReport<double>& r) {
    nlohmann::json terms = nlohmann::json::object();
    for (const auto& [name, value] : r.term_breakdown) terms[name] = value;
    return {{"value", r.value},
            {"arity", r.arity},
            {"q", r.params.q},
            {"r", r.params.r},
            {"classification", to_string(r.classification)},
            {"method", to_string(r.method)},
            {"terms", std::move(terms)}};
}

inline nlohmann::json to_json(const InfoResult<double>& r) {
    return {{"value", r.value},
            {"measure", to_string(r.measure)},
            {"log_base", r.log_base}};
}

}  // namespace polyent

#endif  // POLYENT_SERIALIZE_HPP
