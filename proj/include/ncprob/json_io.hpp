#pragma once

#include <fstream>
#include <string>

#include <json.hpp>

#include "ncprob/series.hpp"

namespace ncprob {

// Series wire format:
// {"s": 2, "weights": [1,2], "max_deg": 3, "constant": "0",
//  "coeffs": {"1": "1/2", "1,2": "-3"}}
// weights may be omitted on input (all ones); output always carries them.
inline nlohmann::json series_to_json(const Series<Rational>& f) {
    nlohmann::json j;
    j["s"] = f.alphabet.s;
    j["weights"] = f.alphabet.weights;
    j["max_deg"] = f.max_deg;
    j["constant"] = f.constant_one ? "1" : "0";
    nlohmann::json coeffs = nlohmann::json::object();
    for (const auto& [w, c] : f.coeffs) coeffs[word_to_string(w)] = c.to_string();
    j["coeffs"] = coeffs;
    return j;
}

inline Series<Rational> series_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw parse_error("series: object expected");
    for (const std::string key : {"s", "max_deg", "constant", "coeffs"})
        if (!j.contains(key)) throw parse_error("series: missing field '" + key + "'");
    if (!j["s"].is_number_integer()) throw parse_error("series: 's' must be an integer");
    int s = j["s"].get<int>();
    std::vector<int> weights;
    if (j.contains("weights")) {
        if (!j["weights"].is_array()) throw parse_error("series: 'weights' must be an array");
        weights = j["weights"].get<std::vector<int>>();
    } else {
        weights.assign(s > 0 ? s : 1, 1);
    }
    Alphabet a(s, std::move(weights));
    if (!j["max_deg"].is_number_integer()) throw parse_error("series: 'max_deg' must be an integer");
    int max_deg = j["max_deg"].get<int>();
    std::string constant = j["constant"].is_string() ? j["constant"].get<std::string>() : "";
    if (constant != "0" && constant != "1")
        throw parse_error("series: 'constant' must be \"0\" or \"1\"");
    Series<Rational> f(a, max_deg, constant == "1");
    if (!j["coeffs"].is_object()) throw parse_error("series: 'coeffs' must be an object");
    for (const auto& [key, value] : j["coeffs"].items()) {
        if (!value.is_string()) throw parse_error("series: coefficient must be a string rational");
        Word w = parse_word(key);
        check_word(a, w);
        f.set(w, Rational::from_string(value.get<std::string>()));
    }
    return f;
}

inline Series<Rational> series_from_string(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) throw parse_error("series: invalid JSON");
    return series_from_json(j);
}

inline Series<Rational> series_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("series: cannot open '" + path + "'");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return series_from_string(text);
}

} // namespace ncprob
