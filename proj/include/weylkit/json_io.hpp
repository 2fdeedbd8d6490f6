#pragma once

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cartan.hpp"

namespace weylkit {

/* Scheme file format (JSON, UTF-8), e.g.
 *   {"rank": 2,
 *    "objects": ["x","y","z"],
 *    "reflections": {"1": {"x":"y","y":"x","z":"z"}, "2": {...}},
 *    "cartan": {"x": [[2,-1],[-4,2]], ...}}
 * Reflection keys are the index strings "1".."rank"; every map must cover
 * exactly the object set; matrices are row-major with row i belonging to
 * reflection index i. Unknown keys are rejected. */
inline CartanScheme scheme_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw error("JsonParse", std::string("JsonParse: ") + e.what());
    }
    if (!j.is_object()) throw error("JsonShape", "JsonShape: top level must be an object");
    for (auto it = j.begin(); it != j.end(); ++it)
        if (it.key() != "rank" && it.key() != "objects" && it.key() != "reflections" &&
            it.key() != "cartan")
            throw error("UnknownKey", "UnknownKey(" + it.key() + ")");
    for (const char* k : {"rank", "objects", "reflections", "cartan"})
        if (!j.contains(k)) throw error("MissingKey", "MissingKey(" + std::string(k) + ")");

    CartanScheme s;
    if (!j["rank"].is_number_integer() || j["rank"].get<int>() < 1)
        throw error("JsonShape", "JsonShape: rank must be a positive integer");
    s.rank = j["rank"].get<int>();
    if (!j["objects"].is_array() || j["objects"].empty())
        throw error("JsonShape", "JsonShape: objects must be a nonempty array");
    for (const auto& o : j["objects"]) {
        if (!o.is_string()) throw error("JsonShape", "JsonShape: object ids must be strings");
        s.objects.push_back(o.get<std::string>());
    }
    std::set<std::string> ids(s.objects.begin(), s.objects.end());
    if (ids.size() != s.objects.size()) throw error("DuplicateObject", "DuplicateObject");

    const auto& refl = j["reflections"];
    if (!refl.is_object() || static_cast<int>(refl.size()) != s.rank)
        throw error("JsonShape", "JsonShape: reflections must have keys 1..rank");
    s.refl.assign(static_cast<size_t>(s.rank), std::vector<int>(s.objects.size()));
    for (int i = 1; i <= s.rank; ++i) {
        std::string key = std::to_string(i);
        if (!refl.contains(key))
            throw error("JsonShape", "JsonShape: missing reflection " + key);
        const auto& m = refl[key];
        if (!m.is_object() || m.size() != s.objects.size())
            throw error("JsonShape", "JsonShape: reflection " + key + " must map every object");
        for (auto it = m.begin(); it != m.end(); ++it) {
            if (!ids.count(it.key())) throw error("UnknownObject", "UnknownObject(" + it.key() + ")");
            if (!it.value().is_string() || !ids.count(it.value().get<std::string>()))
                throw error("UnknownObject", "UnknownObject in reflection " + key);
            s.refl[static_cast<size_t>(i - 1)][static_cast<size_t>(s.object_index(it.key()))] =
                s.object_index(it.value().get<std::string>());
        }
    }

    const auto& car = j["cartan"];
    if (!car.is_object() || car.size() != s.objects.size())
        throw error("JsonShape", "JsonShape: cartan must map every object");
    s.cartan.assign(s.objects.size(), Mat(s.rank));
    for (auto it = car.begin(); it != car.end(); ++it) {
        if (!ids.count(it.key())) throw error("UnknownObject", "UnknownObject(" + it.key() + ")");
        const auto& rows = it.value();
        if (!rows.is_array() || static_cast<int>(rows.size()) != s.rank)
            throw error("JsonShape", "JsonShape: matrix of " + it.key() + " must have rank rows");
        Mat m(s.rank);
        for (int r = 0; r < s.rank; ++r) {
            const auto& row = rows[static_cast<size_t>(r)];
            if (!row.is_array() || static_cast<int>(row.size()) != s.rank)
                throw error("JsonShape", "JsonShape: matrix row size mismatch");
            for (int c = 0; c < s.rank; ++c) {
                if (!row[static_cast<size_t>(c)].is_number_integer())
                    throw error("JsonShape", "JsonShape: matrix entries must be integers");
                m.at(r, c) = row[static_cast<size_t>(c)].get<Int>();
            }
        }
        s.cartan[static_cast<size_t>(s.object_index(it.key()))] = std::move(m);
    }
    return validate_scheme(s);
}

inline CartanScheme read_scheme_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error("FileError", "FileError(" + path + ")");
    std::ostringstream ss;
    ss << in.rdbuf();
    return scheme_from_json(ss.str());
}

/* Deterministic serialization: keys sorted (nlohmann's default object is a
 * sorted map), two-space indent, LF line endings, trailing newline. */
inline std::string scheme_to_json(const CartanScheme& s) {
    nlohmann::json j;
    j["rank"] = s.rank;
    j["objects"] = s.objects;
    nlohmann::json refl = nlohmann::json::object();
    for (int i = 0; i < s.rank; ++i) {
        nlohmann::json m = nlohmann::json::object();
        for (int a = 0; a < s.nobj(); ++a)
            m[s.objects[static_cast<size_t>(a)]] = s.objects[static_cast<size_t>(s.rho(i, a))];
        refl[std::to_string(i + 1)] = m;
    }
    j["reflections"] = refl;
    nlohmann::json car = nlohmann::json::object();
    for (int a = 0; a < s.nobj(); ++a) {
        nlohmann::json rows = nlohmann::json::array();
        for (int r = 0; r < s.rank; ++r) {
            nlohmann::json row = nlohmann::json::array();
            for (int c = 0; c < s.rank; ++c) row.push_back(s.c(a, r, c));
            rows.push_back(row);
        }
        car[s.objects[static_cast<size_t>(a)]] = rows;
    }
    j["cartan"] = car;
    return j.dump(2) + "\n";
}

}  // namespace weylkit
