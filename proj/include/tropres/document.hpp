#pragma once

/**
 * Arrangement documents: JSON objects of the form
 *
 *   {"generic": true, "name": "...", "points": [[[0,1],[3,1],[6,1]], ...], "seed": 7}
 *
 * Every coordinate is a [numerator, denominator] pair.  Integers that do
 * not fit in 64 bits are written as decimal strings.  Unknown keys are
 * ignored on input; output keys are sorted.
 */

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "rational.hpp"
#include "tropical.hpp"

namespace tropres {

using Json = nlohmann::json;

struct ArrangementDocument
{
    std::string name;
    std::optional<std::uint64_t> seed;
    bool generic = false;
    std::vector<std::vector<Rational>> points;

    bool operator==(const ArrangementDocument&) const = default;
};

namespace detail {

inline Json integer_to_json(const Integer& z)
{
    if (z >= std::numeric_limits<std::int64_t>::min() && z <= std::numeric_limits<std::int64_t>::max())
        return Json(static_cast<std::int64_t>(z));
    return Json(z.str());
}

inline Integer integer_from_json(const Json& j)
{
    if (j.is_number_integer())
        return j.is_number_unsigned() ? Integer(j.get<std::uint64_t>()) : Integer(j.get<std::int64_t>());
    if (j.is_string())
    {
        auto q = parse_rational(j.get<std::string>());
        if (denominator(q) != 1)
            throw InputError("expected an integer, got '" + j.get<std::string>() + "'");
        return numerator(q);
    }
    throw InputError("expected an integer, got " + j.dump());
}

inline Rational rational_from_json(const Json& j)
{
    if (!j.is_array() || j.size() != 2)
        throw InputError("a coordinate must be a [numerator, denominator] pair, got " + j.dump());
    Integer num = integer_from_json(j[0]), den = integer_from_json(j[1]);
    if (den == 0)
        throw InputError("zero denominator in " + j.dump());
    return Rational(num, den);
}

}   // namespace detail

inline Json rational_to_json(const Rational& q)
{
    return Json::array({detail::integer_to_json(numerator(q)), detail::integer_to_json(denominator(q))});
}

inline Json to_json(const ArrangementDocument& doc)
{
    Json points = Json::array();
    for (const auto& row : doc.points)
    {
        Json r = Json::array();
        for (const auto& x : row)
            r.push_back(rational_to_json(x));
        points.push_back(std::move(r));
    }
    Json out = Json::object();
    out["generic"] = doc.generic;
    out["name"] = doc.name;
    out["points"] = std::move(points);
    out["seed"] = doc.seed ? Json(*doc.seed) : Json(nullptr);
    return out;
}

inline ArrangementDocument document_from_json(const Json& j)
{
    if (!j.is_object())
        throw InputError("an arrangement document must be a JSON object");
    if (!j.contains("points") || !j["points"].is_array())
        throw InputError("missing 'points' array");
    ArrangementDocument doc;
    if (j.contains("name"))
    {
        if (!j["name"].is_string())
            throw InputError("'name' must be a string");
        doc.name = j["name"].get<std::string>();
    }
    if (j.contains("seed") && !j["seed"].is_null())
    {
        if (!j["seed"].is_number_unsigned() && !(j["seed"].is_number_integer() && j["seed"].get<std::int64_t>() >= 0))
            throw InputError("'seed' must be a nonnegative integer");
        doc.seed = j["seed"].get<std::uint64_t>();
    }
    if (j.contains("generic"))
    {
        if (!j["generic"].is_boolean())
            throw InputError("'generic' must be a boolean");
        doc.generic = j["generic"].get<bool>();
    }
    for (const auto& row : j["points"])
    {
        if (!row.is_array())
            throw InputError("each point must be an array of coordinates");
        std::vector<Rational> r;
        for (const auto& x : row)
            r.push_back(detail::rational_from_json(x));
        doc.points.push_back(std::move(r));
    }
    if (doc.points.empty())
        throw InputError("'points' is empty");
    for (const auto& r : doc.points)
        if (r.size() != doc.points.front().size() || r.empty())
            throw InputError("all points need the same positive number of coordinates");
    return doc;
}

inline ArrangementDocument parse_document(const std::string& text)
{
    Json j;
    try
    {
        j = Json::parse(text);
    }
    catch (const Json::parse_error& e)
    {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
    return document_from_json(j);
}

inline std::string serialize(const ArrangementDocument& doc) { return to_json(doc).dump(2) + "\n"; }

inline ArrangementDocument read_document(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_document(buffer.str());
}

inline void write_document(const ArrangementDocument& doc, const std::string& path)
{
    std::ofstream out(path);
    if (!out)
        throw InputError("cannot write '" + path + "'");
    out << serialize(doc);
}

inline Arrangement to_arrangement(const ArrangementDocument& doc) { return Arrangement(doc.points); }

inline ArrangementDocument to_document(const Arrangement& arr, std::string name, bool generic = false,
                                       std::optional<std::uint64_t> seed = std::nullopt)
{
    return ArrangementDocument{std::move(name), seed, generic, arr.rows()};
}

}   // namespace tropres
