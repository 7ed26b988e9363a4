#pragma once

#include <iomanip>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "classification.hpp"

namespace eisenheron {

/// Serialized form of a ClassifiedTriangle. Integers that can outgrow 64 bits
/// are carried as ExactInt; x and y are written as decimal strings.
struct TriangleRecord {
    ExactInt a, b, c;
    ExactInt n;
    ExactInt perimeter_over_sqrt3;
    ExactInt area_times4_over_sqrt3;
    std::string family;
    std::optional<ExactInt> x, y;
    std::size_t index = 0; // 0 for the equilateral exception

    friend bool operator==(const TriangleRecord&, const TriangleRecord&) = default;
};

inline TriangleRecord to_record(const ClassifiedTriangle& t)
{
    const auto s = t.sides.descending();
    TriangleRecord r{s[0], s[1], s[2], t.n.value(), t.sides.perimeter(), t.n.value(), to_string(t.family.tag),
                     std::nullopt, std::nullopt, 0};
    if (t.family.witness) {
        r.x = t.family.witness->x;
        r.y = t.family.witness->y;
        r.index = t.family.witness->index;
    }
    return r;
}

/// One JSON object, fields in fixed order. Numeric fields are bare decimal
/// literals of arbitrary length.
inline std::string to_jsonl(const TriangleRecord& r)
{
    auto opt_string = [](const std::optional<ExactInt>& v) { return v ? "\"" + v->str() + "\"" : std::string("null"); };
    std::string out = "{\"a\":" + r.a.str() + ",\"b\":" + r.b.str() + ",\"c\":" + r.c.str() + ",\"n\":" + r.n.str() +
                      ",\"perimeter_over_sqrt3\":" + r.perimeter_over_sqrt3.str() +
                      ",\"area_times4_over_sqrt3\":" + r.area_times4_over_sqrt3.str() + ",\"family\":\"" + r.family +
                      "\",\"x\":" + opt_string(r.x) + ",\"y\":" + opt_string(r.y) +
                      ",\"index\":" + std::to_string(r.index) + "}";
    return out;
}

inline std::string table_header()
{
    std::ostringstream os;
    os << std::left << std::setw(14) << "family" << std::right << std::setw(6) << "index" << std::setw(12) << "a"
       << std::setw(12) << "b" << std::setw(12) << "c" << std::setw(12) << "n" << std::setw(12) << "x"
       << std::setw(12) << "y";
    return os.str();
}

inline std::string to_table_row(const TriangleRecord& r)
{
    std::ostringstream os;
    os << std::left << std::setw(14) << r.family << std::right << std::setw(6) << r.index << std::setw(12)
       << r.a.str() << std::setw(12) << r.b.str() << std::setw(12) << r.c.str() << std::setw(12) << r.n.str()
       << std::setw(12) << (r.x ? r.x->str() : "-") << std::setw(12) << (r.y ? r.y->str() : "-");
    return os.str();
}

namespace detail {

inline ExactInt exact_from_json(const nlohmann::json& j, const char* field)
{
    if (j.is_number_unsigned()) return ExactInt(j.get<std::uint64_t>());
    if (j.is_number_integer()) return ExactInt(j.get<std::int64_t>());
    if (j.is_string()) return parse_exact(j.get<std::string>());
    throw ValidationError(std::string(field) + ": expected an integer");
}

} // namespace detail

/// Inverse of to_jsonl for records whose numeric fields fit in 64 bits.
inline TriangleRecord record_from_json(const nlohmann::json& j)
{
    TriangleRecord r;
    r.a = detail::exact_from_json(j.at("a"), "a");
    r.b = detail::exact_from_json(j.at("b"), "b");
    r.c = detail::exact_from_json(j.at("c"), "c");
    r.n = detail::exact_from_json(j.at("n"), "n");
    r.perimeter_over_sqrt3 = detail::exact_from_json(j.at("perimeter_over_sqrt3"), "perimeter_over_sqrt3");
    r.area_times4_over_sqrt3 = detail::exact_from_json(j.at("area_times4_over_sqrt3"), "area_times4_over_sqrt3");
    r.family = j.at("family").get<std::string>();
    if (!j.at("x").is_null()) r.x = detail::exact_from_json(j.at("x"), "x");
    if (!j.at("y").is_null()) r.y = detail::exact_from_json(j.at("y"), "y");
    r.index = j.at("index").get<std::size_t>();
    return r;
}

} // namespace eisenheron
